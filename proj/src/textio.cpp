#include "satelim/textio.hpp"

#include <cctype>
#include <fstream>
#include <ostream>
#include <sstream>

namespace satelim {

std::string to_string(const Monomial& m, const RingSpec& ring) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += ring.var_name(i);
        if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
    return out;
}

std::string to_string(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const Term& t : f.terms()) {
        bool neg = t.coef.is_negative();
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;
        Coefficient mag = t.coef.abs();
        std::string mono = to_string(t.mono, *f.ring());
        if (mono.empty()) {
            out += mag.str();
        } else {
            if (!mag.is_one()) out += mag.str() + "*";
            out += mono;
        }
    }
    return out;
}

std::string to_string(const VectorPoly& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.rank(); ++i) {
        if (i) out += ", ";
        out += to_string(v[i]);
    }
    return out + ")";
}

std::ostream& operator<<(std::ostream& os, const Polynomial& f) { return os << to_string(f); }
std::ostream& operator<<(std::ostream& os, const VectorPoly& v) { return os << to_string(v); }

namespace {

enum class Tok : std::uint8_t { Number, Ident, Plus, Minus, Star, Caret, Slash, End };

struct Lexer {
    const std::string& s;
    int line;
    std::size_t i = 0;
    Tok tok = Tok::End;
    std::string text;
    int col = 1;  // column where the current token starts

    explicit Lexer(const std::string& str, int line_no) : s(str), line(line_no) { advance(); }

    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, line, col); }

    void advance() {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        col = static_cast<int>(i) + 1;
        if (i >= s.size()) {
            tok = Tok::End;
            return;
        }
        char c = s[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            tok = Tok::Number;
            text = s.substr(start, i - start);
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = i;
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
            tok = Tok::Ident;
            text = s.substr(start, i - start);
            return;
        }
        ++i;
        switch (c) {
            case '+': tok = Tok::Plus; return;
            case '-': tok = Tok::Minus; return;
            case '*': tok = Tok::Star; return;
            case '^': tok = Tok::Caret; return;
            case '/': tok = Tok::Slash; return;
            default: fail(std::string("unexpected character '") + c + "'");
        }
    }
};

struct PolyParser {
    Lexer lx;
    const RingPtr& ring;

    PolyParser(const std::string& text, const RingPtr& r, int line_no) : lx(text, line_no), ring(r) {}

    std::uint32_t exponent() {
        if (lx.tok != Tok::Number) lx.fail("malformed exponent");
        unsigned long e = std::stoul(lx.text);
        if (e > Monomial::max_exponent)
            throw overflow_error("exponent " + lx.text + " exceeds the supported bound " +
                                 std::to_string(Monomial::max_exponent));
        lx.advance();
        return static_cast<std::uint32_t>(e);
    }

    // var ['^' nat], accumulated into exps
    void factor(std::vector<std::uint32_t>& exps) {
        auto idx = ring->var_index(lx.text);
        if (!idx) lx.fail("unknown variable '" + lx.text + "'");
        lx.advance();
        std::uint32_t e = 1;
        if (lx.tok == Tok::Caret) {
            lx.advance();
            e = exponent();
        }
        std::uint64_t sum = std::uint64_t{exps[*idx]} + e;
        if (sum > Monomial::max_exponent) throw overflow_error("exponent overflow in monomial");
        exps[*idx] = static_cast<std::uint32_t>(sum);
    }

    Term term(bool negative) {
        mpz_class num = 1, den = 1;
        bool saw_coeff = false;
        if (lx.tok == Tok::Number) {
            saw_coeff = true;
            num = mpz_class(lx.text);
            lx.advance();
            if (lx.tok == Tok::Slash) {
                lx.advance();
                if (lx.tok != Tok::Number) lx.fail("expected a denominator");
                den = mpz_class(lx.text);
                lx.advance();
            }
        }
        std::vector<std::uint32_t> exps(ring->var_count(), 0);
        bool saw_mono = false;
        if (lx.tok == Tok::Ident) {
            // '*' between coefficient and monomial is optional
            saw_mono = true;
            factor(exps);
        } else if (saw_coeff && lx.tok == Tok::Star) {
            lx.advance();
            if (lx.tok != Tok::Ident) lx.fail("expected a variable");
            saw_mono = true;
            factor(exps);
        }
        while (saw_mono && lx.tok == Tok::Star) {
            lx.advance();
            if (lx.tok != Tok::Ident) lx.fail("expected a variable");
            factor(exps);
        }
        if (!saw_coeff && !saw_mono) lx.fail("expected a term");
        Coefficient c = Coefficient::from_fraction(ring->field(), negative ? mpz_class(-num) : num, den);
        return {std::move(c), Monomial(std::move(exps))};
    }

    Polynomial parse(const MonomialOrder& order) {
        std::vector<Term> terms;
        bool neg = false;
        if (lx.tok == Tok::Minus) {
            neg = true;
            lx.advance();
        }
        terms.push_back(term(neg));
        while (lx.tok != Tok::End) {
            if (lx.tok == Tok::Plus)
                neg = false;
            else if (lx.tok == Tok::Minus)
                neg = true;
            else
                lx.fail("expected '+' or '-'");
            lx.advance();
            terms.push_back(term(neg));
        }
        return Polynomial::from_terms(ring, order, std::move(terms));
    }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring, const MonomialOrder& order,
                            int line_no) {
    PolyParser p(text, ring, line_no);
    return p.parse(order);
}

namespace {

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = s.find(',', start);
        out.push_back(strip(s.substr(start, comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace

ProblemFile parse_problem_file(std::istream& in) {
    std::optional<FieldSpec> field;
    std::vector<std::string> vars;
    std::set<std::string> elim_names;
    std::optional<MonomialOrder> order;
    std::vector<std::pair<int, std::string>> gen_lines;
    bool saw_vars = false, saw_elim = false, saw_order = false, in_gens = false;

    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::string line = strip(raw);
        if (line.empty()) continue;
        if (in_gens) {
            gen_lines.emplace_back(line_no, line);
            continue;
        }
        std::istringstream ls(line);
        std::string keyword;
        ls >> keyword;
        std::string rest = strip(line.substr(keyword.size()));
        if (keyword == "field") {
            if (field) throw parse_error("duplicate 'field' line", line_no, 1);
            std::istringstream fs(rest);
            std::string kind;
            fs >> kind;
            if (kind == "QQ") {
                std::string extra;
                if (fs >> extra) throw parse_error("unexpected text after 'field QQ'", line_no, 1);
                field = FieldSpec::rationals();
            } else if (kind == "Fp") {
                long long p = -1;
                if (!(fs >> p) || p <= 0) throw parse_error("expected a prime after 'field Fp'", line_no, 1);
                if (p >= (1ll << 31) || !is_prime(static_cast<std::uint64_t>(p)))
                    throw parse_error("characteristic must be a prime below 2^31", line_no, 1);
                field = FieldSpec::prime_field(static_cast<std::uint32_t>(p));
            } else {
                throw parse_error("unknown field '" + kind + "' (expected QQ or Fp <prime>)", line_no, 1);
            }
        } else if (keyword == "vars") {
            if (saw_vars) throw parse_error("duplicate 'vars' line", line_no, 1);
            saw_vars = true;
            for (const std::string& name : split_csv(rest)) {
                if (!valid_var_name(name)) throw parse_error("invalid variable name '" + name + "'", line_no, 1);
                if (std::find(vars.begin(), vars.end(), name) != vars.end())
                    throw parse_error("duplicate variable '" + name + "'", line_no, 1);
                vars.push_back(name);
            }
            if (vars.empty()) throw parse_error("expected at least one variable", line_no, 1);
        } else if (keyword == "elim") {
            if (saw_elim) throw parse_error("duplicate 'elim' line", line_no, 1);
            if (!saw_vars) throw parse_error("'elim' must come after 'vars'", line_no, 1);
            saw_elim = true;
            for (const std::string& name : split_csv(rest)) {
                if (name.empty()) continue;
                if (std::find(vars.begin(), vars.end(), name) == vars.end())
                    throw parse_error("eliminated variable '" + name + "' is not declared", line_no, 1);
                elim_names.insert(name);
            }
        } else if (keyword == "order") {
            if (saw_order) throw parse_error("duplicate 'order' line", line_no, 1);
            saw_order = true;
            try {
                order = MonomialOrder::parse(rest);
            } catch (const parse_error& e) {
                throw parse_error(std::string("bad order: ") + e.what(), line_no, 1);
            }
        } else if (keyword == "gens:" || (keyword == "gens" && rest == ":")) {
            if (!field) throw parse_error("'field' must come before 'gens:'", line_no, 1);
            if (!saw_vars) throw parse_error("'vars' must come before 'gens:'", line_no, 1);
            in_gens = true;
        } else {
            throw parse_error("unknown directive '" + keyword + "'", line_no, 1);
        }
    }
    if (!field) throw parse_error("missing 'field' line", line_no, 1);
    if (!saw_vars) throw parse_error("missing 'vars' line", line_no, 1);
    if (!in_gens) throw parse_error("missing 'gens:' line", line_no, 1);

    std::vector<int> weights;
    std::set<std::size_t> elim_vars;
    weights.reserve(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
        bool e = elim_names.count(vars[i]) > 0;
        weights.push_back(e ? 1 : 0);
        if (e) elim_vars.insert(i);
    }
    ProblemFile pf;
    pf.ring = RingSpec::make(*field, std::move(vars), std::move(weights));
    pf.order = order;
    pf.elim_vars = std::move(elim_vars);
    MonomialOrder active = order ? *order : MonomialOrder::degrevlex();
    for (const auto& [ln, text] : gen_lines) pf.gens.push_back(parse_polynomial(text, pf.ring, active, ln));
    return pf;
}

ProblemFile load_problem_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw usage_error("cannot read file '" + path.string() + "'");
    return parse_problem_file(in);
}

}  // namespace satelim
