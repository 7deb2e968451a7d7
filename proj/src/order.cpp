#include "satelim/order.hpp"

#include <algorithm>
#include <cctype>
#include <span>

namespace satelim {

MonomialOrder MonomialOrder::block(std::size_t split, MonomialOrder first, MonomialOrder second) {
    if (split == 0) throw usage_error("block order needs a nonempty front block");
    MonomialOrder o(Kind::Block);
    o.split_ = split;
    o.first_ = std::make_shared<const MonomialOrder>(std::move(first));
    o.second_ = std::make_shared<const MonomialOrder>(std::move(second));
    return o;
}

bool MonomialOrder::operator==(const MonomialOrder& o) const {
    if (kind_ != o.kind_) return false;
    if (kind_ != Kind::Block) return true;
    return split_ == o.split_ && *first_ == *o.first_ && *second_ == *o.second_;
}

std::string MonomialOrder::str() const {
    switch (kind_) {
        case Kind::Lex: return "lex";
        case Kind::DegLex: return "deglex";
        case Kind::DegRevLex: return "degrevlex";
        case Kind::Block:
            return "block(" + std::to_string(split_) + ":" + first_->str() + "," + second_->str() + ")";
    }
    return "";
}

namespace {

std::strong_ordering cmp_range(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                               const MonomialOrder& o) {
    switch (o.kind()) {
        case MonomialOrder::Kind::Lex: {
            for (std::size_t i = 0; i < a.size(); ++i)
                if (a[i] != b[i]) return a[i] <=> b[i];
            return std::strong_ordering::equal;
        }
        case MonomialOrder::Kind::DegLex: {
            std::uint64_t da = 0, db = 0;
            for (std::uint32_t e : a) da += e;
            for (std::uint32_t e : b) db += e;
            if (da != db) return da <=> db;
            for (std::size_t i = 0; i < a.size(); ++i)
                if (a[i] != b[i]) return a[i] <=> b[i];
            return std::strong_ordering::equal;
        }
        case MonomialOrder::Kind::DegRevLex: {
            std::uint64_t da = 0, db = 0;
            for (std::uint32_t e : a) da += e;
            for (std::uint32_t e : b) db += e;
            if (da != db) return da <=> db;
            // equal degree: the one whose rightmost differing exponent is
            // smaller is the greater monomial
            for (std::size_t i = a.size(); i-- > 0;)
                if (a[i] != b[i]) return b[i] <=> a[i];
            return std::strong_ordering::equal;
        }
        case MonomialOrder::Kind::Block: {
            std::size_t k = std::min(o.split(), a.size());
            auto c = cmp_range(a.first(k), b.first(k), o.first());
            if (c != std::strong_ordering::equal) return c;
            return cmp_range(a.subspan(k), b.subspan(k), o.second());
        }
    }
    return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering compare(const Monomial& a, const Monomial& b, const MonomialOrder& o) {
    if (a.size() != b.size()) throw usage_error("comparing monomials from different rings");
    return cmp_range(a.exps(), b.exps(), o);
}

namespace {

bool elim_helper(const MonomialOrder& o, std::size_t lo, std::size_t hi, const std::set<std::size_t>& elim) {
    std::size_t count = 0;
    for (std::size_t i : elim)
        if (i >= lo && i < hi) ++count;
    if (count == 0) return true;
    switch (o.kind()) {
        case MonomialOrder::Kind::Lex: {
            // fine as long as the eliminated variables form a prefix
            for (std::size_t i = lo; i < lo + count; ++i)
                if (!elim.count(i)) return false;
            return true;
        }
        case MonomialOrder::Kind::DegLex:
        case MonomialOrder::Kind::DegRevLex:
            // a graded order separates nothing unless it sees only
            // eliminated variables
            return count == hi - lo;
        case MonomialOrder::Kind::Block: {
            std::size_t mid = std::min(lo + o.split(), hi);
            std::size_t c1 = 0;
            for (std::size_t i : elim)
                if (i >= lo && i < mid) ++c1;
            std::size_t c2 = count - c1;
            if (c2 == 0) return elim_helper(o.first(), lo, mid, elim);
            if (c1 == mid - lo) return elim_helper(o.second(), mid, hi, elim);
            return false;
        }
    }
    return false;
}

}  // namespace

bool is_elimination_order(const MonomialOrder& o, const std::set<std::size_t>& elim, std::size_t nvars) {
    for (std::size_t i : elim)
        if (i >= nvars) throw usage_error("eliminated variable index out of range");
    return elim_helper(o, 0, nvars, elim);
}

std::strong_ordering compare(std::size_t pos_a, const Monomial& a, std::size_t pos_b, const Monomial& b,
                             const ModuleOrder& o) {
    if (o.scheme == ModuleScheme::PositionOverTerm) {
        if (pos_a != pos_b) return pos_b <=> pos_a;
        return compare(a, b, o.base);
    }
    auto c = compare(a, b, o.base);
    if (c != std::strong_ordering::equal) return c;
    return pos_b <=> pos_a;
}

namespace {

struct OrderParser {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }

    [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg, 1, static_cast<int>(i) + 1); }

    std::string ident() {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
        if (i == start) fail("expected an order name");
        return s.substr(start, i - start);
    }

    void expect(char c) {
        skip_ws();
        if (i >= s.size() || s[i] != c) fail(std::string("expected '") + c + "'");
        ++i;
    }

    MonomialOrder order() {
        std::string name = ident();
        if (name == "lex") return MonomialOrder::lex();
        if (name == "deglex") return MonomialOrder::deglex();
        if (name == "degrevlex") return MonomialOrder::degrevlex();
        if (name == "block") {
            expect('(');
            skip_ws();
            std::size_t start = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (i == start) fail("expected a block size");
            std::size_t split = std::stoull(s.substr(start, i - start));
            if (split == 0) fail("block size must be positive");
            expect(':');
            MonomialOrder a = order();
            expect(',');
            MonomialOrder b = order();
            expect(')');
            return MonomialOrder::block(split, std::move(a), std::move(b));
        }
        fail("unknown order '" + name + "'");
    }
};

}  // namespace

MonomialOrder MonomialOrder::parse(const std::string& text) {
    OrderParser p{text};
    MonomialOrder o = p.order();
    p.skip_ws();
    if (p.i != text.size()) p.fail("trailing characters after order");
    return o;
}

}  // namespace satelim
