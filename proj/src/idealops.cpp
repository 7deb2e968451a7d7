#include "satelim/idealops.hpp"

#include <algorithm>

namespace satelim {

namespace {

Polynomial check_quotient_divisor(const Polynomial& f, const RingPtr& ring) {
    if (f.is_zero()) throw usage_error("quotient by the zero polynomial");
    if (!same_ring(f.ring(), ring)) throw usage_error("divisor lives in a different ring");
    return f;
}

}  // namespace

IdealBasis quotient(const IdealBasis& I, const Polynomial& f, const MonomialOrder& o, const Budget& budget) {
    check_quotient_divisor(f, I.ring);
    std::vector<Polynomial> list;
    list.reserve(I.gens.size() + 1);
    list.push_back(f);
    for (const Polynomial& g : I.gens) list.push_back(g);
    std::vector<Polynomial> gens;
    for (Polynomial& s : relation_coefficients_on_first(list, o, budget))
        if (!s.is_zero()) gens.push_back(std::move(s));
    return IdealBasis::make(I.ring, std::move(gens));
}

ModuleBasis quotient(const ModuleBasis& M, const Polynomial& f, const MonomialOrder& o, const Budget& budget) {
    check_quotient_divisor(f, M.ring);
    std::vector<VectorPoly> list;
    list.reserve(M.rank + M.gens.size());
    for (std::size_t j = 0; j < M.rank; ++j)
        list.push_back(VectorPoly::unit(M.ring, o, M.rank, j).scaled(f));
    for (const VectorPoly& g : M.gens) list.push_back(g);
    std::vector<VectorPoly> gens;
    for (VectorPoly& v : relation_coefficients_on_first(list, M.rank, o, budget))
        if (!v.is_zero()) gens.push_back(std::move(v));
    return ModuleBasis::make(M.ring, M.rank, std::move(gens));
}

namespace {

SaturationResult saturate_loop(IdealBasis start, const Polynomial& f, const MonomialOrder& o, const Budget& budget) {
    SaturationResult out;
    out.basis = std::move(start);
    while (true) {
        IdealBasis next = reduced_groebner_basis(quotient(out.basis, f, o, budget), o, budget);
        if (next.gens == out.basis.gens) break;
        out.basis = std::move(next);
        ++out.steps;
    }
    return out;
}

// Saturation over QQ can wade through intermediate bases whose coefficients
// dwarf both the input and the answer, while the same loop over a word-sized
// prime field is instant.  So: run the loop modulo a few primes, lift the
// final reduced basis back to QQ by Chinese remaindering plus rational
// reconstruction, and certify the lifted guess exactly.  A wrong guess
// cannot escape the certificate; it just costs a fallback to the plain loop.

RingPtr prime_twin(const RingSpec& ring, std::uint32_t p) {
    return RingSpec::make(FieldSpec::prime_field(p), ring.var_names(), ring.weights(), ring.homog_var());
}

// nullopt when the image would change shape, i.e. a denominator vanishes
// mod p or a term drops out.
std::optional<Polynomial> to_prime_field(const Polynomial& g, const RingPtr& target, const MonomialOrder& o) {
    const FieldSpec& f = target->field();
    unsigned long p = f.characteristic();
    std::vector<Term> terms;
    terms.reserve(g.term_count());
    for (const Term& t : g.terms()) {
        const mpq_class& q = t.coef.rational();
        if (mpz_fdiv_ui(mpq_denref(q.get_mpq_t()), p) == 0) return std::nullopt;
        if (mpz_fdiv_ui(mpq_numref(q.get_mpq_t()), p) == 0) return std::nullopt;
        terms.push_back({Coefficient::from_fraction(f, q.get_num(), q.get_den()), t.mono});
    }
    return Polynomial::from_terms(target, o, std::move(terms));
}

// merge x = r (mod m) with x = s (mod p) into 0 <= r' < m*p
void crt_lift(mpz_class& r, const mpz_class& m, std::int64_t s, std::uint32_t p) {
    mpz_class pm(static_cast<unsigned long>(p));
    mpz_class minv;
    mpz_invert(minv.get_mpz_t(), m.get_mpz_t(), pm.get_mpz_t());
    mpz_class d = (mpz_class(static_cast<long>(s)) - r) % pm;
    if (d < 0) d += pm;
    r += m * (d * minv % pm);
}

// Wang's algorithm: the n/d with |n|, d <= sqrt(m/2) and n = r*d (mod m),
// if one exists.
std::optional<std::pair<mpz_class, mpz_class>> reconstruct_rational(const mpz_class& r, const mpz_class& m) {
    mpz_class bound, half = m / 2;
    mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
    mpz_class a0 = m, a1 = r, t0 = 0, t1 = 1;
    while (a1 > bound) {
        mpz_class q = a0 / a1;
        mpz_class tmp = a0 - q * a1;
        a0 = a1;
        a1 = tmp;
        tmp = t0 - q * t1;
        t0 = t1;
        t1 = tmp;
    }
    if (t1 == 0) return std::nullopt;
    mpz_class n = a1, d = t1;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    if (d > bound) return std::nullopt;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    if (g != 1) return std::nullopt;
    return std::make_pair(std::move(n), std::move(d));
}

// Caps for the cheap certificate stages; a genuine candidate clears them
// with lots of room, a garbage one must not be allowed to thrash.
Budget certificate_budget(const Budget& b) {
    Budget t = b;
    t.max_pairs = std::min<std::uint64_t>(t.max_pairs, 200'000);
    std::chrono::milliseconds cap(20'000);
    t.wall_clock = t.wall_clock ? std::min(*t.wall_clock, cap) : cap;
    return t;
}

// Exact check that <guess> is J : f^inf.  Establishes, in order: cand is a
// reduced basis of <guess>; J is contained in cand; every generator of cand
// lands in J after at most `cap` multiplications by f (so cand is contained
// in J : f^inf, and the largest such count is exactly the number of strict
// steps in the quotient chain); and cand : f = cand.  Together these pin
// cand = J : f^inf no matter where the guess came from.
std::optional<SaturationResult> certify_saturation(const IdealBasis& J, std::vector<Polynomial> guess,
                                                   const Polynomial& f, const MonomialOrder& o, unsigned cap,
                                                   const Budget& tight, const Budget& full) {
    try {
        IdealBasis cand = reduced_groebner_basis(IdealBasis::make(J.ring, std::move(guess)), o, tight);
        for (const Polynomial& g : J.gens)
            if (!normal_form(g, cand.gens, o).remainder.is_zero()) return std::nullopt;
        unsigned steps = 0;
        for (const Polynomial& h : cand.gens) {
            Polynomial cur = h;
            unsigned n = 0;
            while (n <= cap && !normal_form(cur, J.gens, o).remainder.is_zero()) {
                cur = cur * f;
                ++n;
            }
            if (n > cap) return std::nullopt;
            steps = std::max(steps, n);
        }
        IdealBasis back = reduced_groebner_basis(quotient(cand, f, o, full), o, full);
        if (back.gens != cand.gens) return std::nullopt;
        return SaturationResult{std::move(cand), steps};
    } catch (const budget_error&) {
        return std::nullopt;
    }
}

std::optional<SaturationResult> saturate_reconstructed(const IdealBasis& J, const Polynomial& f,
                                                       const MonomialOrder& o, const Budget& budget) {
    constexpr int max_agreeing = 12, max_misses = 4;
    std::vector<std::vector<Monomial>> shape;  // term monomials per generator
    unsigned shape_steps = 0;
    std::vector<std::vector<mpz_class>> residue;
    mpz_class modulus = 1;
    int agreeing = 0, misses = 0;
    std::uint32_t p = 2'147'483'647;
    for (; agreeing < max_agreeing && misses <= max_misses; --p) {
        while (!is_prime(p)) --p;
        RingPtr twin = prime_twin(*J.ring, p);
        std::optional<Polynomial> fp_f = to_prime_field(f, twin, o);
        if (!fp_f) {
            ++misses;
            continue;
        }
        std::vector<Polynomial> fp_gens;
        fp_gens.reserve(J.gens.size());
        for (const Polynomial& g : J.gens) {
            std::optional<Polynomial> img = to_prime_field(g, twin, o);
            if (!img) break;
            fp_gens.push_back(std::move(*img));
        }
        if (fp_gens.size() != J.gens.size()) {
            ++misses;
            continue;
        }
        SaturationResult satp =
            saturate_loop(reduced_groebner_basis(IdealBasis::make(twin, std::move(fp_gens)), o, budget), *fp_f, o,
                          budget);
        const std::vector<Polynomial>& gens_p = satp.basis.gens;
        if (agreeing == 0) {
            shape.clear();
            residue.clear();
            for (const Polynomial& g : gens_p) {
                std::vector<Monomial> monos;
                for (const Term& t : g.terms()) monos.push_back(t.mono);
                shape.push_back(std::move(monos));
                residue.emplace_back(g.term_count());
            }
            shape_steps = satp.steps;
            modulus = 1;
        } else {
            bool same = satp.steps == shape_steps && gens_p.size() == shape.size();
            for (std::size_t i = 0; same && i < shape.size(); ++i) {
                same = gens_p[i].term_count() == shape[i].size();
                for (std::size_t j = 0; same && j < shape[i].size(); ++j)
                    same = gens_p[i].terms()[j].mono == shape[i][j];
            }
            if (!same) {
                ++misses;
                continue;
            }
        }
        for (std::size_t i = 0; i < gens_p.size(); ++i)
            for (std::size_t j = 0; j < gens_p[i].term_count(); ++j)
                crt_lift(residue[i][j], modulus, gens_p[i].terms()[j].coef.residue(), p);
        modulus *= p;
        ++agreeing;
        if (agreeing < 2) continue;
        std::vector<Polynomial> guess;
        guess.reserve(shape.size());
        bool lifted = true;
        for (std::size_t i = 0; lifted && i < shape.size(); ++i) {
            std::vector<Term> terms;
            terms.reserve(shape[i].size());
            for (std::size_t j = 0; lifted && j < shape[i].size(); ++j) {
                std::optional<std::pair<mpz_class, mpz_class>> nd = reconstruct_rational(residue[i][j], modulus);
                if (!nd) {
                    lifted = false;
                    break;
                }
                terms.push_back({Coefficient::from_fraction(J.ring->field(), nd->first, nd->second), shape[i][j]});
            }
            if (lifted) guess.push_back(Polynomial::from_terms(J.ring, o, std::move(terms)));
        }
        if (!lifted) continue;
        std::optional<SaturationResult> ok =
            certify_saturation(J, std::move(guess), f, o, shape_steps * 2 + 8, certificate_budget(budget), budget);
        if (ok) return ok;
    }
    return std::nullopt;
}

}  // namespace

SaturationResult saturate(const IdealBasis& I, const Polynomial& f, const MonomialOrder& o, const Budget& budget) {
    check_quotient_divisor(f, I.ring);
    IdealBasis start = reduced_groebner_basis(I, o, budget);
    if (I.ring->field().kind() == FieldKind::Rationals && !start.gens.empty()) {
        std::optional<SaturationResult> fast = saturate_reconstructed(start, f, o, budget);
        if (fast) return *fast;
    }
    return saturate_loop(std::move(start), f, o, budget);
}

ModuleSaturationResult saturate(const ModuleBasis& M, const Polynomial& f, const MonomialOrder& o,
                                const Budget& budget) {
    check_quotient_divisor(f, M.ring);
    ModuleOrder mo{o, ModuleScheme::TermOverPosition};
    ModuleSaturationResult out;
    out.basis = reduced_groebner_basis(M, mo, budget);
    while (true) {
        ModuleBasis next = reduced_groebner_basis(quotient(out.basis, f, o, budget), mo, budget);
        if (next.gens == out.basis.gens) break;
        out.basis = std::move(next);
        ++out.steps;
    }
    return out;
}

namespace {

struct Extension {
    RingPtr ring;
    std::size_t homog_var;
    std::vector<std::optional<std::size_t>> var_map;  // identity embedding
};

Extension extend_ring(const RingSpec& ring, const std::string& homog_name) {
    if (ring.homog_var()) throw usage_error("ring already carries a homogenization variable");
    if (ring.vars_with_weight(1).empty())
        throw usage_error("homogenization needs at least one weight-1 variable");
    if (!valid_var_name(homog_name)) throw usage_error("invalid variable name '" + homog_name + "'");
    if (ring.var_index(homog_name))
        throw usage_error("homogenization variable '" + homog_name + "' collides with a ring variable");
    std::vector<std::string> vars = ring.var_names();
    vars.push_back(homog_name);
    std::vector<int> weights = ring.weights();
    weights.push_back(1);
    Extension ext;
    ext.homog_var = vars.size() - 1;
    ext.ring = RingSpec::make(ring.field(), std::move(vars), std::move(weights), ext.homog_var);
    ext.var_map.reserve(ring.var_count());
    for (std::size_t i = 0; i < ring.var_count(); ++i) ext.var_map.emplace_back(i);
    return ext;
}

}  // namespace

HomogenizationResult homogenize_ideal(const IdealBasis& I, const std::string& homog_name, const MonomialOrder& o,
                                      const Budget& budget) {
    Extension ext = extend_ring(*I.ring, homog_name);
    std::vector<Polynomial> hgens;
    hgens.reserve(I.gens.size());
    for (const Polynomial& g : I.gens)
        hgens.push_back(homogenize(g.mapped(ext.ring, ext.var_map, o), ext.homog_var));
    HomogenizationResult out;
    out.extended_ring = ext.ring;
    out.homog_var = ext.homog_var;
    out.homogenized_gens = IdealBasis::make(ext.ring, std::move(hgens));
    Polynomial x0 = Polynomial::variable(ext.ring, o, ext.homog_var);
    SaturationResult sat = saturate(out.homogenized_gens, x0, o, budget);
    out.homogenization = std::move(sat.basis);
    out.saturation_steps = sat.steps;
    return out;
}

ModuleHomogenizationResult homogenize_module(const ModuleBasis& M, const std::string& homog_name,
                                             const MonomialOrder& o, const Budget& budget) {
    Extension ext = extend_ring(*M.ring, homog_name);
    std::vector<VectorPoly> hgens;
    hgens.reserve(M.gens.size());
    for (const VectorPoly& g : M.gens)
        hgens.push_back(homogenize(g.mapped(ext.ring, ext.var_map, o), ext.homog_var));
    ModuleHomogenizationResult out;
    out.extended_ring = ext.ring;
    out.homog_var = ext.homog_var;
    out.homogenized_gens = ModuleBasis::make(ext.ring, M.rank, std::move(hgens));
    Polynomial x0 = Polynomial::variable(ext.ring, o, ext.homog_var);
    ModuleSaturationResult sat = saturate(out.homogenized_gens, x0, o, budget);
    out.homogenization = std::move(sat.basis);
    out.saturation_steps = sat.steps;
    return out;
}

RingPtr base_subring(const RingSpec& ring) {
    std::vector<std::string> vars;
    std::vector<int> weights;
    for (std::size_t i = 0; i < ring.var_count(); ++i)
        if (ring.weight(i) == 0) {
            vars.push_back(ring.var_name(i));
            weights.push_back(0);
        }
    return RingSpec::make(ring.field(), std::move(vars), std::move(weights));
}

namespace {

struct Restriction {
    RingPtr base;
    std::set<std::size_t> dropped;  // the weight-1 variables
    std::vector<std::optional<std::size_t>> var_map;
};

Restriction restrict_to_base(const RingSpec& ring) {
    Restriction r;
    r.base = base_subring(ring);
    std::size_t next = 0;
    r.var_map.resize(ring.var_count());
    for (std::size_t i = 0; i < ring.var_count(); ++i) {
        if (ring.weight(i) == 0)
            r.var_map[i] = next++;
        else
            r.dropped.insert(i);
    }
    return r;
}

}  // namespace

IdealBasis degree_zero_part(const IdealBasis& H) {
    Restriction r = restrict_to_base(*H.ring);
    MonomialOrder drl = MonomialOrder::degrevlex();
    std::vector<Polynomial> out;
    for (const Polynomial& g : H.gens) {
        std::vector<Polynomial> parts =
            g.is_weighted_homogeneous() ? std::vector<Polynomial>{g} : weighted_homogeneous_parts(g);
        for (const Polynomial& p : parts) {
            Polynomial z = substitute_zero(p, r.dropped);
            if (!z.is_zero()) out.push_back(z.mapped(r.base, r.var_map, drl));
        }
    }
    return IdealBasis::make(r.base, std::move(out));
}

ModuleBasis degree_zero_part(const ModuleBasis& H) {
    Restriction r = restrict_to_base(*H.ring);
    MonomialOrder drl = MonomialOrder::degrevlex();
    std::vector<VectorPoly> out;
    for (const VectorPoly& g : H.gens) {
        bool homogeneous = true;
        std::optional<std::int64_t> deg;
        bool first = true;
        for (std::size_t i = 0; i < g.rank() && homogeneous; ++i) {
            if (g[i].is_zero()) continue;
            if (!g[i].is_weighted_homogeneous()) homogeneous = false;
            if (first) {
                deg = g[i].weighted_degree();
                first = false;
            } else if (g[i].weighted_degree() != deg) {
                homogeneous = false;
            }
        }
        std::vector<VectorPoly> parts = homogeneous ? std::vector<VectorPoly>{g} : weighted_homogeneous_parts(g);
        for (const VectorPoly& p : parts) {
            VectorPoly z = substitute_zero(p, r.dropped);
            if (!z.is_zero()) out.push_back(z.mapped(r.base, r.var_map, drl));
        }
    }
    return ModuleBasis::make(r.base, H.rank, std::move(out));
}

namespace {

std::string fresh_homog_name(const RingSpec& ring) {
    std::string name = "x0";
    while (ring.var_index(name)) name += "_";
    return name;
}

// permuted copy of `ring` with the weight-1 variables in front
struct BlockSetup {
    RingPtr ring;
    std::size_t nelim;
    std::vector<std::optional<std::size_t>> var_map;
    MonomialOrder order;  // block order eliminating the front variables
};

BlockSetup block_setup(const RingSpec& ring) {
    std::vector<std::size_t> elim = ring.vars_with_weight(1);
    std::vector<std::size_t> base = ring.vars_with_weight(0);
    std::vector<std::string> vars;
    std::vector<int> weights;
    std::vector<std::optional<std::size_t>> var_map(ring.var_count());
    std::size_t next = 0;
    for (std::size_t i : elim) {
        var_map[i] = next++;
        vars.push_back(ring.var_name(i));
        weights.push_back(1);
    }
    for (std::size_t i : base) {
        var_map[i] = next++;
        vars.push_back(ring.var_name(i));
        weights.push_back(0);
    }
    BlockSetup s{RingSpec::make(ring.field(), std::move(vars), std::move(weights)), elim.size(),
                 std::move(var_map),
                 MonomialOrder::block(elim.size(), MonomialOrder::degrevlex(), MonomialOrder::degrevlex())};
    return s;
}

bool involves_front_block(const Polynomial& f, std::size_t nelim) {
    for (const Term& t : f.terms())
        for (std::size_t i = 0; i < nelim; ++i)
            if (t.mono[i] != 0) return true;
    return false;
}

std::vector<std::optional<std::size_t>> back_block_map(const RingSpec& permuted, std::size_t nelim,
                                                       const RingSpec& base) {
    std::vector<std::optional<std::size_t>> map(permuted.var_count());
    for (std::size_t i = nelim; i < permuted.var_count(); ++i) map[i] = *base.var_index(permuted.var_name(i));
    return map;
}

}  // namespace

IdealBasis eliminate_saturation(const EliminationProblem& p) {
    unsigned steps = 0;
    return eliminate_saturation(p, steps);
}

IdealBasis eliminate_saturation(const EliminationProblem& p, unsigned& saturation_steps) {
    saturation_steps = 0;
    MonomialOrder drl = MonomialOrder::degrevlex();
    IdealBasis I = IdealBasis::make(p.ring, p.gens);
    if (p.ring->vars_with_weight(1).empty())
        return reduced_groebner_basis(I, drl, p.budget);  // nothing to eliminate
    HomogenizationResult h = homogenize_ideal(I, fresh_homog_name(*p.ring), p.order, p.budget);
    saturation_steps = h.saturation_steps;
    return reduced_groebner_basis(degree_zero_part(h.homogenization), drl, p.budget);
}

IdealBasis eliminate_block(const EliminationProblem& p) {
    MonomialOrder drl = MonomialOrder::degrevlex();
    IdealBasis I = IdealBasis::make(p.ring, p.gens);
    if (p.ring->vars_with_weight(1).empty()) return reduced_groebner_basis(I, drl, p.budget);
    BlockSetup s = block_setup(*p.ring);
    std::vector<Polynomial> moved;
    moved.reserve(p.gens.size());
    for (const Polynomial& g : I.gens) moved.push_back(g.mapped(s.ring, s.var_map, s.order));
    IdealBasis gb = reduced_groebner_basis(IdealBasis::make(s.ring, std::move(moved)), s.order, p.budget);
    RingPtr base = base_subring(*p.ring);
    auto back_map = back_block_map(*s.ring, s.nelim, *base);
    std::vector<Polynomial> kept;
    for (const Polynomial& g : gb.gens)
        if (!involves_front_block(g, s.nelim)) kept.push_back(g.mapped(base, back_map, drl));
    return reduced_groebner_basis(IdealBasis::make(base, std::move(kept)), drl, p.budget);
}

ModuleBasis eliminate_saturation(const ModuleEliminationProblem& p) {
    unsigned steps = 0;
    return eliminate_saturation(p, steps);
}

ModuleBasis eliminate_saturation(const ModuleEliminationProblem& p, unsigned& saturation_steps) {
    saturation_steps = 0;
    ModuleOrder drl{MonomialOrder::degrevlex(), ModuleScheme::TermOverPosition};
    ModuleBasis M = ModuleBasis::make(p.ring, p.rank, p.gens);
    if (p.ring->vars_with_weight(1).empty()) return reduced_groebner_basis(M, drl, p.budget);
    ModuleHomogenizationResult h = homogenize_module(M, fresh_homog_name(*p.ring), p.order, p.budget);
    saturation_steps = h.saturation_steps;
    return reduced_groebner_basis(degree_zero_part(h.homogenization), drl, p.budget);
}

ModuleBasis eliminate_block(const ModuleEliminationProblem& p) {
    ModuleOrder drl{MonomialOrder::degrevlex(), ModuleScheme::TermOverPosition};
    ModuleBasis M = ModuleBasis::make(p.ring, p.rank, p.gens);
    if (p.ring->vars_with_weight(1).empty()) return reduced_groebner_basis(M, drl, p.budget);
    BlockSetup s = block_setup(*p.ring);
    // term-over-position keeps every eliminated-variable term above every
    // clean term regardless of position, which is what the filter needs
    ModuleOrder bo{s.order, ModuleScheme::TermOverPosition};
    std::vector<VectorPoly> moved;
    moved.reserve(M.gens.size());
    for (const VectorPoly& g : M.gens) moved.push_back(g.mapped(s.ring, s.var_map, s.order));
    ModuleBasis gb = reduced_groebner_basis(ModuleBasis::make(s.ring, p.rank, std::move(moved)), bo, p.budget);
    RingPtr base = base_subring(*p.ring);
    auto back_map = back_block_map(*s.ring, s.nelim, *base);
    std::vector<VectorPoly> kept;
    for (const VectorPoly& g : gb.gens) {
        bool clean = true;
        for (std::size_t i = 0; i < g.rank() && clean; ++i)
            if (involves_front_block(g[i], s.nelim)) clean = false;
        if (clean) kept.push_back(g.mapped(base, back_map, drl.base));
    }
    return reduced_groebner_basis(ModuleBasis::make(base, p.rank, std::move(kept)), drl, p.budget);
}

}  // namespace satelim
