#include <doctest.h>

#include <random>

#include "satelim/bench.hpp"
#include "satelim/idealops.hpp"
#include "satelim/textio.hpp"

using namespace satelim;

namespace {

const MonomialOrder drl = MonomialOrder::degrevlex();

Polynomial parse_in(const RingPtr& r, const std::string& text) { return parse_polynomial(text, r, drl); }

std::vector<Polynomial> parse_all(const RingPtr& r, const std::vector<std::string>& texts) {
    std::vector<Polynomial> out;
    for (const auto& t : texts) out.push_back(parse_in(r, t));
    return out;
}

std::vector<std::string> printed(const std::vector<Polynomial>& G) {
    std::vector<std::string> out;
    for (const Polynomial& g : G) out.push_back(to_string(g));
    return out;
}

// the twisted cubic, t marked for elimination
EliminationProblem cubic_problem() {
    RingPtr r = RingSpec::make(FieldSpec::rationals(), {"b1", "b2", "b3", "t"}, {0, 0, 0, 1});
    EliminationProblem p;
    p.ring = r;
    p.gens = parse_all(r, {"b1 - t", "b2 - t^2", "b3 - t^3"});
    return p;
}

}  // namespace

TEST_SUITE("quotient") {

TEST_CASE("frozen: monomial ideal") {
    RingPtr r = RingSpec::make(FieldSpec::rationals(), {"x", "y"}, {1, 1});
    IdealBasis I = IdealBasis::make(r, parse_all(r, {"x^2", "x*y"}));
    IdealBasis Q = quotient(I, parse_in(r, "x"), drl);
    IdealBasis expected = IdealBasis::make(r, parse_all(r, {"x", "y"}));
    CHECK(ideal_equal(Q, expected, drl));
}

TEST_CASE("edge behaviors") {
    RingPtr r = RingSpec::make(FieldSpec::rationals(), {"x", "y"}, {1, 1});
    IdealBasis I = IdealBasis::make(r, parse_all(r, {"x^2", "x*y"}));
    // dividing by a unit changes nothing
    CHECK(ideal_equal(quotient(I, parse_in(r, "3"), drl), I, drl));
    // dividing by a member gives the whole ring
    IdealBasis whole = quotient(I, parse_in(r, "x^2"), drl);
    CHECK(ideal_membership(parse_in(r, "1"), whole, drl));
    // dividing by zero is refused
    CHECK_THROWS_AS(quotient(I, Polynomial::zero(r, drl), drl), usage_error);
}

TEST_CASE("quotient members multiply back in") {
    std::mt19937_64 rng(307);
    RingPtr r = RingSpec::make(FieldSpec::rationals(), {"x", "y"}, {1, 1});
    std::uniform_int_distribution<std::size_t> ngens(1, 3);
    for (int i = 0; i < 15; ++i) {
        std::vector<Polynomial> gens;
        std::size_t k = ngens(rng);
        for (std::size_t j = 0; j < k; ++j) {
            Polynomial g = bench::random_polynomial(r, drl, 2, 3, 3, rng);
            if (!g.is_zero()) gens.push_back(std::move(g));
        }
        Polynomial f = bench::random_polynomial(r, drl, 2, 3, 3, rng);
        if (gens.empty() || f.is_zero()) continue;
        IdealBasis I = IdealBasis::make(r, gens);
        IdealBasis Q = quotient(I, f, drl);
        for (const Polynomial& q : Q.gens) CHECK(ideal_membership(q * f, I, drl));
        // and I itself always sits inside I : f
        for (const Polynomial& g : I.gens) CHECK(ideal_membership(g, Q, drl));
    }
}

TEST_CASE("module quotient") {
    RingPtr r = RingSpec::make(FieldSpec::rationals(), {"x", "y"}, {1, 1});
    ModuleOrder mo{drl, ModuleScheme::TermOverPosition};
    // M = <(x^2, 0), (0, x*y)>; M : x contains (x, 0) and (0, y)
    std::vector<VectorPoly> gens = {
        VectorPoly(std::vector<Polynomial>{parse_in(r, "x^2"), parse_in(r, "0")}),
        VectorPoly(std::vector<Polynomial>{parse_in(r, "0"), parse_in(r, "x*y")}),
    };
    ModuleBasis M = ModuleBasis::make(r, 2, gens);
    ModuleBasis Q = quotient(M, parse_in(r, "x"), drl);
    for (const VectorPoly& q : Q.gens) CHECK(module_membership(q.scaled(parse_in(r, "x")), M, mo));
    VectorPoly ex(std::vector<Polynomial>{parse_in(r, "x"), parse_in(r, "0")});
    VectorPoly ey(std::vector<Polynomial>{parse_in(r, "0"), parse_in(r, "y")});
    CHECK(module_membership(ex, Q, mo));
    CHECK(module_membership(ey, Q, mo));
    CHECK_FALSE(module_membership(VectorPoly::unit(r, drl, 2, 0), Q, mo));
    CHECK_THROWS_AS(quotient(M, Polynomial::zero(r, drl), drl), usage_error);
}

}  // TEST_SUITE

TEST_SUITE("saturation") {

TEST_CASE("frozen: one quotient step strips the homogenizer") {
    // J = <x1^2, x0*x2 - x1^2> in k[x1, x2, x0]; J : x0^inf = <x1^2, x2>
    RingPtr r = RingSpec::make(FieldSpec::rationals(), {"x1", "x2", "x0"}, {1, 1, 1}, 2);
    IdealBasis J = IdealBasis::make(r, parse_all(r, {"x1^2", "x0*x2 - x1^2"}));
    IdealBasis Jred = reduced_groebner_basis(J, drl);
    CHECK(printed(Jred.gens) == std::vector<std::string>{"x1^2", "x2*x0"});
    SaturationResult sat = saturate(J, parse_in(r, "x0"), drl);
    CHECK(sat.steps == 1);
    CHECK(printed(sat.basis.gens) == std::vector<std::string>{"x1^2", "x2"});
    REQUIRE(sat.basis.certified_order.has_value());
    CHECK(*sat.basis.certified_order == drl);
}

TEST_CASE("saturation is a fixpoint") {
    RingPtr r = RingSpec::make(FieldSpec::rationals(), {"x1", "x2", "x0"}, {1, 1, 1}, 2);
    IdealBasis J = IdealBasis::make(r, parse_all(r, {"x1^2", "x0*x2 - x1^2"}));
    Polynomial x0 = parse_in(r, "x0");
    SaturationResult sat = saturate(J, x0, drl);
    SaturationResult again = saturate(sat.basis, x0, drl);
    CHECK(again.steps == 0);
    CHECK(again.basis.gens == sat.basis.gens);
    CHECK(ideal_equal(quotient(sat.basis, x0, drl), sat.basis, drl));
}

TEST_CASE("saturating by a nonzerodivisor outside all minimal primes") {
    RingPtr r = RingSpec::make(FieldSpec::rationals(), {"x", "y"}, {1, 1});
    IdealBasis I = IdealBasis::make(r, parse_all(r, {"x^2 + 1"}));
    SaturationResult sat = saturate(I, parse_in(r, "y"), drl);
    CHECK(sat.steps == 0);
    CHECK(ideal_equal(sat.basis, I, drl));
}

TEST_CASE("multi-step saturation") {
    // <x^3*y> : x^inf needs several quotient rounds before it stabilizes at <y>
    RingPtr r = RingSpec::make(FieldSpec::rationals(), {"x", "y"}, {1, 1});
    IdealBasis I = IdealBasis::make(r, parse_all(r, {"x^3*y"}));
    SaturationResult sat = saturate(I, parse_in(r, "x"), drl);
    CHECK(sat.steps == 3);
    CHECK(printed(sat.basis.gens) == std::vector<std::string>{"y"});
}

}  // TEST_SUITE

TEST_SUITE("homogenization of ideals") {

TEST_CASE("frozen: twisted cubic") {
    EliminationProblem p = cubic_problem();
    IdealBasis I = IdealBasis::make(p.ring, p.gens);
    HomogenizationResult H = homogenize_ideal(I, "s", drl);
    CHECK(H.extended_ring->var_count() == 5);
    CHECK(H.extended_ring->var_name(4) == "s");
    CHECK(H.homog_var == 4);
    CHECK(H.extended_ring->weights() == std::vector<int>{0, 0, 0, 1, 1});
    // generatorwise homogenization of b2 - t^2 pads the low term
    CHECK(to_string(H.homogenized_gens.gens[1]) == "b2*s^2 - t^2");
    // the homogenized ideal is generated by the paper's three elements
    RingPtr er = H.extended_ring;
    IdealBasis expected = IdealBasis::make(er, parse_all(er, {"b1*s - t", "b1*b2 - b3", "b1^2 - b2"}));
    CHECK(ideal_equal(H.homogenization, expected, drl));
    // every generator of the saturated basis is weighted homogeneous
    for (const Polynomial& g : H.homogenization.gens) CHECK(g.is_weighted_homogeneous());
}

TEST_CASE("dehomogenization recovers the input ideal") {
    std::mt19937_64 rng(311);
    bench::RandomParams params;  // 2 elim + 2 base vars
    for (int i = 0; i < 10; ++i) {
        bench::Instance inst = bench::random_instance(params, rng, "h");
        if (inst.problem.gens.empty()) continue;
        IdealBasis I = IdealBasis::make(inst.problem.ring, inst.problem.gens);
        if (I.gens.empty()) continue;
        HomogenizationResult H = homogenize_ideal(I, "x0", drl);
        // map Ih back down: drop x0 by substituting 1
        std::vector<std::optional<std::size_t>> down(H.extended_ring->var_count());
        for (std::size_t v = 0; v + 1 < H.extended_ring->var_count(); ++v) down[v] = v;
        std::vector<Polynomial> dehomed;
        for (const Polynomial& g : H.homogenization.gens)
            dehomed.push_back(dehomogenize(g, H.homog_var).mapped(I.ring, down, drl));
        CHECK(ideal_equal(IdealBasis::make(I.ring, dehomed), I, drl));
        // saturatedness: quotient by x0 changes nothing
        Polynomial x0 = Polynomial::variable(H.extended_ring, drl, H.homog_var);
        CHECK(ideal_equal(quotient(H.homogenization, x0, drl), H.homogenization, drl));
    }
}

TEST_CASE("homogenizing rejects bad rings") {
    RingPtr taken = RingSpec::make(FieldSpec::rationals(), {"x", "x0"}, {1, 1}, 1);
    IdealBasis I = IdealBasis::make(taken, {parse_in(taken, "x")});
    CHECK_THROWS_AS(homogenize_ideal(I, "x0", drl), usage_error);  // slot already occupied
    RingPtr flat = RingSpec::make(FieldSpec::rationals(), {"x", "y"}, {0, 0});
    IdealBasis J = IdealBasis::make(flat, {parse_in(flat, "x")});
    CHECK_THROWS_AS(homogenize_ideal(J, "x0", drl), usage_error);  // nothing carries weight 1
    RingPtr named = RingSpec::make(FieldSpec::rationals(), {"x", "y"}, {0, 1});
    IdealBasis K = IdealBasis::make(named, {parse_in(named, "x")});
    CHECK_THROWS_AS(homogenize_ideal(K, "y", drl), usage_error);  // name collision
    CHECK_THROWS_AS(homogenize_ideal(K, "0bad", drl), usage_error);
}

TEST_CASE("module homogenization saturates too") {
    RingPtr r = RingSpec::make(FieldSpec::rationals(), {"b", "t"}, {0, 1});
    std::vector<VectorPoly> gens = {
        VectorPoly(std::vector<Polynomial>{parse_in(r, "t"), parse_in(r, "b")}),
        VectorPoly(std::vector<Polynomial>{parse_in(r, "t^2"), parse_in(r, "0")}),
    };
    ModuleBasis M = ModuleBasis::make(r, 2, gens);
    ModuleHomogenizationResult H = homogenize_module(M, "x0", drl);
    CHECK(H.extended_ring->var_count() == 3);
    ModuleOrder mo{drl, ModuleScheme::TermOverPosition};
    // saturated: quotient by x0 is a no-op
    Polynomial x0 = Polynomial::variable(H.extended_ring, drl, H.homog_var);
    CHECK(module_equal(quotient(H.homogenization, x0, drl), H.homogenization, mo));
    // componentwise dehomogenization lands in M
    std::vector<std::optional<std::size_t>> down(3);
    down[0] = 0;
    down[1] = 1;
    for (const VectorPoly& g : H.homogenization.gens) {
        VectorPoly affine(std::vector<Polynomial>{
            dehomogenize(g[0], H.homog_var).mapped(r, down, drl),
            dehomogenize(g[1], H.homog_var).mapped(r, down, drl)});
        CHECK(module_membership(affine, M, mo));
    }
}

}  // TEST_SUITE

TEST_SUITE("degree zero part") {

TEST_CASE("frozen: twisted cubic pipeline tail") {
    EliminationProblem p = cubic_problem();
    IdealBasis I = IdealBasis::make(p.ring, p.gens);
    HomogenizationResult H = homogenize_ideal(I, "x0", drl);
    IdealBasis dz = degree_zero_part(H.homogenization);
    CHECK(dz.ring->var_names() == std::vector<std::string>{"b1", "b2", "b3"});
    IdealBasis red = reduced_groebner_basis(dz, drl);
    CHECK(printed(red.gens) == std::vector<std::string>{"b1^2 - b2", "b1*b2 - b3", "b2^2 - b1*b3"});
}

TEST_CASE("non-homogeneous generators are split first") {
    RingPtr r = RingSpec::make(FieldSpec::rationals(), {"b", "t"}, {0, 1});
    // b^2 + t is not weighted homogeneous; its parts contribute b^2 alone
    IdealBasis H = IdealBasis::make(r, parse_all(r, {"b^2 + t"}));
    IdealBasis dz = degree_zero_part(H);
    REQUIRE(dz.ring->var_count() == 1);
    IdealBasis expected = IdealBasis::make(dz.ring, {parse_polynomial("b^2", dz.ring, drl)});
    CHECK(ideal_equal(reduced_groebner_basis(dz, drl), expected, drl));
}

TEST_CASE("base subring keeps declaration order") {
    RingPtr r = RingSpec::make(FieldSpec::rationals(), {"a", "u", "b", "v"}, {0, 1, 0, 1});
    RingPtr B = base_subring(*r);
    CHECK(B->var_names() == std::vector<std::string>{"a", "b"});
    CHECK(B->field() == r->field());
}

}  // TEST_SUITE

TEST_SUITE("elimination") {

TEST_CASE("frozen: twisted cubic, both routes") {
    EliminationProblem p = cubic_problem();
    unsigned steps = 0;
    IdealBasis via_sat = eliminate_saturation(p, steps);
    IdealBasis via_block = eliminate_block(p);
    CHECK(printed(via_sat.gens) == std::vector<std::string>{"b1^2 - b2", "b1*b2 - b3", "b2^2 - b1*b3"});
    CHECK(via_sat.gens == via_block.gens);
    CHECK(steps >= 1);
    CHECK(via_sat.ring->var_names() == std::vector<std::string>{"b1", "b2", "b3"});
    REQUIRE(via_sat.certified_order.has_value());
    CHECK(*via_sat.certified_order == drl);
}

TEST_CASE("frozen: resultant of a circle and a line") {
    RingPtr r = RingSpec::make(FieldSpec::rationals(), {"x", "y"}, {0, 1});
    EliminationProblem p;
    p.ring = r;
    p.gens = parse_all(r, {"x^2 + y^2 - 1", "y - x"});
    IdealBasis via_sat = eliminate_saturation(p);
    CHECK(printed(via_sat.gens) == std::vector<std::string>{"x^2 - 1/2"});
    CHECK(via_sat.gens == eliminate_block(p).gens);
}

TEST_CASE("projection with dense image is the zero ideal") {
    RingPtr r = RingSpec::make(FieldSpec::rationals(), {"x", "y"}, {0, 1});
    EliminationProblem p;
    p.ring = r;
    p.gens = parse_all(r, {"x^2 + y^2 - 1"});
    CHECK(eliminate_saturation(p).gens.empty());
    CHECK(eliminate_block(p).gens.empty());
}

TEST_CASE("nothing to eliminate") {
    RingPtr r = RingSpec::make(FieldSpec::rationals(), {"x", "y"}, {0, 0});
    EliminationProblem p;
    p.ring = r;
    p.gens = parse_all(r, {"y - x^2", "x*y"});
    IdealBasis a = eliminate_saturation(p);
    IdealBasis b = eliminate_block(p);
    CHECK(a.gens == b.gens);
    CHECK(ideal_equal(a, IdealBasis::make(r, p.gens), drl));
}

TEST_CASE("eliminating every variable leaves the constants") {
    RingPtr r = RingSpec::make(FieldSpec::rationals(), {"x", "y"}, {1, 1});
    EliminationProblem proper;
    proper.ring = r;
    proper.gens = parse_all(r, {"y - x^2"});
    CHECK(eliminate_saturation(proper).gens.empty());
    CHECK(eliminate_block(proper).gens.empty());
    EliminationProblem unit;
    unit.ring = r;
    unit.gens = parse_all(r, {"x", "x - 1"});
    IdealBasis a = eliminate_saturation(unit);
    IdealBasis b = eliminate_block(unit);
    REQUIRE(a.gens.size() == 1);
    CHECK(to_string(a.gens[0]) == "1");
    CHECK(a.gens == b.gens);
}

TEST_CASE("routes agree on random instances") {
    std::mt19937_64 rng(313);
    bench::RandomParams params;
    params.max_degree = 2;
    params.max_terms = 3;
    for (int i = 0; i < 10; ++i) {
        bench::Instance inst = bench::random_instance(params, rng, "agree");
        IdealBasis a = eliminate_saturation(inst.problem);
        IdealBasis b = eliminate_block(inst.problem);
        CHECK(a.gens == b.gens);
    }
}

TEST_CASE("module elimination, both routes") {
    RingPtr r = RingSpec::make(FieldSpec::rationals(), {"b1", "b2", "t"}, {0, 0, 1});
    ModuleEliminationProblem p;
    p.ring = r;
    p.rank = 2;
    p.gens = {
        VectorPoly(std::vector<Polynomial>{parse_in(r, "b1 - t"), parse_in(r, "b2")}),
        VectorPoly(std::vector<Polynomial>{parse_in(r, "t"), parse_in(r, "0")}),
        VectorPoly(std::vector<Polynomial>{parse_in(r, "0"), parse_in(r, "t - b2")}),
    };
    ModuleBasis a = eliminate_saturation(p);
    ModuleBasis b = eliminate_block(p);
    CHECK(a.gens == b.gens);
    CHECK(a.ring->var_names() == std::vector<std::string>{"b1", "b2"});
    // (b1, b2) = g1 + g2 is t-free, so it must survive
    ModuleOrder mo{drl, ModuleScheme::TermOverPosition};
    VectorPoly survivor(std::vector<Polynomial>{
        parse_polynomial("b1", a.ring, drl), parse_polynomial("b2", a.ring, drl)});
    CHECK(module_membership(survivor, a, mo));
}

TEST_CASE("random module eliminations agree") {
    std::mt19937_64 rng(317);
    RingPtr r = RingSpec::make(FieldSpec::rationals(), {"b1", "b2", "t"}, {0, 0, 1});
    std::uniform_int_distribution<std::size_t> ngens(1, 3);
    for (int i = 0; i < 8; ++i) {
        ModuleEliminationProblem p;
        p.ring = r;
        p.rank = 2;
        std::size_t k = ngens(rng);
        for (std::size_t j = 0; j < k; ++j) {
            VectorPoly v(std::vector<Polynomial>{bench::random_polynomial(r, drl, 2, 3, 3, rng),
                                                 bench::random_polynomial(r, drl, 2, 3, 3, rng)});
            if (!v.is_zero()) p.gens.push_back(std::move(v));
        }
        if (p.gens.empty()) continue;
        ModuleBasis a = eliminate_saturation(p);
        ModuleBasis b = eliminate_block(p);
        CHECK(a.gens == b.gens);
    }
}

}  // TEST_SUITE
