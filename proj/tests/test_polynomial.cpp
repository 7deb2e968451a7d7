#include <doctest.h>

#include <random>

#include "satelim/polynomial.hpp"
#include "satelim/textio.hpp"

using namespace satelim;

namespace {

const MonomialOrder drl = MonomialOrder::degrevlex();

RingPtr plain_ring(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
    return RingSpec::make(FieldSpec::rationals(), names, std::vector<int>(n, 1));
}

// b1, b2 carry weight 0; t carries weight 1; x0 is the homogenization slot.
RingPtr graded_ring() {
    return RingSpec::make(FieldSpec::rationals(), {"b1", "b2", "t", "x0"}, {0, 0, 1, 1}, 3);
}

Polynomial parse_in(const RingPtr& r, const std::string& text) { return parse_polynomial(text, r, drl); }

Polynomial random_poly(const RingPtr& r, std::mt19937_64& rng, std::uint32_t max_deg = 3, std::size_t max_terms = 4) {
    std::uniform_int_distribution<std::size_t> nterms(0, max_terms);
    std::uniform_int_distribution<std::uint32_t> deg(0, max_deg);
    std::uniform_int_distribution<std::size_t> var(0, r->var_count() - 1);
    std::uniform_int_distribution<long> coef(-5, 5);
    std::vector<Term> terms;
    std::size_t k = nterms(rng);
    for (std::size_t i = 0; i < k; ++i) {
        Monomial m = Monomial::one(r->var_count());
        std::uint32_t d = deg(rng);
        for (std::uint32_t j = 0; j < d; ++j) m = m * Monomial::variable(r->var_count(), var(rng));
        terms.push_back({Coefficient::from_integer(r->field(), coef(rng)), m});
    }
    return Polynomial::from_terms(r, drl, std::move(terms));
}

}  // namespace

TEST_SUITE("polynomial") {

TEST_CASE("from_terms normalizes") {
    RingPtr r = plain_ring(2);
    FieldSpec QQ = r->field();
    Monomial x = Monomial::variable(2, 0), y = Monomial::variable(2, 1);
    Polynomial f = Polynomial::from_terms(r, drl, {{Coefficient::from_integer(QQ, 1), y},
                                                   {Coefficient::from_integer(QQ, 2), x},
                                                   {Coefficient::from_integer(QQ, -1), y},
                                                   {Coefficient::zero(QQ), x * x}});
    // the y terms cancel, the zero term drops, x1 remains
    CHECK(f.term_count() == 1);
    CHECK(f.leading_term().mono == x);
    CHECK(f.leading_term().coef.str() == "2");
    CHECK(Polynomial::from_terms(r, drl, {}).is_zero());
    CHECK_THROWS_AS(Polynomial::zero(r, drl).leading_term(), usage_error);
}

TEST_CASE("terms stay strictly descending") {
    RingPtr r = plain_ring(3);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        Polynomial f = random_poly(r, rng);
        for (std::size_t j = 1; j < f.term_count(); ++j) {
            CHECK(compare(f.terms()[j - 1].mono, f.terms()[j].mono, drl) == std::strong_ordering::greater);
            CHECK_FALSE(f.terms()[j].coef.is_zero());
        }
    }
}

TEST_CASE("ring arithmetic identities") {
    std::mt19937_64 rng(11);
    for (const FieldSpec& F : {FieldSpec::rationals(), FieldSpec::prime_field(32003)}) {
        RingPtr r = RingSpec::make(F, {"x1", "x2", "x3"}, {1, 1, 1});
        for (int i = 0; i < 60; ++i) {
            Polynomial f = random_poly(r, rng), g = random_poly(r, rng), h = random_poly(r, rng);
            CHECK(f + g == g + f);
            CHECK(f * g == g * f);
            CHECK((f + g) * h == f * h + g * h);
            CHECK((f * g) * h == f * (g * h));
            CHECK((f - f).is_zero());
            CHECK(f + Polynomial::zero(r, drl) == f);
            CHECK(-(-f) == f);
            if (!f.is_zero() && !g.is_zero())
                CHECK((f * g).leading_term().mono == f.leading_term().mono * g.leading_term().mono);
        }
    }
}

TEST_CASE("scaled and the division step") {
    RingPtr r = plain_ring(2);
    std::mt19937_64 rng(13);
    FieldSpec QQ = r->field();
    for (int i = 0; i < 50; ++i) {
        Polynomial f = random_poly(r, rng), g = random_poly(r, rng);
        Coefficient c = Coefficient::from_integer(QQ, static_cast<long>(rng() % 7) - 3);
        Monomial m = Monomial::variable(2, rng() % 2, static_cast<std::uint32_t>(rng() % 3));
        Polynomial mono_poly = Polynomial::from_terms(r, drl, {{c, m}});
        CHECK(f.scaled(c, m) == f * mono_poly);
        CHECK(f.minus_scaled(c, m, g) == f - g.scaled(c, m));
    }
    Polynomial f = parse_in(r, "2*x1^2 + x2");
    CHECK(f.monic() == parse_in(r, "x1^2 + 1/2*x2"));
    CHECK(f.without_leading_term() == parse_in(r, "x2"));
}

TEST_CASE("equality is content equality") {
    RingPtr r = plain_ring(2);
    Polynomial f = parse_in(r, "x1 + x2^2");
    CHECK(f == f.resorted(MonomialOrder::lex()));
    CHECK(f.resorted(MonomialOrder::lex()).leading_term().mono == Monomial::variable(2, 0));
    CHECK(f.leading_term().mono == Monomial::variable(2, 1, 2));
    RingPtr r2 = plain_ring(2);  // structurally equal ring, different object
    CHECK(f == parse_in(r2, "x2^2 + x1"));
    RingPtr other = RingSpec::make(FieldSpec::rationals(), {"y1", "y2"}, {1, 1});
    CHECK(f != parse_in(other, "y1 + y2^2"));
    CHECK_THROWS_AS(f + parse_in(other, "y1"), usage_error);
}

TEST_CASE("weighted degree respects the grading") {
    RingPtr r = graded_ring();
    CHECK(weighted_degree(parse_in(r, "b1^3*b2")) == 0);
    CHECK(weighted_degree(parse_in(r, "b1*t^2 + t")) == 2);
    CHECK(weighted_degree(parse_in(r, "t*x0 + b2")) == 2);
    CHECK_FALSE(weighted_degree(Polynomial::zero(r, drl)).has_value());
    CHECK(parse_in(r, "b1*t + t - b2*t").is_weighted_homogeneous());
    CHECK_FALSE(parse_in(r, "t + b2").is_weighted_homogeneous());
    CHECK(Polynomial::zero(r, drl).is_weighted_homogeneous());
}

TEST_CASE("weighted homogeneous parts sum back") {
    RingPtr r = graded_ring();
    std::mt19937_64 rng(17);
    for (int i = 0; i < 60; ++i) {
        Polynomial f = random_poly(r, rng);
        auto parts = weighted_homogeneous_parts(f);
        Polynomial sum = Polynomial::zero(r, drl);
        std::optional<std::int64_t> prev;
        for (const Polynomial& p : parts) {
            CHECK(p.is_weighted_homogeneous());
            CHECK_FALSE(p.is_zero());
            auto d = weighted_degree(p);
            if (prev) CHECK(*d > *prev);  // ascending, no duplicates
            prev = d;
            sum = sum + p;
        }
        CHECK(sum == f);
    }
}

TEST_CASE("homogenization pads to the top weighted degree") {
    RingPtr r = graded_ring();
    Polynomial f = parse_in(r, "t^2 - b2");
    Polynomial fh = homogenize(f, 3);
    CHECK(fh == parse_in(r, "t^2 - b2*x0^2"));
    CHECK(fh.is_weighted_homogeneous());
    CHECK(dehomogenize(fh, 3) == f);
    // weight-0 content is untouched
    Polynomial g = parse_in(r, "b1^2 + b2");
    CHECK(homogenize(g, 3) == g);
    CHECK(homogenize(Polynomial::zero(r, drl), 3).is_zero());
    CHECK_THROWS_AS(homogenize(parse_in(r, "t*x0"), 3), usage_error);  // already mentions x0
}

TEST_CASE("homogenize and dehomogenize round trip") {
    RingPtr r = graded_ring();
    std::mt19937_64 rng(19);
    int produced = 0;
    for (int i = 0; i < 200; ++i) {
        Polynomial f = random_poly(r, rng);
        f = substitute_zero(f, {3});  // keep x0 out of the input
        if (f.is_zero()) continue;
        ++produced;
        Polynomial fh = homogenize(f, 3);
        CHECK(fh.is_weighted_homogeneous());
        CHECK(weighted_degree(fh) == weighted_degree(f));
        CHECK(dehomogenize(fh, 3) == f);
    }
    CHECK(produced > 100);
}

TEST_CASE("substitution to zero") {
    RingPtr r = graded_ring();
    Polynomial f = parse_in(r, "b1*t + b2^2 + t^2 + 3");
    CHECK(substitute_zero(f, {2}) == parse_in(r, "b2^2 + 3"));
    CHECK(substitute_zero(f, {0, 2}) == parse_in(r, "b2^2 + 3"));
    CHECK(substitute_zero(f, {}) == f);
    CHECK(substitute_zero(parse_in(r, "t"), {2}).is_zero());
}

TEST_CASE("mapped transports between rings") {
    RingPtr r = plain_ring(2);
    RingPtr big = plain_ring(3);
    Polynomial f = parse_in(r, "x1^2 - 3*x2");
    std::vector<std::optional<std::size_t>> up = {0, 2};
    Polynomial g = f.mapped(big, up, drl);
    CHECK(g == parse_in(big, "x1^2 - 3*x3"));
    std::vector<std::optional<std::size_t>> down = {0, std::nullopt, 1};
    CHECK(g.mapped(r, down, drl) == f);
    // dropping a live variable is an error
    std::vector<std::optional<std::size_t>> bad = {std::nullopt, 1};
    CHECK_THROWS_AS(f.mapped(big, bad, drl), usage_error);
}

}  // TEST_SUITE

TEST_SUITE("vectorpoly") {

TEST_CASE("construction and units") {
    RingPtr r = plain_ring(2);
    VectorPoly u = VectorPoly::unit(r, drl, 3, 1);
    CHECK(u.rank() == 3);
    CHECK(u[0].is_zero());
    CHECK(u[1] == Polynomial::constant(r, drl, Coefficient::one(r->field())));
    CHECK(VectorPoly(r, drl, 2).is_zero());
    CHECK_THROWS_AS(VectorPoly(std::vector<Polynomial>{}), usage_error);
}

TEST_CASE("componentwise arithmetic and dot") {
    RingPtr r = plain_ring(2);
    std::mt19937_64 rng(23);
    std::vector<Polynomial> F = {random_poly(r, rng), random_poly(r, rng), random_poly(r, rng)};
    for (int i = 0; i < 40; ++i) {
        VectorPoly u(std::vector<Polynomial>{random_poly(r, rng), random_poly(r, rng), random_poly(r, rng)});
        VectorPoly v(std::vector<Polynomial>{random_poly(r, rng), random_poly(r, rng), random_poly(r, rng)});
        CHECK(dot(u + v, F) == dot(u, F) + dot(v, F));
        CHECK(dot(u - v, F) == dot(u, F) - dot(v, F));
        Polynomial s = random_poly(r, rng);
        CHECK(dot(u.scaled(s), F) == s * dot(u, F));
    }
    for (std::size_t i = 0; i < 3; ++i) CHECK(dot(VectorPoly::unit(r, drl, 3, i), F) == F[i]);
}

TEST_CASE("module homogenization levels all components") {
    RingPtr r = graded_ring();
    std::mt19937_64 rng(29);
    for (int i = 0; i < 60; ++i) {
        Polynomial a = substitute_zero(random_poly(r, rng), {3});
        Polynomial b = substitute_zero(random_poly(r, rng), {3});
        VectorPoly v(std::vector<Polynomial>{a, b});
        VectorPoly vh = homogenize(v, 3);
        if (v.is_zero()) {
            CHECK(vh.is_zero());
            continue;
        }
        std::optional<std::int64_t> top;
        for (std::size_t j = 0; j < 2; ++j) {
            if (vh[j].is_zero()) continue;
            CHECK(vh[j].is_weighted_homogeneous());
            auto d = weighted_degree(vh[j]);
            if (top) CHECK(*d == *top);
            top = d;
            CHECK(dehomogenize(vh[j], 3) == v[j]);
        }
    }
}

TEST_CASE("frozen module homogenization example") {
    RingPtr r = graded_ring();
    VectorPoly v(std::vector<Polynomial>{parse_in(r, "t^2"), parse_in(r, "b1*t + b2")});
    VectorPoly vh = homogenize(v, 3);
    CHECK(vh[0] == parse_in(r, "t^2"));
    CHECK(vh[1] == parse_in(r, "b1*t*x0 + b2*x0^2"));
}

}  // TEST_SUITE
