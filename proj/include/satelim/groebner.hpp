#pragma once

#include <chrono>
#include <optional>
#include <span>
#include <vector>

#include "satelim/polynomial.hpp"

namespace satelim {

// Resource limits for basis computations.  Degrees are plain total degrees.
struct Budget {
    std::uint64_t max_pairs = 1'000'000;
    std::uint64_t max_total_degree = 4096;
    std::optional<std::chrono::milliseconds> wall_clock;
};

// Generator list with an optional certificate: when `certified_order` is
// set, `gens` is the reduced Groebner basis under that order.
struct IdealBasis {
    RingPtr ring;
    std::vector<Polynomial> gens;
    std::optional<MonomialOrder> certified_order;

    static IdealBasis make(RingPtr ring, std::vector<Polynomial> gens);
};

struct ModuleBasis {
    RingPtr ring;
    std::size_t rank = 1;
    std::vector<VectorPoly> gens;
    std::optional<ModuleOrder> certified_order;

    static ModuleBasis make(RingPtr ring, std::size_t rank, std::vector<VectorPoly> gens);
};

// Relations on a generator list: every `gens` element s satisfies
// sum_i s[i] * over[i] = 0, and the s generate all such relations.
template <class Elem>
struct SyzygyBasis {
    std::vector<Elem> over;
    std::vector<VectorPoly> gens;
};

struct PolyDivision {
    Polynomial remainder;
    std::vector<Polynomial> quotients;  // f = sum quotients[i] * G[i] + remainder
};

struct ModuleDivision {
    VectorPoly remainder;
    std::vector<Polynomial> quotients;
};

// Multivariate division: always reduces the largest reducible term by the
// first divisor in list order, so the result is deterministic.
PolyDivision normal_form(const Polynomial& f, std::span<const Polynomial> G, const MonomialOrder& o);
ModuleDivision normal_form(const VectorPoly& f, std::span<const VectorPoly> G, const ModuleOrder& o);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& o);
// nullopt when the leading terms sit in different positions.
std::optional<VectorPoly> s_polynomial(const VectorPoly& f, const VectorPoly& g, const ModuleOrder& o);

// Buchberger with the normal pair-selection strategy (smallest lcm degree
// first, FIFO among equal degrees), the chain criterion, and the coprime
// criterion for ideals.
std::vector<Polynomial> buchberger(std::vector<Polynomial> gens, const MonomialOrder& o, const Budget& budget = {});
std::vector<VectorPoly> buchberger(std::vector<VectorPoly> gens, const ModuleOrder& o, const Budget& budget = {});

// Unique reduced basis: monic, minimal, tails fully reduced, sorted
// descending by leading term.
std::vector<Polynomial> reduce_basis(std::vector<Polynomial> gb, const MonomialOrder& o);
std::vector<VectorPoly> reduce_basis(std::vector<VectorPoly> gb, const ModuleOrder& o);

IdealBasis reduced_groebner_basis(const IdealBasis& I, const MonomialOrder& o, const Budget& budget = {});
ModuleBasis reduced_groebner_basis(const ModuleBasis& M, const ModuleOrder& o, const Budget& budget = {});

bool ideal_membership(const Polynomial& f, const IdealBasis& I, const MonomialOrder& o, const Budget& budget = {});
bool module_membership(const VectorPoly& f, const ModuleBasis& M, const ModuleOrder& o, const Budget& budget = {});
bool ideal_equal(const IdealBasis& I, const IdealBasis& J, const MonomialOrder& o, const Budget& budget = {});
bool module_equal(const ModuleBasis& M, const ModuleBasis& N, const ModuleOrder& o, const Budget& budget = {});

SyzygyBasis<Polynomial> syzygies(std::span<const Polynomial> F, const MonomialOrder& o, const Budget& budget = {});
SyzygyBasis<VectorPoly> syzygies(std::span<const VectorPoly> F, const MonomialOrder& o, const Budget& budget = {});

// Coefficients on the leading generators across a generating set of the
// relations among F: one polynomial (or one rank-`count` vector) per
// relation.  Same relations as `syzygies`, but the remaining coefficient
// columns are never carried through the computation, which is what makes
// repeated quotients affordable.
std::vector<Polynomial> relation_coefficients_on_first(std::span<const Polynomial> F, const MonomialOrder& o,
                                                       const Budget& budget = {});
std::vector<VectorPoly> relation_coefficients_on_first(std::span<const VectorPoly> F, std::size_t count,
                                                       const MonomialOrder& o, const Budget& budget = {});

}  // namespace satelim
