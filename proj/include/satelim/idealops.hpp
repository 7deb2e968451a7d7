#pragma once

#include <string>

#include "satelim/groebner.hpp"

namespace satelim {

// I : f = { g : g*f in I }, computed from the relations on [f, gens of I].
IdealBasis quotient(const IdealBasis& I, const Polynomial& f, const MonomialOrder& o, const Budget& budget = {});
// M : f = { v : f*v in M }
ModuleBasis quotient(const ModuleBasis& M, const Polynomial& f, const MonomialOrder& o, const Budget& budget = {});

struct SaturationResult {
    IdealBasis basis;  // carries a reduced-basis certificate
    unsigned steps = 0;  // quotient iterations that changed the ideal
};

struct ModuleSaturationResult {
    ModuleBasis basis;
    unsigned steps = 0;
};

// I : f^inf, iterated quotients until two consecutive reduced bases agree.
SaturationResult saturate(const IdealBasis& I, const Polynomial& f, const MonomialOrder& o,
                          const Budget& budget = {});
ModuleSaturationResult saturate(const ModuleBasis& M, const Polynomial& f, const MonomialOrder& o,
                                const Budget& budget = {});

struct HomogenizationResult {
    RingPtr extended_ring;         // input ring plus the weight-1 variable appended last
    std::size_t homog_var = 0;     // its index
    IdealBasis homogenized_gens;   // generatorwise homogenization
    IdealBasis homogenization;     // its saturation by the new variable, certified
    unsigned saturation_steps = 0;
};

struct ModuleHomogenizationResult {
    RingPtr extended_ring;
    std::size_t homog_var = 0;
    ModuleBasis homogenized_gens;
    ModuleBasis homogenization;
    unsigned saturation_steps = 0;
};

// Homogenize every generator with a fresh weight-1 variable, then saturate
// by it.  The result generates the smallest homogeneous ideal whose
// dehomogenization is <gens>.
HomogenizationResult homogenize_ideal(const IdealBasis& I, const std::string& homog_name, const MonomialOrder& o,
                                      const Budget& budget = {});
ModuleHomogenizationResult homogenize_module(const ModuleBasis& M, const std::string& homog_name,
                                             const MonomialOrder& o, const Budget& budget = {});

// Image under setting every weight-1 variable to zero, reinterpreted in the
// subring on the weight-0 variables.  Generators that are not
// weighted-homogeneous are split into their homogeneous parts first.
IdealBasis degree_zero_part(const IdealBasis& H);
ModuleBasis degree_zero_part(const ModuleBasis& H);

// The weight-0 subring of `ring`, variables kept in declaration order.
RingPtr base_subring(const RingSpec& ring);

struct EliminationProblem {
    RingPtr ring;  // weight 1 marks a variable for elimination
    std::vector<Polynomial> gens;
    MonomialOrder order = MonomialOrder::degrevlex();  // working order for the saturation route
    Budget budget{};
};

struct ModuleEliminationProblem {
    RingPtr ring;
    std::size_t rank = 1;
    std::vector<VectorPoly> gens;
    MonomialOrder order = MonomialOrder::degrevlex();
    Budget budget{};
};

// Both routes return the reduced basis of the intersection with the base
// subring, certified under degrevlex on the base variables.

// homogenize, saturate by the fresh variable, take the degree-zero part
IdealBasis eliminate_saturation(const EliminationProblem& p);
IdealBasis eliminate_saturation(const EliminationProblem& p, unsigned& saturation_steps);
// classical oracle: block order with the eliminated variables in front,
// keep the generators free of them
IdealBasis eliminate_block(const EliminationProblem& p);

ModuleBasis eliminate_saturation(const ModuleEliminationProblem& p);
ModuleBasis eliminate_saturation(const ModuleEliminationProblem& p, unsigned& saturation_steps);
ModuleBasis eliminate_block(const ModuleEliminationProblem& p);

}  // namespace satelim
