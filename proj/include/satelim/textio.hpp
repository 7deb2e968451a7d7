#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>

#include "satelim/polynomial.hpp"

namespace satelim {

std::string to_string(const Monomial& m, const RingSpec& ring);
std::string to_string(const Polynomial& f);
std::string to_string(const VectorPoly& v);
std::ostream& operator<<(std::ostream&, const Polynomial&);
std::ostream& operator<<(std::ostream&, const VectorPoly&);

// Grammar:
//   poly  := ['-'] term (('+' | '-') term)*
//   term  := coeff [['*'] monos] | monos
//   monos := var ['^' nat] ('*' var ['^' nat])*
//   coeff := nat | nat '/' nat
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring, const MonomialOrder& order,
                            int line_no = 1);

// One ideal instance as read from a .ideal file: field and variable
// declarations, an optional eliminated-variable subset (these get weight 1),
// an optional order override, and the generators.
struct ProblemFile {
    RingPtr ring;
    std::vector<Polynomial> gens;
    std::optional<MonomialOrder> order;
    std::set<std::size_t> elim_vars;
};

ProblemFile parse_problem_file(std::istream& in);
ProblemFile load_problem_file(const std::filesystem::path& path);

}  // namespace satelim
