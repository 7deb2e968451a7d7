#pragma once

#include <optional>
#include <set>
#include <span>
#include <vector>

#include "satelim/field.hpp"
#include "satelim/monomial.hpp"
#include "satelim/order.hpp"
#include "satelim/ring.hpp"

namespace satelim {

struct Term {
    Coefficient coef;
    Monomial mono;

    bool operator==(const Term&) const = default;
};

// Sparse polynomial.  Terms are kept strictly descending under the carried
// order with no zero coefficients, so the representation is canonical and
// iteration order is the reduction order.
class Polynomial {
public:
    Polynomial(RingPtr ring, MonomialOrder order);

    static Polynomial zero(RingPtr ring, MonomialOrder order) { return Polynomial(std::move(ring), std::move(order)); }
    static Polynomial constant(RingPtr ring, MonomialOrder order, Coefficient c);
    static Polynomial variable(RingPtr ring, MonomialOrder order, std::size_t index, std::uint32_t exp = 1);
    static Polynomial from_terms(RingPtr ring, MonomialOrder order, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const MonomialOrder& order() const { return order_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const Term& leading_term() const;

    // Plain total degree; 0 for the zero polynomial (callers that care
    // about the zero case check is_zero first).
    std::uint64_t total_degree() const;
    // Weighted degree under the ring grading; nullopt encodes deg 0 = -inf.
    std::optional<std::int64_t> weighted_degree() const;
    bool is_weighted_homogeneous() const;

    Polynomial resorted(const MonomialOrder& order) const;
    Polynomial operator-() const;
    Polynomial operator+(const Polynomial&) const;
    Polynomial operator-(const Polynomial&) const;
    Polynomial operator*(const Polynomial&) const;
    Polynomial scaled(const Coefficient& c) const;
    Polynomial scaled(const Coefficient& c, const Monomial& m) const;
    // *this - c * m * g, the division step
    Polynomial minus_scaled(const Coefficient& c, const Monomial& m, const Polynomial& g) const;
    Polynomial without_leading_term() const;
    Polynomial monic() const;

    // Contentwise equality; operands carrying different orders are resorted.
    bool operator==(const Polynomial&) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Transport into another ring.  var_map[i] names the image of variable
    // i; a variable that occurs with a positive exponent must be mapped.
    Polynomial mapped(RingPtr target, std::span<const std::optional<std::size_t>> var_map,
                      const MonomialOrder& order) const;

private:
    void check_compatible(const Polynomial&) const;
    void normalize();

    RingPtr ring_;
    MonomialOrder order_;
    std::vector<Term> terms_;
};

std::optional<std::int64_t> weighted_degree(const Polynomial& f);

// f |-> x0^(deg f) * f(..., v/x0, ...) for the weight-1 variables: each
// term is padded with the power of x0 that lifts it to the top weighted
// degree.  pre: x0 has weight 1 and does not occur in f.
Polynomial homogenize(const Polynomial& f, std::size_t homog_var);

// Evaluation at x0 = 1.
Polynomial dehomogenize(const Polynomial& s, std::size_t homog_var);

// Evaluation at v = 0 for every listed variable.
Polynomial substitute_zero(const Polynomial& f, const std::set<std::size_t>& vars);

// Split into weighted-homogeneous summands, ascending by degree.
std::vector<Polynomial> weighted_homogeneous_parts(const Polynomial& f);

// Element of a free module R^rank.
class VectorPoly {
public:
    VectorPoly(RingPtr ring, MonomialOrder order, std::size_t rank);
    explicit VectorPoly(std::vector<Polynomial> components);
    static VectorPoly unit(RingPtr ring, MonomialOrder order, std::size_t rank, std::size_t pos);

    std::size_t rank() const { return comps_.size(); }
    const Polynomial& operator[](std::size_t i) const { return comps_[i]; }
    const std::vector<Polynomial>& components() const { return comps_; }
    const RingPtr& ring() const { return comps_.front().ring(); }
    const MonomialOrder& order() const { return comps_.front().order(); }
    bool is_zero() const;

    VectorPoly resorted(const MonomialOrder& order) const;
    VectorPoly operator-() const;
    VectorPoly operator+(const VectorPoly&) const;
    VectorPoly operator-(const VectorPoly&) const;
    VectorPoly scaled(const Coefficient& c) const;
    VectorPoly scaled(const Coefficient& c, const Monomial& m) const;
    VectorPoly scaled(const Polynomial& f) const;
    VectorPoly minus_scaled(const Coefficient& c, const Monomial& m, const VectorPoly& g) const;
    VectorPoly with_component(std::size_t i, Polynomial p) const;

    bool operator==(const VectorPoly&) const;
    bool operator!=(const VectorPoly& o) const { return !(*this == o); }

    VectorPoly mapped(RingPtr target, std::span<const std::optional<std::size_t>> var_map,
                      const MonomialOrder& order) const;

private:
    std::vector<Polynomial> comps_;
};

// Componentwise homogenization padded with x0 powers so every component
// reaches the same weighted degree; an all-zero vector stays zero.
VectorPoly homogenize(const VectorPoly& v, std::size_t homog_var);

VectorPoly substitute_zero(const VectorPoly& v, const std::set<std::size_t>& vars);

std::vector<VectorPoly> weighted_homogeneous_parts(const VectorPoly& v);

// sum_i coeffs[i] * F[i]
Polynomial dot(const VectorPoly& coeffs, std::span<const Polynomial> F);
VectorPoly dot(const VectorPoly& coeffs, std::span<const VectorPoly> F);

}  // namespace satelim
