#pragma once

#include <cstdint>
#include <vector>

#include "satelim/errors.hpp"

namespace satelim {

// Exponent vector with one slot per ring variable.
class Monomial {
public:
    static constexpr std::uint32_t max_exponent = 65535;

    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps);
    static Monomial one(std::size_t nvars) { return Monomial(nvars); }
    static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t exp = 1);

    std::size_t size() const { return exps_.size(); }
    std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
    const std::vector<std::uint32_t>& exps() const { return exps_; }
    bool is_one() const;
    std::uint64_t total_degree() const;

    Monomial operator*(const Monomial&) const;
    // pre: o divides *this
    Monomial operator/(const Monomial& o) const;
    bool divides(const Monomial& other) const;
    bool coprime_with(const Monomial&) const;
    static Monomial lcm(const Monomial&, const Monomial&);

    bool operator==(const Monomial&) const = default;

private:
    void check_size(const Monomial& o) const;

    std::vector<std::uint32_t> exps_;
};

}  // namespace satelim
