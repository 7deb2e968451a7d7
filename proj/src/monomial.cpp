#include "satelim/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace satelim {

Monomial::Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
    for (std::uint32_t e : exps_)
        if (e > max_exponent)
            throw overflow_error("exponent " + std::to_string(e) + " exceeds the supported bound " +
                                 std::to_string(max_exponent));
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, std::uint32_t exp) {
    if (index >= nvars) throw usage_error("variable index out of range");
    if (exp > max_exponent)
        throw overflow_error("exponent " + std::to_string(exp) + " exceeds the supported bound " +
                             std::to_string(max_exponent));
    Monomial m(nvars);
    m.exps_[index] = exp;
    return m;
}

bool Monomial::is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](std::uint32_t e) { return e == 0; });
}

std::uint64_t Monomial::total_degree() const {
    return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

void Monomial::check_size(const Monomial& o) const {
    if (exps_.size() != o.exps_.size()) throw usage_error("monomials from different rings");
}

Monomial Monomial::operator*(const Monomial& o) const {
    check_size(o);
    Monomial r(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        std::uint64_t e = std::uint64_t{exps_[i]} + o.exps_[i];
        if (e > max_exponent)
            throw overflow_error("exponent overflow in monomial product");
        r.exps_[i] = static_cast<std::uint32_t>(e);
    }
    return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
    check_size(o);
    Monomial r(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (o.exps_[i] > exps_[i]) throw usage_error("monomial quotient is not a monomial");
        r.exps_[i] = exps_[i] - o.exps_[i];
    }
    return r;
}

bool Monomial::divides(const Monomial& other) const {
    check_size(other);
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

bool Monomial::coprime_with(const Monomial& o) const {
    check_size(o);
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > 0 && o.exps_[i] > 0) return false;
    return true;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    a.check_size(b);
    Monomial r(a.exps_.size());
    for (std::size_t i = 0; i < a.exps_.size(); ++i)
        r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    return r;
}

}  // namespace satelim
