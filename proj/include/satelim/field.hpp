#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>

#include <gmpxx.h>

#include "satelim/errors.hpp"

namespace satelim {

enum class FieldKind : std::uint8_t { Rationals, PrimeField };

bool is_prime(std::uint64_t n);

// Coefficient domain: QQ, or F_p for a prime p < 2^31.
class FieldSpec {
public:
    static FieldSpec rationals() { return FieldSpec(FieldKind::Rationals, 0); }
    static FieldSpec prime_field(std::uint32_t p);

    FieldKind kind() const { return kind_; }
    std::uint32_t characteristic() const { return char_; }
    bool operator==(const FieldSpec&) const = default;
    std::string str() const;

private:
    FieldSpec(FieldKind k, std::uint32_t c) : kind_(k), char_(c) {}

    FieldKind kind_;
    std::uint32_t char_;
};

// One field element.  QQ values are kept as canonical GMP rationals
// (gcd(num, den) = 1, den > 0); F_p values as residues in [0, p).
class Coefficient {
public:
    Coefficient() = default;  // rational zero

    static Coefficient zero(const FieldSpec& f) { return Coefficient(f); }
    static Coefficient one(const FieldSpec& f);
    static Coefficient from_integer(const FieldSpec& f, long value);
    static Coefficient from_fraction(const FieldSpec& f, const mpz_class& num, const mpz_class& den);
    // Accepts `int` or `int '/' posint`; anything else is a parse_error.
    static Coefficient parse(const std::string& text, const FieldSpec& f);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;
    bool is_negative() const;  // always false over F_p
    Coefficient abs() const;

    Coefficient operator-() const;
    Coefficient operator+(const Coefficient&) const;
    Coefficient operator-(const Coefficient&) const;
    Coefficient operator*(const Coefficient&) const;
    Coefficient operator/(const Coefficient&) const;  // arith_error on zero divisor
    Coefficient inverse() const;

    bool operator==(const Coefficient&) const;
    bool operator!=(const Coefficient& o) const { return !(*this == o); }
    // Total order on values, used only for deterministic tie-breaking.
    static std::strong_ordering cmp(const Coefficient&, const Coefficient&);

    // Unit u normalizing a coefficient list: over F_p the inverse of the
    // first entry, over QQ the rational making every entry an integer, the
    // whole list coprime, and the first entry positive.  The first entry
    // must be nonzero.  Scaling by u keeps numerators and denominators from
    // compounding across chained eliminations.
    static Coefficient normalizer(std::span<const Coefficient> values);

    std::string str() const;

    // Exact value access, for transport between coefficient fields.
    const mpq_class& rational() const;  // rationals only
    std::int64_t residue() const;       // prime fields only

private:
    explicit Coefficient(const FieldSpec& f) : field_(f) {}
    void check_same_field(const Coefficient&) const;

    FieldSpec field_{FieldSpec::rationals()};
    mpq_class rat_{0};
    std::int64_t res_ = 0;
};

}  // namespace satelim
