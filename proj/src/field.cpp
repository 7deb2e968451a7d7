#include "satelim/field.hpp"

#include <cctype>

namespace satelim {

namespace {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    // mod < 2^31, so 64-bit products never overflow
    std::uint64_t r = 1;
    base %= mod;
    while (exp) {
        if (exp & 1) r = r * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // Miller-Rabin with bases 2, 3, 5, 7 is deterministic below 3.2e9
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = x * x % n;
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

FieldSpec FieldSpec::prime_field(std::uint32_t p) {
    if (p >= (1u << 31) || !is_prime(p))
        throw usage_error("field characteristic must be a prime below 2^31, got " + std::to_string(p));
    return FieldSpec(FieldKind::PrimeField, p);
}

std::string FieldSpec::str() const {
    return kind_ == FieldKind::Rationals ? "QQ" : "Fp " + std::to_string(char_);
}

namespace {

// extended Euclid, returns a^-1 mod p for 0 < a < p
std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    return t < 0 ? t + p : t;
}

}  // namespace

Coefficient Coefficient::one(const FieldSpec& f) {
    Coefficient c(f);
    if (f.kind() == FieldKind::Rationals)
        c.rat_ = 1;
    else
        c.res_ = 1 % f.characteristic();
    return c;
}

Coefficient Coefficient::from_integer(const FieldSpec& f, long value) {
    Coefficient c(f);
    if (f.kind() == FieldKind::Rationals) {
        c.rat_ = value;
    } else {
        std::int64_t p = f.characteristic();
        c.res_ = ((value % p) + p) % p;
    }
    return c;
}

Coefficient Coefficient::from_fraction(const FieldSpec& f, const mpz_class& num, const mpz_class& den) {
    Coefficient c(f);
    if (f.kind() == FieldKind::Rationals) {
        if (den == 0) throw arith_error("division by zero");
        c.rat_ = mpq_class(num) / mpq_class(den);
        c.rat_.canonicalize();
    } else {
        std::int64_t p = f.characteristic();
        mpz_class nm = num % p, dm = den % p;
        std::int64_t n = ((nm.get_si() % p) + p) % p;
        std::int64_t d = ((dm.get_si() % p) + p) % p;
        if (d == 0) throw arith_error("denominator is zero in Fp " + std::to_string(p));
        c.res_ = n * inv_mod(d, p) % p;
    }
    return c;
}

Coefficient Coefficient::parse(const std::string& text, const FieldSpec& f) {
    std::size_t i = 0;
    bool neg = false;
    if (i < text.size() && text[i] == '-') {
        neg = true;
        ++i;
    }
    std::size_t num_start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == num_start) throw parse_error("expected a number", 1, static_cast<int>(i) + 1);
    std::string num = text.substr(num_start, i - num_start);
    std::string den = "1";
    if (i < text.size() && text[i] == '/') {
        ++i;
        std::size_t den_start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == den_start) throw parse_error("expected a denominator", 1, static_cast<int>(i) + 1);
        den = text.substr(den_start, i - den_start);
    }
    if (i != text.size()) throw parse_error("trailing characters after number", 1, static_cast<int>(i) + 1);
    Coefficient c = from_fraction(f, mpz_class(num), mpz_class(den));
    return neg ? -c : c;
}

bool Coefficient::is_zero() const {
    return field_.kind() == FieldKind::Rationals ? rat_ == 0 : res_ == 0;
}

bool Coefficient::is_one() const {
    return field_.kind() == FieldKind::Rationals ? rat_ == 1 : res_ == 1 % static_cast<std::int64_t>(field_.characteristic());
}

bool Coefficient::is_negative() const {
    return field_.kind() == FieldKind::Rationals && sgn(rat_) < 0;
}

Coefficient Coefficient::abs() const {
    if (field_.kind() == FieldKind::Rationals && sgn(rat_) < 0) return -*this;
    return *this;
}

void Coefficient::check_same_field(const Coefficient& o) const {
    if (!(field_ == o.field_))
        throw usage_error("mixed-field operands: " + field_.str() + " vs " + o.field_.str());
}

Coefficient Coefficient::operator-() const {
    Coefficient c(field_);
    if (field_.kind() == FieldKind::Rationals)
        c.rat_ = -rat_;
    else
        c.res_ = res_ == 0 ? 0 : field_.characteristic() - res_;
    return c;
}

Coefficient Coefficient::operator+(const Coefficient& o) const {
    check_same_field(o);
    Coefficient c(field_);
    if (field_.kind() == FieldKind::Rationals)
        c.rat_ = rat_ + o.rat_;
    else
        c.res_ = (res_ + o.res_) % field_.characteristic();
    return c;
}

Coefficient Coefficient::operator-(const Coefficient& o) const {
    check_same_field(o);
    Coefficient c(field_);
    if (field_.kind() == FieldKind::Rationals) {
        c.rat_ = rat_ - o.rat_;
    } else {
        std::int64_t p = field_.characteristic();
        c.res_ = (res_ - o.res_ % p + p) % p;
    }
    return c;
}

Coefficient Coefficient::operator*(const Coefficient& o) const {
    check_same_field(o);
    Coefficient c(field_);
    if (field_.kind() == FieldKind::Rationals)
        c.rat_ = rat_ * o.rat_;
    else
        c.res_ = res_ * o.res_ % field_.characteristic();
    return c;
}

Coefficient Coefficient::operator/(const Coefficient& o) const {
    check_same_field(o);
    return *this * o.inverse();
}

Coefficient Coefficient::inverse() const {
    if (is_zero()) throw arith_error("division by zero");
    Coefficient c(field_);
    if (field_.kind() == FieldKind::Rationals)
        c.rat_ = 1 / rat_;
    else
        c.res_ = inv_mod(res_, field_.characteristic());
    return c;
}

bool Coefficient::operator==(const Coefficient& o) const {
    if (!(field_ == o.field_)) return false;
    return field_.kind() == FieldKind::Rationals ? rat_ == o.rat_ : res_ == o.res_;
}

std::strong_ordering Coefficient::cmp(const Coefficient& a, const Coefficient& b) {
    a.check_same_field(b);
    if (a.field_.kind() == FieldKind::Rationals) {
        int c = ::cmp(a.rat_, b.rat_);
        return c <=> 0;
    }
    return a.res_ <=> b.res_;
}

std::string Coefficient::str() const {
    return field_.kind() == FieldKind::Rationals ? rat_.get_str() : std::to_string(res_);
}

const mpq_class& Coefficient::rational() const {
    if (field_.kind() != FieldKind::Rationals) throw usage_error("rational() on a prime-field coefficient");
    return rat_;
}

std::int64_t Coefficient::residue() const {
    if (field_.kind() == FieldKind::Rationals) throw usage_error("residue() on a rational coefficient");
    return res_;
}

Coefficient Coefficient::normalizer(std::span<const Coefficient> values) {
    if (values.empty() || values.front().is_zero()) throw usage_error("normalizer needs a nonzero first value");
    const Coefficient& first = values.front();
    if (first.field_.kind() == FieldKind::PrimeField) return first.inverse();
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const Coefficient& v : values) {
        first.check_same_field(v);
        if (v.is_zero()) continue;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.rat_.get_num_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.rat_.get_den_mpz_t());
    }
    Coefficient u(first.field_);
    u.rat_ = mpq_class(den_lcm) / mpq_class(num_gcd);
    u.rat_.canonicalize();
    if (first.is_negative()) u.rat_ = -u.rat_;
    return u;
}

}  // namespace satelim
