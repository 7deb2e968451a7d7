#include "satelim/polynomial.hpp"

#include <algorithm>
#include <map>

namespace satelim {

Polynomial::Polynomial(RingPtr ring, MonomialOrder order) : ring_(std::move(ring)), order_(std::move(order)) {
    if (!ring_) throw usage_error("polynomial requires a ring");
}

Polynomial Polynomial::constant(RingPtr ring, MonomialOrder order, Coefficient c) {
    Polynomial p(std::move(ring), std::move(order));
    if (!(c.field() == p.ring_->field())) throw usage_error("coefficient field does not match the ring");
    if (!c.is_zero()) p.terms_.push_back({std::move(c), Monomial(p.ring_->var_count())});
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, MonomialOrder order, std::size_t index, std::uint32_t exp) {
    Polynomial p(std::move(ring), std::move(order));
    Coefficient one = Coefficient::one(p.ring_->field());
    if (exp == 0) return constant(p.ring_, p.order_, one);
    p.terms_.push_back({std::move(one), Monomial::variable(p.ring_->var_count(), index, exp)});
    return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, MonomialOrder order, std::vector<Term> terms) {
    Polynomial p(std::move(ring), std::move(order));
    for (const Term& t : terms) {
        if (!(t.coef.field() == p.ring_->field())) throw usage_error("coefficient field does not match the ring");
        if (t.mono.size() != p.ring_->var_count()) throw usage_error("monomial arity does not match the ring");
    }
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

void Polynomial::normalize() {
    std::sort(terms_.begin(), terms_.end(), [this](const Term& a, const Term& b) {
        return compare(a.mono, b.mono, order_) == std::strong_ordering::greater;
    });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (Term& t : terms_) {
        if (!out.empty() && out.back().mono == t.mono)
            out.back().coef = out.back().coef + t.coef;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().coef.is_zero()) out.pop_back();
    }
    terms_ = std::move(out);
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw usage_error("the zero polynomial has no leading term");
    return terms_.front();
}

std::uint64_t Polynomial::total_degree() const {
    std::uint64_t d = 0;
    for (const Term& t : terms_) d = std::max(d, t.mono.total_degree());
    return d;
}

namespace {

std::int64_t term_weighted_degree(const Monomial& m, const RingSpec& ring) {
    std::int64_t d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) d += static_cast<std::int64_t>(ring.weight(i)) * m[i];
    return d;
}

}  // namespace

std::optional<std::int64_t> Polynomial::weighted_degree() const {
    if (terms_.empty()) return std::nullopt;
    std::int64_t d = term_weighted_degree(terms_[0].mono, *ring_);
    for (std::size_t i = 1; i < terms_.size(); ++i)
        d = std::max(d, term_weighted_degree(terms_[i].mono, *ring_));
    return d;
}

bool Polynomial::is_weighted_homogeneous() const {
    if (terms_.empty()) return true;
    std::int64_t d = term_weighted_degree(terms_[0].mono, *ring_);
    for (std::size_t i = 1; i < terms_.size(); ++i)
        if (term_weighted_degree(terms_[i].mono, *ring_) != d) return false;
    return true;
}

Polynomial Polynomial::resorted(const MonomialOrder& order) const {
    if (order == order_) return *this;
    return from_terms(ring_, order, terms_);
}

Polynomial Polynomial::operator-() const {
    Polynomial p(ring_, order_);
    p.terms_.reserve(terms_.size());
    for (const Term& t : terms_) p.terms_.push_back({-t.coef, t.mono});
    return p;
}

void Polynomial::check_compatible(const Polynomial& o) const {
    if (!same_ring(ring_, o.ring_)) throw usage_error("operands live in different rings");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_compatible(o);
    if (!(o.order_ == order_)) return *this + o.resorted(order_);
    Polynomial r(ring_, order_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        auto c = compare(terms_[i].mono, o.terms_[j].mono, order_);
        if (c == std::strong_ordering::greater) {
            r.terms_.push_back(terms_[i++]);
        } else if (c == std::strong_ordering::less) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            Coefficient s = terms_[i].coef + o.terms_[j].coef;
            if (!s.is_zero()) r.terms_.push_back({std::move(s), terms_[i].mono});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_compatible(o);
    std::vector<Term> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    for (const Term& a : terms_)
        for (const Term& b : o.terms_) prod.push_back({a.coef * b.coef, a.mono * b.mono});
    return from_terms(ring_, order_, std::move(prod));
}

Polynomial Polynomial::scaled(const Coefficient& c) const {
    if (c.is_zero()) return Polynomial(ring_, order_);
    Polynomial r(ring_, order_);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back({t.coef * c, t.mono});
    return r;
}

Polynomial Polynomial::scaled(const Coefficient& c, const Monomial& m) const {
    if (c.is_zero()) return Polynomial(ring_, order_);
    Polynomial r(ring_, order_);
    r.terms_.reserve(terms_.size());
    // multiplying by a fixed monomial preserves the term order
    for (const Term& t : terms_) r.terms_.push_back({t.coef * c, t.mono * m});
    return r;
}

Polynomial Polynomial::minus_scaled(const Coefficient& c, const Monomial& m, const Polynomial& g) const {
    if (!(g.order_ == order_)) return minus_scaled(c, m, g.resorted(order_));
    check_compatible(g);
    // c != 0 keeps every scaled g term nonzero below, so only the equal
    // branch can cancel
    if (c.is_zero()) return *this;
    Polynomial r(ring_, order_);
    r.terms_.reserve(terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < g.terms_.size()) {
        Monomial gm = g.terms_[j].mono * m;
        auto cc = compare(terms_[i].mono, gm, order_);
        if (cc == std::strong_ordering::greater) {
            r.terms_.push_back(terms_[i++]);
        } else if (cc == std::strong_ordering::less) {
            r.terms_.push_back({-(g.terms_[j].coef * c), std::move(gm)});
            ++j;
        } else {
            Coefficient s = terms_[i].coef - g.terms_[j].coef * c;
            if (!s.is_zero()) r.terms_.push_back({std::move(s), terms_[i].mono});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < g.terms_.size(); ++j) r.terms_.push_back({-(g.terms_[j].coef * c), g.terms_[j].mono * m});
    return r;
}

Polynomial Polynomial::without_leading_term() const {
    if (terms_.empty()) throw usage_error("the zero polynomial has no leading term");
    Polynomial r(ring_, order_);
    r.terms_.assign(terms_.begin() + 1, terms_.end());
    return r;
}

Polynomial Polynomial::monic() const {
    if (terms_.empty()) return *this;
    return scaled(terms_.front().coef.inverse());
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (!same_ring(ring_, o.ring_)) return false;
    if (!(o.order_ == order_)) return *this == o.resorted(order_);
    return terms_ == o.terms_;
}

Polynomial Polynomial::mapped(RingPtr target, std::span<const std::optional<std::size_t>> var_map,
                              const MonomialOrder& order) const {
    if (var_map.size() != ring_->var_count()) throw usage_error("variable map arity mismatch");
    if (!(target->field() == ring_->field())) throw usage_error("target ring has a different field");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) {
        std::vector<std::uint32_t> exps(target->var_count(), 0);
        for (std::size_t i = 0; i < var_map.size(); ++i) {
            std::uint32_t e = t.mono[i];
            if (e == 0) continue;
            if (!var_map[i])
                throw usage_error("polynomial involves variable '" + ring_->var_name(i) +
                                  "' which has no image in the target ring");
            std::uint64_t sum = std::uint64_t{exps[*var_map[i]]} + e;
            if (sum > Monomial::max_exponent) throw overflow_error("exponent overflow while remapping variables");
            exps[*var_map[i]] = static_cast<std::uint32_t>(sum);
        }
        out.push_back({t.coef, Monomial(std::move(exps))});
    }
    return from_terms(std::move(target), order, std::move(out));
}

std::optional<std::int64_t> weighted_degree(const Polynomial& f) { return f.weighted_degree(); }

Polynomial homogenize(const Polynomial& f, std::size_t homog_var) {
    const RingSpec& ring = *f.ring();
    if (homog_var >= ring.var_count()) throw usage_error("homogenization variable index out of range");
    if (ring.weight(homog_var) != 1) throw usage_error("homogenization variable must have weight 1");
    if (f.is_zero()) return f;
    std::int64_t top = *f.weighted_degree();
    std::vector<Term> out;
    out.reserve(f.term_count());
    for (const Term& t : f.terms()) {
        if (t.mono[homog_var] != 0)
            throw usage_error("polynomial already involves the homogenization variable '" +
                              ring.var_name(homog_var) + "'");
        std::int64_t pad = top - term_weighted_degree(t.mono, ring);
        if (pad > Monomial::max_exponent) throw overflow_error("homogenization exponent overflow");
        out.push_back({t.coef, t.mono * Monomial::variable(ring.var_count(), homog_var,
                                                           static_cast<std::uint32_t>(pad))});
    }
    return Polynomial::from_terms(f.ring(), f.order(), std::move(out));
}

Polynomial dehomogenize(const Polynomial& s, std::size_t homog_var) {
    const RingSpec& ring = *s.ring();
    if (homog_var >= ring.var_count()) throw usage_error("homogenization variable index out of range");
    std::vector<Term> out;
    out.reserve(s.term_count());
    for (const Term& t : s.terms()) {
        std::vector<std::uint32_t> exps = t.mono.exps();
        exps[homog_var] = 0;
        out.push_back({t.coef, Monomial(std::move(exps))});
    }
    return Polynomial::from_terms(s.ring(), s.order(), std::move(out));
}

Polynomial substitute_zero(const Polynomial& f, const std::set<std::size_t>& vars) {
    for (std::size_t v : vars)
        if (v >= f.ring()->var_count()) throw usage_error("substituted variable index out of range");
    std::vector<Term> out;
    for (const Term& t : f.terms()) {
        bool kill = false;
        for (std::size_t v : vars)
            if (t.mono[v] != 0) {
                kill = true;
                break;
            }
        if (!kill) out.push_back(t);
    }
    return Polynomial::from_terms(f.ring(), f.order(), std::move(out));
}

std::vector<Polynomial> weighted_homogeneous_parts(const Polynomial& f) {
    std::map<std::int64_t, std::vector<Term>> buckets;
    for (const Term& t : f.terms()) buckets[term_weighted_degree(t.mono, *f.ring())].push_back(t);
    std::vector<Polynomial> out;
    out.reserve(buckets.size());
    for (auto& [deg, terms] : buckets)
        out.push_back(Polynomial::from_terms(f.ring(), f.order(), std::move(terms)));
    return out;
}

VectorPoly::VectorPoly(RingPtr ring, MonomialOrder order, std::size_t rank) {
    if (rank == 0) throw usage_error("module rank must be positive");
    comps_.reserve(rank);
    for (std::size_t i = 0; i < rank; ++i) comps_.emplace_back(ring, order);
}

VectorPoly::VectorPoly(std::vector<Polynomial> components) : comps_(std::move(components)) {
    if (comps_.empty()) throw usage_error("module rank must be positive");
    for (const Polynomial& p : comps_) {
        if (!same_ring(p.ring(), comps_.front().ring())) throw usage_error("vector components live in different rings");
        if (!(p.order() == comps_.front().order()))
            throw usage_error("vector components carry different term orders");
    }
}

VectorPoly VectorPoly::unit(RingPtr ring, MonomialOrder order, std::size_t rank, std::size_t pos) {
    if (pos >= rank) throw usage_error("unit vector position out of range");
    VectorPoly v(ring, order, rank);
    v.comps_[pos] = Polynomial::constant(std::move(ring), std::move(order), Coefficient::one(v.ring()->field()));
    return v;
}

bool VectorPoly::is_zero() const {
    return std::all_of(comps_.begin(), comps_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

VectorPoly VectorPoly::resorted(const MonomialOrder& order) const {
    std::vector<Polynomial> out;
    out.reserve(comps_.size());
    for (const Polynomial& p : comps_) out.push_back(p.resorted(order));
    return VectorPoly(std::move(out));
}

VectorPoly VectorPoly::operator-() const {
    std::vector<Polynomial> out;
    out.reserve(comps_.size());
    for (const Polynomial& p : comps_) out.push_back(-p);
    return VectorPoly(std::move(out));
}

VectorPoly VectorPoly::operator+(const VectorPoly& o) const {
    if (o.rank() != rank()) throw usage_error("vector rank mismatch");
    std::vector<Polynomial> out;
    out.reserve(comps_.size());
    for (std::size_t i = 0; i < comps_.size(); ++i) out.push_back(comps_[i] + o.comps_[i]);
    return VectorPoly(std::move(out));
}

VectorPoly VectorPoly::operator-(const VectorPoly& o) const { return *this + (-o); }

VectorPoly VectorPoly::scaled(const Coefficient& c) const {
    std::vector<Polynomial> out;
    out.reserve(comps_.size());
    for (const Polynomial& p : comps_) out.push_back(p.scaled(c));
    return VectorPoly(std::move(out));
}

VectorPoly VectorPoly::scaled(const Coefficient& c, const Monomial& m) const {
    std::vector<Polynomial> out;
    out.reserve(comps_.size());
    for (const Polynomial& p : comps_) out.push_back(p.scaled(c, m));
    return VectorPoly(std::move(out));
}

VectorPoly VectorPoly::scaled(const Polynomial& f) const {
    std::vector<Polynomial> out;
    out.reserve(comps_.size());
    for (const Polynomial& p : comps_) out.push_back(p * f);
    return VectorPoly(std::move(out));
}

VectorPoly VectorPoly::minus_scaled(const Coefficient& c, const Monomial& m, const VectorPoly& g) const {
    if (g.rank() != rank()) throw usage_error("vector rank mismatch");
    std::vector<Polynomial> out;
    out.reserve(comps_.size());
    for (std::size_t i = 0; i < comps_.size(); ++i) out.push_back(comps_[i].minus_scaled(c, m, g.comps_[i]));
    return VectorPoly(std::move(out));
}

VectorPoly VectorPoly::with_component(std::size_t i, Polynomial p) const {
    VectorPoly v = *this;
    v.comps_[i] = std::move(p);
    return v;
}

bool VectorPoly::operator==(const VectorPoly& o) const {
    if (rank() != o.rank()) return false;
    for (std::size_t i = 0; i < comps_.size(); ++i)
        if (comps_[i] != o.comps_[i]) return false;
    return true;
}

VectorPoly VectorPoly::mapped(RingPtr target, std::span<const std::optional<std::size_t>> var_map,
                              const MonomialOrder& order) const {
    std::vector<Polynomial> out;
    out.reserve(comps_.size());
    for (const Polynomial& p : comps_) out.push_back(p.mapped(target, var_map, order));
    return VectorPoly(std::move(out));
}

VectorPoly homogenize(const VectorPoly& v, std::size_t homog_var) {
    if (v.is_zero()) return v;
    std::int64_t top = 0;
    bool seen = false;
    for (std::size_t i = 0; i < v.rank(); ++i) {
        auto d = v[i].weighted_degree();
        if (d) {
            top = seen ? std::max(top, *d) : *d;
            seen = true;
        }
    }
    std::vector<Polynomial> out;
    out.reserve(v.rank());
    for (std::size_t i = 0; i < v.rank(); ++i) {
        if (v[i].is_zero()) {
            out.push_back(v[i]);
            continue;
        }
        std::int64_t pad = top - *v[i].weighted_degree();
        if (pad > Monomial::max_exponent) throw overflow_error("homogenization exponent overflow");
        Monomial x0 = Monomial::variable(v.ring()->var_count(), homog_var, static_cast<std::uint32_t>(pad));
        out.push_back(homogenize(v[i], homog_var).scaled(Coefficient::one(v.ring()->field()), x0));
    }
    return VectorPoly(std::move(out));
}

VectorPoly substitute_zero(const VectorPoly& v, const std::set<std::size_t>& vars) {
    std::vector<Polynomial> out;
    out.reserve(v.rank());
    for (std::size_t i = 0; i < v.rank(); ++i) out.push_back(substitute_zero(v[i], vars));
    return VectorPoly(std::move(out));
}

std::vector<VectorPoly> weighted_homogeneous_parts(const VectorPoly& v) {
    std::map<std::int64_t, VectorPoly> buckets;
    for (std::size_t i = 0; i < v.rank(); ++i) {
        for (const Polynomial& part : weighted_homogeneous_parts(v[i])) {
            std::int64_t d = *part.weighted_degree();
            auto it = buckets.find(d);
            if (it == buckets.end())
                it = buckets.emplace(d, VectorPoly(v.ring(), v.order(), v.rank())).first;
            it->second = it->second.with_component(i, it->second[i] + part);
        }
    }
    std::vector<VectorPoly> out;
    out.reserve(buckets.size());
    for (auto& [deg, vec] : buckets) out.push_back(std::move(vec));
    return out;
}

Polynomial dot(const VectorPoly& coeffs, std::span<const Polynomial> F) {
    if (coeffs.rank() != F.size()) throw usage_error("length mismatch in module combination");
    Polynomial acc(coeffs.ring(), coeffs.order());
    for (std::size_t i = 0; i < F.size(); ++i) acc = acc + coeffs[i] * F[i];
    return acc;
}

VectorPoly dot(const VectorPoly& coeffs, std::span<const VectorPoly> F) {
    if (coeffs.rank() != F.size()) throw usage_error("length mismatch in module combination");
    if (F.empty()) throw usage_error("module combination needs at least one element");
    VectorPoly acc(coeffs.ring(), coeffs.order(), F[0].rank());
    for (std::size_t i = 0; i < F.size(); ++i) acc = acc + F[i].scaled(coeffs[i]);
    return acc;
}

}  // namespace satelim
