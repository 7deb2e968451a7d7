#include "satelim/groebner.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace satelim {

IdealBasis IdealBasis::make(RingPtr ring, std::vector<Polynomial> gens) {
    IdealBasis b;
    b.ring = std::move(ring);
    for (Polynomial& g : gens) {
        if (!same_ring(g.ring(), b.ring)) throw usage_error("generator lives in a different ring");
        if (!g.is_zero()) b.gens.push_back(std::move(g));
    }
    return b;
}

ModuleBasis ModuleBasis::make(RingPtr ring, std::size_t rank, std::vector<VectorPoly> gens) {
    if (rank == 0) throw usage_error("module rank must be positive");
    ModuleBasis b;
    b.ring = std::move(ring);
    b.rank = rank;
    for (VectorPoly& g : gens) {
        if (!same_ring(g.ring(), b.ring)) throw usage_error("generator lives in a different ring");
        if (g.rank() != rank) throw usage_error("generator rank mismatch");
        if (!g.is_zero()) b.gens.push_back(std::move(g));
    }
    return b;
}

namespace {

struct Lead {
    std::size_t pos;
    const Term* term;
};

// pre: v nonzero, components sorted under o.base
Lead lead_of(const VectorPoly& v, const ModuleOrder& o) {
    const Term* best = nullptr;
    std::size_t best_pos = 0;
    for (std::size_t i = 0; i < v.rank(); ++i) {
        if (v[i].is_zero()) continue;
        const Term& t = v[i].leading_term();
        if (!best || compare(i, t.mono, best_pos, best->mono, o) == std::strong_ordering::greater) {
            best = &t;
            best_pos = i;
        }
    }
    if (!best) throw usage_error("the zero element has no leading term");
    return {best_pos, best};
}

std::uint64_t max_term_degree(const VectorPoly& v) {
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < v.rank(); ++i)
        for (const Term& t : v[i].terms()) d = std::max(d, t.mono.total_degree());
    return d;
}

// The public division rule reduces by the first divisor in list order; the
// Buchberger engine instead picks the matching divisor with the fewest
// terms, which keeps reduction chains short and contains coefficient swell
// over QQ.  Both produce a valid normal form; everything user-visible is
// canonicalized downstream.
enum class DivisorChoice { ListOrder, FewestTerms };

// pre: everything sorted under o.base.  With a head limit set, positions at
// or past the limit carry no divisor leads, so once the largest remaining
// term falls there the rest moves to the remainder in one piece.
ModuleDivision divide_sorted(const VectorPoly& f, std::span<const VectorPoly> G, const ModuleOrder& o,
                             DivisorChoice choice = DivisorChoice::ListOrder,
                             std::size_t head_limit = std::numeric_limits<std::size_t>::max()) {
    struct DivisorLead {
        bool usable = false;
        std::size_t pos = 0;
        Monomial mono{0};
        Coefficient coef;
    };
    std::vector<DivisorLead> leads(G.size());
    std::vector<std::size_t> weight(G.size(), 0);
    for (std::size_t k = 0; k < G.size(); ++k) {
        if (G[k].is_zero()) continue;
        Lead l = lead_of(G[k], o);
        leads[k] = {true, l.pos, l.term->mono, l.term->coef};
        if (choice == DivisorChoice::FewestTerms)
            for (std::size_t i = 0; i < G[k].rank(); ++i) weight[k] += G[k][i].term_count();
    }

    // the components are worked on individually so a reduction step only
    // rewrites the ones its divisor actually meets
    std::vector<Polynomial> p;
    p.reserve(f.rank());
    for (std::size_t i = 0; i < f.rank(); ++i) p.push_back(f[i]);
    std::vector<std::vector<Term>> rem(f.rank());
    std::vector<std::vector<Term>> quot(G.size());

    // Over QQ long reduction chains compound numerators and denominators
    // without bound, so the whole working state is rescaled to coprime
    // integers every few steps.  The cumulative factor is divided back out
    // at the end, so the returned remainder and quotients are exactly those
    // of the unscaled computation (the reduction path itself only ever
    // looks at monomials).
    const bool strip = f.ring()->field().kind() == FieldKind::Rationals;
    Coefficient lambda = Coefficient::one(f.ring()->field());
    int since_strip = 0;
    std::vector<Coefficient> cs;
    auto strip_content = [&]() {
        since_strip = 0;
        cs.clear();
        for (const Polynomial& q : p)
            for (const Term& t : q.terms()) cs.push_back(t.coef);
        if (cs.empty()) return;
        Coefficient u = Coefficient::normalizer(cs);
        if (u.is_one()) return;
        for (Polynomial& q : p)
            if (!q.is_zero()) q = q.scaled(u);
        for (auto& terms : rem)
            for (Term& t : terms) t.coef = t.coef * u;
        for (auto& terms : quot)
            for (Term& t : terms) t.coef = t.coef * u;
        lambda = lambda * u;
    };

    while (true) {
        const Term* lt = nullptr;
        std::size_t pos = 0;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p[i].is_zero()) continue;
            const Term& t = p[i].leading_term();
            if (!lt || compare(i, t.mono, pos, lt->mono, o) == std::strong_ordering::greater) {
                lt = &t;
                pos = i;
            }
        }
        if (!lt) break;
        if (pos >= head_limit) {
            for (std::size_t i = 0; i < p.size(); ++i) {
                for (const Term& t : p[i].terms()) rem[i].push_back(t);
                p[i] = Polynomial::zero(f.ring(), o.base);
            }
            break;
        }
        std::size_t pick = G.size();
        for (std::size_t k = 0; k < G.size(); ++k) {
            if (!leads[k].usable || leads[k].pos != pos || !leads[k].mono.divides(lt->mono)) continue;
            if (choice == DivisorChoice::ListOrder) {
                pick = k;
                break;
            }
            if (pick == G.size() || weight[k] < weight[pick]) pick = k;
        }
        if (pick < G.size()) {
            Coefficient c = lt->coef / leads[pick].coef;
            Monomial m = lt->mono / leads[pick].mono;
            for (std::size_t i = 0; i < p.size(); ++i)
                if (!G[pick][i].is_zero()) p[i] = p[i].minus_scaled(c, m, G[pick][i]);
            quot[pick].push_back({std::move(c), std::move(m)});
        } else {
            rem[pos].push_back(*lt);
            p[pos] = p[pos].without_leading_term();
        }
        if (strip && ++since_strip >= 4) strip_content();
    }
    if (!lambda.is_one()) {
        Coefficient back = lambda.inverse();
        for (auto& terms : rem)
            for (Term& t : terms) t.coef = t.coef * back;
        for (auto& terms : quot)
            for (Term& t : terms) t.coef = t.coef * back;
    }

    std::vector<Polynomial> rem_comps;
    rem_comps.reserve(f.rank());
    for (std::size_t i = 0; i < f.rank(); ++i)
        rem_comps.push_back(Polynomial::from_terms(f.ring(), o.base, std::move(rem[i])));
    ModuleDivision out{VectorPoly(std::move(rem_comps)), {}};
    out.quotients.reserve(G.size());
    for (std::size_t k = 0; k < G.size(); ++k)
        out.quotients.push_back(Polynomial::from_terms(f.ring(), o.base, std::move(quot[k])));
    return out;
}

// Reduce only the leading term, stopping at the first irreducible lead.
// Reaches zero exactly when the full normal form is zero, which is all the
// engine needs; leaving tails untouched avoids grinding long tag components
// through reduction chains whose intermediate coefficients swell over QQ.
// pre: f sorted under o.base
VectorPoly top_reduce_sorted(VectorPoly f, std::span<const VectorPoly> G, const ModuleOrder& o) {
    struct DivisorLead {
        bool usable = false;
        std::size_t pos = 0;
        Monomial mono{0};
        Coefficient coef;
        std::size_t weight = 0;
    };
    std::vector<DivisorLead> leads(G.size());
    for (std::size_t k = 0; k < G.size(); ++k) {
        if (G[k].is_zero()) continue;
        Lead l = lead_of(G[k], o);
        std::size_t w = 0;
        for (std::size_t i = 0; i < G[k].rank(); ++i) w += G[k][i].term_count();
        leads[k] = {true, l.pos, l.term->mono, l.term->coef, w};
    }
    std::vector<Polynomial> p;
    p.reserve(f.rank());
    for (std::size_t i = 0; i < f.rank(); ++i) p.push_back(f[i]);
    const bool strip = f.ring()->field().kind() == FieldKind::Rationals;
    int since_strip = 0;
    std::vector<Coefficient> cs;
    while (true) {
        const Term* lt = nullptr;
        std::size_t pos = 0;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p[i].is_zero()) continue;
            const Term& t = p[i].leading_term();
            if (!lt || compare(i, t.mono, pos, lt->mono, o) == std::strong_ordering::greater) {
                lt = &t;
                pos = i;
            }
        }
        if (!lt) break;
        std::size_t pick = G.size();
        for (std::size_t k = 0; k < G.size(); ++k) {
            if (!leads[k].usable || leads[k].pos != pos || !leads[k].mono.divides(lt->mono)) continue;
            if (pick == G.size() || leads[k].weight < leads[pick].weight) pick = k;
        }
        if (pick == G.size()) break;
        Coefficient c = lt->coef / leads[pick].coef;
        Monomial m = lt->mono / leads[pick].mono;
        for (std::size_t i = 0; i < p.size(); ++i)
            if (!G[pick][i].is_zero()) p[i] = p[i].minus_scaled(c, m, G[pick][i]);
        if (strip && ++since_strip >= 4) {
            since_strip = 0;
            cs.clear();
            for (const Polynomial& q : p)
                for (const Term& t : q.terms()) cs.push_back(t.coef);
            if (!cs.empty()) {
                Coefficient u = Coefficient::normalizer(cs);
                if (!u.is_one())
                    for (Polynomial& q : p)
                        if (!q.is_zero()) q = q.scaled(u);
            }
        }
    }
    return VectorPoly(std::move(p));
}

// pre: h nonzero, sorted under o.base
VectorPoly normalized(VectorPoly h, const ModuleOrder& o) {
    std::vector<Coefficient> cs;
    cs.push_back(lead_of(h, o).term->coef);
    for (std::size_t i = 0; i < h.rank(); ++i)
        for (const Term& t : h[i].terms()) cs.push_back(t.coef);
    Coefficient u = Coefficient::normalizer(cs);
    return u.is_one() ? std::move(h) : h.scaled(u);
}

VectorPoly spair_sorted(const VectorPoly& f, const VectorPoly& g, const ModuleOrder& o) {
    Lead lf = lead_of(f, o);
    Lead lg = lead_of(g, o);
    Monomial L = Monomial::lcm(lf.term->mono, lg.term->mono);
    VectorPoly a = f.scaled(lf.term->coef.inverse(), L / lf.term->mono);
    VectorPoly b = g.scaled(lg.term->coef.inverse(), L / lg.term->mono);
    return a - b;
}

class Engine {
public:
    Engine(const ModuleOrder& o, const Budget& budget) : ord_(o), budget_(budget), start_(std::chrono::steady_clock::now()) {}

    // Closure of the leading positions below `head_limit` only.  Reductions
    // that land entirely in the tag block are collected instead of joining
    // the basis: with no tag-position leads in the basis they can never
    // reduce anything, and the collected lifts generate every relation.
    std::vector<VectorPoly> run_head_closure(std::vector<VectorPoly> gens, std::size_t head_limit) {
        head_limit_ = head_limit;
        run(std::move(gens));
        return std::move(syz_);
    }

    std::vector<VectorPoly> run(std::vector<VectorPoly> gens) {
        for (const VectorPoly& g : gens)
            // tails matter in position-dominant module runs, where elements
            // carry whole reduction transcripts and stale tails feed ever
            // longer chains; plain ideal runs stay slim without upkeep
            upkeep_ = upkeep_ || (g.rank() > 1 && ord_.scheme == ModuleScheme::PositionOverTerm);
        for (VectorPoly& g : gens) {
            if (g.is_zero()) continue;
            VectorPoly sorted = g.order() == ord_.base ? std::move(g) : g.resorted(ord_.base);
            // arriving generators already covered by earlier leads are
            // dropped; the ideal is unchanged
            VectorPoly r = top_reduce_sorted(std::move(sorted), basis_, ord_);
            if (r.is_zero()) continue;
            if (lead_of(r, ord_).pos >= head_limit_)
                syz_.push_back(normalized(std::move(r), ord_));
            else
                add(std::move(r));
        }
        std::uint64_t pops = 0;
        while (!queue_.empty()) {
            auto it = queue_.begin();
            Pair pr = it->second;
            queue_.erase(it);
            if (++pops > budget_.max_pairs)
                throw budget_error("pair budget of " + std::to_string(budget_.max_pairs) + " exceeded");
            check_wall_clock();
            if (pr.lcm.total_degree() > budget_.max_total_degree)
                throw budget_error("degree budget of " + std::to_string(budget_.max_total_degree) + " exceeded");
            VectorPoly s = spair_sorted(basis_[pr.i], basis_[pr.j], ord_);
            VectorPoly r = top_reduce_sorted(std::move(s), basis_, ord_);
            if (r.is_zero()) continue;
            if (lead_of(r, ord_).pos >= head_limit_) {
                syz_.push_back(normalized(std::move(r), ord_));
                continue;
            }
            if (max_term_degree(r) > budget_.max_total_degree)
                throw budget_error("degree budget of " + std::to_string(budget_.max_total_degree) + " exceeded");
            add(std::move(r));
        }
        return std::move(basis_);
    }

private:
    struct Pair {
        std::size_t i, j;
        Monomial lcm;
        std::size_t pos;
    };

    void check_wall_clock() const {
        if (!budget_.wall_clock) return;
        auto elapsed = std::chrono::steady_clock::now() - start_;
        if (elapsed > *budget_.wall_clock) throw budget_error("wall clock budget exceeded");
    }

    void add(VectorPoly h) {
        // survivors enter with their tail fully reduced, so later divisions
        // and tail upkeep work against slim elements
        if (upkeep_) {
            Lead l = lead_of(h, ord_);
            VectorPoly head(h.ring(), ord_.base, h.rank());
            head = head.with_component(l.pos, Polynomial::from_terms(h.ring(), ord_.base, {*l.term}));
            VectorPoly tail = h - head;
            if (!tail.is_zero())
                tail = divide_sorted(tail, basis_, ord_, DivisorChoice::FewestTerms, head_limit_).remainder;
            h = normalized(head + tail, ord_);
        } else {
            h = normalized(std::move(h), ord_);
        }
        std::size_t n = basis_.size();
        basis_.push_back(std::move(h));
        leads_.push_back(lead_of(basis_.back(), ord_));
        const Lead& lh = leads_.back();
        // chain criterion, queued half: a pair is redundant once the new
        // leading term divides its lcm while both mixed lcms are strictly
        // smaller
        for (auto it = queue_.begin(); it != queue_.end();) {
            const Pair& pr = it->second;
            if (pr.pos == lh.pos && lh.term->mono.divides(pr.lcm) &&
                Monomial::lcm(leads_[pr.i].term->mono, lh.term->mono) != pr.lcm &&
                Monomial::lcm(leads_[pr.j].term->mono, lh.term->mono) != pr.lcm)
                it = queue_.erase(it);
            else
                ++it;
        }
        // chain criterion, new half (Gebauer-Moeller update): a candidate
        // whose lcm is a proper multiple of another candidate's lcm is
        // covered by it, and of several candidates with one lcm a single
        // representative suffices; a coprime representative lets the whole
        // class go (rank one only, where the product criterion holds)
        std::size_t rank = basis_.back().rank();
        struct Cand {
            std::size_t i;
            Monomial lcm;
            bool coprime;
        };
        std::vector<Cand> cands;
        cands.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (leads_[i].pos != lh.pos) continue;
            Monomial L = Monomial::lcm(leads_[i].term->mono, lh.term->mono);
            bool cop = rank == 1 && leads_[i].term->mono.coprime_with(lh.term->mono);
            cands.push_back({i, std::move(L), cop});
        }
        std::vector<bool> drop(cands.size(), false);
        for (std::size_t a = 0; a < cands.size(); ++a) {
            if (drop[a]) continue;
            for (std::size_t b = 0; b < cands.size(); ++b) {
                if (a == b || drop[b]) continue;
                if (cands[b].lcm != cands[a].lcm && cands[b].lcm.divides(cands[a].lcm)) {
                    drop[a] = true;
                    break;
                }
            }
        }
        for (std::size_t a = 0; a < cands.size(); ++a) {
            if (drop[a]) continue;
            // gather the equal-lcm class and keep one representative,
            // coprime if available so the class is settled for free
            std::size_t rep = a;
            for (std::size_t b = a + 1; b < cands.size(); ++b) {
                if (drop[b] || cands[b].lcm != cands[a].lcm) continue;
                if (cands[b].coprime && !cands[rep].coprime) rep = b;
                drop[b] = true;
            }
            if (rep != a) {
                drop[rep] = false;
                drop[a] = true;
            }
            if (cands[rep].coprime) drop[rep] = true;
        }
        for (std::size_t a = 0; a < cands.size(); ++a) {
            if (drop[a]) continue;
            std::uint64_t deg = cands[a].lcm.total_degree();
            queue_.emplace(std::make_pair(deg, seq_++), Pair{cands[a].i, n, std::move(cands[a].lcm), lh.pos});
        }
        if (upkeep_) shorten_tails(n);
    }

    // Keep earlier tails reduced against the freshly added element.  Leading
    // terms are untouched, so pair bookkeeping stays valid; without this
    // upkeep stale tails feed ever longer reduction chains.
    void shorten_tails(std::size_t upto) {
        const Lead lh = leads_[upto];
        for (std::size_t i = 0; i < upto; ++i) {
            const Polynomial& comp = basis_[i][lh.pos];
            bool hit = false;
            for (const Term& t : comp.terms()) {
                if (&t == leads_[i].term) continue;
                if (lh.term->mono.divides(t.mono)) {
                    hit = true;
                    break;
                }
            }
            if (!hit) continue;
            const Lead li = leads_[i];
            VectorPoly head(basis_[i].ring(), ord_.base, basis_[i].rank());
            head = head.with_component(li.pos, Polynomial::from_terms(basis_[i].ring(), ord_.base, {*li.term}));
            VectorPoly tail = basis_[i] - head;
            if (tail.is_zero()) continue;
            VectorPoly r = divide_sorted(tail, basis_, ord_, DivisorChoice::FewestTerms, head_limit_).remainder;
            basis_[i] = normalized(head + r, ord_);
            leads_[i] = lead_of(basis_[i], ord_);
        }
    }

    ModuleOrder ord_;
    Budget budget_;
    std::chrono::steady_clock::time_point start_;
    std::vector<VectorPoly> basis_;
    std::vector<Lead> leads_;  // parallel to basis_; refreshed whenever shorten_tails rewrites an element
    std::map<std::pair<std::uint64_t, std::uint64_t>, Pair> queue_;
    std::uint64_t seq_ = 0;
    bool upkeep_ = false;
    std::size_t head_limit_ = std::numeric_limits<std::size_t>::max();
    std::vector<VectorPoly> syz_;
};

void check_family(std::span<const VectorPoly> G) {
    for (std::size_t i = 1; i < G.size(); ++i) {
        if (!same_ring(G[i].ring(), G[0].ring())) throw usage_error("elements live in different rings");
        if (G[i].rank() != G[0].rank()) throw usage_error("elements have different ranks");
    }
}

std::vector<VectorPoly> sorted_copy(std::span<const VectorPoly> G, const MonomialOrder& base) {
    std::vector<VectorPoly> out;
    out.reserve(G.size());
    for (const VectorPoly& g : G) out.push_back(g.order() == base ? g : g.resorted(base));
    return out;
}

std::vector<VectorPoly> reduce_basis_impl(std::vector<VectorPoly> gb, const ModuleOrder& o) {
    std::vector<VectorPoly> work;
    work.reserve(gb.size());
    for (VectorPoly& g : gb) {
        if (g.is_zero()) continue;
        VectorPoly s = g.order() == o.base ? std::move(g) : g.resorted(o.base);
        work.push_back(s.scaled(lead_of(s, o).term->coef.inverse()));
    }
    // ascending by leading term, so divisors are seen before their multiples
    std::stable_sort(work.begin(), work.end(), [&o](const VectorPoly& a, const VectorPoly& b) {
        Lead la = lead_of(a, o), lb = lead_of(b, o);
        return compare(la.pos, la.term->mono, lb.pos, lb.term->mono, o) == std::strong_ordering::less;
    });
    std::vector<VectorPoly> kept;
    for (VectorPoly& g : work) {
        Lead lg = lead_of(g, o);
        bool redundant = false;
        for (const VectorPoly& h : kept) {
            Lead lh = lead_of(h, o);
            if (lh.pos == lg.pos && lh.term->mono.divides(lg.term->mono)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) kept.push_back(std::move(g));
    }
    // tail reduction; leading terms are pairwise non-divisible, so an
    // element is never used against its own tail and the result is the
    // unique reduced basis whatever the divisor preference
    for (std::size_t i = 0; i < kept.size(); ++i) {
        Lead lt = lead_of(kept[i], o);
        VectorPoly head(kept[i].ring(), o.base, kept[i].rank());
        head = head.with_component(lt.pos, Polynomial::from_terms(kept[i].ring(), o.base, {*lt.term}));
        VectorPoly tail = kept[i] - head;
        kept[i] = head + divide_sorted(tail, kept, o, DivisorChoice::FewestTerms).remainder;
    }
    std::sort(kept.begin(), kept.end(), [&o](const VectorPoly& a, const VectorPoly& b) {
        Lead la = lead_of(a, o), lb = lead_of(b, o);
        return compare(la.pos, la.term->mono, lb.pos, lb.term->mono, o) == std::strong_ordering::greater;
    });
    return kept;
}

VectorPoly wrap1(const Polynomial& p) { return VectorPoly(std::vector<Polynomial>{p}); }

ModuleOrder rank1_order(const MonomialOrder& o) { return ModuleOrder{o, ModuleScheme::TermOverPosition}; }

}  // namespace

ModuleDivision normal_form(const VectorPoly& f, std::span<const VectorPoly> G, const ModuleOrder& o) {
    if (!G.empty()) {
        check_family(G);
        if (f.rank() != G[0].rank()) throw usage_error("rank mismatch between dividend and divisors");
        if (!same_ring(f.ring(), G[0].ring())) throw usage_error("dividend lives in a different ring");
    }
    VectorPoly p = f.order() == o.base ? f : f.resorted(o.base);
    return divide_sorted(p, sorted_copy(G, o.base), o);
}

PolyDivision normal_form(const Polynomial& f, std::span<const Polynomial> G, const MonomialOrder& o) {
    std::vector<VectorPoly> wrapped;
    wrapped.reserve(G.size());
    for (const Polynomial& g : G) wrapped.push_back(wrap1(g));
    ModuleDivision d = normal_form(wrap1(f), wrapped, rank1_order(o));
    return {d.remainder[0], std::move(d.quotients)};
}

std::optional<VectorPoly> s_polynomial(const VectorPoly& f, const VectorPoly& g, const ModuleOrder& o) {
    if (f.is_zero() || g.is_zero()) throw usage_error("no S-pair for the zero element");
    VectorPoly fs = f.order() == o.base ? f : f.resorted(o.base);
    VectorPoly gs = g.order() == o.base ? g : g.resorted(o.base);
    if (lead_of(fs, o).pos != lead_of(gs, o).pos) return std::nullopt;
    return spair_sorted(fs, gs, o);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& o) {
    auto s = s_polynomial(wrap1(f), wrap1(g), rank1_order(o));
    return (*s)[0];
}

std::vector<VectorPoly> buchberger(std::vector<VectorPoly> gens, const ModuleOrder& o, const Budget& budget) {
    check_family(gens);
    return Engine(o, budget).run(std::move(gens));
}

std::vector<Polynomial> buchberger(std::vector<Polynomial> gens, const MonomialOrder& o, const Budget& budget) {
    std::vector<VectorPoly> wrapped;
    wrapped.reserve(gens.size());
    for (Polynomial& g : gens) wrapped.push_back(wrap1(std::move(g)));
    std::vector<VectorPoly> gb = buchberger(std::move(wrapped), rank1_order(o), budget);
    std::vector<Polynomial> out;
    out.reserve(gb.size());
    for (VectorPoly& v : gb) out.push_back(v[0]);
    return out;
}

std::vector<VectorPoly> reduce_basis(std::vector<VectorPoly> gb, const ModuleOrder& o) {
    check_family(gb);
    return reduce_basis_impl(std::move(gb), o);
}

std::vector<Polynomial> reduce_basis(std::vector<Polynomial> gb, const MonomialOrder& o) {
    std::vector<VectorPoly> wrapped;
    wrapped.reserve(gb.size());
    for (Polynomial& g : gb) wrapped.push_back(wrap1(std::move(g)));
    std::vector<VectorPoly> red = reduce_basis_impl(std::move(wrapped), rank1_order(o));
    std::vector<Polynomial> out;
    out.reserve(red.size());
    for (VectorPoly& v : red) out.push_back(v[0]);
    return out;
}

IdealBasis reduced_groebner_basis(const IdealBasis& I, const MonomialOrder& o, const Budget& budget) {
    if (I.certified_order && *I.certified_order == o) return I;
    IdealBasis out;
    out.ring = I.ring;
    out.gens = reduce_basis(buchberger(I.gens, o, budget), o);
    out.certified_order = o;
    return out;
}

ModuleBasis reduced_groebner_basis(const ModuleBasis& M, const ModuleOrder& o, const Budget& budget) {
    if (M.certified_order && *M.certified_order == o) return M;
    ModuleBasis out;
    out.ring = M.ring;
    out.rank = M.rank;
    out.gens = reduce_basis(buchberger(M.gens, o, budget), o);
    out.certified_order = o;
    return out;
}

bool ideal_membership(const Polynomial& f, const IdealBasis& I, const MonomialOrder& o, const Budget& budget) {
    if (!same_ring(f.ring(), I.ring)) throw usage_error("element lives in a different ring");
    const MonomialOrder& use = I.certified_order ? *I.certified_order : o;
    if (I.certified_order) return normal_form(f, I.gens, use).remainder.is_zero();
    IdealBasis gb = reduced_groebner_basis(I, o, budget);
    return normal_form(f, gb.gens, o).remainder.is_zero();
}

bool module_membership(const VectorPoly& f, const ModuleBasis& M, const ModuleOrder& o, const Budget& budget) {
    if (!same_ring(f.ring(), M.ring)) throw usage_error("element lives in a different ring");
    if (f.rank() != M.rank) throw usage_error("rank mismatch");
    const ModuleOrder& use = M.certified_order ? *M.certified_order : o;
    if (M.certified_order) return normal_form(f, M.gens, use).remainder.is_zero();
    ModuleBasis gb = reduced_groebner_basis(M, o, budget);
    return normal_form(f, gb.gens, o).remainder.is_zero();
}

bool ideal_equal(const IdealBasis& I, const IdealBasis& J, const MonomialOrder& o, const Budget& budget) {
    if (!same_ring(I.ring, J.ring)) throw usage_error("ideals live in different rings");
    IdealBasis a = reduced_groebner_basis(I, o, budget);
    IdealBasis b = reduced_groebner_basis(J, o, budget);
    return a.gens == b.gens;
}

bool module_equal(const ModuleBasis& M, const ModuleBasis& N, const ModuleOrder& o, const Budget& budget) {
    if (!same_ring(M.ring, N.ring)) throw usage_error("modules live in different rings");
    if (M.rank != N.rank) throw usage_error("rank mismatch");
    ModuleBasis a = reduced_groebner_basis(M, o, budget);
    ModuleBasis b = reduced_groebner_basis(N, o, budget);
    return a.gens == b.gens;
}

namespace {

// Tag each generator with a unit vector and close the generator block under
// the position-dominant order.  A reduction whose generator block vanishes
// is a relation, read off from its tag; the lifted relations collected this
// way generate the whole syzygy module, so the tag block itself never needs
// closing.  Only the first `payload` tag columns are carried: callers that
// read a prefix of each relation skip hauling the rest through every
// reduction.
std::vector<VectorPoly> syzygies_impl(const std::vector<VectorPoly>& F, std::size_t payload,
                                      const MonomialOrder& o, const Budget& budget) {
    std::size_t k = F.size();
    if (k == 0) return {};
    std::size_t rank = F[0].rank();
    RingPtr ring = F[0].ring();
    std::size_t big = rank + payload;
    std::vector<VectorPoly> columns;
    columns.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<Polynomial> comps;
        comps.reserve(big);
        for (std::size_t j = 0; j < rank; ++j) comps.push_back(F[i][j].resorted(o));
        for (std::size_t j = 0; j < payload; ++j)
            comps.push_back(j == i ? Polynomial::constant(ring, o, Coefficient::one(ring->field()))
                                   : Polynomial::zero(ring, o));
        columns.push_back(VectorPoly(std::move(comps)));
    }
    ModuleOrder mo{o, ModuleScheme::PositionOverTerm};
    std::vector<VectorPoly> lifted = Engine(mo, budget).run_head_closure(std::move(columns), rank);
    std::vector<VectorPoly> out;
    out.reserve(lifted.size());
    for (const VectorPoly& g : lifted) {
        std::vector<Polynomial> tag;
        tag.reserve(payload);
        for (std::size_t j = 0; j < payload; ++j) tag.push_back(g[rank + j]);
        out.push_back(VectorPoly(std::move(tag)));
    }
    return out;
}

}  // namespace

SyzygyBasis<VectorPoly> syzygies(std::span<const VectorPoly> F, const MonomialOrder& o, const Budget& budget) {
    check_family(F);
    std::vector<VectorPoly> over(F.begin(), F.end());
    SyzygyBasis<VectorPoly> out;
    out.gens = syzygies_impl(over, over.size(), o, budget);
    out.over = std::move(over);
    return out;
}

SyzygyBasis<Polynomial> syzygies(std::span<const Polynomial> F, const MonomialOrder& o, const Budget& budget) {
    std::vector<VectorPoly> wrapped;
    wrapped.reserve(F.size());
    for (const Polynomial& f : F) wrapped.push_back(wrap1(f));
    SyzygyBasis<Polynomial> out;
    out.over.assign(F.begin(), F.end());
    out.gens = syzygies_impl(wrapped, wrapped.size(), o, budget);
    return out;
}

std::vector<Polynomial> relation_coefficients_on_first(std::span<const Polynomial> F, const MonomialOrder& o,
                                                       const Budget& budget) {
    std::vector<VectorPoly> wrapped;
    wrapped.reserve(F.size());
    for (const Polynomial& f : F) wrapped.push_back(wrap1(f));
    std::vector<Polynomial> out;
    for (VectorPoly& s : syzygies_impl(wrapped, 1, o, budget)) out.push_back(s[0]);
    return out;
}

std::vector<VectorPoly> relation_coefficients_on_first(std::span<const VectorPoly> F, std::size_t count,
                                                       const MonomialOrder& o, const Budget& budget) {
    check_family(F);
    if (count > F.size()) throw usage_error("relation prefix is wider than the family");
    std::vector<VectorPoly> wrapped(F.begin(), F.end());
    return syzygies_impl(wrapped, count, o, budget);
}

}  // namespace satelim
