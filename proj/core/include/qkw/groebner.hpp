// qkw/groebner.hpp -- Buchberger's algorithm with cofactor tracking, normal
// forms, standard monomial bases and multiplication matrices.
//
// The monomial order is always grevlex over the table order. Cofactors are
// mandatory here: the quantum lifting stage rebuilds each reduced-basis
// element from the original generators, so every basis element carries its
// representation G = sum_a cofactor[a] * gens[a].
#pragma once

#include <algorithm>
#include <set>
#include <unordered_set>
#include <vector>

#include "qkw/errors.hpp"
#include "qkw/linalg.hpp"
#include "qkw/monomial.hpp"
#include "qkw/mpoly.hpp"

namespace qkw {

struct GBOptions {
    long long step_budget = 10'000'000;
};

template <class K>
struct ReducedGB {
    VarTable::Ptr table;
    std::vector<MPoly<K>> polys;                   // monic, fully inter-reduced, sorted by leading term
    std::vector<std::vector<MPoly<K>>> cofactors;  // polys[i] == sum_a cofactors[i][a] * gens[a]

    std::size_t size() const { return polys.size(); }
    bool contains_unit() const { return polys.size() == 1 && polys[0].is_constant() && !polys[0].is_zero(); }
};

namespace detail {

template <class K>
struct WorkPoly {
    MPoly<K> p;
    std::vector<MPoly<K>> rep;
};

inline void charge(long long& steps, long long budget) {
    if (++steps > budget) throw ResourceBudget("reduction exceeded the step budget of " + std::to_string(budget));
}

// Full division of w by the (poly, rep) family; remainder replaces w.p and
// the representation follows along. Every leading-term cancellation counts
// one budget step.
template <class K>
void reduce_inplace(WorkPoly<K>& w, const std::vector<WorkPoly<K>>& basis, const std::vector<bool>& live,
                    long long& steps, long long budget) {
    MPoly<K> remainder(w.p.table());
    while (!w.p.is_zero()) {
        const Mono& lm = w.p.leading_mono();
        bool hit = false;
        for (std::size_t gi = 0; gi < basis.size(); ++gi) {
            if (!live[gi] || basis[gi].p.is_zero()) continue;
            const Mono& glm = basis[gi].p.leading_mono();
            if (!mono_divides(glm, lm)) continue;
            charge(steps, budget);
            K c = w.p.leading_coeff() / basis[gi].p.leading_coeff();
            Mono m = mono_quotient(lm, glm);
            w.p.sub_mul_term(basis[gi].p, m, c);
            if (!w.rep.empty())
                for (std::size_t a = 0; a < w.rep.size(); ++a)
                    if (!basis[gi].rep[a].is_zero()) w.rep[a] -= basis[gi].rep[a].mul_term(m, c);
            hit = true;
            break;
        }
        if (!hit) {
            // head is irreducible; bank it and keep dividing the tail
            auto it = w.p.terms().begin();
            remainder.add_term(it->first, it->second);
            MPoly<K> head(w.p.table());
            head.add_term(it->first, it->second);
            w.p -= head;
        }
    }
    w.p = std::move(remainder);
}

}  // namespace detail

template <class K>
ReducedGB<K> buchberger(const std::vector<MPoly<K>>& gens, const GBOptions& opts = {}) {
    if (gens.empty()) throw DomainError("buchberger: no generators");
    VarTable::Ptr table = gens[0].table();
    for (const auto& g : gens)
        if (!VarTable::same(g.table(), table)) throw TableMismatch("generators use different tables");

    long long steps = 0;
    std::vector<detail::WorkPoly<K>> basis;
    std::vector<bool> live;
    auto unit_rep = [&](std::size_t a) {
        std::vector<MPoly<K>> rep(gens.size(), MPoly<K>(table));
        rep[a] = MPoly<K>::constant(table, FOps<K>::one());
        return rep;
    };
    for (std::size_t a = 0; a < gens.size(); ++a) {
        if (gens[a].is_zero()) continue;
        basis.push_back({gens[a], unit_rep(a)});
        live.push_back(true);
    }
    if (basis.empty()) throw DomainError("buchberger: all generators are zero");

    // pending S-pairs, processed smallest lcm first for determinism
    struct Pair {
        Mono lcm;
        std::size_t i, j;
        bool operator<(const Pair& o) const {
            if (lcm != o.lcm) return grevlex_less(lcm, o.lcm);
            if (i != o.i) return i < o.i;
            return j < o.j;
        }
    };
    std::set<Pair> pending;
    auto push_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            if (!live[i]) continue;
            pending.insert({mono_lcm(basis[i].p.leading_mono(), basis[j].p.leading_mono()), i, j});
        }
    };
    for (std::size_t j = 1; j < basis.size(); ++j) push_pairs(j);

    while (!pending.empty()) {
        Pair pr = *pending.begin();
        pending.erase(pending.begin());
        if (!live[pr.i] || !live[pr.j]) continue;
        const Mono& li = basis[pr.i].p.leading_mono();
        const Mono& lj = basis[pr.j].p.leading_mono();
        if (mono_coprime(li, lj)) continue;  // product criterion
        // chain criterion: an element whose head divides the lcm, with both
        // linking pairs already handled, makes this pair redundant
        bool redundant = false;
        for (std::size_t k2 = 0; k2 < basis.size() && !redundant; ++k2) {
            if (!live[k2] || k2 == pr.i || k2 == pr.j) continue;
            if (!mono_divides(basis[k2].p.leading_mono(), pr.lcm)) continue;
            auto linked = [&](std::size_t a, std::size_t b) {
                if (a > b) std::swap(a, b);
                return pending.count({mono_lcm(basis[a].p.leading_mono(), basis[b].p.leading_mono()), a, b}) > 0;
            };
            if (!linked(pr.i, k2) && !linked(pr.j, k2)) redundant = true;
        }
        if (redundant) continue;

        Mono ui = mono_quotient(pr.lcm, li);
        Mono uj = mono_quotient(pr.lcm, lj);
        detail::WorkPoly<K> s;
        s.p = basis[pr.i].p.mul_term(ui, FOps<K>::inv(basis[pr.i].p.leading_coeff())) -
              basis[pr.j].p.mul_term(uj, FOps<K>::inv(basis[pr.j].p.leading_coeff()));
        s.rep.assign(gens.size(), MPoly<K>(table));
        for (std::size_t a = 0; a < gens.size(); ++a) {
            if (!basis[pr.i].rep[a].is_zero())
                s.rep[a] += basis[pr.i].rep[a].mul_term(ui, FOps<K>::inv(basis[pr.i].p.leading_coeff()));
            if (!basis[pr.j].rep[a].is_zero())
                s.rep[a] -= basis[pr.j].rep[a].mul_term(uj, FOps<K>::inv(basis[pr.j].p.leading_coeff()));
        }
        detail::reduce_inplace(s, basis, live, steps, opts.step_budget);
        if (s.p.is_zero()) continue;
        basis.push_back(std::move(s));
        live.push_back(true);
        push_pairs(basis.size() - 1);
    }

    // survivors with pairwise non-divisible heads, smallest head first
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (live[i]) keep.push_back(i);
    std::sort(keep.begin(), keep.end(), [&](std::size_t a, std::size_t b) {
        return grevlex_less(basis[a].p.leading_mono(), basis[b].p.leading_mono());
    });
    std::vector<std::size_t> minimal;
    for (std::size_t idx : keep) {
        bool divisible = false;
        for (std::size_t m : minimal)
            if (mono_divides(basis[m].p.leading_mono(), basis[idx].p.leading_mono())) {
                divisible = true;
                break;
            }
        if (!divisible) minimal.push_back(idx);
    }

    // tail inter-reduction to the unique reduced basis
    std::vector<detail::WorkPoly<K>> out;
    for (std::size_t idx : minimal) out.push_back(std::move(basis[idx]));
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < out.size(); ++i) {
            std::vector<detail::WorkPoly<K>> others;
            std::vector<bool> olive;
            for (std::size_t j = 0; j < out.size(); ++j)
                if (j != i) {
                    others.push_back(out[j]);
                    olive.push_back(true);
                }
            detail::WorkPoly<K> w = out[i];
            detail::reduce_inplace(w, others, olive, steps, opts.step_budget);
            if (w.p != out[i].p) {
                out[i] = std::move(w);
                changed = true;
            }
        }
    }

    ReducedGB<K> gb;
    gb.table = table;
    for (auto& w : out) {
        K inv = FOps<K>::inv(w.p.leading_coeff());
        gb.polys.push_back(w.p.scaled(inv));
        std::vector<MPoly<K>> rep;
        for (auto& r : w.rep) rep.push_back(r.scaled(inv));
        gb.cofactors.push_back(std::move(rep));
    }
    return gb;
}

// Remainder of f on division by the reduced basis; no term of the result is
// divisible by any basis leading term, and f - result lies in the ideal.
template <class K>
MPoly<K> normal_form(const MPoly<K>& f, const ReducedGB<K>& gb, long long step_budget = 10'000'000) {
    if (!VarTable::same(f.table(), gb.table)) throw TableMismatch("normal_form: table mismatch");
    long long steps = 0;
    MPoly<K> remainder(f.table());
    MPoly<K> w = f;
    while (!w.is_zero()) {
        const Mono& lm = w.leading_mono();
        bool hit = false;
        for (const auto& g : gb.polys) {
            const Mono& glm = g.leading_mono();
            if (!mono_divides(glm, lm)) continue;
            detail::charge(steps, step_budget);
            K c = w.leading_coeff();  // basis is monic
            w.sub_mul_term(g, mono_quotient(lm, glm), c);
            hit = true;
            break;
        }
        if (!hit) {
            auto it = w.terms().begin();
            remainder.add_term(it->first, it->second);
            MPoly<K> head(w.table());
            head.add_term(it->first, it->second);
            w -= head;
        }
    }
    return remainder;
}

// The order ideal of monomials outside the leading-term ideal.
template <class K>
std::vector<Mono> standard_monomials(const ReducedGB<K>& gb, std::size_t cap = 100000) {
    std::vector<Mono> lts;
    for (const auto& g : gb.polys) lts.push_back(g.leading_mono());
    std::size_t nv = static_cast<std::size_t>(gb.table->size());
    if (gb.contains_unit()) return {};
    // finiteness: every variable needs a pure power among the leading terms
    for (std::size_t v = 0; v < nv; ++v) {
        bool found = false;
        for (const auto& lt : lts) {
            bool pure = lt[v] > 0;
            for (std::size_t u = 0; u < nv && pure; ++u)
                if (u != v && lt[u] != 0) pure = false;
            if (pure) {
                found = true;
                break;
            }
        }
        if (!found)
            throw InfiniteDimensional("variable '" + gb.table->name(static_cast<int>(v)) +
                                      "' has no pure-power leading term");
    }

    auto reducible = [&](const Mono& m) {
        for (const auto& lt : lts)
            if (mono_divides(lt, m)) return true;
        return false;
    };
    std::set<Mono, GrevlexAsc> seen;
    std::vector<Mono> queue{Mono(nv, 0)};
    seen.insert(queue[0]);
    while (!queue.empty()) {
        Mono m = std::move(queue.back());
        queue.pop_back();
        for (std::size_t v = 0; v < nv; ++v) {
            Mono next = m;
            next[v] += 1;
            if (seen.count(next) || reducible(next)) continue;
            if (seen.size() + 1 > cap)
                throw CapExceeded("standard monomial count exceeds cap " + std::to_string(cap));
            seen.insert(next);
            queue.push_back(next);
        }
    }
    return {seen.begin(), seen.end()};
}

// Matrix of multiplication by f on the quotient, columns indexed by basis.
template <class K>
Matrix<K> mult_matrix(const MPoly<K>& f, const std::vector<Mono>& basis, const ReducedGB<K>& gb) {
    std::map<Mono, std::size_t, GrevlexAsc> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
    Matrix<K> m(basis.size(), std::vector<K>(basis.size(), FOps<K>::zero()));
    for (std::size_t col = 0; col < basis.size(); ++col) {
        MPoly<K> b(gb.table);
        b.add_term(basis[col], FOps<K>::one());
        MPoly<K> nf = normal_form(f * b, gb);
        for (const auto& [mono, c] : nf.terms()) {
            auto it = index.find(mono);
            if (it == index.end()) throw DomainError("normal form leaves the standard monomial span");
            m[it->second][col] = c;
        }
    }
    return m;
}

}  // namespace qkw
