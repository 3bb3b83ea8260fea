// qkw/grothendieck.hpp -- double Grothendieck polynomials by isobaric
// divided differences.
//
// Top class: G_{w0}(x;T) = prod_{i+j<=n} (x_i + t_j - x_i t_j) with
// t_j = 1 - T_j^{-1}; descending recursion G_{w s_i} = pi_i G_w for
// l(w s_i) < l(w), where
//   pi_i f = ((1 - x_{i+1}) f - (1 - x_i) s_i f) / (x_i - x_{i+1}).
// Fixed-point evaluation substitutes x_i -> 1 - T_{w(i)} (or the inverse
// character variant; the passing convention is pinned by tests).
#pragma once

#include <map>

#include "qkw/mpoly.hpp"
#include "qkw/permutation.hpp"

namespace qkw {

// Exact polynomial division, for divisors that are known to divide.
template <class K>
MPoly<K> mpoly_divide_exact(const MPoly<K>& a, const MPoly<K>& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    MPoly<K> rem = a;
    MPoly<K> quot(a.table());
    const Mono& blm = b.leading_mono();
    const K& blc = b.leading_coeff();
    while (!rem.is_zero()) {
        const Mono& rlm = rem.leading_mono();
        if (!mono_divides(blm, rlm)) throw DomainError("polynomial division is not exact");
        K c = rem.leading_coeff() / blc;
        Mono q = mono_quotient(rlm, blm);
        quot.add_term(q, c);
        rem.sub_mul_term(b, q, c);
    }
    return quot;
}

// Swap x_i and x_{i+1} (1-based i) in every monomial.
template <class K>
MPoly<K> swap_vars(const MPoly<K>& f, int i) {
    MPoly<K> out(f.table());
    for (const auto& [m, c] : f.terms()) {
        Mono mm = m;
        std::swap(mm[static_cast<std::size_t>(i - 1)], mm[static_cast<std::size_t>(i)]);
        out.add_term(std::move(mm), c);
    }
    return out;
}

// The isobaric divided difference pi_i.
template <class K>
MPoly<K> isobaric_pi(const MPoly<K>& f, int i) {
    const VarTable::Ptr& tab = f.table();
    MPoly<K> xi = MPoly<K>::var(tab, i - 1);
    MPoly<K> xi1 = MPoly<K>::var(tab, i);
    MPoly<K> one = MPoly<K>::constant(tab, FOps<K>::one());
    MPoly<K> num = (one - xi1) * f - (one - xi) * swap_vars(f, i);
    return mpoly_divide_exact(num, xi - xi1);
}

enum class GrothConvention {
    InverseChar,  // x_i -> 1 - T_{w(i)}^{-1}
    DualChar,     // x_i -> 1 - T_{w(i)}
};

// Selected by the triangularity and divisor-identity tests.
inline constexpr GrothConvention kGrothConvention = GrothConvention::DualChar;

class GrothendieckFamily {
public:
    explicit GrothendieckFamily(int n) : n_(n), xtab_(VarTable::x_roots(n)) {}

    int n() const { return n_; }
    const VarTable::Ptr& table() const { return xtab_; }

    // G_{w0} from the product formula.
    PolyF top() const {
        PolyF g = PolyF::constant(xtab_, FOps<RatFun>::one());
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; i + j <= n_; ++j) {
                PolyF xi = PolyF::var(xtab_, i - 1);
                RatFun tj = RatFun::from_int(1) - RatFun::t_var(n_, j - 1, -1);
                PolyF factor = xi + PolyF::constant(xtab_, tj) - xi.scaled(tj);
                g *= factor;
            }
        return g;
    }

    const PolyF& poly(const Permutation& w) {
        auto it = cache_.find(w);
        if (it != cache_.end()) return it->second;
        if (w.length() == Permutation::longest(n_).length())
            return cache_.emplace(w, top()).first->second;
        // climb: find i with l(w s_i) > l(w), then G_w = pi_i G_{w s_i}
        for (int i = 1; i < n_; ++i) {
            if (!w.has_descent(i)) {
                const PolyF& higher = poly(w.right_mul_s(i));
                PolyF g = isobaric_pi(higher, i);
                return cache_.emplace(w, std::move(g)).first->second;
            }
        }
        throw DomainError("no ascent found below the longest element");
    }

    // Recompute along an explicit reduced word of w0 ... w; used by the
    // word-independence checks.
    PolyF poly_via_word(const Permutation& w) const {
        // build w0 w^{-1}-side chain: strip letters from a reduced word of w0 w? simpler:
        // descend from w0 letter by letter along any reduced word of w^{-1} w0.
        Permutation cur = Permutation::longest(n_);
        PolyF g = top();
        // find a chain w0 = u_0 > u_1 > ... > u_m = w with u_{t+1} = u_t s_i
        while (cur != w) {
            bool moved = false;
            // largest admissible descent first: a chain that differs from the
            // ascent-based cache path whenever a choice exists
            for (int i = n_ - 1; i >= 1; --i) {
                if (!cur.has_descent(i)) continue;
                Permutation next = cur.right_mul_s(i);
                if (next.length() >= w.length() && dominates(next, w)) {
                    g = isobaric_pi(g, i);
                    cur = next;
                    moved = true;
                    break;
                }
            }
            if (!moved) throw DomainError("failed to descend toward the target permutation");
        }
        return g;
    }

    // Fixed-point evaluation of any polynomial in the x-roots.
    RatFun point_value(const PolyF& g, const Permutation& w, GrothConvention conv = kGrothConvention) const {
        std::vector<RatFun> values;
        values.reserve(static_cast<std::size_t>(n_));
        for (int i = 1; i <= n_; ++i) {
            RatFun tw = RatFun::t_var(n_, w(i) - 1, conv == GrothConvention::InverseChar ? -1 : 1);
            values.push_back(RatFun::from_int(1) - tw);
        }
        return g.evaluate(values);
    }

private:
    // u lies (weakly) above w in weak-order terms good enough for descent:
    // here simply Bruhat comparability in the right direction.
    static bool dominates(const Permutation& u, const Permutation& w) { return bruhat_leq(w, u); }

    int n_;
    VarTable::Ptr xtab_;
    std::map<Permutation, PolyF> cache_;
};

}  // namespace qkw
