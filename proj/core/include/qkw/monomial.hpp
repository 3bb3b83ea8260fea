// qkw/monomial.hpp -- exponent vectors and the graded reverse-lexicographic order.
#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace qkw {

// Exponent vector. Nonnegative in polynomial contexts; Laurent contexts allow
// negative entries (ordering below is still a total order there).
using Mono = std::vector<int32_t>;

inline int64_t total_degree(const Mono& m) {
    return std::accumulate(m.begin(), m.end(), int64_t{0});
}

// grevlex: higher total degree wins; on ties the monomial with the *smaller*
// exponent on the last differing variable is the larger one.
inline bool grevlex_less(const Mono& a, const Mono& b) {
    int64_t da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
}

// Map comparator that puts the leading (largest) monomial first.
struct GrevlexDesc {
    bool operator()(const Mono& a, const Mono& b) const { return grevlex_less(b, a); }
};

// Ascending variant, used where enumeration from small to large is natural.
struct GrevlexAsc {
    bool operator()(const Mono& a, const Mono& b) const { return grevlex_less(a, b); }
};

inline bool mono_divides(const Mono& d, const Mono& m) {
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] > m[i]) return false;
    return true;
}

inline Mono mono_quotient(const Mono& m, const Mono& d) {
    Mono q(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) q[i] = m[i] - d[i];
    return q;
}

inline Mono mono_mul(const Mono& a, const Mono& b) {
    Mono p(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) p[i] = a[i] + b[i];
    return p;
}

inline Mono mono_lcm(const Mono& a, const Mono& b) {
    Mono l(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) l[i] = a[i] > b[i] ? a[i] : b[i];
    return l;
}

inline bool mono_coprime(const Mono& a, const Mono& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

inline bool is_constant(const Mono& m) {
    for (int32_t e : m)
        if (e != 0) return false;
    return true;
}

struct MonoHash {
    std::size_t operator()(const Mono& m) const {
        std::size_t h = 1469598103934665603ull;
        for (int32_t e : m) {
            h ^= static_cast<std::size_t>(static_cast<uint32_t>(e));
            h *= 1099511628211ull;
        }
        return h;
    }
};

// q-exponents are ordered by total degree first so that series iterate from
// the classical limit upward.
struct QExpAsc {
    bool operator()(const Mono& a, const Mono& b) const {
        int64_t da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return a < b;
    }
};

}  // namespace qkw
