// qkw/rational.hpp -- arbitrary-precision integers and rationals (GMP backed).
#pragma once

#include <gmpxx.h>

#include <string>

#include "qkw/errors.hpp"

namespace qkw {

using Int = mpz_class;
using Rat = mpq_class;

inline std::string render_int(const Int& z) { return z.get_str(); }

inline std::string render_rat(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Field operations used by generic polynomial code; specialized per scalar type.
template <class K>
struct FOps;

template <>
struct FOps<Rat> {
    static Rat zero() { return Rat(0); }
    static Rat one() { return Rat(1); }
    static Rat from_int(long v) { return Rat(v); }
    static bool is_zero(const Rat& a) { return a == 0; }
    static bool is_one(const Rat& a) { return a == 1; }
    static Rat inv(const Rat& a) {
        if (a == 0) throw DivisionByZero("inverse of zero rational");
        return Rat(1) / a;
    }
    static std::string render(const Rat& a) { return render_rat(a); }
    // Rationals never carry equivariant parameters.
    static bool is_scalar(const Rat&) { return true; }
};

inline Int binomial(int n, int k) {
    if (k < 0 || k > n) return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline Int factorial(int n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

}  // namespace qkw
