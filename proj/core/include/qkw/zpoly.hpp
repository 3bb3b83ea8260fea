// qkw/zpoly.hpp -- integer multivariate polynomials with exact gcd.
//
// Internal workhorse behind RationalFunction normalization. Exponents are
// nonnegative; gcd uses a primitive polynomial remainder sequence with
// contents computed recursively.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "qkw/errors.hpp"
#include "qkw/monomial.hpp"
#include "qkw/rational.hpp"

namespace qkw {

class ZPoly {
public:
    using TermMap = std::map<Mono, Int, GrevlexDesc>;

    ZPoly() : nvars_(0) {}
    explicit ZPoly(int nvars) : nvars_(nvars) {}

    static ZPoly constant(int nvars, Int value);
    static ZPoly variable(int nvars, int index, int power = 1);

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && qkw::is_constant(terms_.begin()->first)); }
    bool is_one() const;
    std::size_t size() const { return terms_.size(); }

    const Mono& leading_mono() const;
    const Int& leading_coeff() const;

    void add_term(Mono m, Int c);

    friend bool operator==(const ZPoly& a, const ZPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const ZPoly& a, const ZPoly& b) { return !(a == b); }
    // Arbitrary (non-mathematical) total order so ZPoly can key ordered sets.
    friend bool operator<(const ZPoly& a, const ZPoly& b);

    ZPoly operator-() const;
    friend ZPoly operator+(const ZPoly& a, const ZPoly& b);
    friend ZPoly operator-(const ZPoly& a, const ZPoly& b);
    friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
    ZPoly& operator+=(const ZPoly& o) { return *this = *this + o; }
    ZPoly& operator-=(const ZPoly& o) { return *this = *this - o; }
    ZPoly& operator*=(const ZPoly& o) { return *this = *this * o; }

    ZPoly mul_int(const Int& k) const;
    ZPoly mul_mono(const Mono& m) const;

    int degree_in(int var) const;
    int64_t total_deg() const;

    // Integer content (gcd of coefficients), nonnegative.
    Int int_content() const;

    // Exact division; throws DomainError when the division is not exact.
    ZPoly divide_exact(const ZPoly& d) const;
    bool try_divide_exact(const ZPoly& d, ZPoly& out) const;

    std::string render(const std::string& stem = "T") const;

private:
    static void check_same(const ZPoly& a, const ZPoly& b);

    int nvars_;
    TermMap terms_;
};

// gcd with positive leading coefficient; gcd(0,0) = 0.
ZPoly zpoly_gcd(const ZPoly& a, const ZPoly& b);

}  // namespace qkw
