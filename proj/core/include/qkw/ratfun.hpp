// qkw/ratfun.hpp -- the fraction field Q(T1,...,Tn).
//
// Canonical form: scale * num / den with num, den primitive integer
// polynomials, gcd(num, den) = 1 and positive leading coefficients; the sign
// and all rational content live in `scale`. Equivalently the denominator is
// monic over Q once the scale is folded in, which is the normalization the
// equality test relies on. Values that are plain rationals are stored with
// zero variables, so constants from unrelated contexts compare equal and
// mixed arithmetic promotes them on demand.
#pragma once

#include <optional>
#include <string>

#include "qkw/errors.hpp"
#include "qkw/laurent.hpp"
#include "qkw/rational.hpp"
#include "qkw/zpoly.hpp"

namespace qkw {

class RatFun {
public:
    // zero
    RatFun() : nvars_(0), scale_(0), num_(ZPoly::constant(0, Int(1))), den_(ZPoly::constant(0, Int(1))) {}

    static RatFun from_rat(Rat v);
    static RatFun from_int(long v) { return from_rat(Rat(v)); }
    static RatFun from_zpoly(ZPoly p);
    // Laurent input may carry negative exponents; they move into the denominator.
    static RatFun from_laurent(const LaurentZ& p);
    static RatFun from_laurent(const LaurentQ& p);
    static RatFun fraction(ZPoly num, ZPoly den, Rat scale = Rat(1));
    static RatFun t_var(int nvars, int index, int power = 1);

    int nvars() const { return nvars_; }
    bool is_zero() const { return scale_ == 0; }
    bool is_one() const { return scale_ == 1 && num_.is_one() && den_.is_one(); }
    bool is_rational() const { return nvars_ == 0; }
    // Denominator trivial, i.e. the value is a polynomial in T over Q.
    bool is_polynomial() const { return den_.is_one(); }

    const ZPoly& num() const { return num_; }
    const ZPoly& den() const { return den_; }
    const Rat& scale() const { return scale_; }
    Rat as_rat() const;

    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.nvars_ == b.nvars_ && a.scale_ == b.scale_ && a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    RatFun operator-() const;
    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b);
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

    RatFun inv() const;
    RatFun pow(int e) const;

    // Exact evaluation; the denominator must not vanish at the point.
    Rat evaluate(const std::vector<Rat>& values) const;

    // Succeeds iff den is a single term, so the value lies in Q[T^{+-1}].
    std::optional<LaurentQ> to_laurent() const;
    // Integral Laurent form; succeeds iff the value lies in Z[T^{+-1}].
    std::optional<LaurentZ> to_laurent_integral() const;

    std::string render(const std::string& stem = "T") const;

private:
    static RatFun normalized(int nvars, Rat scale, ZPoly num, ZPoly den);
    static ZPoly promote(const ZPoly& p, int nvars);
    RatFun promoted(int nvars) const;

    int nvars_;   // 0 whenever the value is a plain rational
    Rat scale_;   // zero iff the value is zero
    ZPoly num_;   // primitive, positive leading coefficient
    ZPoly den_;   // primitive, positive leading coefficient, coprime to num_
};

template <>
struct FOps<RatFun> {
    static RatFun zero() { return RatFun(); }
    static RatFun one() { return RatFun::from_int(1); }
    static RatFun from_int(long v) { return RatFun::from_int(v); }
    static bool is_zero(const RatFun& a) { return a.is_zero(); }
    static bool is_one(const RatFun& a) { return a.is_one(); }
    static RatFun inv(const RatFun& a) { return a.inv(); }
    static std::string render(const RatFun& a) { return a.render(); }
    static bool is_scalar(const RatFun& a) { return a.is_rational(); }
};

}  // namespace qkw
