#include "qkw/ratfun.hpp"

#include <algorithm>

namespace qkw {

namespace {

// Pull the integer content out and make the leading coefficient positive.
// Returns the rational factor that was removed.
Rat make_primitive(ZPoly& p) {
    if (p.is_zero()) return Rat(0);
    Int c = p.int_content();
    if (p.leading_coeff() < 0) c = -c;
    if (c != 1) p = p.divide_exact(ZPoly::constant(p.nvars(), c));
    return Rat(c);
}

}  // namespace

ZPoly RatFun::promote(const ZPoly& p, int nvars) {
    if (p.nvars() == nvars) return p;
    ZPoly out(nvars);
    for (const auto& [m, c] : p.terms()) {
        Mono mm(nvars, 0);
        std::copy(m.begin(), m.end(), mm.begin());
        out.add_term(std::move(mm), c);
    }
    return out;
}

RatFun RatFun::promoted(int nvars) const {
    if (nvars_ == nvars) return *this;
    RatFun r;
    r.nvars_ = nvars;
    r.scale_ = scale_;
    r.num_ = promote(num_, nvars);
    r.den_ = promote(den_, nvars);
    return r;
}

RatFun RatFun::normalized(int nvars, Rat scale, ZPoly num, ZPoly den) {
    if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
    RatFun r;
    if (scale == 0 || num.is_zero()) return r;

    Rat cn = make_primitive(num);
    Rat cd = make_primitive(den);
    scale *= cn / cd;
    // primitive constants are 1, so the gcd pass only matters when both
    // sides are genuine polynomials
    if (!num.is_constant() && !den.is_constant()) {
        ZPoly g = zpoly_gcd(num, den);
        if (!g.is_one()) {
            num = num.divide_exact(g);
            den = den.divide_exact(g);
        }
    }
    if (num.is_constant() && den.is_constant()) {
        // collapse to a dimensionless rational; primitivity forces num=den=1
        r.nvars_ = 0;
        r.scale_ = scale * Rat(num.leading_coeff()) / Rat(den.leading_coeff());
        r.num_ = ZPoly::constant(0, Int(1));
        r.den_ = ZPoly::constant(0, Int(1));
        return r;
    }
    r.nvars_ = nvars;
    r.scale_ = std::move(scale);
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
}

RatFun RatFun::from_rat(Rat v) {
    RatFun r;
    r.scale_ = std::move(v);
    return r;
}

RatFun RatFun::from_zpoly(ZPoly p) {
    int n = p.nvars();
    return normalized(n, Rat(1), std::move(p), ZPoly::constant(n, Int(1)));
}

RatFun RatFun::fraction(ZPoly num, ZPoly den, Rat scale) {
    int n = std::max(num.nvars(), den.nvars());
    return normalized(n, std::move(scale), promote(num, n), promote(den, n));
}

RatFun RatFun::t_var(int nvars, int index, int power) {
    ZPoly v = ZPoly::variable(nvars, index, power < 0 ? -power : power);
    ZPoly one = ZPoly::constant(nvars, Int(1));
    if (power < 0) return normalized(nvars, Rat(1), std::move(one), std::move(v));
    return normalized(nvars, Rat(1), std::move(v), std::move(one));
}

RatFun RatFun::from_laurent(const LaurentZ& p) {
    int n = p.nvars();
    Mono shift(n, 0);
    for (const auto& [m, c] : p.terms())
        for (int i = 0; i < n; ++i) shift[i] = std::max(shift[i], -m[i]);
    ZPoly num(n);
    for (const auto& [m, c] : p.terms()) num.add_term(mono_mul(m, shift), c);
    ZPoly den(n);
    den.add_term(shift, Int(1));
    return normalized(n, Rat(1), std::move(num), std::move(den));
}

RatFun RatFun::from_laurent(const LaurentQ& p) {
    int n = p.nvars();
    Mono shift(n, 0);
    Int dens(1);
    for (const auto& [m, c] : p.terms()) {
        for (int i = 0; i < n; ++i) shift[i] = std::max(shift[i], -m[i]);
        mpz_lcm(dens.get_mpz_t(), dens.get_mpz_t(), c.get_den().get_mpz_t());
    }
    ZPoly num(n);
    for (const auto& [m, c] : p.terms()) {
        Rat scaled = c * Rat(dens);
        num.add_term(mono_mul(m, shift), scaled.get_num());
    }
    ZPoly den(n);
    den.add_term(shift, Int(1));
    return normalized(n, Rat(1) / Rat(dens), std::move(num), std::move(den));
}

Rat RatFun::as_rat() const {
    if (!is_rational()) throw DomainError("value is not a plain rational");
    return scale_;
}

RatFun RatFun::operator-() const {
    RatFun r = *this;
    r.scale_ = -r.scale_;
    return r;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int n = std::max(a.nvars_, b.nvars_);
    RatFun x = a.promoted(n), y = b.promoted(n);
    // scale*num/den arithmetic over a common integer denominator
    Rat sa = x.scale_, sb = y.scale_;
    Int la = sa.get_den(), lb = sb.get_den();
    Int l;
    mpz_lcm(l.get_mpz_t(), la.get_mpz_t(), lb.get_mpz_t());
    Int ma = sa.get_num() * (l / la), mb = sb.get_num() * (l / lb);
    ZPoly num = x.num_.mul_int(ma) * y.den_ + y.num_.mul_int(mb) * x.den_;
    ZPoly den = x.den_ * y.den_;
    return RatFun::normalized(n, Rat(1) / Rat(l), std::move(num), std::move(den));
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
    if (a.is_zero() || b.is_zero()) return RatFun();
    int n = std::max(a.nvars_, b.nvars_);
    RatFun x = a.promoted(n), y = b.promoted(n);
    if (x.den_.is_one() && y.den_.is_one()) {
        // product of primitives is primitive; skip the gcd pass
        RatFun r;
        r.nvars_ = n;
        r.scale_ = x.scale_ * y.scale_;
        r.num_ = x.num_ * y.num_;
        r.den_ = std::move(x.den_);
        if (r.num_.is_constant()) return RatFun::from_rat(r.scale_ * Rat(r.num_.leading_coeff()));
        return r;
    }
    // cross-cancel before multiplying to keep intermediates small
    ZPoly g1 = zpoly_gcd(x.num_, y.den_);
    ZPoly g2 = zpoly_gcd(y.num_, x.den_);
    ZPoly num = x.num_.divide_exact(g1) * y.num_.divide_exact(g2);
    ZPoly den = x.den_.divide_exact(g2) * y.den_.divide_exact(g1);
    return RatFun::normalized(n, x.scale_ * y.scale_, std::move(num), std::move(den));
}

RatFun RatFun::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of the zero rational function");
    return normalized(nvars_, Rat(1) / scale_, den_, num_);
}

RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inv(); }

RatFun RatFun::pow(int e) const {
    if (e < 0) return inv().pow(-e);
    RatFun r = RatFun::from_int(1);
    RatFun base = *this;
    while (e) {
        if (e & 1) r *= base;
        if (e >>= 1) base *= base;
    }
    return r;
}

Rat RatFun::evaluate(const std::vector<Rat>& values) const {
    if (is_zero()) return Rat(0);
    auto eval = [&](const ZPoly& p) {
        Rat acc(0);
        for (const auto& [m, c] : p.terms()) {
            Rat t(c);
            for (int i = 0; i < p.nvars(); ++i)
                for (int j = 0; j < m[i]; ++j) t *= values[i];
            acc += t;
        }
        return acc;
    };
    if (static_cast<int>(values.size()) < nvars_)
        throw DimensionError("evaluate: not enough parameter values");
    Rat d = eval(den_);
    if (d == 0) throw DomainError("evaluate: denominator vanishes at the point");
    return scale_ * eval(num_) / d;
}

std::optional<LaurentQ> RatFun::to_laurent() const {
    if (is_zero()) return LaurentQ(nvars_);
    if (den_.size() != 1) return std::nullopt;
    const auto& [dm, dc] = *den_.terms().begin();
    LaurentQ out(nvars_);
    for (const auto& [m, c] : num_.terms()) out.add_term(mono_quotient(m, dm), scale_ * Rat(c) / Rat(dc));
    return out;
}

std::optional<LaurentZ> RatFun::to_laurent_integral() const {
    auto lq = to_laurent();
    if (!lq) return std::nullopt;
    LaurentZ out(lq->nvars());
    for (const auto& [m, c] : lq->terms()) {
        if (c.get_den() != 1) return std::nullopt;
        out.add_term(m, c.get_num());
    }
    return out;
}

std::string RatFun::render(const std::string& stem) const {
    if (is_zero()) return "0";
    // Laurent values print with T^-1 powers, which keeps integer-coefficient
    // output inside the CLI grammar.
    if (auto lz = to_laurent_integral()) return lz->render(stem);
    if (auto lq = to_laurent()) return lq->render(stem);
    // fold the scale back into printable integer numerator/denominator
    ZPoly pn = num_.mul_int(scale_.get_num());
    ZPoly pd = den_.mul_int(scale_.get_den());
    std::string ns = pn.render(stem);
    std::string ds = pd.render(stem);
    if (pn.size() > 1) ns = "(" + ns + ")";
    if (pd.size() > 1) ds = "(" + ds + ")";
    return ns + "/" + ds;
}

}  // namespace qkw
