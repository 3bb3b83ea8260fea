#include "qkw/zpoly.hpp"

#include <algorithm>

#include "qkw/laurent.hpp"

namespace qkw {

ZPoly ZPoly::constant(int nvars, Int value) {
    ZPoly p(nvars);
    p.add_term(Mono(nvars, 0), std::move(value));
    return p;
}

ZPoly ZPoly::variable(int nvars, int index, int power) {
    ZPoly p(nvars);
    Mono m(nvars, 0);
    m[index] = power;
    p.add_term(std::move(m), Int(1));
    return p;
}

bool ZPoly::is_one() const {
    return terms_.size() == 1 && qkw::is_constant(terms_.begin()->first) && terms_.begin()->second == 1;
}

const Mono& ZPoly::leading_mono() const {
    if (terms_.empty()) throw DomainError("leading term of zero polynomial");
    return terms_.begin()->first;
}

const Int& ZPoly::leading_coeff() const {
    if (terms_.empty()) throw DomainError("leading coefficient of zero polynomial");
    return terms_.begin()->second;
}

void ZPoly::add_term(Mono m, Int c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(std::move(m), std::move(c));
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool operator<(const ZPoly& a, const ZPoly& b) {
    if (a.nvars_ != b.nvars_) return a.nvars_ < b.nvars_;
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return grevlex_less(ia->first, ib->first);
        if (ia->second != ib->second) return ia->second < ib->second;
    }
    return ia == a.terms_.end() && ib != b.terms_.end();
}

ZPoly ZPoly::operator-() const {
    ZPoly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

ZPoly operator+(const ZPoly& a, const ZPoly& b) {
    ZPoly::check_same(a, b);
    ZPoly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

ZPoly operator-(const ZPoly& a, const ZPoly& b) {
    ZPoly::check_same(a, b);
    ZPoly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    ZPoly::check_same(a, b);
    ZPoly r(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
    return r;
}

ZPoly ZPoly::mul_int(const Int& k) const {
    ZPoly r(nvars_);
    if (k == 0) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * k);
    return r;
}

ZPoly ZPoly::mul_mono(const Mono& m) const {
    ZPoly r(nvars_);
    for (const auto& [mm, c] : terms_) r.terms_.emplace(mono_mul(mm, m), c);
    return r;
}

int ZPoly::degree_in(int var) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m[var]));
    return d;
}

int64_t ZPoly::total_deg() const {
    int64_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
    return d;
}

Int ZPoly::int_content() const {
    Int g(0);
    for (const auto& [m, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

bool ZPoly::try_divide_exact(const ZPoly& d, ZPoly& out) const {
    if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
    ZPoly rem = *this;
    ZPoly quot(nvars_);
    const Mono& dlm = d.leading_mono();
    const Int& dlc = d.leading_coeff();
    while (!rem.is_zero()) {
        const Mono& rlm = rem.leading_mono();
        if (!mono_divides(dlm, rlm)) return false;
        Int q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem.leading_coeff().get_mpz_t(), dlc.get_mpz_t());
        if (r != 0) return false;
        Mono qm = mono_quotient(rlm, dlm);
        quot.add_term(qm, q);
        ZPoly sub = d.mul_mono(qm).mul_int(q);
        rem -= sub;
    }
    out = std::move(quot);
    return true;
}

ZPoly ZPoly::divide_exact(const ZPoly& d) const {
    ZPoly out;
    if (!try_divide_exact(d, out)) throw DomainError("polynomial division is not exact");
    return out;
}

std::string ZPoly::render(const std::string& stem) const {
    // shares term rendering with LaurentZ
    LaurentZ l(nvars_);
    for (const auto& [m, c] : terms_) l.add_term(m, c);
    return l.render(stem);
}

void ZPoly::check_same(const ZPoly& a, const ZPoly& b) {
    if (a.nvars_ != b.nvars_)
        throw DimensionError("polynomial operands have different variable counts");
}

namespace {

// Coefficients of p viewed as a univariate polynomial in `var`.
std::vector<ZPoly> coeffs_in(const ZPoly& p, int var) {
    std::vector<ZPoly> out(static_cast<std::size_t>(p.degree_in(var)) + 1, ZPoly(p.nvars()));
    for (const auto& [m, c] : p.terms()) {
        Mono rest = m;
        int e = rest[var];
        rest[var] = 0;
        out[e].add_term(std::move(rest), c);
    }
    return out;
}

ZPoly from_coeffs(const std::vector<ZPoly>& cs, int var, int nvars) {
    ZPoly p(nvars);
    for (std::size_t e = 0; e < cs.size(); ++e)
        for (const auto& [m, c] : cs[e].terms()) {
            Mono mm = m;
            mm[var] = static_cast<int32_t>(e);
            p.add_term(std::move(mm), c);
        }
    return p;
}

// Content of p with respect to `var`: gcd of the univariate coefficients.
ZPoly content_in(const ZPoly& p, int var) {
    ZPoly g(p.nvars());
    for (const ZPoly& c : coeffs_in(p, var)) {
        if (c.is_zero()) continue;
        g = zpoly_gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

// Pseudo-remainder of a by b with respect to `var`.
ZPoly prem(ZPoly a, const ZPoly& b, int var) {
    int db = b.degree_in(var);
    auto bc = coeffs_in(b, var);
    const ZPoly& blc = bc[static_cast<std::size_t>(db)];
    while (!a.is_zero()) {
        int da = a.degree_in(var);
        if (da < db) break;
        auto ac = coeffs_in(a, var);
        const ZPoly& alc = ac[static_cast<std::size_t>(da)];
        // a := blc*a - alc*v^(da-db)*b
        ZPoly shift = ZPoly::variable(a.nvars(), var, da - db);
        a = blc * a - alc * shift * b;
        if (a.degree_in(var) == da && !a.is_zero())
            throw DomainError("pseudo-division failed to lower the degree");
    }
    return a;
}

}  // namespace

ZPoly zpoly_gcd(const ZPoly& a, const ZPoly& b) {
    auto positive = [](ZPoly p) {
        if (!p.is_zero() && p.leading_coeff() < 0) return -p;
        return p;
    };
    if (a.is_zero()) return positive(b);
    if (b.is_zero()) return positive(a);
    if (a.is_constant() && b.is_constant()) {
        Int g;
        mpz_gcd(g.get_mpz_t(), a.leading_coeff().get_mpz_t(), b.leading_coeff().get_mpz_t());
        return ZPoly::constant(a.nvars(), g);
    }

    // Main variable: the highest-index variable occurring in either operand.
    int var = -1;
    for (int v = a.nvars() - 1; v >= 0; --v) {
        if (a.degree_in(v) > 0 || b.degree_in(v) > 0) {
            var = v;
            break;
        }
    }
    if (var < 0) {
        // both constant in every variable; handled above, defensive fallthrough
        Int g;
        mpz_gcd(g.get_mpz_t(), a.leading_coeff().get_mpz_t(), b.leading_coeff().get_mpz_t());
        return ZPoly::constant(a.nvars(), g);
    }

    if (a.is_constant()) return positive(zpoly_gcd(a, content_in(b, var)));
    if (b.is_constant()) return positive(zpoly_gcd(b, content_in(a, var)));

    ZPoly ca = content_in(a, var), cb = content_in(b, var);
    ZPoly cont = zpoly_gcd(ca, cb);
    ZPoly u = a.divide_exact(ca);
    ZPoly v = b.divide_exact(cb);
    if (u.degree_in(var) < v.degree_in(var)) std::swap(u, v);

    // Primitive PRS: remainders are re-normalized by their content each step.
    while (true) {
        ZPoly r = prem(u, v, var);
        if (r.is_zero()) break;
        if (r.degree_in(var) == 0) {
            // coprime as polynomials in `var`; gcd is carried by contents only
            return positive(cont);
        }
        ZPoly cr = content_in(r, var);
        u = std::move(v);
        v = r.divide_exact(cr);
    }
    return positive(cont * v);
}

}  // namespace qkw
