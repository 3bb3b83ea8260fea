// qkw/laurent.hpp -- Laurent polynomials in the equivariant parameters T1..Tn.
//
// BasicLaurent<C> is the canonical-form term map: no zero coefficients are
// stored and equality is structural. LaurentZ models Z[T1^{+-1},...,Tn^{+-1}];
// LaurentQ is the same with rational coefficients (restrictions of classes
// with inverted determinants live there).
#pragma once

#include <map>
#include <string>
#include <vector>

#include "qkw/errors.hpp"
#include "qkw/monomial.hpp"
#include "qkw/rational.hpp"

namespace qkw {

template <class C>
class BasicLaurent {
public:
    using TermMap = std::map<Mono, C, GrevlexDesc>;

    BasicLaurent() : nvars_(0) {}
    explicit BasicLaurent(int nvars) : nvars_(nvars) {}

    static BasicLaurent constant(int nvars, C value) {
        BasicLaurent p(nvars);
        p.add_term(Mono(nvars, 0), std::move(value));
        return p;
    }

    static BasicLaurent variable(int nvars, int index, int power = 1) {
        BasicLaurent p(nvars);
        Mono m(nvars, 0);
        m[index] = power;
        p.add_term(std::move(m), C(1));
        return p;
    }

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(Mono m, C c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.try_emplace(std::move(m), std::move(c));
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend bool operator==(const BasicLaurent& a, const BasicLaurent& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const BasicLaurent& a, const BasicLaurent& b) { return !(a == b); }

    BasicLaurent operator-() const {
        BasicLaurent r(nvars_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    friend BasicLaurent operator+(const BasicLaurent& a, const BasicLaurent& b) {
        check_same(a, b);
        BasicLaurent r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }

    friend BasicLaurent operator-(const BasicLaurent& a, const BasicLaurent& b) {
        check_same(a, b);
        BasicLaurent r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }

    friend BasicLaurent operator*(const BasicLaurent& a, const BasicLaurent& b) {
        check_same(a, b);
        BasicLaurent r(a.nvars_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
        return r;
    }

    BasicLaurent& operator+=(const BasicLaurent& o) { return *this = *this + o; }
    BasicLaurent& operator-=(const BasicLaurent& o) { return *this = *this - o; }
    BasicLaurent& operator*=(const BasicLaurent& o) { return *this = *this * o; }

    BasicLaurent pow(int e) const {
        if (e < 0) throw DomainError("negative power of a Laurent polynomial; invert a unit instead");
        BasicLaurent r = constant(nvars_, C(1));
        BasicLaurent base = *this;
        while (e) {
            if (e & 1) r *= base;
            if (e >>= 1) base *= base;
        }
        return r;
    }

    // Units of Z[T^{+-1}] are exactly the terms +-T^a; with rational
    // coefficients any single nonzero term qualifies.
    bool is_unit() const {
        if (terms_.size() != 1) return false;
        const C& c = terms_.begin()->second;
        if constexpr (std::is_same_v<C, Int>) {
            return c == 1 || c == -1;
        } else {
            return c != 0;
        }
    }

    // Inverse of a unit; throws if is_unit() fails.
    BasicLaurent unit_inverse() const {
        if (!is_unit()) throw DomainError("not a unit of the Laurent ring");
        const auto& [m, c] = *terms_.begin();
        Mono inv(nvars_);
        for (int i = 0; i < nvars_; ++i) inv[i] = -m[i];
        BasicLaurent r(nvars_);
        if constexpr (std::is_same_v<C, Int>) {
            r.add_term(std::move(inv), c);  // +-1 is its own inverse
        } else {
            r.add_term(std::move(inv), C(1) / c);
        }
        return r;
    }

    // Exact evaluation at a nonzero rational per parameter.
    Rat specialize(const std::vector<Rat>& values) const {
        if (static_cast<int>(values.size()) != nvars_)
            throw DimensionError("specialize: expected " + std::to_string(nvars_) + " values");
        for (const Rat& v : values)
            if (v == 0) throw DomainError("specialize: zero value for an invertible parameter");
        Rat acc(0);
        for (const auto& [m, c] : terms_) {
            Rat t(c);
            for (int i = 0; i < nvars_; ++i) {
                int e = m[i];
                if (e == 0) continue;
                Rat p = values[i];
                if (e < 0) {
                    p = Rat(1) / p;
                    e = -e;
                }
                for (int j = 0; j < e; ++j) t *= p;
            }
            acc += t;
        }
        return acc;
    }

    std::string render(const std::string& stem = "T") const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            std::string coeff;
            if constexpr (std::is_same_v<C, Int>) {
                coeff = render_int(c);
            } else {
                coeff = render_rat(c);
            }
            bool neg = !coeff.empty() && coeff[0] == '-';
            if (neg) coeff = coeff.substr(1);
            std::string mono = render_mono(m, stem);
            std::string term;
            if (mono.empty()) {
                term = coeff;
            } else if (coeff == "1") {
                term = mono;
            } else {
                term = coeff + "*" + mono;
            }
            if (first) {
                out = (neg ? "-" : "") + term;
                first = false;
            } else {
                out += (neg ? "-" : "+") + term;
            }
        }
        return out;
    }

    static std::string render_mono(const Mono& m, const std::string& stem) {
        std::string s;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += stem + std::to_string(i + 1);
            if (m[i] != 1) s += "^" + std::to_string(m[i]);
        }
        return s;
    }

private:
    static void check_same(const BasicLaurent& a, const BasicLaurent& b) {
        if (a.nvars_ != b.nvars_)
            throw DimensionError("Laurent operands have " + std::to_string(a.nvars_) + " and " +
                                 std::to_string(b.nvars_) + " parameters");
    }

    int nvars_;
    TermMap terms_;
};

using LaurentZ = BasicLaurent<Int>;
using LaurentQ = BasicLaurent<Rat>;

// e_l(T_{i} : i in subset), as a Laurent (in fact ordinary) polynomial.
inline LaurentZ elementary_symmetric_T(int nvars, const std::vector<int>& subset, int l) {
    int m = static_cast<int>(subset.size());
    if (l < 0 || l > m) return LaurentZ(nvars);
    // dynamic programming over prod (1 + y T_i)
    std::vector<LaurentZ> e(static_cast<std::size_t>(l) + 1, LaurentZ(nvars));
    e[0] = LaurentZ::constant(nvars, Int(1));
    for (int idx : subset) {
        LaurentZ t = LaurentZ::variable(nvars, idx);
        for (int j = l; j >= 1; --j) {
            if (!e[j - 1].is_zero()) e[j] += e[j - 1] * t;
        }
    }
    return e[l];
}

}  // namespace qkw
