// qkw/mpoly.hpp -- multivariate polynomials over a coefficient field K.
//
// K is Rat (nonequivariant) or RatFun (equivariant). Terms are kept in a map
// sorted leading-term-first under grevlex; no zero coefficients are stored.
#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qkw/errors.hpp"
#include "qkw/monomial.hpp"
#include "qkw/ratfun.hpp"
#include "qkw/vartable.hpp"

namespace qkw {

template <class K>
class MPoly {
public:
    using TermMap = std::map<Mono, K, GrevlexDesc>;

    MPoly() = default;
    explicit MPoly(VarTable::Ptr table) : tab_(std::move(table)) {}

    static MPoly constant(VarTable::Ptr table, K value) {
        MPoly p(std::move(table));
        p.add_term(Mono(static_cast<std::size_t>(p.tab_->size()), 0), std::move(value));
        return p;
    }

    static MPoly zero(VarTable::Ptr table) { return MPoly(std::move(table)); }

    static MPoly var(VarTable::Ptr table, int index, int power = 1) {
        MPoly p(std::move(table));
        Mono m(static_cast<std::size_t>(p.tab_->size()), 0);
        m[static_cast<std::size_t>(index)] = power;
        p.add_term(std::move(m), FOps<K>::one());
        return p;
    }

    const VarTable::Ptr& table() const { return tab_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && qkw::is_constant(terms_.begin()->first));
    }

    K constant_value() const {
        if (terms_.empty()) return FOps<K>::zero();
        if (!is_constant()) throw DomainError("polynomial is not constant");
        return terms_.begin()->second;
    }

    const Mono& leading_mono() const {
        if (terms_.empty()) throw DomainError("leading term of zero polynomial");
        return terms_.begin()->first;
    }
    const K& leading_coeff() const {
        if (terms_.empty()) throw DomainError("leading coefficient of zero polynomial");
        return terms_.begin()->second;
    }

    int64_t total_deg() const {
        int64_t d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
        return d;
    }

    void add_term(Mono m, K c) {
        if (FOps<K>::is_zero(c)) return;
        auto [it, fresh] = terms_.try_emplace(std::move(m), std::move(c));
        if (!fresh) {
            it->second += c;
            if (FOps<K>::is_zero(it->second)) terms_.erase(it);
        }
    }

    friend bool operator==(const MPoly& a, const MPoly& b) {
        return VarTable::same(a.tab_, b.tab_) && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    MPoly operator-() const {
        MPoly r(tab_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        check_same(a, b);
        MPoly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }

    friend MPoly operator-(const MPoly& a, const MPoly& b) {
        check_same(a, b);
        MPoly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }

    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        check_same(a, b);
        MPoly r(a.tab_ ? a.tab_ : b.tab_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
        return r;
    }

    MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
    MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

    MPoly scaled(const K& c) const {
        MPoly r(tab_);
        if (FOps<K>::is_zero(c)) return r;
        for (const auto& [m, k] : terms_) r.add_term(m, k * c);
        return r;
    }

    MPoly mul_term(const Mono& m, const K& c) const {
        MPoly r(tab_);
        if (FOps<K>::is_zero(c)) return r;
        for (const auto& [mm, k] : terms_) r.terms_.emplace(mono_mul(mm, m), k * c);
        return r;
    }

    // p -= c * x^m * q, the Groebner reduction workhorse (in place).
    void sub_mul_term(const MPoly& q, const Mono& m, const K& c) {
        for (const auto& [mm, k] : q.terms_) add_term(mono_mul(mm, m), -(k * c));
    }

    MPoly pow(int e) const {
        if (e < 0) throw DomainError("negative power of a polynomial");
        MPoly r = constant(tab_, FOps<K>::one());
        MPoly base = *this;
        while (e) {
            if (e & 1) r *= base;
            if (e >>= 1) base *= base;
        }
        return r;
    }

    MPoly monic() const {
        if (is_zero()) return *this;
        return scaled(FOps<K>::inv(leading_coeff()));
    }

    // Full evaluation: one value per variable.
    K evaluate(const std::vector<K>& values) const {
        K acc = FOps<K>::zero();
        for (const auto& [m, c] : terms_) {
            K t = c;
            for (std::size_t i = 0; i < m.size(); ++i)
                for (int32_t j = 0; j < m[i]; ++j) t = t * values[i];
            acc += t;
        }
        return acc;
    }

    // Variable-for-variable transport onto another table (by name); exponents
    // on variables missing from the target are an error.
    MPoly transported(const VarTable::Ptr& target) const {
        MPoly out(target);
        std::vector<int> where(static_cast<std::size_t>(tab_->size()));
        for (int i = 0; i < tab_->size(); ++i) where[static_cast<std::size_t>(i)] = target->find(tab_->name(i));
        for (const auto& [m, c] : terms_) {
            Mono mm(static_cast<std::size_t>(target->size()), 0);
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0) continue;
                if (where[i] < 0)
                    throw TableMismatch("variable '" + tab_->name(static_cast<int>(i)) +
                                        "' does not exist in the target table");
                mm[static_cast<std::size_t>(where[i])] = m[i];
            }
            out.add_term(std::move(mm), c);
        }
        return out;
    }

    bool depends_on(int var) const {
        for (const auto& [m, c] : terms_)
            if (m[static_cast<std::size_t>(var)] != 0) return true;
        return false;
    }

    std::string render() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            std::string coeff = FOps<K>::render(c);
            bool neg = !coeff.empty() && coeff[0] == '-' && coeff.find_first_of("+-", 1) == std::string::npos &&
                       coeff.find('/') == std::string::npos;
            if (neg) coeff = coeff.substr(1);
            bool compound = coeff.find_first_of("+-", 1) != std::string::npos || coeff.find('/') != std::string::npos;
            std::string mono = render_mono(m);
            std::string term;
            if (mono.empty()) {
                term = compound ? "(" + coeff + ")" : coeff;
            } else if (!compound && coeff == "1") {
                term = mono;
            } else {
                term = (compound ? "(" + coeff + ")" : coeff) + "*" + mono;
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

    std::string render_mono(const Mono& m) const {
        std::string s;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += tab_->name(static_cast<int>(i));
            if (m[i] != 1) s += "^" + std::to_string(m[i]);
        }
        return s;
    }

private:
    static void check_same(const MPoly& a, const MPoly& b) {
        if (!VarTable::same(a.tab_, b.tab_)) throw TableMismatch();
    }

    VarTable::Ptr tab_;
    TermMap terms_;
};

using PolyQ = MPoly<Rat>;
using PolyF = MPoly<RatFun>;

}  // namespace qkw
