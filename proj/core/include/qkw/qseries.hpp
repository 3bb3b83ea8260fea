// qkw/qseries.hpp -- arithmetic in Poly[[q1..qk]] / <q>^{D+1}.
//
// Truncation is by total q-degree D. Coefficients are polynomials over the
// base (q-free) table; conversions from polynomials over a q-extended table
// split the q-exponents out.
#pragma once

#include <map>
#include <string>

#include "qkw/mpoly.hpp"
#include "qkw/monomial.hpp"

namespace qkw {

using QExp = Mono;

// Scalar-valued truncated series: the coordinate values of lifted normal
// forms live here.
template <class K>
class ScalarSeries {
public:
    ScalarSeries() : trunc_(0), nq_(0) {}
    ScalarSeries(int nq, int trunc) : trunc_(trunc), nq_(nq) {}

    static ScalarSeries constant(int nq, int trunc, K v) {
        ScalarSeries s(nq, trunc);
        s.add(QExp(static_cast<std::size_t>(nq), 0), std::move(v));
        return s;
    }

    int trunc() const { return trunc_; }
    int nq() const { return nq_; }
    const std::map<QExp, K, QExpAsc>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    void add(QExp e, K v) {
        if (FOps<K>::is_zero(v)) return;
        if (total_degree(e) > trunc_) return;
        auto [it, fresh] = c_.try_emplace(std::move(e), std::move(v));
        if (!fresh) {
            it->second += v;
            if (FOps<K>::is_zero(it->second)) c_.erase(it);
        }
    }

    K at(const QExp& e) const {
        auto it = c_.find(e);
        return it == c_.end() ? FOps<K>::zero() : it->second;
    }

    friend bool operator==(const ScalarSeries& a, const ScalarSeries& b) {
        return a.nq_ == b.nq_ && a.trunc_ == b.trunc_ && a.c_ == b.c_;
    }
    friend bool operator!=(const ScalarSeries& a, const ScalarSeries& b) { return !(a == b); }

    ScalarSeries operator-() const {
        ScalarSeries r(nq_, trunc_);
        for (const auto& [e, v] : c_) r.c_.emplace(e, -v);
        return r;
    }

    friend ScalarSeries operator+(const ScalarSeries& a, const ScalarSeries& b) {
        check_same(a, b);
        ScalarSeries r = a;
        for (const auto& [e, v] : b.c_) r.add(e, v);
        return r;
    }
    friend ScalarSeries operator-(const ScalarSeries& a, const ScalarSeries& b) { return a + (-b); }
    ScalarSeries& operator+=(const ScalarSeries& o) { return *this = *this + o; }
    ScalarSeries& operator-=(const ScalarSeries& o) { return *this = *this - o; }

    friend ScalarSeries operator*(const ScalarSeries& a, const ScalarSeries& b) {
        check_same(a, b);
        ScalarSeries r(a.nq_, a.trunc_);
        for (const auto& [ea, va] : a.c_)
            for (const auto& [eb, vb] : b.c_) {
                QExp e = mono_mul(ea, eb);
                if (total_degree(e) > a.trunc_) continue;
                r.add(std::move(e), va * vb);
            }
        return r;
    }

    ScalarSeries scaled(const K& k) const {
        ScalarSeries r(nq_, trunc_);
        if (FOps<K>::is_zero(k)) return r;
        for (const auto& [e, v] : c_) r.add(e, v * k);
        return r;
    }

    ScalarSeries shifted(const QExp& s) const {
        ScalarSeries r(nq_, trunc_);
        for (const auto& [e, v] : c_) {
            QExp ee = mono_mul(e, s);
            if (total_degree(ee) > trunc_) continue;
            r.c_.emplace(std::move(ee), v);
        }
        return r;
    }

    ScalarSeries truncated(int d) const {
        ScalarSeries r(nq_, d);
        for (const auto& [e, v] : c_) {
            if (total_degree(e) > d) break;  // map iterates by ascending degree
            r.c_.emplace(e, v);
        }
        return r;
    }

    // Geometric series q_j/(1-q_j) = q_j + q_j^2 + ... + q_j^D.
    static ScalarSeries q_over_one_minus_q(int nq, int trunc, int j) {
        ScalarSeries s(nq, trunc);
        for (int d = 1; d <= trunc; ++d) {
            QExp e(static_cast<std::size_t>(nq), 0);
            e[static_cast<std::size_t>(j - 1)] = d;
            s.add(std::move(e), FOps<K>::one());
        }
        return s;
    }

    std::string render(const std::string& qstem = "q") const {
        if (c_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, v] : c_) {
            std::string coeff = FOps<K>::render(v);
            std::string mono = LaurentZ::render_mono(e, qstem);
            bool neg = !coeff.empty() && coeff[0] == '-' &&
                       coeff.find_first_of("+-", 1) == std::string::npos && coeff.find('/') == std::string::npos;
            if (neg) coeff = coeff.substr(1);
            bool compound = coeff.find_first_of("+-", 1) != std::string::npos || coeff.find('/') != std::string::npos;
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

private:
    static void check_same(const ScalarSeries& a, const ScalarSeries& b) {
        if (a.nq_ != b.nq_) throw DimensionError("scalar series with different q counts");
        if (a.trunc_ != b.trunc_) throw DimensionError("scalar series with different truncation orders");
    }

    int trunc_;
    int nq_;
    std::map<QExp, K, QExpAsc> c_;
};

template <class K>
class QSeries {
public:
    QSeries() : trunc_(0), nq_(0) {}
    QSeries(VarTable::Ptr table, int nq, int trunc) : trunc_(trunc), nq_(nq), tab_(std::move(table)) {}

    static QSeries from_poly(MPoly<K> p, int nq, int trunc) {
        QSeries s(p.table(), nq, trunc);
        if (!p.is_zero()) s.c_.emplace(QExp(static_cast<std::size_t>(nq), 0), std::move(p));
        return s;
    }

    static QSeries one(VarTable::Ptr table, int nq, int trunc) {
        return from_poly(MPoly<K>::constant(std::move(table), FOps<K>::one()), nq, trunc);
    }

    // Split a polynomial over a q-extended table into a series whose
    // coefficients live on `base`. The extended table must list the base
    // variables first and the q variables last.
    static QSeries from_extended_poly(const MPoly<K>& p, const VarTable::Ptr& base, int trunc) {
        const VarTable::Ptr& ext = p.table();
        int nq = ext->q_count();
        int nb = ext->q_begin();
        if (base->size() != nb) throw TableMismatch("base table does not match the extended table prefix");
        QSeries s(base, nq, trunc);
        for (const auto& [m, c] : p.terms()) {
            QExp qe(static_cast<std::size_t>(nq), 0);
            Mono be(static_cast<std::size_t>(nb), 0);
            for (int i = 0; i < nb; ++i) be[static_cast<std::size_t>(i)] = m[static_cast<std::size_t>(i)];
            for (int i = 0; i < nq; ++i) qe[static_cast<std::size_t>(i)] = m[static_cast<std::size_t>(nb + i)];
            if (total_degree(qe) > trunc) continue;
            MPoly<K> mono(base);
            mono.add_term(std::move(be), c);
            s.add(std::move(qe), std::move(mono));
        }
        return s;
    }

    int trunc() const { return trunc_; }
    int nq() const { return nq_; }
    const VarTable::Ptr& table() const { return tab_; }
    const std::map<QExp, MPoly<K>, QExpAsc>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    void add(QExp e, MPoly<K> p) {
        if (p.is_zero()) return;
        if (total_degree(e) > trunc_) return;
        auto [it, fresh] = c_.try_emplace(std::move(e), std::move(p));
        if (!fresh) {
            it->second += p;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

    const MPoly<K>* coeff(const QExp& e) const {
        auto it = c_.find(e);
        return it == c_.end() ? nullptr : &it->second;
    }

    MPoly<K> classical_limit() const {
        auto it = c_.find(QExp(static_cast<std::size_t>(nq_), 0));
        return it == c_.end() ? MPoly<K>(tab_) : it->second;
    }

    friend bool operator==(const QSeries& a, const QSeries& b) {
        return a.nq_ == b.nq_ && a.trunc_ == b.trunc_ && VarTable::same(a.tab_, b.tab_) && a.c_ == b.c_;
    }
    friend bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }

    QSeries operator-() const {
        QSeries r(tab_, nq_, trunc_);
        for (const auto& [e, p] : c_) r.c_.emplace(e, -p);
        return r;
    }

    friend QSeries operator+(const QSeries& a, const QSeries& b) {
        check_same(a, b);
        QSeries r = a;
        for (const auto& [e, p] : b.c_) r.add(e, p);
        return r;
    }
    friend QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }
    QSeries& operator+=(const QSeries& o) { return *this = *this + o; }
    QSeries& operator-=(const QSeries& o) { return *this = *this - o; }

    friend QSeries operator*(const QSeries& a, const QSeries& b) {
        check_same(a, b);
        QSeries r(a.tab_ ? a.tab_ : b.tab_, a.nq_, a.trunc_);
        for (const auto& [ea, pa] : a.c_)
            for (const auto& [eb, pb] : b.c_) {
                QExp e = mono_mul(ea, eb);
                if (total_degree(e) > a.trunc_) continue;
                r.add(std::move(e), pa * pb);
            }
        return r;
    }
    QSeries& operator*=(const QSeries& o) { return *this = *this * o; }

    QSeries scaled_poly(const MPoly<K>& p) const {
        QSeries r(tab_, nq_, trunc_);
        for (const auto& [e, c] : c_) r.add(e, c * p);
        return r;
    }

    QSeries scaled_series(const ScalarSeries<K>& s) const {
        QSeries r(tab_, nq_, trunc_);
        for (const auto& [e, p] : c_)
            for (const auto& [se, sv] : s.coeffs()) {
                QExp ee = mono_mul(e, se);
                if (total_degree(ee) > trunc_) continue;
                r.add(std::move(ee), p.scaled(sv));
            }
        return r;
    }

    static QSeries from_scalar_series(const ScalarSeries<K>& s, const MPoly<K>& p) {
        QSeries r(p.table(), s.nq(), s.trunc());
        for (const auto& [e, v] : s.coeffs()) r.add(e, p.scaled(v));
        return r;
    }

    QSeries truncated(int d) const {
        QSeries r(tab_, nq_, d);
        for (const auto& [e, p] : c_) {
            if (total_degree(e) > d) break;
            r.c_.emplace(e, p);
        }
        return r;
    }

    // Multiplicative inverse; requires the q-degree-0 coefficient to be an
    // invertible scalar of the coefficient field.
    QSeries invert_unit() const {
        QExp zero(static_cast<std::size_t>(nq_), 0);
        auto it = c_.find(zero);
        if (it == c_.end() || !it->second.is_constant())
            throw NonUnitConstantTerm("constant term is not an invertible scalar");
        K a0 = it->second.constant_value();
        if (FOps<K>::is_zero(a0)) throw NonUnitConstantTerm("constant term is zero");
        K inv0 = FOps<K>::inv(a0);

        QSeries r(tab_, nq_, trunc_);
        r.add(zero, MPoly<K>::constant(tab_, inv0));
        // b_e = -a0^{-1} * sum_{0 < f <= e} a_f b_{e-f}, by increasing degree
        std::vector<QExp> exps = all_qexps(nq_, trunc_);
        for (const QExp& e : exps) {
            if (total_degree(e) == 0) continue;
            MPoly<K> acc(tab_);
            for (const auto& [f, af] : c_) {
                if (total_degree(f) == 0) continue;
                if (!mono_divides(f, e)) continue;
                const MPoly<K>* b = r.coeff(mono_quotient(e, f));
                if (b) acc += af * (*b);
            }
            if (!acc.is_zero()) r.add(e, acc.scaled(-inv0));
        }
        return r;
    }

    // All q-exponents of total degree <= trunc, ascending.
    static std::vector<QExp> all_qexps(int nq, int trunc) {
        std::vector<QExp> out;
        QExp cur(static_cast<std::size_t>(nq), 0);
        enumerate(cur, 0, trunc, out);
        std::sort(out.begin(), out.end(), QExpAsc{});
        return out;
    }

    std::string render(const std::string& qstem = "q") const {
        if (c_.empty()) return "0";
        std::string out;
        for (const auto& [e, p] : c_) {
            std::string mono = LaurentZ::render_mono(e, qstem);
            std::string coeff = p.size() == 1 ? p.render() : "(" + p.render() + ")";
            std::string term = mono.empty() ? p.render() : coeff + "*" + mono;
            if (out.empty()) {
                out = term;
            } else {
                out += (term[0] == '-' ? "" : "+") + term;
            }
        }
        return out;
    }

private:
    static void enumerate(QExp& cur, std::size_t pos, int left, std::vector<QExp>& out) {
        if (pos == cur.size()) {
            out.push_back(cur);
            return;
        }
        for (int d = 0; d <= left; ++d) {
            cur[pos] = d;
            enumerate(cur, pos + 1, left - d, out);
        }
        cur[pos] = 0;
    }

    static void check_same(const QSeries& a, const QSeries& b) {
        if (a.nq_ != b.nq_) throw DimensionError("series with different q counts");
        if (a.trunc_ != b.trunc_) throw DimensionError("series with different truncation orders");
        if (!VarTable::same(a.tab_, b.tab_)) throw TableMismatch("series coefficients on different tables");
    }

    int trunc_;
    int nq_;
    VarTable::Ptr tab_;
    std::map<QExp, MPoly<K>, QExpAsc> c_;
};

}  // namespace qkw
