// qkw/whitney.hpp -- classical, completed-quantum and polynomial-quantum
// Whitney relations of a flag shape.
//
// Generators are extracted mechanically from the y-expansion of
//   lam_y(X^(j)) lam_y(Y^(j)) - lam_y(X^(j+1))
//     + y^{delta_j} (q_j/(1-q_j)) e_{delta_j}(Y^(j)) (lam_y(X^(j)) - lam_y(X^(j-1)))
// with lam_y(Z) = sum_i y^i e_i(Z); the closed per-coefficient form is kept
// alongside as a cross-check. Conventions: e_0 = 1, out-of-range e = 0,
// X^(0) is the empty block and e_l(X^(k+1)) is the scalar e_l(T1..Tn).
#pragma once

#include <utility>
#include <vector>

#include "qkw/flag_shape.hpp"
#include "qkw/laurent.hpp"
#include "qkw/mpoly.hpp"
#include "qkw/qseries.hpp"

namespace qkw {

// e_l(T_1..T_n) in the coefficient field: honest symmetric polynomial in the
// equivariant case, binomial(n, l) when every T_i is set to 1.
template <class K>
K e_T_scalar(int n, int l);

template <>
inline Rat e_T_scalar<Rat>(int n, int l) {
    return Rat(binomial(n, l));
}

template <>
inline RatFun e_T_scalar<RatFun>(int n, int l) {
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
    return RatFun::from_laurent(elementary_symmetric_T(n, all, l));
}

namespace detail {

// e_l(X^(j)) with the block conventions above; `table` may be the plain or
// the q-extended presentation table.
template <class K>
MPoly<K> e_of_X(const VarTable::Ptr& table, const FlagShape& shape, int j, int l) {
    if (l == 0) return MPoly<K>::constant(table, FOps<K>::one());
    if (l < 0) return MPoly<K>(table);
    if (j <= 0) return MPoly<K>(table);  // empty block
    if (j == shape.k() + 1) {
        if (l > shape.n()) return MPoly<K>(table);
        return MPoly<K>::constant(table, e_T_scalar<K>(shape.n(), l));
    }
    if (l > shape.r_at(j)) return MPoly<K>(table);
    int idx = table->find("e" + std::to_string(l) + "(X" + std::to_string(j) + ")");
    return MPoly<K>::var(table, idx);
}

template <class K>
MPoly<K> e_of_Y(const VarTable::Ptr& table, const FlagShape& shape, int j, int l) {
    if (l == 0) return MPoly<K>::constant(table, FOps<K>::one());
    if (l < 0 || l > shape.delta(j)) return MPoly<K>(table);
    int idx = table->find("e" + std::to_string(l) + "(Y" + std::to_string(j) + ")");
    return MPoly<K>::var(table, idx);
}

// lam_y(X^(j)) as the vector of y-coefficients, length r_j + 1.
template <class K>
std::vector<MPoly<K>> lambda_X(const VarTable::Ptr& table, const FlagShape& shape, int j) {
    int rank = j <= 0 ? 0 : (j == shape.k() + 1 ? shape.n() : shape.r_at(j));
    std::vector<MPoly<K>> v;
    for (int i = 0; i <= rank; ++i) v.push_back(e_of_X<K>(table, shape, j, i));
    return v;
}

template <class K>
std::vector<MPoly<K>> lambda_Y(const VarTable::Ptr& table, const FlagShape& shape, int j) {
    std::vector<MPoly<K>> v;
    for (int i = 0; i <= shape.delta(j); ++i) v.push_back(e_of_Y<K>(table, shape, j, i));
    return v;
}

template <class K>
std::vector<MPoly<K>> poly_in_y_mul(const VarTable::Ptr& table, const std::vector<MPoly<K>>& a,
                                    const std::vector<MPoly<K>>& b) {
    std::vector<MPoly<K>> c(a.size() + b.size() - 1, MPoly<K>(table));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

}  // namespace detail

// Generator index (j, l), 1 <= j <= k, 1 <= l <= r_{j+1}, in emission order.
inline std::vector<std::pair<int, int>> whitney_index(const FlagShape& shape) {
    std::vector<std::pair<int, int>> idx;
    for (int j = 1; j <= shape.k(); ++j)
        for (int l = 1; l <= shape.r_at(j + 1); ++l) idx.emplace_back(j, l);
    return idx;
}

// g^cl_{j,l} = sum_{i+s=l} e_i(X^(j)) e_s(Y^(j)) - e_l(X^(j+1)).
template <class K>
std::vector<MPoly<K>> classical_generators(const FlagShape& shape, const VarTable::Ptr& table) {
    std::vector<MPoly<K>> gens;
    for (auto [j, l] : whitney_index(shape)) {
        MPoly<K> g(table);
        for (int i = 0; i <= l; ++i) {
            MPoly<K> a = detail::e_of_X<K>(table, shape, j, i);
            if (a.is_zero()) continue;
            MPoly<K> b = detail::e_of_Y<K>(table, shape, j, l - i);
            if (b.is_zero()) continue;
            g += a * b;
        }
        g -= detail::e_of_X<K>(table, shape, j + 1, l);
        gens.push_back(std::move(g));
    }
    return gens;
}

// Completed quantum generators: coefficients of y in the displayed relation,
// with q_j/(1-q_j) realized by the truncated geometric series.
template <class K>
std::vector<QSeries<K>> quantum_generators_completed(const FlagShape& shape, const VarTable::Ptr& table, int trunc) {
    if (trunc < 1) throw DomainError("q truncation order must be at least 1");
    int nq = shape.k();
    std::vector<QSeries<K>> gens;
    for (int j = 1; j <= shape.k(); ++j) {
        auto lamXj = detail::lambda_X<K>(table, shape, j);
        auto lamYj = detail::lambda_Y<K>(table, shape, j);
        auto lamXj1 = detail::lambda_X<K>(table, shape, j + 1);
        auto lamXjm = detail::lambda_X<K>(table, shape, j - 1);
        auto prod = detail::poly_in_y_mul(table, lamXj, lamYj);

        int dj = shape.delta(j);
        ScalarSeries<K> qfac = ScalarSeries<K>::q_over_one_minus_q(nq, trunc, j);
        MPoly<K> detY = detail::e_of_Y<K>(table, shape, j, dj);

        for (int l = 1; l <= shape.r_at(j + 1); ++l) {
            MPoly<K> classical = prod[static_cast<std::size_t>(l)] - lamXj1[static_cast<std::size_t>(l)];
            QSeries<K> g = QSeries<K>::from_poly(std::move(classical), nq, trunc);
            int i = l - dj;  // y^{delta_j} * y^i contributes at y^l
            if (i >= 0) {
                MPoly<K> diff = (i < static_cast<int>(lamXj.size()) ? lamXj[static_cast<std::size_t>(i)]
                                                                    : MPoly<K>(table)) -
                                (i < static_cast<int>(lamXjm.size()) ? lamXjm[static_cast<std::size_t>(i)]
                                                                     : MPoly<K>(table));
                if (!diff.is_zero() && !detY.is_zero())
                    g += QSeries<K>::from_scalar_series(qfac, detY * diff);
            }
            gens.push_back(std::move(g));
        }
    }
    return gens;
}

// Closed form of the same generators; retained as an independent route for
// the construction tests.
template <class K>
std::vector<QSeries<K>> quantum_generators_completed_closed(const FlagShape& shape, const VarTable::Ptr& table,
                                                            int trunc) {
    int nq = shape.k();
    auto classical = classical_generators<K>(shape, table);
    std::vector<QSeries<K>> gens;
    std::size_t pos = 0;
    for (auto [j, l] : whitney_index(shape)) {
        int dj = shape.delta(j);
        QSeries<K> g = QSeries<K>::from_poly(classical[pos], nq, trunc);
        MPoly<K> corr = detail::e_of_Y<K>(table, shape, j, dj) *
                        (detail::e_of_X<K>(table, shape, j, l - dj) - detail::e_of_X<K>(table, shape, j - 1, l - dj));
        if (!corr.is_zero())
            g += QSeries<K>::from_scalar_series(ScalarSeries<K>::q_over_one_minus_q(nq, trunc, j), corr);
        gens.push_back(std::move(g));
        ++pos;
    }
    return gens;
}

// Denominator-cleared polynomial generators over the q-extended table:
// g^poly_{j,l} = (1-q_j) g^cl_{j,l}
//                + q_j e_{delta_j}(Y^(j)) (e_{l-delta_j}(X^(j)) - e_{l-delta_j}(X^(j-1))).
template <class K>
std::vector<MPoly<K>> quantum_generators_polynomial(const FlagShape& shape, const VarTable::Ptr& table_q) {
    auto classical = classical_generators<K>(shape, table_q);
    std::vector<MPoly<K>> gens;
    std::size_t pos = 0;
    for (auto [j, l] : whitney_index(shape)) {
        int qidx = table_q->find("q" + std::to_string(j));
        MPoly<K> qj = MPoly<K>::var(table_q, qidx);
        MPoly<K> one = MPoly<K>::constant(table_q, FOps<K>::one());
        int dj = shape.delta(j);
        MPoly<K> corr = detail::e_of_Y<K>(table_q, shape, j, dj) *
                        (detail::e_of_X<K>(table_q, shape, j, l - dj) -
                         detail::e_of_X<K>(table_q, shape, j - 1, l - dj));
        gens.push_back((one - qj) * classical[pos] + qj * corr);
        ++pos;
    }
    return gens;
}

// The bundled relation data of a shape.
template <class K>
struct RelationSet {
    FlagShape shape;
    VarTable::Ptr table;    // presentation variables
    VarTable::Ptr table_q;  // presentation variables + q
    int trunc;
    std::vector<std::pair<int, int>> index;  // (j, l) per generator
    std::vector<MPoly<K>> classical;
    std::vector<QSeries<K>> completed;
    std::vector<MPoly<K>> polynomial;
};

template <class K>
RelationSet<K> build_relations(const FlagShape& shape, int trunc) {
    RelationSet<K> rs{shape,
                      VarTable::presentation(shape, false),
                      VarTable::presentation(shape, true),
                      trunc,
                      whitney_index(shape),
                      {},
                      {},
                      {}};
    rs.classical = classical_generators<K>(shape, rs.table);
    rs.completed = quantum_generators_completed<K>(shape, rs.table, trunc);
    rs.polynomial = quantum_generators_polynomial<K>(shape, rs.table_q);
    return rs;
}

}  // namespace qkw
