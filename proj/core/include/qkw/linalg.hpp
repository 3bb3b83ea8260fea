// qkw/linalg.hpp -- exact dense linear algebra over a coefficient field.
#pragma once

#include <optional>
#include <vector>

#include "qkw/errors.hpp"
#include "qkw/mpoly.hpp"

namespace qkw {

template <class K>
using Matrix = std::vector<std::vector<K>>;

// Fraction-free (Bareiss) forward elimination; returns the rank. The matrix
// is modified in place into an upper echelon form.
template <class K>
std::size_t bareiss_echelon(Matrix<K>& m) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    K prev = FOps<K>::one();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && FOps<K>::is_zero(m[pivot][col])) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank) std::swap(m[pivot], m[rank]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                m[i][j] = (m[rank][col] * m[i][j] - m[i][col] * m[rank][j]) / prev;
            m[i][col] = FOps<K>::zero();
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

template <class K>
std::size_t matrix_rank(Matrix<K> m) {
    return bareiss_echelon(m);
}

// Solve A x = b for square A; throws SingularSystem when A is singular.
template <class K>
std::vector<K> solve_unique(Matrix<K> a, std::vector<K> b) {
    std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
    bareiss_echelon(a);
    // a nonsingular square system pivots exactly on the diagonal
    for (std::size_t i = 0; i < n; ++i)
        if (FOps<K>::is_zero(a[i][i])) throw SingularSystem("coefficient matrix is singular");
    std::vector<K> x(n, FOps<K>::zero());
    for (std::size_t ii = n; ii-- > 0;) {
        K acc = a[ii][n];
        for (std::size_t j = ii + 1; j < n; ++j) acc -= a[ii][j] * x[j];
        x[ii] = acc / a[ii][ii];
    }
    return x;
}

// Least monic annihilator of a square matrix, as coefficients c[0..d] with
// c[d] = 1: c[0] I + c[1] M + ... + c[d] M^d = 0.
template <class K>
std::vector<K> min_poly(const Matrix<K>& m) {
    std::size_t p = m.size();
    if (p == 0) return {FOps<K>::one()};
    auto mat_mul = [&](const Matrix<K>& a, const Matrix<K>& b) {
        Matrix<K> c(p, std::vector<K>(p, FOps<K>::zero()));
        for (std::size_t i = 0; i < p; ++i)
            for (std::size_t k = 0; k < p; ++k) {
                if (FOps<K>::is_zero(a[i][k])) continue;
                for (std::size_t j = 0; j < p; ++j) {
                    if (FOps<K>::is_zero(b[k][j])) continue;
                    c[i][j] += a[i][k] * b[k][j];
                }
            }
        return c;
    };

    Matrix<K> power(p, std::vector<K>(p, FOps<K>::zero()));
    for (std::size_t i = 0; i < p; ++i) power[i][i] = FOps<K>::one();

    // echelon rows of vec(M^j) with the expressing combinations alongside
    std::vector<std::vector<K>> rows, combos;
    std::vector<std::size_t> leaders;
    for (std::size_t d = 0;; ++d) {
        std::vector<K> w(p * p, FOps<K>::zero());
        for (std::size_t i = 0; i < p; ++i)
            for (std::size_t j = 0; j < p; ++j) w[i * p + j] = power[i][j];
        std::vector<K> combo(d + 1, FOps<K>::zero());
        combo[d] = FOps<K>::one();

        for (std::size_t r = 0; r < rows.size(); ++r) {
            const K& f = w[leaders[r]];
            if (FOps<K>::is_zero(f)) continue;
            K factor = f;  // rows are normalized to leader 1
            for (std::size_t j = 0; j < w.size(); ++j) w[j] -= factor * rows[r][j];
            for (std::size_t j = 0; j < combos[r].size(); ++j) combo[j] -= factor * combos[r][j];
        }
        std::size_t lead = w.size();
        for (std::size_t j = 0; j < w.size(); ++j)
            if (!FOps<K>::is_zero(w[j])) {
                lead = j;
                break;
            }
        if (lead == w.size()) return combo;  // monic by construction
        K inv = FOps<K>::inv(w[lead]);
        for (auto& v : w) v = v * inv;
        for (auto& v : combo) v = v * inv;
        rows.push_back(std::move(w));
        combos.push_back(std::move(combo));
        leaders.push_back(lead);
        power = mat_mul(power, m);
    }
}

// Render a univariate monic polynomial over K in the indeterminate `t`.
template <class K>
std::string render_univariate(const std::vector<K>& coeffs, const std::string& var = "t") {
    std::string out;
    for (std::size_t d = coeffs.size(); d-- > 0;) {
        if (FOps<K>::is_zero(coeffs[d])) continue;
        std::string c = FOps<K>::render(coeffs[d]);
        std::string mono = d == 0 ? "" : (d == 1 ? var : var + "^" + std::to_string(d));
        std::string term;
        if (mono.empty())
            term = c;
        else if (c == "1")
            term = mono;
        else if (c == "-1")
            term = "-" + mono;
        else
            term = (c.find_first_of("+-", 1) != std::string::npos ? "(" + c + ")" : c) + "*" + mono;
        if (out.empty()) {
            out = term;
        } else {
            out += (term[0] == '-' ? "" : "+") + term;
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace qkw
