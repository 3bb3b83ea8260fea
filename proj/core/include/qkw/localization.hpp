// qkw/localization.hpp -- torus fixed-point restriction and everything built
// on it: localization matrices, Bruhat triangularity, Schubert classes in
// presentation coordinates, and the divisor-generation check.
//
// The restriction at the fixed point of a minimal representative w sends
// e_l(X^(j)) to e_l(T_{w(1)},...,T_{w(r_j)}) and e_l(Y^(j)) to
// e_l(T_{w(r_j+1)},...,T_{w(r_{j+1})}); quantum parameters are forbidden.
#pragma once

#include <vector>

#include "qkw/grothendieck.hpp"
#include "qkw/groebner.hpp"
#include "qkw/nakayama.hpp"
#include "qkw/permutation.hpp"
#include "qkw/whitney.hpp"

namespace qkw {

// Per-variable restriction values at the fixed point w.
inline std::vector<RatFun> restriction_values(const VarTable::Ptr& table, const Permutation& w,
                                              const FlagShape& shape) {
    int n = shape.n();
    std::vector<RatFun> values;
    values.reserve(static_cast<std::size_t>(table->size()));
    for (int v = 0; v < table->size(); ++v) {
        const VarInfo& info = table->var(v);
        switch (info.kind) {
            case VarKind::EX: {
                std::vector<int> subset;
                for (int i = 1; i <= shape.r_at(info.block); ++i) subset.push_back(w(i) - 1);
                values.push_back(RatFun::from_laurent(elementary_symmetric_T(n, subset, info.index)));
                break;
            }
            case VarKind::EY: {
                std::vector<int> subset;
                for (int i = shape.r_at(info.block) + 1; i <= shape.r_at(info.block + 1); ++i)
                    subset.push_back(w(i) - 1);
                values.push_back(RatFun::from_laurent(elementary_symmetric_T(n, subset, info.index)));
                break;
            }
            case VarKind::Q:
                values.push_back(RatFun());  // must never be consumed
                break;
            default:
                throw DomainError("restriction is defined on presentation tables only");
        }
    }
    return values;
}

inline RatFun fixed_point_restriction(const PolyF& expr, const Permutation& w, const FlagShape& shape) {
    const VarTable::Ptr& table = expr.table();
    for (int v = 0; v < table->size(); ++v)
        if (table->var(v).kind == VarKind::Q && expr.depends_on(v))
            throw QVariablePresent("fixed-point restriction of a q-dependent expression");
    return expr.evaluate(restriction_values(table, w, shape));
}

// Rows indexed by minimal representatives (in minimal_reps order), columns by
// the supplied classes.
inline Matrix<RatFun> localization_matrix(const FlagShape& shape, const std::vector<PolyF>& classes) {
    auto reps = minimal_reps(shape);
    Matrix<RatFun> m(reps.size(), std::vector<RatFun>(classes.size()));
    for (std::size_t r = 0; r < reps.size(); ++r) {
        auto values = restriction_values(classes.empty() ? nullptr : classes[0].table(), reps[r], shape);
        for (std::size_t c = 0; c < classes.size(); ++c) m[r][c] = classes[c].evaluate(values);
    }
    return m;
}

// Same, with double Grothendieck classes indexed by the representatives.
inline Matrix<RatFun> groth_localization_matrix(const FlagShape& shape, GrothendieckFamily& family,
                                                const std::vector<Permutation>& reps,
                                                GrothConvention conv = kGrothConvention) {
    Matrix<RatFun> m(reps.size(), std::vector<RatFun>(reps.size()));
    for (std::size_t c = 0; c < reps.size(); ++c) {
        const PolyF& g = family.poly(reps[c]);
        for (std::size_t r = 0; r < reps.size(); ++r) m[r][c] = family.point_value(g, reps[r], conv);
    }
    return m;
}

struct TriangularityReport {
    bool triangular = false;
    bool diagonal_nonzero = false;
    std::string witness;
    bool passed() const { return triangular && diagonal_nonzero; }
};

// Bruhat upper-triangularity of the Grothendieck localization matrix:
// a nonzero restriction G_v|_w demands v <= w, and G_w|_w must not vanish.
inline TriangularityReport triangularity_check(const FlagShape& shape, GrothConvention conv = kGrothConvention) {
    GrothendieckFamily family(shape.n());
    auto reps = minimal_reps(shape);
    Matrix<RatFun> m = groth_localization_matrix(shape, family, reps, conv);
    TriangularityReport rep;
    rep.triangular = true;
    rep.diagonal_nonzero = true;
    for (std::size_t r = 0; r < reps.size() && rep.passed(); ++r)
        for (std::size_t c = 0; c < reps.size(); ++c) {
            if (r == c) {
                if (m[r][c].is_zero()) {
                    rep.diagonal_nonzero = false;
                    rep.witness = "vanishing diagonal at w = " + reps[r].to_string();
                    break;
                }
            } else if (!m[r][c].is_zero() && !bruhat_leq(reps[c], reps[r])) {
                rep.triangular = false;
                rep.witness = "nonzero entry at (w, v) = (" + reps[r].to_string() + ", " + reps[c].to_string() +
                              ") with v not below w";
                break;
            }
        }
    return rep;
}

// Solve for the presentation-variable polynomial, supported on the standard
// monomial basis, whose fixed-point values match those of G_w.
inline PolyF schubert_in_presentation(const FlagShape& shape, const Permutation& w,
                                      const QuotientModel<RatFun>& model, GrothendieckFamily& family,
                                      GrothConvention conv = kGrothConvention) {
    auto reps = minimal_reps(shape);
    if (reps.size() != model.rank) throw SingularSystem("fixed points and basis have different sizes");
    Matrix<RatFun> a(reps.size(), std::vector<RatFun>(model.rank));
    std::vector<RatFun> rhs(reps.size());
    const PolyF& g = family.poly(w);
    for (std::size_t r = 0; r < reps.size(); ++r) {
        auto values = restriction_values(model.table, reps[r], shape);
        for (std::size_t b = 0; b < model.rank; ++b) {
            RatFun acc = RatFun::from_int(1);
            const Mono& mono = model.basis[b];
            for (std::size_t v = 0; v < mono.size(); ++v)
                for (int32_t e = 0; e < mono[v]; ++e) acc *= values[v];
            a[r][b] = std::move(acc);
        }
        rhs[r] = family.point_value(g, reps[r], conv);
    }
    std::vector<RatFun> coords = solve_unique(std::move(a), std::move(rhs));
    PolyF out(model.table);
    for (std::size_t b = 0; b < model.rank; ++b) out.add_term(model.basis[b], coords[b]);
    return out;
}

// Schubert divisor classes in presentation variables,
// O^{s_{r_j}} = 1 - e_{r_j}(X^(j)) / (T_1 ... T_{r_j}); the equivariant
// scalar degenerates to 1 in the nonequivariant limit.
template <class K>
K leading_T_product(int n, int r);

template <>
inline Rat leading_T_product<Rat>(int, int) {
    return Rat(1);
}

template <>
inline RatFun leading_T_product<RatFun>(int n, int r) {
    ZPoly m = ZPoly::constant(n, Int(1));
    for (int i = 0; i < r; ++i) m *= ZPoly::variable(n, i);
    return RatFun::from_zpoly(std::move(m));
}

template <class K>
std::vector<MPoly<K>> divisor_classes(const FlagShape& shape, const VarTable::Ptr& table) {
    std::vector<MPoly<K>> out;
    for (int j = 1; j <= shape.k(); ++j) {
        int rj = shape.r_at(j);
        int idx = table->find("e" + std::to_string(rj) + "(X" + std::to_string(j) + ")");
        MPoly<K> det = MPoly<K>::var(table, idx);
        K inv = FOps<K>::inv(leading_T_product<K>(shape.n(), rj));
        out.push_back(MPoly<K>::constant(table, FOps<K>::one()) - det.scaled(inv));
    }
    return out;
}

struct DivisorSpanReport {
    std::size_t dimension = 0;
    std::size_t rank = 0;
    int cap = 0;
    bool generates() const { return dimension == rank; }
};

// Dimension of the span of all monomials of degree <= cap in the Schubert
// divisor classes, inside the classical quotient.
template <class K>
DivisorSpanReport divisor_generation_check(const FlagShape& shape, const QuotientModel<K>& model, int cap) {
    auto divisors = divisor_classes<K>(shape, model.table);
    // enumerate divisor monomials by total degree, reducing as we go
    std::vector<MPoly<K>> reduced{normal_form(MPoly<K>::constant(model.table, FOps<K>::one()), model.gb)};
    std::vector<Mono> exps{Mono(divisors.size(), 0)};
    for (std::size_t head = 0; head < exps.size(); ++head) {
        if (total_degree(exps[head]) >= cap) continue;
        for (std::size_t d = 0; d < divisors.size(); ++d) {
            // extend by divisor d, avoiding duplicates: only append in
            // non-decreasing divisor order
            bool ordered = true;
            for (std::size_t d2 = d + 1; d2 < divisors.size(); ++d2)
                if (exps[head][d2] != 0) ordered = false;
            if (!ordered) continue;
            Mono e = exps[head];
            e[d] += 1;
            exps.push_back(e);
            reduced.push_back(normal_form(reduced[head] * divisors[d], model.gb));
        }
    }
    Matrix<K> rows;
    for (const auto& p : reduced) {
        std::vector<K> row(model.rank, FOps<K>::zero());
        for (const auto& [m, c] : p.terms()) {
            int bi = model.basis_index(m);
            if (bi < 0) throw CertificateFailure("normal form outside the standard basis");
            row[static_cast<std::size_t>(bi)] = c;
        }
        rows.push_back(std::move(row));
    }
    DivisorSpanReport rep;
    rep.rank = model.rank;
    rep.cap = cap;
    rep.dimension = matrix_rank(std::move(rows));
    return rep;
}

}  // namespace qkw
