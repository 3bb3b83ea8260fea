// qkw/nakayama.hpp -- the constructive Nakayama engine.
//
// A QuotientModel fixes the classical picture: reduced Groebner basis with
// cofactor representations and the standard monomial basis B. Quantum
// generators whose q->0 limits are the classical generators produce lifted
// basis elements G~ = sum_a cofactor[a] * qgen[a] = G + higher q-order, and
// reduction in the completed quotient proceeds q-degree by q-degree: the
// offending head at the lowest degree is cancelled by a multiple of some G~,
// which only injects lower terms at that degree and terms at strictly higher
// q-degree. The B-coordinates of the fully reduced series are the unique
// coordinates of the class, so the memoized per-monomial evaluation
// (LiftContext::reduce) and the literal working-series algorithm
// (reduce_traced) must agree; tests exercise exactly that.
#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "qkw/groebner.hpp"
#include "qkw/qseries.hpp"

namespace qkw {

template <class K>
struct QuotientModel {
    VarTable::Ptr table;
    std::vector<MPoly<K>> generators;
    ReducedGB<K> gb;
    std::vector<Mono> basis;  // standard monomials, grevlex ascending
    std::size_t rank = 0;

    int basis_index(const Mono& m) const {
        auto it = basis_pos_.find(m);
        return it == basis_pos_.end() ? -1 : it->second;
    }

    void index_basis() {
        basis_pos_.clear();
        for (std::size_t i = 0; i < basis.size(); ++i) basis_pos_.emplace(basis[i], static_cast<int>(i));
    }

private:
    std::unordered_map<Mono, int, MonoHash> basis_pos_;
};

template <class K>
QuotientModel<K> classical_model(const std::vector<MPoly<K>>& gens, std::size_t cap = 100000,
                                 const GBOptions& opts = {}) {
    QuotientModel<K> model;
    model.table = gens.at(0).table();
    model.generators = gens;
    model.gb = buchberger(gens, opts);
    model.basis = standard_monomials(model.gb, cap);
    model.rank = model.basis.size();
    model.index_basis();
    return model;
}

// Coordinates of an element of the completed quotient in the classical
// standard-monomial basis, one scalar q-series per basis monomial. The
// multiplier trace, when recorded, witnesses
//   elem = sum_m multipliers[m] * lifted_gb[m] + sum_b coords[b] * b
// up to the truncation order.
template <class K>
struct LiftedNormalForm {
    std::vector<ScalarSeries<K>> coords;
    std::vector<QSeries<K>> multipliers;  // empty unless traced

    bool is_zero() const {
        for (const auto& s : coords)
            if (!s.is_zero()) return false;
        return true;
    }

    // True iff the element is exactly the basis monomial `idx`.
    bool is_delta(std::size_t idx, int nq) const {
        for (std::size_t i = 0; i < coords.size(); ++i) {
            ScalarSeries<K> want(nq, coords[i].trunc());
            if (i == idx) want = ScalarSeries<K>::constant(nq, coords[i].trunc(), FOps<K>::one());
            if (coords[i] != want) return false;
        }
        return true;
    }
};

template <class K>
class LiftContext {
public:
    LiftContext(const QuotientModel<K>& model, const std::vector<QSeries<K>>& qgens, int trunc)
        : model_(model), trunc_(trunc) {
        if (qgens.size() != model.generators.size())
            throw MismatchedClassicalLimit("expected " + std::to_string(model.generators.size()) +
                                           " quantum generators, got " + std::to_string(qgens.size()));
        nq_ = qgens.empty() ? 0 : qgens[0].nq();
        for (std::size_t a = 0; a < qgens.size(); ++a) {
            if (qgens[a].trunc() < trunc_)
                throw DimensionError("quantum generator truncated below the requested order");
            if (qgens[a].classical_limit() != model.generators[a])
                throw MismatchedClassicalLimit("generator " + std::to_string(a + 1) +
                                               " does not restrict to its classical counterpart at q=0");
        }
        // lifted reduced-basis elements G~ = sum_a cofactor[a] * qgen[a]
        for (std::size_t m = 0; m < model.gb.size(); ++m) {
            QSeries<K> lift(model.table, nq_, trunc_);
            for (std::size_t a = 0; a < qgens.size(); ++a) {
                const MPoly<K>& c = model.gb.cofactors[m][a];
                if (c.is_zero()) continue;
                lift += qgens[a].truncated(trunc_).scaled_poly(c);
            }
            lifts_.push_back(std::move(lift));
        }
    }

    const QuotientModel<K>& model() const { return model_; }
    int trunc() const { return trunc_; }
    int nq() const { return nq_; }
    const std::vector<QSeries<K>>& lifted_gb() const { return lifts_; }

    // Fast reduction through memoized per-monomial coordinates.
    LiftedNormalForm<K> reduce(const QSeries<K>& elem) const {
        LiftedNormalForm<K> out;
        out.coords.assign(model_.rank, ScalarSeries<K>(nq_, trunc_));
        const std::vector<QExp> targets = QSeries<K>::all_qexps(nq_, trunc_);
        for (const auto& [qe, poly] : elem.coeffs()) {
            if (total_degree(qe) > trunc_) continue;
            for (const auto& [mono, c] : poly.terms()) {
                for (const QExp& target : targets) {
                    if (!mono_divides(qe, target)) continue;
                    const CoordVec& cv = coords_at(mono, mono_quotient(target, qe));
                    for (const auto& [bi, v] : cv) out.coords[static_cast<std::size_t>(bi)].add(target, c * v);
                }
            }
        }
        return out;
    }

    // The working-series algorithm as specified: lowest q-degree first, the
    // grevlex-largest offending term cancelled first, ties broken by the
    // first dividing basis element. Returns the multiplier trace.
    LiftedNormalForm<K> reduce_traced(const QSeries<K>& elem, long long step_budget = 10'000'000) const {
        QSeries<K> w = elem.truncated(trunc_);
        std::vector<QSeries<K>> mult(lifts_.size(), QSeries<K>(model_.table, nq_, trunc_));
        long long steps = 0;
        for (const QExp& qe : QSeries<K>::all_qexps(nq_, trunc_)) {
            while (true) {
                const MPoly<K>* p = w.coeff(qe);
                if (!p) break;
                // grevlex-largest term divisible by some head
                const Mono* offender = nullptr;
                const K* coeff = nullptr;
                std::size_t which = 0;
                for (const auto& [mono, c] : p->terms()) {
                    bool found = false;
                    for (std::size_t m = 0; m < model_.gb.size(); ++m) {
                        if (mono_divides(model_.gb.polys[m].leading_mono(), mono)) {
                            which = m;
                            found = true;
                            break;
                        }
                    }
                    if (found) {
                        offender = &mono;
                        coeff = &c;
                        break;
                    }
                }
                if (!offender) break;
                detail::charge(steps, step_budget);
                Mono u = mono_quotient(*offender, model_.gb.polys[which].leading_mono());
                K c = *coeff;  // heads are monic
                MPoly<K> mono_poly(model_.table);
                mono_poly.add_term(u, c);
                mult[which].add(qe, mono_poly);
                // w -= q^qe * (c u) * lift[which]
                for (const auto& [e, h] : lifts_[which].coeffs()) {
                    QExp te = mono_mul(qe, e);
                    if (total_degree(te) > trunc_) continue;
                    w.add(std::move(te), -h.mul_term(u, c));
                }
            }
        }
        LiftedNormalForm<K> out;
        out.coords.assign(model_.rank, ScalarSeries<K>(nq_, trunc_));
        for (const auto& [qe, poly] : w.coeffs())
            for (const auto& [mono, c] : poly.terms()) {
                int bi = model_.basis_index(mono);
                if (bi < 0) throw CertificateFailure("reduced series left the standard monomial span");
                out.coords[static_cast<std::size_t>(bi)].add(qe, c);
            }
        out.multipliers = std::move(mult);
        return out;
    }

    // Fully reduced representative; with no generators this is the identity,
    // matching the zero-ideal boundary convention.
    QSeries<K> reduce_series(const QSeries<K>& elem) const {
        if (lifts_.empty()) return elem.truncated(trunc_);
        LiftedNormalForm<K> nf = reduce(elem);
        QSeries<K> out(model_.table, nq_, trunc_);
        for (std::size_t b = 0; b < model_.rank; ++b)
            for (const auto& [qe, v] : nf.coords[b].coeffs()) {
                MPoly<K> p(model_.table);
                p.add_term(model_.basis[b], v);
                out.add(qe, std::move(p));
            }
        return out;
    }

    bool member(const QSeries<K>& elem) const { return reduce(elem).is_zero(); }

private:
    using CoordVec = std::map<int, K>;

    struct Entry {
        bool standard = false;
        int self_basis = -1;
        std::size_t gb = 0;  // reducer when not standard
        Mono cofactor;       // mono / LT(gb)
        std::map<QExp, CoordVec, QExpAsc> done;
    };

    Entry& entry_for(const Mono& mono) const {
        auto it = memo_.find(mono);
        if (it != memo_.end()) return it->second;
        Entry e;
        int bi = model_.basis_index(mono);
        if (bi >= 0) {
            e.standard = true;
            e.self_basis = bi;
        } else {
            bool found = false;
            for (std::size_t m = 0; m < model_.gb.size(); ++m) {
                if (mono_divides(model_.gb.polys[m].leading_mono(), mono)) {
                    e.gb = m;
                    e.cofactor = mono_quotient(mono, model_.gb.polys[m].leading_mono());
                    found = true;
                    break;
                }
            }
            if (!found) {
                // irreducible but outside the stored basis: the basis was
                // computed from the very same leading terms, so this cannot
                // happen for a consistent model
                throw CertificateFailure("irreducible monomial missing from the standard basis");
            }
        }
        return memo_.emplace(mono, std::move(e)).first->second;
    }

    // Coordinates of the q^target-slice of the lift of `mono`. Well-founded
    // on (|target|, grevlex(mono)): same-degree recursion descends in
    // grevlex, cross-degree recursion strictly lowers |target|. References
    // into memo_ stay valid across insertions (node-based containers).
    const CoordVec& coords_at(const Mono& mono, const QExp& target) const {
        Entry& e = entry_for(mono);
        auto hit = e.done.find(target);
        if (hit != e.done.end()) return hit->second;
        CoordVec acc;
        if (e.standard) {
            if (total_degree(target) == 0) acc.emplace(e.self_basis, FOps<K>::one());
        } else {
            const MPoly<K>& g = model_.gb.polys[e.gb];
            const QSeries<K>& lift = lifts_[e.gb];
            for (const auto& [qe, h] : lift.coeffs()) {
                if (!mono_divides(qe, target)) continue;
                QExp rest = mono_quotient(target, qe);
                bool base_layer = total_degree(qe) == 0;
                for (const auto& [tm, tc] : h.terms()) {
                    if (base_layer && tm == g.leading_mono()) continue;  // the cancelled head
                    const CoordVec& sub = coords_at(mono_mul(e.cofactor, tm), rest);
                    if (sub.empty()) continue;
                    for (const auto& [bi, v] : sub) {
                        K add = -(tc * v);
                        auto [it2, fresh] = acc.try_emplace(bi, add);
                        if (!fresh) {
                            it2->second += add;
                            if (FOps<K>::is_zero(it2->second)) acc.erase(it2);
                        }
                    }
                }
            }
        }
        return e.done.emplace(target, std::move(acc)).first->second;
    }

    const QuotientModel<K>& model_;
    int trunc_;
    int nq_;
    std::vector<QSeries<K>> lifts_;
    mutable std::unordered_map<Mono, Entry, MonoHash> memo_;
};

// One-shot variants of the module operations.

template <class K>
LiftedNormalForm<K> lift_reduce(const QSeries<K>& elem, const QuotientModel<K>& model,
                                const std::vector<QSeries<K>>& qgens, int trunc) {
    return LiftContext<K>(model, qgens, trunc).reduce(elem);
}

template <class K>
bool membership_completed(const QSeries<K>& elem, const QuotientModel<K>& model,
                          const std::vector<QSeries<K>>& qgens, int trunc) {
    return LiftContext<K>(model, qgens, trunc).member(elem);
}

// Series-level reduction with the zero-ideal boundary convention: with no
// generators, reduction is the identity.
template <class K>
QSeries<K> lift_reduce_series(const QSeries<K>& elem, const std::vector<QSeries<K>>& qgens,
                              const QuotientModel<K>* model, int trunc) {
    if (qgens.empty()) return elem.truncated(trunc);
    if (!model) throw DomainError("lift_reduce_series: a classical model is required with generators");
    return LiftContext<K>(*model, qgens, trunc).reduce_series(elem);
}

// Exact membership in the polynomial ideal over the q-extended table.
template <class K>
class PolyIdeal {
public:
    explicit PolyIdeal(const std::vector<MPoly<K>>& gens, const GBOptions& opts = {})
        : gb_(buchberger(gens, opts)) {}

    bool member(const MPoly<K>& elem) const { return normal_form(elem, gb_).is_zero(); }
    const ReducedGB<K>& gb() const { return gb_; }

private:
    ReducedGB<K> gb_;
};

template <class K>
bool membership_polynomial(const MPoly<K>& elem, const std::vector<MPoly<K>>& polygens,
                           const GBOptions& opts = {}) {
    return PolyIdeal<K>(polygens, opts).member(elem);
}

// Structure constants of a supplied class basis: for every pair (i, j) the
// coordinates of class_i * class_j in the class basis, as scalar q-series.
template <class K>
struct StructureTable {
    std::size_t size = 0;
    int trunc = 0;
    // entry(i, j)[c] = coefficient of class_c in class_i * class_j
    std::vector<std::vector<std::vector<ScalarSeries<K>>>> entries;
};

template <class K>
StructureTable<K> structure_constants(const LiftContext<K>& ctx, const std::vector<QSeries<K>>& classes) {
    const QuotientModel<K>& model = ctx.model();
    std::size_t p = model.rank;
    if (classes.size() != p)
        throw NotABasis("need exactly " + std::to_string(p) + " classes, got " + std::to_string(classes.size()));

    // change of basis, order by order in q: columns are class coordinates
    std::vector<LiftedNormalForm<K>> red;
    for (const auto& cls : classes) red.push_back(ctx.reduce(cls));
    Matrix<K> c0(p, std::vector<K>(p, FOps<K>::zero()));
    for (std::size_t j = 0; j < p; ++j)
        for (std::size_t b = 0; b < p; ++b)
            c0[b][j] = red[j].coords[b].at(QExp(static_cast<std::size_t>(ctx.nq()), 0));

    auto solve_in_class_basis = [&](const std::vector<ScalarSeries<K>>& v) {
        // C(q) x(q) = v(q) with C = C0 + higher order: peel q-layers
        std::vector<ScalarSeries<K>> x(p, ScalarSeries<K>(ctx.nq(), ctx.trunc()));
        for (const QExp& d : QSeries<K>::all_qexps(ctx.nq(), ctx.trunc())) {
            std::vector<K> rhs(p, FOps<K>::zero());
            for (std::size_t b = 0; b < p; ++b) rhs[b] = v[b].at(d);
            for (std::size_t j = 0; j < p; ++j)
                for (const auto& [xe, xv] : x[j].coeffs()) {
                    if (!mono_divides(xe, d)) continue;
                    QExp ce = mono_quotient(d, xe);
                    if (total_degree(ce) == 0) continue;  // handled by C0 below
                    for (std::size_t b = 0; b < p; ++b) {
                        K c = red[j].coords[b].at(ce);
                        if (!FOps<K>::is_zero(c)) rhs[b] -= c * xv;
                    }
                }
            std::vector<K> xd;
            try {
                xd = solve_unique(c0, rhs);
            } catch (const SingularSystem&) {
                throw NotABasis("class list does not span the quotient at q=0");
            }
            for (std::size_t j = 0; j < p; ++j) x[j].add(d, xd[j]);
        }
        return x;
    };

    StructureTable<K> table;
    table.size = p;
    table.trunc = ctx.trunc();
    table.entries.assign(p, std::vector<std::vector<ScalarSeries<K>>>(p));
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = i; j < p; ++j) {
            LiftedNormalForm<K> prod = ctx.reduce(classes[i] * classes[j]);
            auto coords = solve_in_class_basis(prod.coords);
            table.entries[i][j] = coords;
            if (j != i) table.entries[j][i] = std::move(coords);
        }
    return table;
}

// The desk-scale verification of the lifting theorem: basis monomials lift to
// themselves and products restrict at q=0 to the classical structure
// constants.
template <class K>
struct FreenessReport {
    bool passed = false;
    std::size_t rank = 0;
    int trunc = 0;
    std::size_t products_checked = 0;
    std::string witness;  // first failure, empty on success
};

template <class K>
FreenessReport<K> freeness_certificate(const LiftContext<K>& ctx) {
    const QuotientModel<K>& model = ctx.model();
    FreenessReport<K> rep;
    rep.rank = model.rank;
    rep.trunc = ctx.trunc();
    int nq = ctx.nq();

    for (std::size_t b = 0; b < model.rank; ++b) {
        QSeries<K> elem = QSeries<K>::from_poly(
            [&] {
                MPoly<K> p(model.table);
                p.add_term(model.basis[b], FOps<K>::one());
                return p;
            }(),
            nq, ctx.trunc());
        LiftedNormalForm<K> nf = ctx.reduce(elem);
        if (!nf.is_delta(b, nq)) {
            rep.witness = "basis monomial #" + std::to_string(b) + " is not its own lifted normal form";
            return rep;
        }
    }

    for (std::size_t i = 0; i < model.rank; ++i)
        for (std::size_t j = i; j < model.rank; ++j) {
            MPoly<K> prod(model.table);
            prod.add_term(mono_mul(model.basis[i], model.basis[j]), FOps<K>::one());
            LiftedNormalForm<K> nf = ctx.reduce(QSeries<K>::from_poly(prod, nq, ctx.trunc()));
            MPoly<K> cl = normal_form(prod, model.gb);
            // q^0 coordinates against the classical structure constants
            QExp zero(static_cast<std::size_t>(nq), 0);
            for (std::size_t b = 0; b < model.rank; ++b) {
                K got = nf.coords[b].at(zero);
                K want = FOps<K>::zero();
                for (const auto& [m, c] : cl.terms())
                    if (m == model.basis[b]) want = c;
                if (!(got == want)) {
                    rep.witness = "product b" + std::to_string(i) + "*b" + std::to_string(j) +
                                  ": q^0 coordinate " + std::to_string(b) +
                                  " disagrees with the classical structure constant";
                    return rep;
                }
            }
            ++rep.products_checked;
        }

    rep.passed = true;
    return rep;
}

}  // namespace qkw
