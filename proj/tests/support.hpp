// Shared generators for randomized tests. Everything is seeded; reruns are
// byte-identical.
#pragma once

#include <random>

#include "qkw/laurent.hpp"
#include "qkw/mpoly.hpp"
#include "qkw/qseries.hpp"
#include "qkw/ratfun.hpp"

namespace qkw::testsupport {

inline std::mt19937_64 make_rng(uint64_t salt = 0) { return std::mt19937_64(0x5eed0000u + salt); }

inline LaurentZ random_laurent(std::mt19937_64& rng, int nvars, int max_terms = 4, int max_exp = 3,
                               int max_coeff = 9) {
    std::uniform_int_distribution<int> terms(0, max_terms);
    std::uniform_int_distribution<int> exp(-max_exp, max_exp);
    std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
    LaurentZ p(nvars);
    int t = terms(rng);
    for (int i = 0; i < t; ++i) {
        Mono m(static_cast<std::size_t>(nvars));
        for (int v = 0; v < nvars; ++v) m[static_cast<std::size_t>(v)] = exp(rng);
        p.add_term(std::move(m), Int(coeff(rng)));
    }
    return p;
}

inline ZPoly random_zpoly(std::mt19937_64& rng, int nvars, int max_terms = 4, int max_exp = 3, int max_coeff = 9) {
    std::uniform_int_distribution<int> terms(0, max_terms);
    std::uniform_int_distribution<int> exp(0, max_exp);
    std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
    ZPoly p(nvars);
    int t = terms(rng);
    for (int i = 0; i < t; ++i) {
        Mono m(static_cast<std::size_t>(nvars));
        for (int v = 0; v < nvars; ++v) m[static_cast<std::size_t>(v)] = exp(rng);
        p.add_term(std::move(m), Int(coeff(rng)));
    }
    return p;
}

inline RatFun random_ratfun(std::mt19937_64& rng, int nvars) {
    ZPoly num = random_zpoly(rng, nvars, 3, 2, 5);
    ZPoly den(nvars);
    while (den.is_zero()) den = random_zpoly(rng, nvars, 2, 2, 3);
    return RatFun::fraction(std::move(num), std::move(den));
}

template <class K>
MPoly<K> random_poly(std::mt19937_64& rng, const VarTable::Ptr& table, int max_terms = 4, int max_exp = 2,
                     int max_coeff = 5) {
    std::uniform_int_distribution<int> terms(0, max_terms);
    std::uniform_int_distribution<int> exp(0, max_exp);
    std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
    MPoly<K> p(table);
    int t = terms(rng);
    for (int i = 0; i < t; ++i) {
        Mono m(static_cast<std::size_t>(table->size()));
        for (int v = 0; v < table->size(); ++v) m[static_cast<std::size_t>(v)] = exp(rng);
        p.add_term(std::move(m), FOps<K>::from_int(coeff(rng)));
    }
    return p;
}

template <class K>
QSeries<K> random_series(std::mt19937_64& rng, const VarTable::Ptr& table, int nq, int trunc) {
    QSeries<K> s(table, nq, trunc);
    for (const QExp& e : QSeries<K>::all_qexps(nq, trunc)) {
        std::uniform_int_distribution<int> pick(0, 2);
        if (pick(rng) == 0) s.add(e, random_poly<K>(rng, table, 2, 2, 4));
    }
    return s;
}

}  // namespace qkw::testsupport
