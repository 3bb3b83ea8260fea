#include <random>

#include "commands.hpp"
#include "qkw/expr.hpp"
#include "qkw/localization.hpp"
#include "qkw/nakayama.hpp"
#include "qkw/whitney.hpp"

namespace qkw::cli {

namespace {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

PolyF parse_on(const FlagShape& shape, const VarTable::Ptr& table, const std::string& text) {
    ExprContext ctx{&shape, true};
    return eval_expr<RatFun>(parse_expr(text, ctx), shape, table);
}

// --- Fl(3) polynomial relations -----------------------------------------

Check check_fl3_polynomial() {
    Check c{"fl3-polynomial-relations"};
    FlagShape fl3 = FlagShape::make({1, 2}, 3);
    auto tq = VarTable::presentation(fl3, true);
    auto gens = quantum_generators_polynomial<RatFun>(fl3, tq);

    // the printed list; the first relation appears without its unit factor
    // (1-q1), which uniform denominator clearing keeps
    std::vector<std::string> printed = {
        "X1_1+Y1_1-e1(X2)",
        "X1_1*Y1_1-(1-q1)*e2(X2)",
        "(1-q2)*(e1(X2)+Y2_1-e1(T))",
        "(e1(X2)-q2*X1_1)*Y2_1-(1-q2)*(e2(T)-e2(X2))",
        "e2(X2)*Y2_1-(1-q2)*e3(T)",
    };
    PolyF unit1 = parse_on(fl3, tq, "1-q1");
    for (std::size_t i = 0; i < printed.size(); ++i) {
        PolyF expect = parse_on(fl3, tq, printed[i]);
        if (i == 0) expect = unit1 * expect;
        if (gens[i] != expect) {
            c.detail = "generator " + std::to_string(i + 1) + " = " + gens[i].render() + ", expected " +
                       expect.render();
            return c;
        }
    }
    c.pass = true;
    c.detail = "five generators match; the first carries the redundant unit factor (1-q1) that uniform "
               "clearing introduces";
    return c;
}

// --- Fl(3) kernel element dichotomy --------------------------------------

Check check_fl3_kernel(int qorder, long long budget) {
    Check c{"fl3-kernel-dichotomy"};
    FlagShape fl3 = FlagShape::make({1, 2}, 3);
    auto table = VarTable::presentation(fl3, false);
    auto tq = VarTable::presentation(fl3, true);
    GBOptions opts;
    opts.step_budget = budget;

    auto model = classical_model(classical_generators<RatFun>(fl3, table), 100000, opts);
    auto qgens = quantum_generators_completed<RatFun>(fl3, table, qorder);
    PolyF kernel_elem = parse_on(fl3, table, "e1(X2)+Y2_1-e1(T)");
    bool in_completed =
        membership_completed(QSeries<RatFun>::from_poly(kernel_elem, fl3.k(), qorder), model, qgens, qorder);

    auto polygens = quantum_generators_polynomial<RatFun>(fl3, tq);
    PolyIdeal<RatFun> ideal(polygens, opts);
    bool bare_in_poly = ideal.member(parse_on(fl3, tq, "e1(X2)+Y2_1-e1(T)"));
    bool cleared_in_poly = ideal.member(parse_on(fl3, tq, "(1-q2)*(e1(X2)+Y2_1-e1(T))"));

    c.pass = in_completed && !bare_in_poly && cleared_in_poly;
    c.detail = std::string("completed: ") + (in_completed ? "member" : "NOT member") + "; polynomial: " +
               (bare_in_poly ? "member" : "not member") + "; (1-q2)-cleared polynomial: " +
               (cleared_in_poly ? "member" : "NOT member");
    return c;
}

// --- the one-variable completion example ---------------------------------

Check check_toy_completion(long long budget) {
    Check c{"toy-completion-example"};
    auto tx = VarTable::plain({"x"});
    auto txq = VarTable::plain({"x", "q"});
    GBOptions opts;
    opts.step_budget = budget;

    PolyQ x = PolyQ::var(tx, 0);
    auto model = classical_model(std::vector<PolyQ>{x}, 100, opts);

    bool lift_ok = true;
    for (int d = 1; d <= 6 && lift_ok; ++d) {
        // quantum generator x - q x, the polynomial (1-q)x read as a series
        QSeries<Rat> qx(tx, 1, d);
        qx.add(QExp{0}, x);
        qx.add(QExp{1}, -x);
        auto nf = lift_reduce(QSeries<Rat>::from_poly(x, 1, d), model, {qx}, d);
        lift_ok = nf.is_zero();
    }

    PolyQ xe = PolyQ::var(txq, 0);
    PolyQ q = PolyQ::var(txq, 1);
    PolyQ one = PolyQ::constant(txq, Rat(1));
    PolyIdeal<Rat> ideal(std::vector<PolyQ>{(one - q) * xe}, opts);
    bool x_out = !ideal.member(xe);
    bool unit_out = !ideal.member(one - q);
    bool prod_in = ideal.member((one - q) * xe);

    c.pass = lift_ok && x_out && unit_out && prod_in;
    c.detail = std::string("lift x -> ") + (lift_ok ? "0 at D=1..6" : "NONZERO") + "; polynomial ring: x " +
               (x_out ? "not member" : "member") + ", 1-q " + (unit_out ? "not member" : "member") + ", (1-q)x " +
               (prod_in ? "member" : "NOT member");
    return c;
}

// --- flagged discrepancy: printed vs extracted third relation ------------

Check check_discrepancy(int qorder, long long budget) {
    Check c{"fl3-completed-third-relation-report"};
    FlagShape fl3 = FlagShape::make({1, 2}, 3);
    auto table = VarTable::presentation(fl3, false);
    GBOptions opts;
    opts.step_budget = budget;

    auto model = classical_model(classical_generators<RatFun>(fl3, table), 100000, opts);
    auto extracted = quantum_generators_completed<RatFun>(fl3, table, qorder);

    // printed variant: third relation reads e1(X2) + Y2/(1-q2) - e1(T)
    auto printed = extracted;
    {
        PolyF y2 = parse_on(fl3, table, "Y2_1");
        PolyF rest = parse_on(fl3, table, "e1(X2)-e1(T)");
        QSeries<RatFun> one_minus_q2(table, fl3.k(), qorder);
        one_minus_q2.add(QExp{0, 0}, PolyF::constant(table, RatFun::from_int(1)));
        one_minus_q2.add(QExp{0, 1}, PolyF::constant(table, RatFun::from_int(-1)));
        printed[2] = QSeries<RatFun>::from_poly(rest, fl3.k(), qorder) +
                     one_minus_q2.invert_unit().scaled_poly(y2);
    }

    // the kernel element belongs to the extracted ideal
    PolyF kernel_elem = parse_on(fl3, table, "e1(X2)+Y2_1-e1(T)");
    LiftContext<RatFun> ctx_extracted(model, extracted, qorder);
    bool kernel_in = ctx_extracted.member(QSeries<RatFun>::from_poly(kernel_elem, fl3.k(), qorder));

    // are the two candidate completed ideals equal at this order?
    LiftContext<RatFun> ctx_printed(model, printed, qorder);
    std::string first_witness;
    bool printed_in_extracted = true;
    for (std::size_t i = 0; i < printed.size() && printed_in_extracted; ++i)
        if (!ctx_extracted.member(printed[i])) {
            printed_in_extracted = false;
            first_witness = "printed generator " + std::to_string(i + 1) +
                            " has nonzero normal form against the extracted ideal";
        }
    bool extracted_in_printed = true;
    for (std::size_t i = 0; i < extracted.size() && extracted_in_printed; ++i)
        if (!ctx_printed.member(extracted[i])) {
            extracted_in_printed = false;
            if (first_witness.empty())
                first_witness = "extracted generator " + std::to_string(i + 1) +
                                " has nonzero normal form against the printed ideal";
        }

    bool equal = printed_in_extracted && extracted_in_printed;
    c.pass = kernel_in;  // the definite report itself is the requirement
    c.detail = std::string("kernel element in extracted ideal: ") + (kernel_in ? "yes" : "NO") +
               "; ideals equal at order " + std::to_string(qorder) + ": " + (equal ? "yes" : "no") +
               (first_witness.empty() ? "" : "; " + first_witness);
    return c;
}

// --- rank table -----------------------------------------------------------

Check check_rank_table(long long budget) {
    Check c{"rank-table"};
    struct Row {
        std::vector<int> r;
        int n;
        std::size_t expect;
    };
    std::vector<Row> rows = {{{1, 2}, 3, 6}, {{2}, 4, 6},  {{1}, 3, 3},
                             {{1, 3}, 4, 12}, {{1, 2, 3}, 4, 24}, {{2}, 5, 10}};
    GBOptions opts;
    opts.step_budget = budget;
    for (const Row& row : rows) {
        FlagShape shape = FlagShape::make(row.r, row.n);
        auto table = VarTable::presentation(shape, false);
        auto model = classical_model(classical_generators<RatFun>(shape, table), 100000, opts);
        std::size_t enumerated = minimal_reps(shape).size();
        if (model.rank != row.expect || enumerated != row.expect ||
            shape.coset_count() != Int(static_cast<long>(row.expect))) {
            c.detail = "shape " + shape.to_string() + ": rank " + std::to_string(model.rank) + ", enumeration " +
                       std::to_string(enumerated) + ", expected " + std::to_string(row.expect);
            return c;
        }
    }
    c.pass = true;
    c.detail = "Groebner rank = coset enumeration = n!/prod(delta!) on all six shapes";
    return c;
}

// --- Gr(2,4): minimal polynomial and divisor span -------------------------

Check check_gr24(long long budget) {
    Check c{"gr24-divisor-minpoly"};
    FlagShape gr = FlagShape::make({2}, 4);
    auto table = VarTable::presentation(gr, false);
    GBOptions opts;
    opts.step_budget = budget;
    auto model = classical_model(classical_generators<Rat>(gr, table), 100000, opts);
    ExprContext ctx{&gr, false};
    PolyQ divisor = eval_expr<Rat>(parse_expr("1-e2(X1)", ctx), gr, table);
    auto m = mult_matrix(divisor, model.basis, model.gb);
    auto mp = min_poly(m);
    std::size_t degree = mp.size() - 1;
    auto span = divisor_generation_check(gr, model, 5);
    c.pass = degree == 5 && model.rank == 6 && span.dimension == 5;
    c.detail = "min poly degree " + std::to_string(degree) + " on rank " + std::to_string(model.rank) +
               "; divisor span dimension " + std::to_string(span.dimension);
    return c;
}

// --- freeness certificates -------------------------------------------------

Check check_freeness(long long budget) {
    Check c{"nakayama-freeness"};
    GBOptions opts;
    opts.step_budget = budget;
    std::vector<FlagShape> shapes = {FlagShape::make({1, 2}, 3), FlagShape::make({2}, 4),
                                     FlagShape::make({1}, 3), FlagShape::make({1, 2, 3}, 4)};
    for (const FlagShape& shape : shapes) {
        auto table = VarTable::presentation(shape, false);
        auto model = classical_model(classical_generators<RatFun>(shape, table), 100000, opts);
        auto qgens = quantum_generators_completed<RatFun>(shape, table, 4);
        LiftContext<RatFun> ctx(model, qgens, 4);
        auto rep = freeness_certificate(ctx);
        if (!rep.passed) {
            c.detail = "shape " + shape.to_string() + ": " + rep.witness;
            return c;
        }
    }
    c.pass = true;
    c.detail = "certificates pass at D=4 on all four shapes";
    return c;
}

// --- structure constants: stabilization and integrality --------------------

Check check_structure_stability(long long budget) {
    Check c{"fl3-structure-stabilization"};
    FlagShape fl3 = FlagShape::make({1, 2}, 3);
    auto table = VarTable::presentation(fl3, false);
    GBOptions opts;
    opts.step_budget = budget;
    auto model = classical_model(classical_generators<RatFun>(fl3, table), 100000, opts);
    GrothendieckFamily family(3);
    auto reps = minimal_reps(fl3);

    auto run = [&](int d) {
        auto qgens = quantum_generators_completed<RatFun>(fl3, table, d);
        LiftContext<RatFun> ctx(model, qgens, d);
        std::vector<QSeries<RatFun>> classes;
        for (const auto& w : reps)
            classes.push_back(
                QSeries<RatFun>::from_poly(schubert_in_presentation(fl3, w, model, family), fl3.k(), d));
        return structure_constants(ctx, classes);
    };
    auto t4 = run(4);
    auto t6 = run(6);

    bool stable = true;
    bool integral = true;
    for (std::size_t i = 0; i < t4.size && stable; ++i)
        for (std::size_t j = i; j < t4.size && stable; ++j)
            for (std::size_t k2 = 0; k2 < t4.size && stable; ++k2) {
                if (t6.entries[i][j][k2].truncated(4) != t4.entries[i][j][k2]) stable = false;
                for (const auto& [e, v] : t6.entries[i][j][k2].coeffs())
                    if (!v.to_laurent_integral()) integral = false;
            }
    c.pass = stable && integral;
    c.detail = std::string("q-degree <= 4 coefficients ") + (stable ? "agree" : "DISAGREE") +
               " between D=4 and D=6; coefficients " + (integral ? "lie in Z[T,T^-1]" : "have denominators");
    return c;
}

// --- localization oracle ----------------------------------------------------

Check check_localization_oracle(long long budget) {
    Check c{"localization-oracle"};
    GBOptions opts;
    opts.step_budget = budget;
    std::mt19937_64 rng(20240901ull);
    for (const FlagShape& shape : {FlagShape::make({1, 2}, 3), FlagShape::make({2}, 4)}) {
        auto table = VarTable::presentation(shape, false);
        auto model = classical_model(classical_generators<RatFun>(shape, table), 100000, opts);
        auto reps = minimal_reps(shape);
        auto random_class = [&] {
            PolyF p(table);
            std::uniform_int_distribution<int> coeff(-3, 3);
            for (const Mono& b : model.basis) p.add_term(b, RatFun::from_int(coeff(rng)));
            return p;
        };
        for (int trial = 0; trial < 100; ++trial) {
            PolyF a = random_class(), b = random_class();
            PolyF ab = normal_form(a * b, model.gb, budget);
            for (const auto& w : reps) {
                RatFun lhs = fixed_point_restriction(ab, w, shape);
                RatFun rhs = fixed_point_restriction(a, w, shape) * fixed_point_restriction(b, w, shape);
                if (lhs != rhs) {
                    c.detail = "shape " + shape.to_string() + ", trial " + std::to_string(trial) +
                               ": evaluation mismatch at w = " + w.to_string();
                    return c;
                }
            }
        }
    }
    c.pass = true;
    c.detail = "200 random products match pointwise evaluation on Fl(1,2;3) and Gr(2,4)";
    return c;
}

// --- triangularity and the divisor identities -------------------------------

Check check_triangularity(long long budget) {
    Check c{"grothendieck-triangularity"};
    auto s3 = triangularity_check(FlagShape::make({1, 2}, 3));
    auto s4 = triangularity_check(FlagShape::make({1, 2, 3}, 4));
    if (!s3.passed() || !s4.passed()) {
        c.detail = !s3.passed() ? s3.witness : s4.witness;
        return c;
    }

    FlagShape fl3 = FlagShape::make({1, 2}, 3);
    auto table = VarTable::presentation(fl3, false);
    GBOptions opts;
    opts.step_budget = budget;
    auto model = classical_model(classical_generators<RatFun>(fl3, table), 100000, opts);
    GrothendieckFamily family(3);
    PolyF os1 = schubert_in_presentation(fl3, Permutation::parse("213"), model, family);
    PolyF os2 = schubert_in_presentation(fl3, Permutation::parse("132"), model, family);
    // compare as quotient classes: the right-hand sides need not be reduced
    PolyF want1 = normal_form(parse_on(fl3, table, "1-T1^-1*e1(X1)"), model.gb, budget);
    PolyF want2 = normal_form(parse_on(fl3, table, "1-T1^-1*T2^-1*e2(X2)"), model.gb, budget);
    bool div_ok = os1 == want1 && os2 == want2;
    c.pass = div_ok;
    c.detail = std::string("S3 and S4 localization matrices Bruhat-triangular with nonzero diagonal; ") +
               "divisor identities det(S1)=T1(1-O^{s1}), det(S2)=T1T2(1-O^{s2}) " + (div_ok ? "hold" : "FAIL");
    return c;
}

// --- the O(1) membership identity -------------------------------------------

Check check_o1_identity(long long budget) {
    Check c{"projective-space-o1-identity"};
    GBOptions opts;
    opts.step_budget = budget;
    for (int n : {3, 4}) {
        FlagShape pn = FlagShape::make({1}, n);
        auto table = VarTable::presentation(pn, false);
        auto model = classical_model(classical_generators<RatFun>(pn, table), 100000, opts);
        std::string expr = "X1_1*e" + std::to_string(n - 1) + "(Y1)-e" + std::to_string(n) + "(T)";
        PolyF elem = parse_on(pn, table, expr);
        if (!normal_form(elem, model.gb, budget).is_zero()) {
            c.detail = "element " + expr + " is not in the classical ideal of P^" + std::to_string(n - 1);
            return c;
        }
    }
    c.pass = true;
    c.detail = "X*e_{n-1}(Y) - e_n(T) lies in the classical ideal for P^2 and P^3";
    return c;
}

}  // namespace

json run_paper_check(int qorder, long long budget) {
    std::vector<Check> checks;
    checks.push_back(check_fl3_polynomial());
    checks.push_back(check_fl3_kernel(qorder, budget));
    checks.push_back(check_toy_completion(budget));
    checks.push_back(check_discrepancy(qorder, budget));
    checks.push_back(check_rank_table(budget));
    checks.push_back(check_gr24(budget));
    checks.push_back(check_freeness(budget));
    checks.push_back(check_structure_stability(budget));
    checks.push_back(check_localization_oracle(budget));
    checks.push_back(check_triangularity(budget));
    checks.push_back(check_o1_identity(budget));

    json out;
    out["schema"] = 1;
    out["command"] = "paper-check";
    out["qorder"] = qorder;
    bool all = true;
    json arr = json::array();
    for (const Check& c : checks) {
        all = all && c.pass;
        arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    out["checks"] = std::move(arr);
    out["pass"] = all;
    return out;
}

}  // namespace qkw::cli
