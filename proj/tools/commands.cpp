#include "commands.hpp"

#include "qkw/expr.hpp"
#include "qkw/localization.hpp"
#include "qkw/nakayama.hpp"
#include "qkw/whitney.hpp"

namespace qkw::cli {

namespace {

json base_report(const char* command, const CommonArgs& args) {
    json j;
    j["schema"] = 1;
    j["command"] = command;
    if (!args.shape.empty()) j["shape"] = args.shape;
    j["nonequivariant"] = args.nonequivariant;
    return j;
}

template <class K>
QuotientModel<K> shape_model(const FlagShape& shape, const CommonArgs& args) {
    auto table = VarTable::presentation(shape, false);
    GBOptions opts;
    opts.step_budget = args.budget;
    return classical_model(classical_generators<K>(shape, table), args.cap, opts);
}

template <class K>
json present_impl(const FlagShape& shape, const CommonArgs& args, const std::string& form) {
    json out = base_report("present", args);
    out["form"] = form;
    json gens = json::array();
    auto index = whitney_index(shape);
    if (form == "classical") {
        auto table = VarTable::presentation(shape, false);
        auto cl = classical_generators<K>(shape, table);
        for (std::size_t i = 0; i < cl.size(); ++i)
            gens.push_back({{"j", index[i].first}, {"l", index[i].second}, {"expr", cl[i].render()}});
    } else if (form == "completed") {
        out["qorder"] = args.qorder;
        auto table = VarTable::presentation(shape, false);
        auto qc = quantum_generators_completed<K>(shape, table, args.qorder);
        for (std::size_t i = 0; i < qc.size(); ++i)
            gens.push_back({{"j", index[i].first}, {"l", index[i].second}, {"expr", qc[i].render()}});
    } else if (form == "poly") {
        auto table = VarTable::presentation(shape, true);
        auto qp = quantum_generators_polynomial<K>(shape, table);
        for (std::size_t i = 0; i < qp.size(); ++i)
            gens.push_back({{"j", index[i].first}, {"l", index[i].second}, {"expr", qp[i].render()}});
    } else {
        throw DomainError("unknown form '" + form + "' (classical|completed|poly)");
    }
    out["generators"] = std::move(gens);
    return out;
}

template <class K>
json nf_impl(const FlagShape& shape, const CommonArgs& args, const std::string& expr_text, bool quantum) {
    json out = base_report("nf", args);
    out["expr"] = expr_text;
    ExprContext ctx{&shape, quantum};
    ExprPtr ast = parse_expr(expr_text, ctx);
    QuotientModel<K> model = shape_model<K>(shape, args);
    if (!quantum) {
        auto p = eval_expr<K>(ast, shape, model.table);
        out["normal_form"] = normal_form(p, model.gb, args.budget).render();
        return out;
    }
    out["qorder"] = args.qorder;
    auto tq = VarTable::presentation(shape, true);
    auto p = eval_expr<K>(ast, shape, tq);
    auto series = QSeries<K>::from_extended_poly(p, model.table, args.qorder);
    auto qgens = quantum_generators_completed<K>(shape, model.table, args.qorder);
    LiftContext<K> lift(model, qgens, args.qorder);
    LiftedNormalForm<K> nf = lift.reduce(series);
    json coords = json::array();
    for (std::size_t b = 0; b < model.rank; ++b) {
        if (nf.coords[b].is_zero()) continue;
        MPoly<K> mono(model.table);
        mono.add_term(model.basis[b], FOps<K>::one());
        coords.push_back({{"basis", mono.render()}, {"series", nf.coords[b].render()}});
    }
    out["zero"] = nf.is_zero();
    out["coordinates"] = std::move(coords);
    return out;
}

template <class K>
json member_impl(const FlagShape& shape, const CommonArgs& args, const std::string& expr_text,
                 const std::string& mode) {
    json out = base_report("member", args);
    out["expr"] = expr_text;
    out["mode"] = mode;
    ExprContext ctx{&shape, true};
    ExprPtr ast = parse_expr(expr_text, ctx);
    auto tq = VarTable::presentation(shape, true);
    auto p = eval_expr<K>(ast, shape, tq);
    if (mode == "completed") {
        out["qorder"] = args.qorder;
        QuotientModel<K> model = shape_model<K>(shape, args);
        auto series = QSeries<K>::from_extended_poly(p, model.table, args.qorder);
        auto qgens = quantum_generators_completed<K>(shape, model.table, args.qorder);
        out["member"] = membership_completed(series, model, qgens, args.qorder);
    } else if (mode == "poly") {
        GBOptions opts;
        opts.step_budget = args.budget;
        auto gens = quantum_generators_polynomial<K>(shape, tq);
        out["member"] = membership_polynomial(p, gens, opts);
    } else {
        throw DomainError("unknown membership mode '" + mode + "' (completed|poly)");
    }
    return out;
}

template <class K>
json rank_impl(const FlagShape& shape, const CommonArgs& args) {
    json out = base_report("rank", args);
    QuotientModel<K> model = shape_model<K>(shape, args);
    out["rank"] = model.rank;
    out["coset_count"] = shape.coset_count().get_str();
    out["basis"] = [&] {
        json b = json::array();
        for (const Mono& m : model.basis) {
            MPoly<K> p(model.table);
            p.add_term(m, FOps<K>::one());
            b.push_back(p.render());
        }
        return b;
    }();
    return out;
}

template <class K>
json minpoly_impl(const FlagShape& shape, const CommonArgs& args, const std::string& expr_text) {
    json out = base_report("minpoly", args);
    out["expr"] = expr_text;
    ExprContext ctx{&shape, false};
    ExprPtr ast = parse_expr(expr_text, ctx);
    QuotientModel<K> model = shape_model<K>(shape, args);
    auto p = eval_expr<K>(ast, shape, model.table);
    Matrix<K> m = mult_matrix(p, model.basis, model.gb);
    std::vector<K> mp = min_poly(m);
    out["rank"] = model.rank;
    out["degree"] = mp.size() - 1;
    out["min_poly"] = render_univariate(mp);
    return out;
}

json structure_impl(const FlagShape& shape, const CommonArgs& args) {
    using K = RatFun;  // Schubert classes come from localization
    if (args.nonequivariant)
        throw DomainError("structure constants in the Schubert basis need the equivariant parameters");
    json out = base_report("structure", args);
    out["qorder"] = args.qorder;
    out["basis"] = "schubert";
    QuotientModel<K> model = shape_model<K>(shape, args);
    auto qgens = quantum_generators_completed<K>(shape, model.table, args.qorder);
    LiftContext<K> lift(model, qgens, args.qorder);

    GrothendieckFamily family(shape.n());
    auto reps = minimal_reps(shape);
    std::vector<QSeries<K>> classes;
    json names = json::array();
    for (const auto& w : reps) {
        classes.push_back(
            QSeries<K>::from_poly(schubert_in_presentation(shape, w, model, family), shape.k(), args.qorder));
        names.push_back(w.to_string());
    }
    StructureTable<K> table = structure_constants(lift, classes);
    out["classes"] = std::move(names);
    json tbl = json::object();
    for (std::size_t i = 0; i < table.size; ++i)
        for (std::size_t j = i; j < table.size; ++j) {
            json cell = json::object();
            for (std::size_t c = 0; c < table.size; ++c) {
                if (table.entries[i][j][c].is_zero()) continue;
                cell[reps[c].to_string()] = table.entries[i][j][c].render();
            }
            tbl[reps[i].to_string() + "*" + reps[j].to_string()] = std::move(cell);
        }
    out["table"] = std::move(tbl);
    return out;
}

json schubert_impl(const FlagShape& shape, const CommonArgs& args, const std::string& wtext) {
    json out = base_report("schubert", args);
    if (args.nonequivariant) throw DomainError("schubert classes need the equivariant parameters");
    Permutation w = Permutation::parse(wtext);
    if (w.n() != shape.n()) throw DomainError("permutation length does not match the shape");
    if (!is_minimal_rep(w, shape)) throw DomainError("permutation is not a minimal coset representative");
    out["w"] = w.to_string();
    QuotientModel<RatFun> model = shape_model<RatFun>(shape, args);
    GrothendieckFamily family(shape.n());
    PolyF cls = schubert_in_presentation(shape, w, model, family);
    out["class"] = cls.render();
    return out;
}

template <class K>
json divgen_impl(const FlagShape& shape, const CommonArgs& args, int cap) {
    json out = base_report("divgen", args);
    QuotientModel<K> model = shape_model<K>(shape, args);
    auto rep = divisor_generation_check(shape, model, cap);
    out["cap"] = rep.cap;
    out["dimension"] = rep.dimension;
    out["rank"] = rep.rank;
    out["generates"] = rep.generates();
    return out;
}

}  // namespace

json cmd_present(const CommonArgs& args, const std::string& form) {
    FlagShape shape = FlagShape::parse(args.shape);
    return args.nonequivariant ? present_impl<Rat>(shape, args, form) : present_impl<RatFun>(shape, args, form);
}

json cmd_nf(const CommonArgs& args, const std::string& expr, bool quantum) {
    FlagShape shape = FlagShape::parse(args.shape);
    return args.nonequivariant ? nf_impl<Rat>(shape, args, expr, quantum)
                               : nf_impl<RatFun>(shape, args, expr, quantum);
}

json cmd_member(const CommonArgs& args, const std::string& expr, const std::string& mode) {
    FlagShape shape = FlagShape::parse(args.shape);
    return args.nonequivariant ? member_impl<Rat>(shape, args, expr, mode)
                               : member_impl<RatFun>(shape, args, expr, mode);
}

json cmd_rank(const CommonArgs& args) {
    FlagShape shape = FlagShape::parse(args.shape);
    return args.nonequivariant ? rank_impl<Rat>(shape, args) : rank_impl<RatFun>(shape, args);
}

json cmd_minpoly(const CommonArgs& args, const std::string& expr) {
    FlagShape shape = FlagShape::parse(args.shape);
    return args.nonequivariant ? minpoly_impl<Rat>(shape, args, expr) : minpoly_impl<RatFun>(shape, args, expr);
}

json cmd_structure(const CommonArgs& args) {
    FlagShape shape = FlagShape::parse(args.shape);
    return structure_impl(shape, args);
}

json cmd_schubert(const CommonArgs& args, const std::string& w) {
    FlagShape shape = FlagShape::parse(args.shape);
    return schubert_impl(shape, args, w);
}

json cmd_divgen(const CommonArgs& args, int cap) {
    FlagShape shape = FlagShape::parse(args.shape);
    return args.nonequivariant ? divgen_impl<Rat>(shape, args, cap) : divgen_impl<RatFun>(shape, args, cap);
}

}  // namespace qkw::cli
