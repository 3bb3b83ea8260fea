// qkw -- exact quantum K Whitney presentations for type-A flag manifolds.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "commands.hpp"
#include "qkw/errors.hpp"

namespace {

int emit(const qkw::cli::json& report, const std::string& out_file) {
    std::string text = report.dump(2);
    if (!out_file.empty()) {
        std::ofstream f(out_file);
        if (!f) {
            std::cerr << "cannot open output file '" << out_file << "'\n";
            return 2;
        }
        f << text << "\n";
    }
    std::cout << text << "\n";
    return 0;
}

int error_exit(const qkw::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
        case qkw::ErrorKind::Resource:
            return 3;
        case qkw::ErrorKind::Internal:
            return 1;
        default:
            return 2;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact quantum K Whitney presentations of type-A partial flag manifolds"};
    app.require_subcommand(1);

    qkw::cli::CommonArgs common;
    std::string expr, form = "classical", mode, wtext, out_file;
    int cap = 0;
    bool quantum_nf = false;

    auto add_common = [&](CLI::App* sub, bool needs_shape) {
        auto* opt = sub->add_option("--shape", common.shape, "flag shape r1,r2,...:n");
        if (needs_shape) opt->required();
        sub->add_option("--qorder", common.qorder, "q-series truncation order")->default_val(6);
        sub->add_flag("--nonequivariant", common.nonequivariant, "set every T_i = 1");
        sub->add_option("--budget", common.budget, "reduction step budget")->default_val(10000000);
        sub->add_option("--out", out_file, "also write the JSON report to a file");
    };

    auto* present = app.add_subcommand("present", "emit ideal generators for a shape");
    add_common(present, true);
    present->add_option("--form", form, "classical | completed | poly")->default_val("classical");

    auto* nf = app.add_subcommand("nf", "normal form in the classical or completed quotient");
    add_common(nf, true);
    nf->add_option("--expr", expr, "expression to reduce")->required();
    nf->add_flag("--quantum", quantum_nf, "reduce in the completed quantum quotient");

    auto* member = app.add_subcommand("member", "ideal membership");
    add_common(member, true);
    member->add_option("--expr", expr, "expression to test")->required();
    bool completed = false, poly = false;
    member->add_flag("--completed", completed, "completed quantum ideal, up to the truncation order");
    member->add_flag("--poly", poly, "polynomial quantum ideal, exact");

    auto* rank = app.add_subcommand("rank", "rank of the classical quotient");
    add_common(rank, true);

    auto* minpoly = app.add_subcommand("minpoly", "minimal polynomial of a multiplication operator");
    add_common(minpoly, true);
    minpoly->add_option("--expr", expr, "class to multiply by")->required();

    auto* structure = app.add_subcommand("structure", "Schubert-basis structure constants");
    add_common(structure, true);

    auto* schubert = app.add_subcommand("schubert", "Schubert class in presentation coordinates");
    add_common(schubert, true);
    schubert->add_option("--w", wtext, "permutation in one-line notation")->required();

    auto* divgen = app.add_subcommand("divgen", "span of monomials in the Schubert divisor classes");
    add_common(divgen, true);
    divgen->add_option("--cap", cap, "maximal monomial degree")->default_val(0);

    auto* paper = app.add_subcommand("paper-check", "run the golden assertion suite");
    add_common(paper, false);

    CLI11_PARSE(app, argc, argv);

    try {
        qkw::cli::json report;
        if (present->parsed()) {
            report = qkw::cli::cmd_present(common, form);
        } else if (nf->parsed()) {
            report = qkw::cli::cmd_nf(common, expr, quantum_nf);
        } else if (member->parsed()) {
            if (completed == poly) {
                std::cerr << "member: exactly one of --completed / --poly is required\n";
                return 2;
            }
            report = qkw::cli::cmd_member(common, expr, completed ? "completed" : "poly");
        } else if (rank->parsed()) {
            report = qkw::cli::cmd_rank(common);
        } else if (minpoly->parsed()) {
            report = qkw::cli::cmd_minpoly(common, expr);
        } else if (structure->parsed()) {
            report = qkw::cli::cmd_structure(common);
        } else if (schubert->parsed()) {
            report = qkw::cli::cmd_schubert(common, wtext);
        } else if (divgen->parsed()) {
            report = qkw::cli::cmd_divgen(common, cap);
        } else if (paper->parsed()) {
            report = qkw::cli::run_paper_check(common.qorder, common.budget);
            int rc = emit(report, out_file);
            if (rc != 0) return rc;
            return report["pass"].get<bool>() ? 0 : 1;
        }
        return emit(report, out_file);
    } catch (const qkw::Error& e) {
        return error_exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
