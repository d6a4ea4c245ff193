// Command-line front end: single-state analysis, parameter sweeps over
// superposition families, the oscillator spectrum, and the built-in
// acceptance checks. All tabular output is CSV; summaries go to stderr-free
// plain text so reports can be piped as-is.
//
// Exit codes: 0 success, 1 validation/parse error, 2 numerical check failure.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "npo/selftest.hpp"
#include "npo/spectral.hpp"
#include "npo/sweep.hpp"
#include "npo/uncertainty.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path);
    if (!out) {
        throw std::runtime_error("cannot write " + out_path);
    }
    out << content;
}

std::string analyze_text(const npo::FockState& state, const npo::Tolerances& tol,
                         int grid) {
    const npo::OperatorRep ops = npo::build_operators(state.dim());
    const npo::MomentReport report = npo::full_report(state, ops, tol, grid);

    std::string out;
    char buf[512];
    std::snprintf(buf, sizeof(buf), "# normalization scale applied: %.17g\n",
                  state.norm_scale());
    out += buf;
    out += npo::report_csv_header() + "\n";
    out += npo::report_csv_row("state", report) + "\n";
    std::snprintf(buf, sizeof(buf),
                  "# classification: %s  (boundary B = %.6g)\n",
                  npo::to_string(report.classification).c_str(), report.boundary_b);
    out += buf;
    if (report.classification == npo::Classification::DEGENERATE) {
        out += "# note: Delta N * Delta Phi = 0, so the Schwartz relation reduces "
               "to the trivial equality 0 = 0 here\n";
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"number-phase uncertainty diagnostics for the quantum oscillator"};
    app.require_subcommand(1);

    int dim = 16;
    int grid = 0;  // 0 = default 8 * dim
    double tol_eq = 1e-10;
    std::uint64_t seed = 20260823;
    bool naive_composition = false;
    std::string out_path;
    app.add_option("--dim", dim, "truncation dimension D");
    app.add_option("--grid", grid, "phase-grid size M (default 8*D)");
    app.add_option("--tol-eq", tol_eq, "equality tolerance");
    app.add_option("--seed", seed, "seed for randomized checks");
    app.add_flag("--naive-composition", naive_composition,
                 "also show the Gibbs-contaminated N(Phi psi) diagnostic");
    app.add_option("--out", out_path, "write output to this file instead of stdout");

    std::string spec_path, config_path;
    CLI::App* analyze = app.add_subcommand("analyze", "analyze one state spec");
    analyze->add_option("spec", spec_path, "state-spec file")->required();
    CLI::App* sweep = app.add_subcommand("sweep", "run a parameter sweep");
    sweep->add_option("config", config_path, "sweep config file")->required();
    CLI::App* eigen = app.add_subcommand("eigen", "solve the phase-representation eigenproblem");
    CLI::App* selftest = app.add_subcommand("selftest", "run the acceptance checks");
    for (CLI::App* sub : {analyze, sweep, eigen, selftest}) {
        sub->fallthrough();  // allow global options after the subcommand
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    npo::Tolerances tol;
    tol.eq_tol = tol_eq;

    try {
        tol.validate();
        if (analyze->parsed()) {
            const npo::FockState state = npo::parse_state_spec(read_file(spec_path));
            write_output(out_path, analyze_text(state, tol, grid));
        } else if (sweep->parsed()) {
            npo::SweepConfig config = npo::parse_sweep_config(read_file(config_path));
            config.tolerances = tol;
            config.seed = seed;
            write_output(out_path, npo::sweep_csv(config, npo::run_sweep(config)));
        } else if (eigen->parsed()) {
            write_output(out_path, npo::eigen_csv(npo::solve_eigen(dim)));
        } else if (selftest->parsed()) {
            npo::selftest::Options options;
            options.naive_composition = naive_composition;
            options.seed = seed;
            if (tol_eq != 1e-10) options.tol_override = tol_eq;
            const auto results = npo::selftest::run_all(options);
            write_output(out_path, npo::selftest::format_report(results));
            if (!npo::selftest::all_passed(results)) return 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
