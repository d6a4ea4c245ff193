#include "npo/selftest.hpp"

#include <cmath>
#include <cstdio>
#include <random>

#include "npo/operators.hpp"
#include "npo/quadrature_oracle.hpp"
#include "npo/spectral.hpp"
#include "npo/state.hpp"
#include "npo/sweep.hpp"
#include "npo/uncertainty.hpp"

namespace npo::selftest {

namespace {

constexpr double PI = TWO_PI / 2.0;
const double DELTA_PHI_EXACT = PI / std::sqrt(3.0);

struct Harness {
    std::vector<CheckResult> results;
    const Options& options;

    explicit Harness(const Options& opts) : options(opts) {}

    double tol(double default_tol) const {
        return std::isnan(options.tol_override) ? default_tol : options.tol_override;
    }

    void check(const std::string& name, double measured, double expected,
               double tolerance, const std::string& note = {}) {
        const bool ok = std::abs(measured - expected) <= tolerance;
        results.push_back({name, measured, expected, tolerance,
                           ok ? Status::PASS : Status::FAIL, note});
    }

    void report(const std::string& name, double measured, double expected,
                double tolerance, Status status, const std::string& note) {
        results.push_back({name, measured, expected, tolerance, status, note});
    }
};

std::vector<FockState> seeded_states(std::uint64_t seed, int count, int max_dim) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dim_dist(2, max_dim);
    std::vector<FockState> states;
    states.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) {
        states.push_back(random_fock_state(rng, dim_dist(rng)));
    }
    return states;
}

void check_normalization(Harness& h) {
    std::mt19937_64 rng(h.options.seed);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const FockState s = random_fock_state(rng, 8);
        const PhaseWave w = to_phase_wave(s, 64);
        worst = std::max(worst, std::abs(inner_product(w, w).real() - 1.0));
        double norm_sq = 0.0;
        for (const cplx& c : s.coeffs()) norm_sq += std::norm(c);
        worst = std::max(worst, std::abs(norm_sq - 1.0));
    }
    h.check("state_normalization", worst, 0.0, h.tol(1e-12));
}

// criteria 1-3: eigenstate characteristics and the RSUR failure exhibit
void check_eigenstate_characteristics(Harness& h) {
    const int dim = 16;
    const OperatorRep ops = build_operators(dim);
    double phi_matrix_err = 0, phi_quad_err = 0, n_err = 0, cov_err = 0;
    double rsur_lhs_max = 0, schwartz_rhs_max = 0;
    bool eq4_never_holds = true, schwartz_always_holds = true;
    for (int n = 0; n < 8; ++n) {
        const FockState state = eigenstate(n, dim);
        const MomentReport m = moments(state, ops);
        phi_matrix_err = std::max(phi_matrix_err, std::abs(m.delta_phi - DELTA_PHI_EXACT));
        const MomentReport mq = moments_quadrature(state, 128);
        phi_quad_err = std::max(phi_quad_err, std::abs(mq.delta_phi - DELTA_PHI_EXACT));
        n_err = std::max(n_err, m.delta_n);
        cov_err = std::max(cov_err, std::abs(covariance_product(state, ops)));
        const RsurResult rr = rsur_check(state, ops);
        rsur_lhs_max = std::max(rsur_lhs_max, rr.lhs);
        eq4_never_holds = eq4_never_holds && !rr.holds_eq4;
        const SchwartzResult sr = schwartz_check(state, ops);
        schwartz_always_holds = schwartz_always_holds && sr.holds;
        schwartz_rhs_max = std::max(schwartz_rhs_max, sr.rhs);
    }
    h.check("eigenstate_delta_phi_matrix", phi_matrix_err, 0.0, h.tol(1e-10),
            "Delta Phi vs pi/sqrt(3), n = 0..7 at D = 16");
    h.check("eigenstate_delta_phi_quadrature", phi_quad_err, 0.0, h.tol(1e-6),
            "wave path at M = 128");
    h.check("eigenstate_delta_n", n_err, 0.0, h.tol(1e-12));
    h.check("eigenstate_covariance", cov_err, 0.0, h.tol(1e-10));
    h.check("rsur_failure_lhs_zero", rsur_lhs_max, 0.0, h.tol(1e-10),
            "Delta N * Delta Phi = 0 < 1/2 for every eigenstate");
    h.check("rsur_failure_eq4_fails", eq4_never_holds ? 0.0 : 1.0, 0.0, 0.5);
    h.check("schwartz_trivial_equality",
            schwartz_always_holds ? schwartz_rhs_max : 1.0, 0.0, h.tol(1e-10),
            "Schwartz check returns (0, 0, true)");
}

// criterion 4
void check_boundary_anomaly(Harness& h) {
    double eig_mag_err = 0, eig_real_part = 0;
    for (int n = 0; n < 8; ++n) {
        const CommutatorReport r = boundary_defect(eigenstate(n, 16));
        eig_mag_err = std::max(eig_mag_err, std::abs(std::abs(r.defect) - 1.0));
        eig_real_part = std::max(eig_real_part, std::abs(r.defect.real()));
    }
    h.check("boundary_anomaly_eigenstate_magnitude", eig_mag_err, 0.0, h.tol(1e-10));
    h.check("boundary_anomaly_eigenstate_imaginary", eig_real_part, 0.0, h.tol(1e-10));

    double rand_err = 0, rand_real = 0;
    for (const FockState& s : seeded_states(h.options.seed + 4, 1000, 12)) {
        const CommutatorReport r = boundary_defect(s);
        rand_err = std::max(rand_err, std::abs(std::abs(r.defect) - r.boundary_value));
        rand_real = std::max(rand_real, std::abs(r.defect.real()));
    }
    h.check("boundary_anomaly_random_states", rand_err, 0.0, h.tol(1e-10),
            "|defect| = |sum C_n|^2 over 1000 seeded states");
    h.check("boundary_anomaly_random_imaginary", rand_real, 0.0, h.tol(1e-10));

    if (h.options.naive_composition) {
        // Spectral differentiation of the non-periodic product: the measured
        // value is reported but flagged, not failed.
        const FockState s = eigenstate(1, 16);
        const PhaseWave w = to_phase_wave(s, 128);
        const PhaseWave nw = apply_number(w);
        const cplx lhs = phase_weighted_inner(nw, w, 1);
        const cplx rhs = inner_product(w, apply_number_after_phase_naive(w));
        const double naive_mag = std::abs(rhs - lhs);
        h.report("boundary_anomaly_naive_composition", naive_mag, 1.0, 0.0,
                 Status::EXPECTED_DIVERGENT,
                 "Gibbs-contaminated composition, shown for comparison");
    }
}

// criterion 5
void check_conditional_rsur_sweep(Harness& h) {
    SweepConfig config;
    config.family = Family::TWO_MODE;
    config.modes = {0, 1};
    config.theta_steps = 64;
    config.chi_steps = 64;
    config.dim = 16;
    config.seed = h.options.seed;
    const std::vector<SweepRow> rows = run_sweep(config);

    double min_margin = 1e300;
    int conditioned = 0;
    const SweepRow* best = nullptr;
    for (const SweepRow& row : rows) {
        double max_res = 0;
        for (const auto& rr : row.report.cond7_residuals) {
            for (const cplx& r : rr) max_res = std::max(max_res, std::abs(r));
        }
        if (max_res < 1e-8) {
            ++conditioned;
            min_margin = std::min(min_margin,
                                  row.report.schwartz_lhs - row.report.rsur_rhs);
        }
        if (best == nullptr || row.report.boundary_b < best->report.boundary_b) {
            best = &row;
        }
    }
    h.check("conditional_rsur_margin", std::min(min_margin, 0.0), 0.0, h.tol(1e-10),
            "Delta N * Delta Phi >= (1/2)|<[N,Phi]>| wherever conditions hold (" +
                std::to_string(conditioned) + " grid points)");

    // pi/4 falls between grid lines, so also pin the exact B = 0 state to
    // keep the conditional check non-vacuous
    const OperatorRep ops = build_operators(config.dim);
    const FockState locus = sweep_state(config, PI / 4.0, PI);
    const MomentReport locus_report = full_report(locus, ops, config.tolerances);
    double locus_res = 0;
    for (const auto& rr : locus_report.cond7_residuals) {
        for (const cplx& r : rr) locus_res = std::max(locus_res, std::abs(r));
    }
    const bool locus_ok =
        locus_res < 1e-8 &&
        locus_report.schwartz_lhs >= locus_report.rsur_rhs - h.tol(1e-10) &&
        locus_report.classification == Classification::RSUR_VALID;
    h.check("conditional_rsur_locus_state", locus_ok ? 0.0 : 1.0, 0.0, 0.5,
            "exact (pi/4, pi) state: conditions hold and RSUR is satisfied");

    const double dtheta = (PI / 2.0) / (config.theta_steps - 1);
    const double dchi = TWO_PI / config.chi_steps;
    const double locus_off = std::max(std::abs(best->theta - PI / 4.0) / dtheta,
                                      std::abs(best->chi - PI) / dchi);
    h.check("b_zero_locus", locus_off, 0.0, 1.0,
            "minimum-B grid point within one cell of (pi/4, pi)");
}

// criterion 6
void check_delta_n_formula(Harness& h) {
    std::vector<OperatorRep> ops;
    for (int d = 0; d <= 12; ++d) ops.push_back(d >= 2 ? build_operators(d) : OperatorRep{});
    double worst = 0.0;
    for (const FockState& s : seeded_states(h.options.seed + 6, 1000, 12)) {
        const double formula = delta_n_formula(s);
        const double operator_path = moments(s, ops[static_cast<size_t>(s.dim())]).delta_n;
        worst = std::max(worst, std::abs(formula - operator_path));
    }
    h.check("delta_n_formula_equivalence", worst, 0.0, h.tol(1e-12),
            "1000 seeded states, D <= 12");
}

// criterion 7
void check_spectrum(Harness& h) {
    const EigenResult result = solve_eigen(8);
    double energy_err = 0, overlap_err = 0;
    for (int n = 0; n < 8; ++n) {
        energy_err = std::max(energy_err,
                              std::abs(result.levels[static_cast<size_t>(n)].energy - (n + 0.5)));
        const PhaseWave computed =
            to_phase_wave(result.eigenstates[static_cast<size_t>(n)], 64);
        const PhaseWave exact = to_phase_wave(eigenstate(n, 8), 64);
        overlap_err = std::max(overlap_err,
                               std::abs(std::abs(inner_product(exact, computed)) - 1.0));
    }
    h.check("spectrum_energies", energy_err, 0.0, h.tol(1e-12),
            "E_n = n + 1/2, hbar omega = 1");
    h.check("spectrum_eigenfunction_overlap", overlap_err, 0.0, h.tol(1e-10));

    const PhaseWave ground = to_phase_wave(result.eigenstates[0], 64);
    double amp_err = 0.0;
    const double expected_amp = 1.0 / std::sqrt(TWO_PI);
    for (const cplx& v : ground.samples) {
        amp_err = std::max(amp_err, std::abs(std::abs(v) - expected_amp));
    }
    h.check("spectrum_ground_amplitude", amp_err, 0.0, h.tol(1e-12),
            "|psi_0| = 1/sqrt(2 pi)");
}

// criterion 8
void check_matrix_oracle(Harness& h) {
    const int dim = 12;
    const OperatorRep ops = build_operators(dim);
    double phi_err = 0, phi2_err = 0, herm_err = 0;
    for (int m = 0; m < dim; ++m) {
        for (int n = 0; n < dim; ++n) {
            phi_err = std::max(phi_err,
                               std::abs(ops.phi_matrix(m, n) - oracle::matrix_element(m - n, 1)));
            phi2_err = std::max(phi2_err,
                                std::abs(ops.phi2_matrix(m, n) - oracle::matrix_element(m - n, 2)));
            herm_err = std::max(
                herm_err,
                std::max(std::abs(ops.phi_matrix(m, n) - std::conj(ops.phi_matrix(n, m))),
                         std::abs(ops.phi2_matrix(m, n) - std::conj(ops.phi2_matrix(n, m)))));
        }
    }
    h.check("phi_matrix_vs_quadrature_oracle", phi_err, 0.0, h.tol(1e-10));
    h.check("phi2_matrix_vs_quadrature_oracle", phi2_err, 0.0, h.tol(1e-10));
    h.check("matrix_hermiticity", herm_err, 0.0, h.tol(1e-12));
}

// criterion 9
void check_schwartz_property(Harness& h) {
    const std::vector<FockState> states = seeded_states(h.options.seed + 9, 10000, 12);
    std::vector<OperatorRep> ops;
    for (int d = 0; d <= 12; ++d) ops.push_back(d >= 2 ? build_operators(d) : OperatorRep{});

    int violations = 0;
    double min_margin = 1e300;
#pragma omp parallel for schedule(static) reduction(+ : violations) reduction(min : min_margin)
    for (size_t i = 0; i < states.size(); ++i) {
        const SchwartzResult sr =
            schwartz_check(states[i], ops[static_cast<size_t>(states[i].dim())]);
        min_margin = std::min(min_margin, sr.lhs - sr.rhs);
        if (!sr.holds) ++violations;
    }
    h.check("schwartz_unconditional", static_cast<double>(violations), 0.0, 0.0,
            "10000 seeded states, min margin " + std::to_string(min_margin));
}

// criterion 10
void check_determinism(Harness& h) {
    SweepConfig config;
    config.theta_steps = 9;
    config.chi_steps = 8;
    config.dim = 8;
    config.seed = h.options.seed;
    const std::string first = sweep_csv(config, run_sweep(config));
    const std::string second = sweep_csv(config, run_sweep(config));
    const std::string serial = sweep_csv(config, run_sweep_serial(config));
    const bool identical = first == second && first == serial;
    h.check("determinism_sweep_csv", identical ? 0.0 : 1.0, 0.0, 0.5,
            "two parallel runs and the serial reference, byte-identical");
}

}  // namespace

std::vector<CheckResult> run_all(const Options& options) {
    Harness h(options);
    check_normalization(h);
    check_eigenstate_characteristics(h);
    check_boundary_anomaly(h);
    check_conditional_rsur_sweep(h);
    check_delta_n_formula(h);
    check_spectrum(h);
    check_matrix_oracle(h);
    check_schwartz_property(h);
    check_determinism(h);
    return h.results;
}

std::string format_report(const std::vector<CheckResult>& results) {
    std::string out;
    for (const CheckResult& r : results) {
        const char* tag = r.status == Status::PASS              ? "PASS"
                          : r.status == Status::FAIL            ? "FAIL"
                                                                : "EXPECTED-DIVERGENT";
        char buf[256];
        std::snprintf(buf, sizeof(buf), "[%s] %-40s measured=%.6g expected=%.6g tol=%.3g",
                      tag, r.name.c_str(), r.measured, r.expected, r.tolerance);
        out += buf;
        if (!r.note.empty()) out += "  (" + r.note + ")";
        out += "\n";
    }
    return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const CheckResult& r : results) {
        if (r.status == Status::FAIL) return false;
    }
    return true;
}

}  // namespace npo::selftest
