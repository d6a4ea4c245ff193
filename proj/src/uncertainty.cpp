#include "npo/uncertainty.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace npo {

namespace {

Eigen::VectorXcd as_vector(const FockState& state) {
    return Eigen::Map<const Eigen::VectorXcd>(state.coeffs().data(), state.dim());
}

void require_matching_dim(const FockState& state, const OperatorRep& ops) {
    if (state.dim() != ops.dim) {
        throw std::invalid_argument("state/operator dimension mismatch");
    }
}

double deviation(double mean_sq, double mean) {
    return std::sqrt(std::max(0.0, mean_sq - mean * mean));
}

// psi^dag (N Phi - Phi N) psi, the left-action commutator expectation
cplx bilinear_commutator(const FockState& state, const OperatorRep& ops) {
    const Eigen::VectorXcd psi = as_vector(state);
    const Eigen::MatrixXcd comm =
        ops.n_matrix * ops.phi_matrix - ops.phi_matrix * ops.n_matrix;
    return psi.dot(comm * psi);
}

}  // namespace

std::string to_string(Classification c) {
    switch (c) {
        case Classification::RSUR_VALID: return "RSUR_VALID";
        case Classification::RSUR_INVALID: return "RSUR_INVALID";
        case Classification::DEGENERATE: return "DEGENERATE";
    }
    return "UNKNOWN";
}

MomentReport moments(const FockState& state, const OperatorRep& ops) {
    require_matching_dim(state, ops);
    MomentReport r;
    for (int n = 0; n < state.dim(); ++n) {
        const double p = std::norm(state.coeff(n));
        r.mean_n += p * n;
        r.mean_n2 += p * n * n;
    }
    const Eigen::VectorXcd psi = as_vector(state);
    r.mean_phi = psi.dot(ops.phi_matrix * psi).real();
    r.mean_phi2 = psi.dot(ops.phi2_matrix * psi).real();
    r.delta_n = deviation(r.mean_n2, r.mean_n);
    r.delta_phi = deviation(r.mean_phi2, r.mean_phi);
    return r;
}

MomentReport moments_quadrature(const FockState& state, int grid_size) {
    const int M = grid_size > 0 ? grid_size : 8 * state.dim();
    const PhaseWave wave = to_phase_wave(state, M);
    const PhaseWave n_wave = apply_number(wave);
    MomentReport r;
    r.mean_n = inner_product(wave, n_wave).real();
    r.mean_n2 = inner_product(n_wave, n_wave).real();
    r.mean_phi = phase_weighted_inner(wave, wave, 1).real();
    r.mean_phi2 = phase_weighted_inner(wave, wave, 2).real();
    r.delta_n = deviation(r.mean_n2, r.mean_n);
    r.delta_phi = deviation(r.mean_phi2, r.mean_phi);
    return r;
}

cplx covariance_product(const FockState& state, const OperatorRep& ops) {
    require_matching_dim(state, ops);
    const Eigen::VectorXcd psi = as_vector(state);
    const cplx n_phi = psi.dot(ops.n_matrix * ops.phi_matrix * psi);  // (N psi, Phi psi)
    const double mean_n = psi.dot(ops.n_matrix * psi).real();
    const double mean_phi = psi.dot(ops.phi_matrix * psi).real();
    return n_phi - mean_n * mean_phi;
}

SchwartzResult schwartz_check(const FockState& state, const OperatorRep& ops,
                              const Tolerances& tol) {
    const MomentReport m = moments(state, ops);
    SchwartzResult res;
    res.lhs = m.delta_n * m.delta_phi;
    res.rhs = std::abs(covariance_product(state, ops));
    res.holds = res.lhs >= res.rhs - tol.eq_tol;
    return res;
}

RsurResult rsur_check(const FockState& state, const OperatorRep& ops,
                      const Tolerances& tol) {
    const MomentReport m = moments(state, ops);
    RsurResult res;
    res.lhs = m.delta_n * m.delta_phi;
    res.rhs = 0.5 * std::abs(bilinear_commutator(state, ops));
    res.rhs_half = 0.5;
    res.holds_eq3 = res.lhs >= res.rhs - tol.eq_tol;
    res.holds_eq4 = res.lhs >= res.rhs_half - tol.eq_tol;
    return res;
}

std::array<std::array<cplx, 2>, 2> condition7_residuals(const FockState& state,
                                                        int grid_size) {
    const int M = grid_size > 0 ? grid_size : 8 * state.dim();
    const PhaseWave wave = to_phase_wave(state, M);
    const PhaseWave n_wave = apply_number(wave);
    const cplx i_unit{0.0, 1.0};

    std::array<std::array<cplx, 2>, 2> r{};
    // r_NN: (N psi, N psi) - (psi, N N psi); both band-limited integrals
    r[0][0] = inner_product(n_wave, n_wave) - inner_product(wave, apply_number(n_wave));
    // r_NPhi: (N psi, Phi psi) - (psi, N Phi psi), product-rule composition
    r[0][1] = phase_weighted_inner(n_wave, wave, 1) -
              (i_unit * inner_product(wave, wave) + phase_weighted_inner(wave, n_wave, 1));
    // r_PhiN: (Phi psi, N psi) - (psi, Phi N psi); identical integrals
    r[1][0] = phase_weighted_inner(wave, n_wave, 1) - phase_weighted_inner(wave, n_wave, 1);
    // r_PhiPhi: (Phi psi, Phi psi) - (psi, Phi Phi psi); identical integrals
    r[1][1] = phase_weighted_inner(wave, wave, 2) - phase_weighted_inner(wave, wave, 2);
    return r;
}

Eq8Decomposition decompose_eq8(const FockState& state, const OperatorRep& ops,
                               int grid_size) {
    require_matching_dim(state, ops);
    const int M = grid_size > 0 ? grid_size : 8 * state.dim();
    const PhaseWave wave = to_phase_wave(state, M);
    const PhaseWave n_wave = apply_number(wave);
    const cplx i_unit{0.0, 1.0};

    const MomentReport m = moments(state, ops);
    const cplx norm = inner_product(wave, wave);
    const cplx phi_n = phase_weighted_inner(wave, n_wave, 1);  // (psi, Phi N psi)

    Eq8Decomposition d;
    // (psi, delta-N delta-Phi psi) + (psi, delta-Phi delta-N psi), with the
    // first composition expanded by the product rule N(Phi psi) = i psi + Phi N psi
    d.anticomm_part = 0.5 * (i_unit * norm + 2.0 * phi_n) - m.mean_n * m.mean_phi;
    // commutator expectation in the bilinear form; identical to the
    // operator-form value i exactly when the condition residuals vanish
    d.comm_part = 0.5 * i_unit * bilinear_commutator(state, ops);
    const cplx cov = covariance_product(state, ops);
    d.reconstruction_error = std::abs(cov - (d.anticomm_part - i_unit * d.comm_part));
    return d;
}

double delta_n_formula(const FockState& state) {
    double first = 0.0, second = 0.0;
    for (int n = 0; n < state.dim(); ++n) {
        const double p = std::norm(state.coeff(n));
        first += p * n;
        second += p * n * n;
    }
    return std::sqrt(std::max(0.0, second - first * first));
}

Classification classify(const MomentReport& report, double degenerate_tol,
                        double residual_tol) {
    if (report.delta_n * report.delta_phi < degenerate_tol) {
        return Classification::DEGENERATE;
    }
    double max_residual = 0.0;
    for (const auto& row : report.cond7_residuals) {
        for (const cplx& r : row) {
            max_residual = std::max(max_residual, std::abs(r));
        }
    }
    return max_residual < residual_tol ? Classification::RSUR_VALID
                                       : Classification::RSUR_INVALID;
}

MomentReport full_report(const FockState& state, const OperatorRep& ops,
                         const Tolerances& tol, int grid_size) {
    MomentReport r = moments(state, ops);
    r.cov = covariance_product(state, ops);
    r.schwartz_lhs = r.delta_n * r.delta_phi;
    r.schwartz_rhs = std::abs(r.cov);
    r.rsur_rhs = rsur_check(state, ops, tol).rhs;
    r.cond7_residuals = condition7_residuals(state, grid_size);
    const Eq8Decomposition d = decompose_eq8(state, ops, grid_size);
    r.anticomm_part = d.anticomm_part;
    r.comm_part = d.comm_part;
    r.reconstruction_error = d.reconstruction_error;
    r.boundary_b = std::norm(state.coefficient_sum());
    r.classification = classify(r);
    return r;
}

std::string report_csv_header() {
    return "state_id,mean_n,delta_n,mean_phi,delta_phi,re_cov,im_cov,"
           "schwartz_lhs,schwartz_rhs,rsur_rhs,r_nn_abs,r_nphi_abs,"
           "r_phin_abs,r_phiphi_abs,classification";
}

std::string report_csv_row(const std::string& state_id, const MomentReport& r) {
    char buf[512];
    // 17 significant digits: round-trip safe
    std::snprintf(buf, sizeof(buf),
                  "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,"
                  "%.17g,%.17g,%.17g,%.17g",
                  r.mean_n, r.delta_n, r.mean_phi, r.delta_phi, r.cov.real(),
                  r.cov.imag(), r.schwartz_lhs, r.schwartz_rhs, r.rsur_rhs,
                  std::abs(r.cond7_residuals[0][0]),
                  std::abs(r.cond7_residuals[0][1]),
                  std::abs(r.cond7_residuals[1][0]),
                  std::abs(r.cond7_residuals[1][1]));
    return state_id + "," + buf + "," + to_string(r.classification);
}

}  // namespace npo
