// Uncertainty diagnostics: deviations, the covariance scalar product, both
// sides of the Schwartz and Robertson-Schrodinger relations, the scalar-
// product condition residuals that separate them, and the anticommutator/
// commutator decomposition of the covariance.

#pragma once

#include <array>
#include <string>

#include "npo/operators.hpp"
#include "npo/state.hpp"

namespace npo {

enum class Classification { RSUR_VALID, RSUR_INVALID, DEGENERATE };

std::string to_string(Classification c);

// Index order for the residual matrix r_jk = (A_j psi, A_k psi) - (psi, A_j A_k psi):
// 0 = N, 1 = Phi.
struct MomentReport {
    double mean_n = 0, mean_n2 = 0;
    double mean_phi = 0, mean_phi2 = 0;
    double delta_n = 0, delta_phi = 0;
    cplx cov;                    // (delta-N psi, delta-Phi psi)
    double schwartz_lhs = 0;     // Delta N * Delta Phi
    double schwartz_rhs = 0;     // |cov|
    double rsur_rhs = 0;         // (1/2) |<[N, Phi]>| in the bilinear form
    std::array<std::array<cplx, 2>, 2> cond7_residuals{};
    cplx anticomm_part;
    cplx comm_part;
    double reconstruction_error = 0;
    double boundary_b = 0;       // |sum_n C_n|^2
    Classification classification = Classification::RSUR_INVALID;
};

// Means and standard deviations only (matrix path for Phi moments, diagonal
// Fock action for N). grid_size = 0 picks the default 8 * dim.
MomentReport moments(const FockState& state, const OperatorRep& ops);

// Same Phi moments evaluated on the wave via phase_weighted_inner; must agree
// with the matrix path within eq_tol (cross-validated in the test suite).
MomentReport moments_quadrature(const FockState& state, int grid_size = 0);

// (delta-N psi, delta-Phi psi) = (N psi, Phi psi) - <N><Phi>. Both factors
// act directly on psi, so no composition (and no boundary term) is involved.
cplx covariance_product(const FockState& state, const OperatorRep& ops);

struct SchwartzResult {
    double lhs, rhs;
    bool holds;
};
SchwartzResult schwartz_check(const FockState& state, const OperatorRep& ops,
                              const Tolerances& tol = {});

struct RsurResult {
    double lhs;       // Delta N * Delta Phi
    double rhs;       // (1/2) |<[N, Phi]>| bilinear form
    double rhs_half;  // the naive 1/2 bound
    bool holds_eq3;
    bool holds_eq4;
};
RsurResult rsur_check(const FockState& state, const OperatorRep& ops,
                      const Tolerances& tol = {});

// r_jk for (j, k) over {N, Phi}^2 with product-rule compositions. Structure:
// r_NN = r_PhiPhi = r_PhiN = 0 identically; r_NPhi carries the boundary
// defect, |r_NPhi| = |sum_n C_n|^2.
std::array<std::array<cplx, 2>, 2> condition7_residuals(const FockState& state,
                                                        int grid_size = 0);

struct Eq8Decomposition {
    cplx anticomm_part;  // (1/2) (psi, {delta-N, delta-Phi} psi), product rule
    cplx comm_part;      // (1/2) (psi, i [N, Phi] psi), bilinear commutator
    double reconstruction_error;  // |cov - (anticomm_part - i comm_part)|
};
Eq8Decomposition decompose_eq8(const FockState& state, const OperatorRep& ops,
                               int grid_size = 0);

// [ sum |C_n|^2 n^2 - (sum |C_n|^2 n)^2 ]^{1/2}, straight from the
// coefficients; must match the operator-path delta_n to 1e-12.
double delta_n_formula(const FockState& state);

Classification classify(const MomentReport& report,
                        double degenerate_tol = 1e-10,
                        double residual_tol = 1e-8);

// One-stop evaluation: moments, covariance, both relation checks, residuals,
// decomposition, classification.
MomentReport full_report(const FockState& state, const OperatorRep& ops,
                         const Tolerances& tol = {}, int grid_size = 0);

// Fixed CSV schema shared by analyze and sweep outputs.
std::string report_csv_header();
std::string report_csv_row(const std::string& state_id, const MomentReport& r);

}  // namespace npo
