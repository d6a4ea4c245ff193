// Dirac number and phase operators in the truncated Fock basis and their
// actions on phase-circle waves.
//
// Matrix elements (closed form, m != n with k = m - n):
//   N[m][n]    = n delta_mn
//   Phi[m][n]  = pi delta_mn  -  i / k
//   Phi2[m][n] = (4 pi^2 / 3) delta_mn  +  2 / k^2  -  2 pi i / k
//   a |n>      = sqrt(n) |n-1>
//
// Phi2 is an independent exact matrix, not Phi * Phi: squaring the truncated
// Phi matrix picks up an O(1/D) truncation error.

#pragma once

#include <Eigen/Dense>

#include "npo/state.hpp"

namespace npo {

struct OperatorRep {
    int dim;
    Eigen::MatrixXcd n_matrix;
    Eigen::MatrixXcd phi_matrix;
    Eigen::MatrixXcd phi2_matrix;
    Eigen::MatrixXcd lower_matrix;  // annihilation operator a
};

// Two inequivalent evaluations of <[N, Phi]> on one state.
//
// operator_form applies the commutator as an operator via the exact product
// rule, which gives i * (psi, psi) identically. bilinear_form is the
// left-action (matrix-element) evaluation psi^dag (N Phi - Phi N) psi, which
// carries the boundary term. Their difference is i * B with
// B = |sum_n C_n|^2; for the reversed-orientation integral
// (N psi, Phi psi) - (psi, N Phi psi) the same magnitude appears with the
// opposite sign (-i B). Only the magnitude is asserted anywhere.
struct CommutatorReport {
    cplx operator_form;
    cplx bilinear_form;
    cplx defect;           // operator_form - bilinear_form
    double boundary_value; // B = |sum_n C_n|^2
};

// Builds the exact matrices at truncation dim; throws std::invalid_argument
// for dim < 2.
OperatorRep build_operators(int dim);

// Spectral application of N = i d/dPhi: mode e^{-i n Phi} is scaled by n.
// Throws if significant amplitude sits at the Nyquist mode or on negative-n
// modes (aliasing).
PhaseWave apply_number(const PhaseWave& wave);

// Sample-wise multiplication by Phi_k. The result is no longer a trig
// polynomial of the same degree; integrals against it must go through
// phase_weighted_inner or the product-rule compositions below.
PhaseWave apply_phase(const PhaseWave& wave);

// N(Phi psi) by the exact product rule: i psi + Phi (N psi). This is the
// operator (domain) definition of the composition.
PhaseWave apply_number_after_phase(const PhaseWave& wave);

// Diagnostic variant: spectral differentiation applied directly to the
// non-periodic product Phi psi. Gibbs-contaminated; kept only to demonstrate
// what the product rule avoids. Surfaced through --naive-composition.
PhaseWave apply_number_after_phase_naive(const PhaseWave& wave);

// Evaluates (N psi, Phi psi) - (psi, N Phi psi) by quadrature with the
// product-rule composition and fills the full CommutatorReport.
// grid_size = 0 picks the default 8 * dim.
CommutatorReport boundary_defect(const FockState& state, int grid_size = 0);

}  // namespace npo
