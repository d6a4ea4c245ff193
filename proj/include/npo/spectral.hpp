// Phase-representation treatment of the oscillator: H = N + 1/2 (units of
// hbar omega), its eigenproblem, and the per-level characteristics.
//
// H is diagonal in the Fourier/Fock basis, so the spectrum {n + 1/2} is
// structural; a dense-diagonalization path is run as well and must agree, so
// the procedure is demonstrated rather than asserted. Negative-n modes are
// excluded from the basis by construction (E > 0).

#pragma once

#include <Eigen/Dense>
#include <vector>

#include "npo/state.hpp"
#include "npo/uncertainty.hpp"

namespace npo {

struct EigenLevel {
    int n;
    double energy;  // units of hbar omega
};

struct EigenResult {
    std::vector<EigenLevel> levels;
    std::vector<FockState> eigenstates;
};

// H = N + (1/2) I in the Fock basis; real diagonal.
Eigen::MatrixXd build_hamiltonian(int dim);

// Eigenpairs of H, sorted by energy. The dense solver output is matched
// against the structural spectrum within 1e-10 and its eigenvectors are
// phase-aligned to the basis states.
EigenResult solve_eigen(int dim);

// Full uncertainty report for level n; delegates to the uncertainty module.
MomentReport eigenstate_report(int n, int dim);

// CSV for the `eigen` subcommand: n, energy, delta_n, delta_phi, re_cov, im_cov.
std::string eigen_csv(const EigenResult& result);

}  // namespace npo
