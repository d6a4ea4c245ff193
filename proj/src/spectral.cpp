#include "npo/spectral.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace npo {

Eigen::MatrixXd build_hamiltonian(int dim) {
    if (dim < 1) {
        throw std::invalid_argument("dim must be >= 1");
    }
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    for (int n = 0; n < dim; ++n) {
        h(n, n) = n + 0.5;
    }
    return h;
}

EigenResult solve_eigen(int dim) {
    const Eigen::MatrixXd h = build_hamiltonian(dim);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigensolver failed");
    }

    EigenResult result;
    for (int n = 0; n < dim; ++n) {
        const double structural = n + 0.5;
        const double solved = solver.eigenvalues()(n);
        if (std::abs(solved - structural) > 1e-10) {
            throw std::runtime_error("dense spectrum disagrees with the structural one");
        }
        result.levels.push_back({n, solved});

        // Phase-align the dense eigenvector to its dominant component so the
        // retained state matches the basis state up to the solver's rounding.
        Eigen::VectorXd v = solver.eigenvectors().col(n);
        int dominant = 0;
        v.cwiseAbs().maxCoeff(&dominant);
        if (v(dominant) < 0) v = -v;
        std::vector<cplx> coeffs(static_cast<size_t>(dim));
        for (int m = 0; m < dim; ++m) coeffs[static_cast<size_t>(m)] = v(m);
        result.eigenstates.push_back(make_fock_state(std::move(coeffs)));
    }
    return result;
}

MomentReport eigenstate_report(int n, int dim) {
    const FockState state = eigenstate(n, dim);  // throws on n out of range
    const OperatorRep ops = build_operators(dim);
    return full_report(state, ops);
}

std::string eigen_csv(const EigenResult& result) {
    std::string out = "n,energy,delta_n,delta_phi,re_cov,im_cov\n";
    const int dim = static_cast<int>(result.levels.size());
    const OperatorRep ops = build_operators(std::max(2, dim));
    for (const EigenLevel& level : result.levels) {
        const FockState state = eigenstate(level.n, std::max(2, dim));
        const MomentReport r = moments(state, ops);
        const cplx cov = covariance_product(state, ops);
        char buf[256];
        std::snprintf(buf, sizeof(buf), "%d,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                      level.n, level.energy, r.delta_n, r.delta_phi, cov.real(),
                      cov.imag());
        out += buf;
    }
    return out;
}

}  // namespace npo
