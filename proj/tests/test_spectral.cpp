#include <cmath>

#include <doctest.h>

#include "npo/spectral.hpp"

using namespace npo;

namespace {
constexpr double PI = TWO_PI / 2.0;
}

TEST_CASE("Hamiltonian is N + 1/2") {
    const Eigen::MatrixXd h = build_hamiltonian(4);
    for (int n = 0; n < 4; ++n) {
        CHECK(h(n, n) == doctest::Approx(n + 0.5));
    }
    CHECK(build_hamiltonian(1)(0, 0) == doctest::Approx(0.5));

    // H - I/2 is the number matrix
    const Eigen::MatrixXd n_part = h - 0.5 * Eigen::MatrixXd::Identity(4, 4);
    for (int n = 0; n < 4; ++n) CHECK(n_part(n, n) == doctest::Approx(n));
    CHECK_THROWS_AS(build_hamiltonian(0), std::invalid_argument);
}

TEST_CASE("spectrum is n + 1/2 independent of grid size") {
    for (int dim : {1, 5, 8, 16}) {
        const EigenResult result = solve_eigen(dim);
        REQUIRE(static_cast<int>(result.levels.size()) == dim);
        for (int n = 0; n < dim; ++n) {
            CHECK(result.levels[n].n == n);
            CHECK(std::abs(result.levels[n].energy - (n + 0.5)) < 1e-12);
        }
    }
}

TEST_CASE("dense eigenfunctions overlap the exact modes") {
    const EigenResult result = solve_eigen(8);
    for (int n = 0; n < 8; ++n) {
        const PhaseWave computed = to_phase_wave(result.eigenstates[n], 64);
        const PhaseWave exact = to_phase_wave(eigenstate(n, 8), 64);
        CHECK(std::abs(std::abs(inner_product(exact, computed)) - 1.0) < 1e-10);
        // pure phase modes: flat modulus 1/sqrt(2 pi)
        for (const cplx& v : computed.samples) {
            CHECK(std::abs(std::abs(v) - 1.0 / std::sqrt(TWO_PI)) < 1e-10);
        }
    }
}

TEST_CASE("per-level characteristics") {
    const MomentReport r0 = eigenstate_report(0, 8);
    CHECK(r0.delta_n < 1e-12);
    CHECK(r0.delta_phi == doctest::Approx(PI / std::sqrt(3.0)).epsilon(1e-10));
    CHECK(std::abs(r0.cov) < 1e-10);
    CHECK(r0.classification == Classification::DEGENERATE);

    // phase spread is n-independent
    const MomentReport r5 = eigenstate_report(5, 8);
    CHECK(r5.delta_phi == doctest::Approx(r0.delta_phi).epsilon(1e-12));

    CHECK_THROWS_AS(eigenstate_report(8, 8), std::out_of_range);
}

TEST_CASE("eigen CSV output") {
    const std::string csv = eigen_csv(solve_eigen(5));
    CHECK(csv.rfind("n,energy,delta_n,delta_phi,re_cov,im_cov\n", 0) == 0);
    size_t lines = 0;
    for (char ch : csv) lines += ch == '\n';
    CHECK(lines == 6);  // header + 5 levels
    CHECK(csv.find("4.5") != std::string::npos);
}
