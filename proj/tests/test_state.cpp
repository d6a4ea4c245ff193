#include <cmath>
#include <random>

#include <doctest.h>

#include "npo/quadrature_oracle.hpp"
#include "npo/state.hpp"

using namespace npo;

namespace {
constexpr double PI = TWO_PI / 2.0;
}

TEST_CASE("make_fock_state normalizes") {
    const FockState s = make_fock_state({cplx{1, 0}, cplx{1, 0}});
    CHECK(s.coeff(0).real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(s.coeff(1).real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(s.norm_scale() == doctest::Approx(1.0 / std::sqrt(2.0)));

    const FockState already = make_fock_state({cplx{1, 0}, 0.0, 0.0, 0.0});
    CHECK(std::abs(already.coeff(0) - cplx{1, 0}) < 1e-15);
    CHECK(already.norm_scale() == doctest::Approx(1.0));
}

TEST_CASE("zero state is rejected") {
    CHECK_THROWS_WITH_AS(make_fock_state({cplx{0, 0}, cplx{0, 0}}), "zero state",
                         std::invalid_argument);
    CHECK_THROWS_AS(make_fock_state({}), std::invalid_argument);
}

TEST_CASE("eigenstate placement and range check") {
    const FockState s = eigenstate(2, 4);
    CHECK(std::abs(s.coeff(2) - cplx{1, 0}) < 1e-15);
    CHECK(std::abs(s.coeff(0)) == 0.0);
    CHECK_THROWS_AS(eigenstate(4, 4), std::out_of_range);
    CHECK_THROWS_AS(eigenstate(-1, 4), std::out_of_range);
}

TEST_CASE("ground state wave is the constant 1/sqrt(2 pi)") {
    const PhaseWave w = to_phase_wave(eigenstate(0, 2), 64);
    for (const cplx& v : w.samples) {
        CHECK(std::abs(v - cplx{1.0 / std::sqrt(TWO_PI), 0.0}) < 1e-14);
    }
}

TEST_CASE("single-mode waves have flat modulus") {
    const PhaseWave w = to_phase_wave(eigenstate(1, 2), 64);
    for (const cplx& v : w.samples) {
        CHECK(std::abs(v) == doctest::Approx(1.0 / std::sqrt(TWO_PI)).epsilon(1e-12));
    }
}

TEST_CASE("equal superposition is constructive at phi = 0") {
    const FockState s = make_fock_state({cplx{1, 0}, cplx{1, 0}});
    const PhaseWave w = to_phase_wave(s, 64);
    // |C_0 + C_1|^2 / (2 pi) = 1 / pi
    CHECK(std::norm(w.samples[0]) == doctest::Approx(1.0 / PI).epsilon(1e-12));
}

TEST_CASE("to_phase_wave rejects undersized grids") {
    CHECK_THROWS_AS(to_phase_wave(eigenstate(0, 8), 15), std::invalid_argument);
}

TEST_CASE("rectangle rule is exact on the mode basis") {
    const int D = 8, M = 32;
    for (int m = 0; m < D; ++m) {
        for (int n = 0; n < D; ++n) {
            const cplx ip = inner_product(to_phase_wave(eigenstate(m, D), M),
                                          to_phase_wave(eigenstate(n, D), M));
            CHECK(std::abs(ip - (m == n ? cplx{1, 0} : cplx{0, 0})) < 1e-12);
        }
    }
}

TEST_CASE("inner product rejects mismatched grids") {
    CHECK_THROWS_AS(inner_product(to_phase_wave(eigenstate(0, 2), 16),
                                  to_phase_wave(eigenstate(0, 2), 32)),
                    std::invalid_argument);
}

TEST_CASE("phase moments match the Simpson oracle") {
    const FockState s0 = eigenstate(0, 2);
    const PhaseWave w0 = to_phase_wave(s0, 64);
    // (psi_0, Phi psi_0) = pi and (psi_0, Phi^2 psi_0) = 4 pi^2 / 3
    CHECK(std::abs(phase_weighted_inner(w0, w0, 1) - cplx{PI, 0}) < 1e-12);
    CHECK(std::abs(phase_weighted_inner(w0, w0, 2) - cplx{4 * PI * PI / 3, 0}) < 1e-12);

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 5; ++trial) {
        const FockState s = random_fock_state(rng, 6);
        const PhaseWave w = to_phase_wave(s, 48);
        for (int power = 0; power <= 2; ++power) {
            const cplx expected = oracle::phase_moment(s.coeffs(), s.coeffs(), power);
            CHECK(std::abs(phase_weighted_inner(w, w, power) - expected) < 1e-10);
        }
    }
}

TEST_CASE("roundtrip through the phase grid is the identity") {
    const FockState s = eigenstate(3, 8);
    const FockState back = from_phase_wave(to_phase_wave(s, 64), 8);
    for (int n = 0; n < 8; ++n) {
        CHECK(std::abs(back.coeff(n) - s.coeff(n)) < 1e-12);
    }

    const PhaseWave constant = to_phase_wave(eigenstate(0, 1), 16);
    const FockState ground = from_phase_wave(constant, 4);
    CHECK(std::abs(ground.coeff(0) - cplx{1, 0}) < 1e-12);
    for (int n = 1; n < 4; ++n) CHECK(std::abs(ground.coeff(n)) < 1e-12);
}

TEST_CASE("roundtrip property over seeded random states") {
    std::mt19937_64 rng(20260823);
    for (int trial = 0; trial < 100; ++trial) {
        const FockState s = random_fock_state(rng, 6);
        const FockState back = from_phase_wave(to_phase_wave(s, 16), 6);
        double worst = 0;
        for (int n = 0; n < 6; ++n) {
            worst = std::max(worst, std::abs(back.coeff(n) - s.coeff(n)));
        }
        CHECK(worst < 1e-10);
        const PhaseWave w = to_phase_wave(s, 16);
        CHECK(std::abs(inner_product(w, w) - cplx{1, 0}) < 1e-10);
    }
}

TEST_CASE("from_phase_wave rejects unresolvable dimensions") {
    CHECK_THROWS_AS(from_phase_wave(to_phase_wave(eigenstate(0, 4), 16), 9),
                    std::invalid_argument);
}

TEST_CASE("state spec parsing") {
    const FockState s = parse_state_spec("dim 2\nc 0 1 0\nc 1 1 0\n");
    CHECK(s.dim() == 2);
    CHECK(s.coeff(0).real() == doctest::Approx(1.0 / std::sqrt(2.0)));

    CHECK_THROWS_AS(parse_state_spec("dim 2\nc 5 1 0\n"), std::out_of_range);
    CHECK_THROWS_WITH_AS(parse_state_spec("dim 2\n"), "zero state",
                         std::invalid_argument);
    CHECK_THROWS_AS(parse_state_spec("dim 2\nc 0 oops\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_state_spec("c 0 1 0\n"), std::invalid_argument);

    // comments and implicit zeros
    const FockState t = parse_state_spec("# test\ndim 3\nc 2 0 1\n");
    CHECK(std::abs(t.coeff(2) - cplx{0, 1}) < 1e-15);
    CHECK(std::abs(t.coeff(0)) == 0.0);
}

TEST_CASE("tolerances must be positive") {
    Tolerances tol;
    tol.eq_tol = 0.0;
    CHECK_THROWS_AS(tol.validate(), std::invalid_argument);
}
