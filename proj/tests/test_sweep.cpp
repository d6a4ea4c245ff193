#include <cmath>

#include <doctest.h>

#include "npo/sweep.hpp"

using namespace npo;

namespace {
constexpr double PI = TWO_PI / 2.0;

SweepConfig small_config() {
    SweepConfig config;
    config.theta_steps = 5;
    config.chi_steps = 8;
    config.dim = 4;
    return config;
}
}  // namespace

TEST_CASE("two-mode family parameterization") {
    const SweepConfig config = small_config();
    // theta = pi/4, chi = pi: B = 1 + sin(2 theta) cos(chi) = 0
    const FockState null_b = sweep_state(config, PI / 4.0, PI);
    CHECK(std::norm(null_b.coefficient_sum()) < 1e-15);
    // chi = 0: B = 2
    const FockState full_b = sweep_state(config, PI / 4.0, 0.0);
    CHECK(std::norm(full_b.coefficient_sum()) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("three-mode family is normalized") {
    SweepConfig config = small_config();
    config.family = Family::THREE_MODE;
    config.modes = {0, 1, 3};
    const FockState s = sweep_state(config, 0.7, 1.3);
    double norm_sq = 0;
    for (const cplx& c : s.coeffs()) norm_sq += std::norm(c);
    CHECK(norm_sq == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(s.coeff(2)) == 0.0);
}

TEST_CASE("config validation") {
    SweepConfig config = small_config();
    config.theta_steps = 1;
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);

    config = small_config();
    config.modes = {0, 0};
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);

    config = small_config();
    config.modes = {0, 7};  // outside dim = 4
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);

    config = small_config();
    config.family = Family::THREE_MODE;  // still two modes listed
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
}

TEST_CASE("sweep rows are complete, finite, and Schwartz-consistent") {
    const SweepConfig config = small_config();
    const std::vector<SweepRow> rows = run_sweep(config);
    REQUIRE(rows.size() == 40);
    for (const SweepRow& row : rows) {
        CHECK(std::isfinite(row.report.delta_phi));
        CHECK(std::isfinite(row.report.schwartz_lhs));
        CHECK(row.report.schwartz_lhs >= row.report.schwartz_rhs - 1e-10);
    }
    // row-major theta then chi
    CHECK(rows[0].theta == 0.0);
    CHECK(rows[config.chi_steps].theta > 0.0);
    CHECK(rows[1].chi == doctest::Approx(TWO_PI / config.chi_steps));
}

TEST_CASE("parallel kernel matches the serial reference byte for byte") {
    const SweepConfig config = small_config();
    const std::string parallel = sweep_csv(config, run_sweep(config));
    const std::string serial = sweep_csv(config, run_sweep_serial(config));
    CHECK(parallel == serial);
    CHECK(parallel == sweep_csv(config, run_sweep(config)));
    CHECK(parallel.find("nan") == std::string::npos);
    CHECK(parallel.find("inf") == std::string::npos);
}

TEST_CASE("B = 0 locus shows up in the footer") {
    SweepConfig config;
    config.theta_steps = 9;  // theta = pi/4 is on this grid
    config.chi_steps = 8;    // chi = pi is on this grid
    config.dim = 4;
    const std::string csv = sweep_csv(config, run_sweep(config));
    CHECK(csv.find("# b_zero_locus") != std::string::npos);
    CHECK(csv.find("# count") != std::string::npos);
}

TEST_CASE("sweep config parsing") {
    const SweepConfig config = parse_sweep_config(
        "# comment\nfamily = two_mode\nmodes = 0,2\ntheta_steps = 4\n"
        "chi_steps = 6\ndim = 5\nseed = 42\n");
    CHECK(config.family == Family::TWO_MODE);
    CHECK(config.modes == std::vector<int>{0, 2});
    CHECK(config.theta_steps == 4);
    CHECK(config.chi_steps == 6);
    CHECK(config.dim == 5);
    CHECK(config.seed == 42);

    CHECK_THROWS_AS(parse_sweep_config("family = nope\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_sweep_config("bogus line\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_sweep_config("theta_steps = many\n"), std::invalid_argument);
}
