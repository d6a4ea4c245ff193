// Parameter sweeps over superposition families C_n(theta, chi).
//
// TWO_MODE:   C_a = cos(theta), C_b = e^{i chi} sin(theta)
// THREE_MODE: C_a = cos(theta), C_b = e^{i chi} sin(theta)/sqrt(2),
//             C_c = e^{2 i chi} sin(theta)/sqrt(2)
// theta on [0, pi/2] inclusive (theta_steps points), chi on [0, 2 pi)
// (chi_steps points).
//
// Grid points are independent; the OpenMP kernel fills a preallocated row
// vector by index and is bit-identical to the serial reference, which is kept
// for testing and benchmarking.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "npo/uncertainty.hpp"

namespace npo {

enum class Family { TWO_MODE, THREE_MODE };

struct SweepConfig {
    Family family = Family::TWO_MODE;
    std::vector<int> modes{0, 1};
    int theta_steps = 2;
    int chi_steps = 2;
    int dim = 16;
    Tolerances tolerances{};
    std::uint64_t seed = 0;

    void validate() const;  // throws std::invalid_argument
};

struct SweepRow {
    double theta, chi;
    std::string state_id;
    MomentReport report;
};

// Coefficients of the family member at (theta, chi), embedded at the
// configured modes in a dim-sized vector.
FockState sweep_state(const SweepConfig& config, double theta, double chi);

// Row-major theta-then-chi order, one row per grid point.
std::vector<SweepRow> run_sweep(const SweepConfig& config);

// Serial reference implementation; must produce identical rows.
std::vector<SweepRow> run_sweep_serial(const SweepConfig& config);

// Header, theta/chi + report columns per row, and a comment footer with
// classification counts and the measured B ~ 0 locus.
std::string sweep_csv(const SweepConfig& config,
                      const std::vector<SweepRow>& rows);

// Flat key=value config text: family, modes (comma-separated), theta_steps,
// chi_steps, dim, seed.
SweepConfig parse_sweep_config(const std::string& text);

}  // namespace npo
