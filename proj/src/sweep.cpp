#include "npo/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace npo {

void SweepConfig::validate() const {
    if (theta_steps < 2 || chi_steps < 2) {
        throw std::invalid_argument("sweep needs at least 2 steps per axis");
    }
    if (dim < 2) {
        throw std::invalid_argument("sweep dim must be >= 2");
    }
    const size_t expected = family == Family::TWO_MODE ? 2 : 3;
    if (modes.size() != expected) {
        throw std::invalid_argument("mode count does not match family");
    }
    std::vector<int> sorted = modes;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("modes must be distinct");
    }
    for (int m : modes) {
        if (m < 0 || m >= dim) {
            throw std::invalid_argument("mode index outside truncation");
        }
    }
    tolerances.validate();
}

FockState sweep_state(const SweepConfig& config, double theta, double chi) {
    std::vector<cplx> coeffs(static_cast<size_t>(config.dim), cplx{0.0});
    const cplx phase = std::polar(1.0, chi);
    if (config.family == Family::TWO_MODE) {
        coeffs[static_cast<size_t>(config.modes[0])] = std::cos(theta);
        coeffs[static_cast<size_t>(config.modes[1])] = phase * std::sin(theta);
    } else {
        const double s = std::sin(theta) / std::sqrt(2.0);
        coeffs[static_cast<size_t>(config.modes[0])] = std::cos(theta);
        coeffs[static_cast<size_t>(config.modes[1])] = phase * s;
        coeffs[static_cast<size_t>(config.modes[2])] = phase * phase * s;
    }
    return make_fock_state(std::move(coeffs));
}

namespace {

constexpr double PI = TWO_PI / 2.0;

SweepRow evaluate_point(const SweepConfig& config, const OperatorRep& ops,
                        int ti, int ci) {
    SweepRow row;
    row.theta = (PI / 2.0) * ti / (config.theta_steps - 1);
    row.chi = TWO_PI * ci / config.chi_steps;
    char id[64];
    std::snprintf(id, sizeof(id), "t%d_x%d", ti, ci);
    row.state_id = id;
    row.report = full_report(sweep_state(config, row.theta, row.chi), ops,
                             config.tolerances);
    return row;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
    config.validate();
    const OperatorRep ops = build_operators(config.dim);
    const int total = config.theta_steps * config.chi_steps;
    std::vector<SweepRow> rows(static_cast<size_t>(total));
    // rows are independent; deterministic merge by row index
#pragma omp parallel for schedule(dynamic)
    for (int idx = 0; idx < total; ++idx) {
        rows[static_cast<size_t>(idx)] = evaluate_point(
            config, ops, idx / config.chi_steps, idx % config.chi_steps);
    }
    return rows;
}

std::vector<SweepRow> run_sweep_serial(const SweepConfig& config) {
    config.validate();
    const OperatorRep ops = build_operators(config.dim);
    std::vector<SweepRow> rows;
    rows.reserve(static_cast<size_t>(config.theta_steps) * config.chi_steps);
    for (int ti = 0; ti < config.theta_steps; ++ti) {
        for (int ci = 0; ci < config.chi_steps; ++ci) {
            rows.push_back(evaluate_point(config, ops, ti, ci));
        }
    }
    return rows;
}

std::string sweep_csv(const SweepConfig& config,
                      const std::vector<SweepRow>& rows) {
    std::string out = "theta,chi,boundary_b," + report_csv_header() + "\n";
    std::map<std::string, int> counts;
    const SweepRow* b_zero = nullptr;
    for (const SweepRow& row : rows) {
        char buf[96];
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,", row.theta,
                      row.chi, row.report.boundary_b);
        out += buf;
        out += report_csv_row(row.state_id, row.report);
        out += "\n";
        ++counts[to_string(row.report.classification)];
        if (b_zero == nullptr || row.report.boundary_b < b_zero->report.boundary_b) {
            b_zero = &row;
        }
    }
    for (const auto& [name, count] : counts) {
        out += "# count " + name + " " + std::to_string(count) + "\n";
    }
    if (b_zero != nullptr && b_zero->report.boundary_b < 1e-8) {
        char buf[128];
        std::snprintf(buf, sizeof(buf), "# b_zero_locus theta=%.17g chi=%.17g\n",
                      b_zero->theta, b_zero->chi);
        out += buf;
    }
    char seed_buf[64];
    std::snprintf(seed_buf, sizeof(seed_buf), "# seed %llu\n",
                  static_cast<unsigned long long>(config.seed));
    out += seed_buf;
    return out;
}

SweepConfig parse_sweep_config(const std::string& text) {
    SweepConfig config;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        const size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("line " + std::to_string(line_no) +
                                        ": expected key=value");
        }
        auto trim = [](std::string s) {
            const size_t a = s.find_first_not_of(" \t\r");
            const size_t b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string{} : s.substr(a, b - a + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "family") {
                if (value == "two_mode") config.family = Family::TWO_MODE;
                else if (value == "three_mode") config.family = Family::THREE_MODE;
                else throw std::invalid_argument("unknown family '" + value + "'");
            } else if (key == "modes") {
                config.modes.clear();
                std::istringstream ms(value);
                std::string item;
                while (std::getline(ms, item, ',')) {
                    config.modes.push_back(std::stoi(item));
                }
            } else if (key == "theta_steps") {
                config.theta_steps = std::stoi(value);
            } else if (key == "chi_steps") {
                config.chi_steps = std::stoi(value);
            } else if (key == "dim") {
                config.dim = std::stoi(value);
            } else if (key == "seed") {
                config.seed = std::stoull(value);
            } else {
                throw std::invalid_argument("unknown key '" + key + "'");
            }
        } catch (const std::invalid_argument&) {
            throw;
        } catch (const std::exception&) {
            throw std::invalid_argument("line " + std::to_string(line_no) +
                                        ": bad value for " + key);
        }
    }
    config.validate();
    return config;
}

}  // namespace npo
