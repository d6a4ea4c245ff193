// Timing comparison of the OpenMP sweep kernel against the serial reference.
// Verifies the outputs are identical before reporting the speedup.

#include <chrono>
#include <cstdio>
#include <string>

#include "npo/sweep.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

template <typename F>
double time_seconds(F&& f) {
    const auto start = std::chrono::steady_clock::now();
    f();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(stop - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    npo::SweepConfig config;
    config.theta_steps = argc > 1 ? std::stoi(argv[1]) : 48;
    config.chi_steps = argc > 2 ? std::stoi(argv[2]) : 48;
    config.dim = argc > 3 ? std::stoi(argv[3]) : 16;

    std::vector<npo::SweepRow> serial_rows, parallel_rows;
    const double t_serial =
        time_seconds([&] { serial_rows = npo::run_sweep_serial(config); });
    const double t_parallel =
        time_seconds([&] { parallel_rows = npo::run_sweep(config); });

    const std::string a = npo::sweep_csv(config, serial_rows);
    const std::string b = npo::sweep_csv(config, parallel_rows);
    if (a != b) {
        std::printf("MISMATCH: parallel sweep differs from serial reference\n");
        return 1;
    }

    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::printf("grid %dx%d, dim %d, %d threads\n", config.theta_steps,
                config.chi_steps, config.dim, threads);
    std::printf("serial:   %8.3f s\n", t_serial);
    std::printf("parallel: %8.3f s  (speedup %.2fx)\n", t_parallel,
                t_serial / t_parallel);
    return 0;
}
