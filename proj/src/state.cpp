#include "npo/state.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace npo {

void Tolerances::validate() const {
    if (norm_tol <= 0 || herm_tol <= 0 || eq_tol <= 0) {
        throw std::invalid_argument("tolerances must be strictly positive");
    }
}

cplx FockState::coefficient_sum() const {
    return std::accumulate(coeffs_.begin(), coeffs_.end(), cplx{0.0});
}

FockState make_fock_state(std::vector<cplx> coeffs) {
    if (coeffs.empty()) {
        throw std::invalid_argument("zero state");
    }
    double norm_sq = 0.0;
    for (const cplx& c : coeffs) norm_sq += std::norm(c);
    if (norm_sq == 0.0) {
        throw std::invalid_argument("zero state");
    }
    const double scale = 1.0 / std::sqrt(norm_sq);
    for (cplx& c : coeffs) c *= scale;
    return FockState(std::move(coeffs), scale);
}

FockState eigenstate(int n, int dim) {
    if (dim < 1) {
        throw std::invalid_argument("dim must be >= 1");
    }
    if (n < 0 || n >= dim) {
        throw std::out_of_range("eigenstate index out of range");
    }
    std::vector<cplx> coeffs(static_cast<size_t>(dim), cplx{0.0});
    coeffs[static_cast<size_t>(n)] = 1.0;
    return FockState(std::move(coeffs), 1.0);
}

PhaseWave to_phase_wave(const FockState& state, int M) {
    if (M < 2 * state.dim()) {
        throw std::invalid_argument("grid too small: M must be >= 2*dim (aliasing)");
    }
    const double amp = 1.0 / std::sqrt(TWO_PI);
    PhaseWave wave;
    wave.samples.resize(static_cast<size_t>(M));
    for (int k = 0; k < M; ++k) {
        const double phi = TWO_PI * k / M;
        cplx acc = 0.0;
        for (int n = 0; n < state.dim(); ++n) {
            acc += state.coeff(n) * std::polar(1.0, -n * phi);
        }
        wave.samples[static_cast<size_t>(k)] = acc * amp;
    }
    return wave;
}

FockState from_phase_wave(const PhaseWave& wave, int dim) {
    const int M = wave.size();
    if (dim < 1 || 2 * dim > M) {
        throw std::invalid_argument("dim too large for grid (aliasing)");
    }
    // C_n = (psi_n, wave) = sqrt(2 pi) / M * sum_k e^{i n Phi_k} w_k
    const double scale = std::sqrt(TWO_PI) / M;
    std::vector<cplx> coeffs(static_cast<size_t>(dim));
    for (int n = 0; n < dim; ++n) {
        cplx acc = 0.0;
        for (int k = 0; k < M; ++k) {
            acc += std::polar(1.0, n * TWO_PI * k / M) * wave.samples[static_cast<size_t>(k)];
        }
        coeffs[static_cast<size_t>(n)] = acc * scale;
    }
    return FockState(std::move(coeffs), 1.0);
}

cplx inner_product(const PhaseWave& f, const PhaseWave& g) {
    if (f.size() != g.size()) {
        throw std::invalid_argument("grid mismatch");
    }
    cplx acc = 0.0;
    for (int k = 0; k < f.size(); ++k) {
        acc += std::conj(f.samples[static_cast<size_t>(k)]) * g.samples[static_cast<size_t>(k)];
    }
    return acc * (TWO_PI / f.size());
}

std::vector<cplx> mode_coefficients(const PhaseWave& wave) {
    const int M = wave.size();
    std::vector<cplx> coeffs(static_cast<size_t>(M));
    for (int j = 0; j < M; ++j) {
        cplx acc = 0.0;
        for (int k = 0; k < M; ++k) {
            acc += wave.samples[static_cast<size_t>(k)] *
                   std::polar(1.0, -TWO_PI * static_cast<double>(j) * k / M);
        }
        coeffs[static_cast<size_t>(j)] = acc / static_cast<double>(M);
    }
    return coeffs;
}

namespace {

// integral over [0, 2 pi) of phi^power e^{i j phi}
cplx mode_integral(int j, int power) {
    switch (power) {
        case 0:
            return j == 0 ? cplx{TWO_PI} : cplx{0.0};
        case 1:
            return j == 0 ? cplx{TWO_PI * TWO_PI / 2.0}          // 2 pi^2
                          : cplx{0.0, -TWO_PI / j};              // -2 pi i / j
        case 2: {
            const double pi = TWO_PI / 2.0;
            return j == 0 ? cplx{8.0 * pi * pi * pi / 3.0}
                          : cplx{4.0 * pi / (static_cast<double>(j) * j),
                                 -4.0 * pi * pi / j};
        }
        default:
            throw std::invalid_argument("phase power must be 0, 1 or 2");
    }
}

}  // namespace

cplx phase_weighted_inner(const PhaseWave& f, const PhaseWave& g, int power) {
    if (f.size() != g.size()) {
        throw std::invalid_argument("grid mismatch");
    }
    const int M = f.size();
    PhaseWave product;
    product.samples.resize(static_cast<size_t>(M));
    for (int k = 0; k < M; ++k) {
        product.samples[static_cast<size_t>(k)] =
            std::conj(f.samples[static_cast<size_t>(k)]) * g.samples[static_cast<size_t>(k)];
    }
    const std::vector<cplx> modes = mode_coefficients(product);
    cplx acc = 0.0;
    for (int idx = 0; idx < M; ++idx) {
        const int j = idx <= M / 2 ? idx : idx - M;  // signed mode index
        acc += modes[static_cast<size_t>(idx)] * mode_integral(j, power);
    }
    return acc;
}

FockState random_fock_state(std::mt19937_64& rng, int dim) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<cplx> coeffs(static_cast<size_t>(dim));
    for (cplx& c : coeffs) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        c = cplx{re, im};
    }
    return make_fock_state(std::move(coeffs));
}

FockState parse_state_spec(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int dim = -1;
    std::vector<cplx> coeffs;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        std::string tag;
        fields >> tag;
        if (tag == "dim") {
            if (!(fields >> dim) || dim < 1) {
                throw std::invalid_argument("line " + std::to_string(line_no) +
                                            ": malformed dim");
            }
            coeffs.assign(static_cast<size_t>(dim), cplx{0.0});
        } else if (tag == "c") {
            if (dim < 1) {
                throw std::invalid_argument("line " + std::to_string(line_no) +
                                            ": coefficient before dim");
            }
            int n;
            double re, im;
            if (!(fields >> n >> re >> im)) {
                throw std::invalid_argument("line " + std::to_string(line_no) +
                                            ": malformed coefficient");
            }
            if (n < 0 || n >= dim) {
                throw std::out_of_range("line " + std::to_string(line_no) +
                                        ": index " + std::to_string(n) +
                                        " out of range for dim " + std::to_string(dim));
            }
            coeffs[static_cast<size_t>(n)] = cplx{re, im};
        } else {
            throw std::invalid_argument("line " + std::to_string(line_no) +
                                        ": unknown directive '" + tag + "'");
        }
    }
    if (dim < 1) {
        throw std::invalid_argument("state spec missing dim");
    }
    return make_fock_state(std::move(coeffs));  // rejects the all-zero case
}

}  // namespace npo
