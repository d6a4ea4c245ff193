// Oscillator states in the truncated Fock basis and on the phase circle.
//
// Conventions used throughout the library:
//   basis mode n  <->  psi_n(phi) = e^{-i n phi} / sqrt(2 pi),  n = 0 .. D-1
//   phase grid    Phi_k = 2 pi k / M,  k = 0 .. M-1   (0 included, 2 pi excluded)
//   scalar product (f, g) = integral over [0, 2 pi) of conj(f) g

#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace npo {

using cplx = std::complex<double>;

inline constexpr double TWO_PI = 6.283185307179586476925286766559;

struct Tolerances {
    double norm_tol = 1e-12;
    double herm_tol = 1e-12;
    double eq_tol = 1e-10;

    void validate() const;  // throws std::invalid_argument on nonpositive entries
};

// Normalized coefficient vector C_0..C_{D-1} over oscillator eigenstates.
// Construction goes through make_fock_state / eigenstate, which enforce
// unit norm; the scale factor applied during normalization is retained.
class FockState {
public:
    int dim() const { return static_cast<int>(coeffs_.size()); }
    const std::vector<cplx>& coeffs() const { return coeffs_; }
    cplx coeff(int n) const { return coeffs_[static_cast<size_t>(n)]; }

    // factor the raw input was multiplied by to reach unit norm
    double norm_scale() const { return norm_scale_; }

    // sum_n C_n, the amplitude whose squared modulus is the boundary value B
    cplx coefficient_sum() const;

    friend FockState make_fock_state(std::vector<cplx> coeffs);
    friend FockState eigenstate(int n, int dim);
    friend FockState from_phase_wave(const struct PhaseWave& wave, int dim);

private:
    FockState(std::vector<cplx> coeffs, double scale)
        : coeffs_(std::move(coeffs)), norm_scale_(scale) {}

    std::vector<cplx> coeffs_;
    double norm_scale_ = 1.0;
};

// Complex samples psi(Phi_k) on the uniform periodic grid.
struct PhaseWave {
    std::vector<cplx> samples;

    int size() const { return static_cast<int>(samples.size()); }
    double phi(int k) const { return TWO_PI * k / size(); }
};

// Scales the input to unit norm; throws std::invalid_argument("zero state")
// when every coefficient vanishes.
FockState make_fock_state(std::vector<cplx> coeffs);

// Basis state |n> in a D-dimensional truncation. Throws std::out_of_range
// unless 0 <= n < dim.
FockState eigenstate(int n, int dim);

// psi(Phi_k) = sum_n C_n e^{-i n Phi_k} / sqrt(2 pi). Requires M >= 2 dim
// (Nyquist-safe); throws std::invalid_argument otherwise.
PhaseWave to_phase_wave(const FockState& state, int M);

// Fourier analysis inverse of to_phase_wave: C_n = (psi_n, wave).
// Requires dim <= M/2. The recovered coefficients are taken as-is (no
// renormalization) so the roundtrip is the identity.
FockState from_phase_wave(const PhaseWave& wave, int dim);

// Periodic rectangle rule (2 pi / M) sum_k conj(f_k) g_k; exact for trig
// polynomials of total degree < M. Throws on grid-size mismatch.
cplx inner_product(const PhaseWave& f, const PhaseWave& g);

// integral of conj(f) Phi^power g over [0, 2 pi), power in {0, 1, 2}.
// The product conj(f) g is resolved into Fourier modes (exact while the
// product is band-limited to |j| < M/2) and each mode is integrated against
// Phi^power in closed form. This is the quadrature route used everywhere a
// bare Phi-weighted integral of non-periodic character appears.
cplx phase_weighted_inner(const PhaseWave& f, const PhaseWave& g, int power);

// Discrete Fourier coefficients t_j of a sampled function, indexed
// j = -(M/2 - 1) .. M/2 via result[(j + M) % M].
std::vector<cplx> mode_coefficients(const PhaseWave& wave);

// Component-wise complex Gaussian draw, normalized. Used by the property
// suites; the rng is the single source of randomness so runs are
// reproducible from the seed alone.
FockState random_fock_state(std::mt19937_64& rng, int dim);

// State-spec text format:
//   dim <D>
//   c <n> <re> <im>
//   # comment
// Unspecified coefficients are zero. Rejects n >= D and all-zero states.
FockState parse_state_spec(const std::string& text);

}  // namespace npo
