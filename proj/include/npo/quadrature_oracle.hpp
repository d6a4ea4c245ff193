// Independent quadrature oracle used by the verification suites.
//
// Composite Simpson on the closed interval [0, 2 pi], evaluating integrands
// from scratch (states are expanded analytically from their coefficients, no
// grid machinery, no closed-form matrix elements). Deliberately kept apart
// from the production integration path so the two can check each other.

#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "npo/state.hpp"

namespace npo::oracle {

// Composite Simpson with `panels` panels (rounded up to even).
inline cplx simpson(const std::function<cplx(double)>& f, int panels = 1 << 16) {
    if (panels % 2 != 0) ++panels;
    const double h = TWO_PI / panels;
    cplx sum = f(0.0) + f(TWO_PI);
    for (int k = 1; k < panels; ++k) {
        sum += f(k * h) * (k % 2 == 1 ? 4.0 : 2.0);
    }
    return sum * (h / 3.0);
}

// psi(phi) = sum_n C_n e^{-i n phi} / sqrt(2 pi), evaluated directly.
inline cplx eval_state(const std::vector<cplx>& coeffs, double phi) {
    cplx acc = 0.0;
    for (size_t n = 0; n < coeffs.size(); ++n) {
        acc += coeffs[n] * std::polar(1.0, -static_cast<double>(n) * phi);
    }
    return acc / std::sqrt(TWO_PI);
}

// (1/2 pi) integral of phi^power e^{i k phi}, the generic matrix element.
inline cplx matrix_element(int k, int power, int panels = 1 << 16) {
    return simpson(
               [&](double phi) {
                   return std::pow(phi, power) * std::polar(1.0, k * phi);
               },
               panels) /
           TWO_PI;
}

// integral of conj(f) phi^power g for two coefficient vectors.
inline cplx phase_moment(const std::vector<cplx>& f, const std::vector<cplx>& g,
                         int power, int panels = 1 << 16) {
    return simpson(
        [&](double phi) {
            return std::conj(eval_state(f, phi)) * std::pow(phi, power) *
                   eval_state(g, phi);
        },
        panels);
}

}  // namespace npo::oracle
