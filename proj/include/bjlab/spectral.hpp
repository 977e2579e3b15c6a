// spectral.hpp — Exact eigen-solution of the arrowhead Hamiltonian
//
// The eigenvalues are the zeros of the secular function
//
//   f(lambda) = lambda - omega_s - sum_k vbar^2 / (lambda - omega_k),
//
// which is strictly increasing between consecutive dark levels, so every
// root sits alone in its own interlacing interval. Exact propagation of the
// bright state then follows from the eigen-expansion
//
//   x_s(t) = sum_j w_j exp(-i lambda_j t),   w_j = |<s|lambda_j>|^2.

#pragma once

#include "bjlab/model.hpp"
#include "bjlab/ode.hpp"

#include <vector>

namespace bjlab {

struct ArrowheadSpectrum {
    std::vector<double> eigenvalues;    // ascending
    std::vector<double> bright_weights; // aligned with eigenvalues, sums to 1
};

// Throws PoleError if lambda coincides with a dark-level frequency.
double secular_function(const ModelParams& params, double lambda);

// d f / d lambda = 1 + sum_k vbar^2 / (lambda - omega_k)^2. Always >= 1.
double secular_derivative(const ModelParams& params, double lambda);

// For vbar == 0 returns the unperturbed levels, with weight 1 on omega_s and
// 0 elsewhere. Throws ConvergenceError if a root fails to converge (internal
// fault, not expected for valid parameters).
ArrowheadSpectrum solve_spectrum(const ModelParams& params);

// Exact bright-state amplitude x_s(t).
Complex propagate(const ArrowheadSpectrum& spectrum, double t);

// Exact amplitude vector in canonical order; dark components come from the
// closed-form eigenvector entries c_k = vbar c_s / (lambda_j - omega_k).
AmplitudeVector propagate_full(const ModelParams& params, const ArrowheadSpectrum& spectrum, double t);

} // namespace bjlab
