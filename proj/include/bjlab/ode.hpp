// ode.hpp — Fixed-step RK4 propagation of the coupled amplitude equations
//
//   dx_j/dt = -i (omega_j x_j + vbar x_s)            j != s
//   dx_s/dt = -i (omega_s x_s + vbar sum_k x_k)
//
// i.e. dx/dt = -i H x with H the arrowhead Hamiltonian.

#pragma once

#include "bjlab/model.hpp"

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace bjlab {

using Complex = std::complex<double>;

// Amplitudes x_i(t) in canonical state order.
using AmplitudeVector = std::vector<Complex>;

inline constexpr double kDefaultDtMax = 1e-3;
inline constexpr std::size_t kDefaultSampleStride = 10;
inline constexpr double kConservationTolerance = 2.5e-6;

struct Trajectory {
    ModelParams params;
    std::vector<double> times;          // strictly increasing, times[0] == 0
    std::vector<AmplitudeVector> states; // one per entry of times
    double dt_max{kDefaultDtMax};
    double dt{0.0};                      // step size actually used
    std::size_t sample_stride{kDefaultSampleStride};

    std::size_t size() const noexcept { return times.size(); }
};

struct IntegrateOptions {
    double dt_max{kDefaultDtMax};
    std::size_t sample_stride{kDefaultSampleStride};
    // dt_max above kDefaultDtMax is rejected unless this is set.
    bool allow_coarse{false};
    // Throw ConservationError when a sample leaves 1 +/- conservation_tolerance.
    bool enforce_conservation{true};
    double conservation_tolerance{kConservationTolerance};
};

// x_s = 1, every dark amplitude 0.
AmplitudeVector initial_state(const ModelParams& params);

double total_probability(std::span<const Complex> state);

// dx/dt = -i H x. Throws ValidationError on a length mismatch.
AmplitudeVector derivative(const ModelParams& params, std::span<const Complex> state);

// Step count and step size covering [0, t_final] with dt <= dt_max.
struct StepPlan {
    std::size_t steps;
    double dt;
};
StepPlan plan_steps(double t_final, double dt_max);

// Integrates from the canonical initial state.
Trajectory integrate(const ModelParams& params, double t_final, const IntegrateOptions& opts = {});

// Integrates from an arbitrary initial vector (conservation is then checked
// against the initial norm).
Trajectory integrate(const ModelParams& params, const AmplitudeVector& initial, double t_final,
                     const IntegrateOptions& opts = {});

// max over samples of |p_tot - 1|.
double rhs_norm_preservation_check(const Trajectory& traj);

} // namespace bjlab
