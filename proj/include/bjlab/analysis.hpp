// analysis.hpp — Probability series, exponential decay fits, recurrence peaks
// and the short-time / conservation diagnostics.

#pragma once

#include "bjlab/model.hpp"
#include "bjlab/ode.hpp"

#include <optional>
#include <vector>

namespace bjlab {

struct ProbabilitySeries {
    std::vector<double> times;
    std::vector<double> values;
    StateIndex label{StateIndex::bright()};

    std::size_t size() const noexcept { return times.size(); }
};

struct FitWindow {
    double lo{0.0};
    double hi{0.0};
};

struct DecayFit {
    double gamma{0.0};         // -slope of ln p against t
    double log_intercept{0.0};
    FitWindow window;
    double rms_residual{0.0};  // of ln p over the window
    std::size_t samples{0};
};

struct Peak {
    double time;
    double value;
};
using PeakList = std::vector<Peak>;

inline constexpr double kDefaultPeakProminence = 0.01;
inline constexpr double kDefaultShortTimeProbe = 0.05;
inline constexpr std::size_t kMinFitSamples = 10;

// values[j] = |x_idx(times[j])|^2.
ProbabilitySeries probability_series(const Trajectory& traj, StateIndex idx);

// p_tot(t) = sum_i |x_i(t)|^2 at every sample.
std::vector<double> total_probability_series(const Trajectory& traj);

// Ordinary least squares of ln(values) against times over the closed window.
// Throws FitError::EmptyWindow (fewer than kMinFitSamples samples) or
// FitError::NonPositiveValue.
DecayFit fit_exponential(const ProbabilitySeries& series, FitWindow window);

// Window for the exponential part of a bright-state survival series.
//
// The exit t_hi is the first strict local minimum of p_s, capped at `horizon`
// (normally the recurrence time 2 pi / epsilon), or the last sample. The entry
// t_lo skips the quadratic shoulder: the first time p_s has fallen by 5% of
// its total drop over [0, t_hi] (p_s <= 0.95 for a complete decay).
// Throws FitError::NoDecay when p_s does not fall, or the window is too short.
FitWindow default_fit_window(const ProbabilitySeries& series, std::optional<double> horizon = std::nullopt);

// Strict interior local maxima whose prominence, measured against the higher
// of the two flanking minima, is at least min_prominence times the series
// maximum. Endpoints are never peaks.
PeakList detect_peaks(const ProbabilitySeries& series, double min_prominence = kDefaultPeakProminence);

// Least-squares c in p(t) ~= 1 - c t^2 over samples with 0 < t <= t_probe.
// Throws FitError::InsufficientSamples with fewer than three such samples.
double short_time_coefficient(const ProbabilitySeries& series, double t_probe = kDefaultShortTimeProbe);

// Least-squares 1 - p(t) ~= a t + c t^2 over the same samples as above. The
// linear term a vanishes when dp/dt = 0 at t = 0.
struct ShortTimeFit {
    double linear;
    double quadratic;
};
ShortTimeFit short_time_fit(const ProbabilitySeries& series, double t_probe = kDefaultShortTimeProbe);

// max over samples of |p_tot - 1|.
double conservation_report(const Trajectory& traj);

} // namespace bjlab
