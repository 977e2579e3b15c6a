// analysis.cpp — Survival-probability diagnostics

#include "bjlab/analysis.hpp"

#include "bjlab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace bjlab {

ProbabilitySeries probability_series(const Trajectory& traj, StateIndex idx) {
    const std::size_t pos = idx.position(traj.params);
    ProbabilitySeries s;
    s.label = idx;
    s.times = traj.times;
    s.values.reserve(traj.size());
    for (const auto& x : traj.states) s.values.push_back(std::norm(x[pos]));
    return s;
}

std::vector<double> total_probability_series(const Trajectory& traj) {
    std::vector<double> out;
    out.reserve(traj.size());
    for (const auto& x : traj.states) out.push_back(total_probability(x));
    return out;
}

DecayFit fit_exponential(const ProbabilitySeries& series, FitWindow window) {
    if (!(window.lo < window.hi)) {
        throw FitError(FitError::Kind::EmptyWindow, "fit window must satisfy lo < hi");
    }
    std::vector<double> t;
    std::vector<double> y;
    for (std::size_t j = 0; j < series.size(); ++j) {
        const double tj = series.times[j];
        if (tj < window.lo || tj > window.hi) continue;
        const double v = series.values[j];
        if (!(v > 0.0)) {
            std::ostringstream msg;
            msg << "non-positive probability " << v << " at t = " << tj << " inside the fit window";
            throw FitError(FitError::Kind::NonPositiveValue, msg.str());
        }
        t.push_back(tj);
        y.push_back(std::log(v));
    }
    if (t.size() < kMinFitSamples) {
        std::ostringstream msg;
        msg << "fit window [" << window.lo << ", " << window.hi << "] holds " << t.size() << " samples, need "
            << kMinFitSamples;
        throw FitError(FitError::Kind::EmptyWindow, msg.str());
    }

    const auto count = static_cast<double>(t.size());
    double t_mean = 0.0, y_mean = 0.0;
    for (std::size_t j = 0; j < t.size(); ++j) {
        t_mean += t[j];
        y_mean += y[j];
    }
    t_mean /= count;
    y_mean /= count;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t j = 0; j < t.size(); ++j) {
        const double dt = t[j] - t_mean;
        sxx += dt * dt;
        sxy += dt * (y[j] - y_mean);
    }
    const double slope = sxy / sxx;
    const double intercept = y_mean - slope * t_mean;

    double ss = 0.0;
    for (std::size_t j = 0; j < t.size(); ++j) {
        const double r = y[j] - (intercept + slope * t[j]);
        ss += r * r;
    }

    DecayFit fit;
    fit.gamma = -slope;
    fit.log_intercept = intercept;
    fit.window = window;
    fit.rms_residual = std::sqrt(ss / count);
    fit.samples = t.size();
    return fit;
}

FitWindow default_fit_window(const ProbabilitySeries& series, std::optional<double> horizon) {
    const auto& p = series.values;
    const auto& t = series.times;
    if (p.size() < 2) throw FitError(FitError::Kind::NoDecay, "series too short to locate a decay");

    std::size_t last = p.size() - 1;
    if (horizon) {
        while (last > 0 && t[last] > *horizon) --last;
    }
    std::size_t exit = last;
    for (std::size_t j = 1; j < last; ++j) {
        if (p[j] < p[j - 1] && p[j] < p[j + 1]) {
            exit = j;
            break;
        }
    }

    const double floor = *std::min_element(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(exit) + 1);
    const double drop = p.front() - floor;
    if (!(drop > 0.0)) throw FitError(FitError::Kind::NoDecay, "survival probability never decreases");
    const double threshold = p.front() - 0.05 * drop;

    std::size_t entry = 0;
    while (entry < exit && p[entry] > threshold) ++entry;
    if (!(t[entry] < t[exit])) {
        throw FitError(FitError::Kind::NoDecay, "no decay segment before the first minimum");
    }
    return {t[entry], t[exit]};
}

PeakList detect_peaks(const ProbabilitySeries& series, double min_prominence) {
    if (!(min_prominence >= 0.0)) {
        throw ValidationError(ValidationError::Kind::BadArgument, "peak_prominence", "prominence must be >= 0");
    }
    const auto& p = series.values;
    PeakList peaks;
    if (p.size() < 3) return peaks;
    const double full_scale = *std::max_element(p.begin(), p.end());
    const double needed = min_prominence * full_scale;

    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
        if (!(p[i] > p[i - 1] && p[i] > p[i + 1])) continue;
        double left_min = p[i];
        for (std::size_t j = i; j-- > 0;) {
            if (p[j] > p[i]) break;
            left_min = std::min(left_min, p[j]);
        }
        double right_min = p[i];
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            if (p[j] > p[i]) break;
            right_min = std::min(right_min, p[j]);
        }
        if (p[i] - std::max(left_min, right_min) >= needed) peaks.push_back({series.times[i], p[i]});
    }
    return peaks;
}

namespace {

struct ShortTimeSums {
    double t2{0}, t3{0}, t4{0}, yt{0}, yt2{0};
    std::size_t count{0};
};

ShortTimeSums short_time_sums(const ProbabilitySeries& series, double t_probe) {
    if (!(t_probe > 0.0)) {
        throw ValidationError(ValidationError::Kind::BadArgument, "t_probe", "t_probe must be > 0");
    }
    ShortTimeSums s;
    for (std::size_t j = 0; j < series.size(); ++j) {
        const double t = series.times[j];
        if (!(t > 0.0) || t > t_probe) continue;
        const double y = 1.0 - series.values[j];
        const double t2 = t * t;
        s.t2 += t2;
        s.t3 += t2 * t;
        s.t4 += t2 * t2;
        s.yt += y * t;
        s.yt2 += y * t2;
        ++s.count;
    }
    if (s.count < 3) {
        throw FitError(FitError::Kind::InsufficientSamples, "need at least 3 samples in (0, t_probe]");
    }
    return s;
}

} // namespace

double short_time_coefficient(const ProbabilitySeries& series, double t_probe) {
    const auto s = short_time_sums(series, t_probe);
    return s.yt2 / s.t4;
}

ShortTimeFit short_time_fit(const ProbabilitySeries& series, double t_probe) {
    const auto s = short_time_sums(series, t_probe);
    // Normal equations for y = a t + c t^2.
    const double det = s.t2 * s.t4 - s.t3 * s.t3;
    return {(s.yt * s.t4 - s.yt2 * s.t3) / det, (s.t2 * s.yt2 - s.t3 * s.yt) / det};
}

double conservation_report(const Trajectory& traj) {
    return rhs_norm_preservation_check(traj);
}

} // namespace bjlab
