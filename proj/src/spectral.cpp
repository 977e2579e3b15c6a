// spectral.cpp — Secular-equation root finding and exact propagation

#include "bjlab/spectral.hpp"

#include "bjlab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace bjlab {

namespace {

// Roots are located as lambda = pole_a + tau, where pole_a is a dark level.
// Distances to the other poles are then (a - k) * epsilon + tau, which keeps
// full relative precision in tau even when a root hugs a pole.
class ShiftedSecular {
public:
    ShiftedSecular(const ModelParams& p, int anchor) : p_(p), anchor_(anchor), v2_(p.vbar * p.vbar) {}

    // Offset of the anchor pole from omega_s.
    double anchor_offset() const { return anchor_ * p_.epsilon; }

    double distance(int k, double tau) const { return (anchor_ - k) * p_.epsilon + tau; }

    double value(double tau) const {
        double sum = 0.0;
        for (int k = -p_.m; k <= p_.m; ++k) sum += v2_ / distance(k, tau);
        return anchor_offset() + tau - sum;
    }

    double slope(double tau) const {
        double sum = 1.0;
        for (int k = -p_.m; k <= p_.m; ++k) {
            const double d = distance(k, tau);
            sum += v2_ / (d * d);
        }
        return sum;
    }

    double bright_weight(double tau) const {
        double sum = 1.0;
        for (int k = -p_.m; k <= p_.m; ++k) {
            const double d = distance(k, tau);
            sum += v2_ / (d * d);
        }
        return 1.0 / sum;
    }

private:
    const ModelParams& p_;
    int anchor_;
    double v2_;
};

// Finds the single zero of an increasing function on the open bracket
// (lo, hi): value(lo+) < 0 < value(hi-). Bisection first, then Newton with a
// bisection fallback whenever the Newton iterate leaves the bracket.
double refine_root(const ShiftedSecular& f, double lo, double hi) {
    constexpr int kMaxIter = 400;
    constexpr double kCoarse = 1e-8;
    constexpr double kRelTol = 1e-13;
    const double eps = std::numeric_limits<double>::epsilon();

    const double scale = hi - lo;
    int iter = 0;
    while (hi - lo > kCoarse * scale && iter < kMaxIter) {
        const double mid = 0.5 * (lo + hi);
        const double g = f.value(mid);
        if (g == 0.0) return mid;
        (g < 0.0 ? lo : hi) = mid;
        ++iter;
    }

    double tau = 0.5 * (lo + hi);
    for (; iter < kMaxIter; ++iter) {
        const double g = f.value(tau);
        if (g == 0.0) return tau;
        (g < 0.0 ? lo : hi) = tau;
        double next = tau - g / f.slope(tau);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        const double step = std::abs(next - tau);
        tau = next;
        // Converged to full precision in tau, which implies kRelTol in lambda.
        if (step <= 4.0 * eps * std::abs(tau) || hi - lo <= 4.0 * eps * std::abs(tau)) return tau;
    }
    const double lambda_scale = std::max(std::abs(f.anchor_offset() + tau), std::abs(tau));
    if (hi - lo <= kRelTol * lambda_scale) return tau;
    throw ConvergenceError("secular root did not converge");
}

ArrowheadSpectrum uncoupled_spectrum(const ModelParams& params) {
    const auto h = build_hamiltonian(params);
    std::vector<std::size_t> order(h.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return h.diag[a] < h.diag[b]; });
    ArrowheadSpectrum s;
    for (auto i : order) {
        s.eigenvalues.push_back(h.diag[i]);
        s.bright_weights.push_back(i == 0 ? 1.0 : 0.0);
    }
    return s;
}

} // namespace

double secular_function(const ModelParams& params, double lambda) {
    std::vector<double> dist;
    dist.reserve(params.dark_count());
    for (int k = -params.m; k <= params.m; ++k) {
        const double d = lambda - level_frequency(params, StateIndex::dark(k));
        if (d == 0.0) throw PoleError("secular_function evaluated on a dark level");
        dist.push_back(d);
    }
    std::sort(dist.begin(), dist.end(), [](double a, double b) { return std::abs(a) < std::abs(b); });
    const double v2 = params.vbar * params.vbar;
    double sum = 0.0;
    for (double d : dist) sum += v2 / d;
    return lambda - params.omega_s - sum;
}

double secular_derivative(const ModelParams& params, double lambda) {
    const double v2 = params.vbar * params.vbar;
    double sum = 1.0;
    for (int k = -params.m; k <= params.m; ++k) {
        const double d = lambda - level_frequency(params, StateIndex::dark(k));
        sum += v2 / (d * d);
    }
    return sum;
}

ArrowheadSpectrum solve_spectrum(const ModelParams& params) {
    validate(params);
    if (params.vbar == 0.0) return uncoupled_spectrum(params);

    const int m = params.m;
    const double eps = params.epsilon;
    ArrowheadSpectrum s;
    s.eigenvalues.reserve(params.n());
    s.bright_weights.reserve(params.n());

    auto emit = [&](const ShiftedSecular& f, double tau) {
        s.eigenvalues.push_back(params.omega_s + f.anchor_offset() + tau);
        s.bright_weights.push_back(f.bright_weight(tau));
    };

    // Gershgorin-style enclosure for the two outer roots.
    double reach = params.vbar * static_cast<double>(params.n()) + eps;

    {
        ShiftedSecular f(params, -m);
        while (f.value(-reach) >= 0.0) reach *= 2.0;
        emit(f, refine_root(f, -reach, 0.0));
    }

    // One root strictly inside each gap between adjacent dark levels. Anchor
    // on whichever pole the root is closer to.
    for (int k = -m; k < m; ++k) {
        ShiftedSecular left(params, k);
        const double half = 0.5 * eps;
        if (left.value(half) > 0.0) {
            emit(left, refine_root(left, 0.0, half));
        } else {
            ShiftedSecular right(params, k + 1);
            emit(right, refine_root(right, -half, 0.0));
        }
    }

    {
        ShiftedSecular f(params, m);
        while (f.value(reach) <= 0.0) reach *= 2.0;
        emit(f, refine_root(f, 0.0, reach));
    }
    return s;
}

Complex propagate(const ArrowheadSpectrum& spectrum, double t) {
    Complex amp{0.0, 0.0};
    for (std::size_t j = 0; j < spectrum.eigenvalues.size(); ++j) {
        amp += spectrum.bright_weights[j] * std::polar(1.0, -spectrum.eigenvalues[j] * t);
    }
    return amp;
}

AmplitudeVector propagate_full(const ModelParams& params, const ArrowheadSpectrum& spectrum, double t) {
    AmplitudeVector x(params.n(), Complex{0.0, 0.0});
    if (params.vbar == 0.0) {
        x[0] = std::polar(1.0, -params.omega_s * t);
        return x;
    }
    for (std::size_t j = 0; j < spectrum.eigenvalues.size(); ++j) {
        const double lambda = spectrum.eigenvalues[j];
        const double w = spectrum.bright_weights[j];
        const Complex phase = std::polar(1.0, -lambda * t);
        x[0] += w * phase;
        for (int k = -params.m; k <= params.m; ++k) {
            // lambda - omega_k, measured from omega_s to avoid cancellation.
            const double d = (lambda - params.omega_s) - k * params.epsilon;
            x[static_cast<std::size_t>(k + params.m + 1)] += (params.vbar * w / d) * phase;
        }
    }
    return x;
}

} // namespace bjlab
