// ode.cpp — RK4 integrator for the bright-dark ladder amplitude equations

#include "bjlab/ode.hpp"

#include "bjlab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

namespace bjlab {

namespace {

constexpr Complex kMinusI{0.0, -1.0};

void check_length(const ModelParams& params, std::size_t len) {
    if (len != params.n()) {
        throw ValidationError(ValidationError::Kind::BadDimension, "state",
                              "state length " + std::to_string(len) + " does not match n = " +
                                  std::to_string(params.n()));
    }
}

// out = -i H x, using the arrowhead structure directly.
void apply_generator(const ArrowheadHamiltonian& h, std::span<const Complex> x, std::span<Complex> out) {
    const std::size_t n = h.diag.size();
    const Complex xs = x[0];
    Complex dark_sum{0.0, 0.0};
    for (std::size_t j = 1; j < n; ++j) {
        dark_sum += x[j];
        out[j] = kMinusI * (h.diag[j] * x[j] + h.coupling * xs);
    }
    out[0] = kMinusI * (h.diag[0] * xs + h.coupling * dark_sum);
}

class Rk4Stepper {
public:
    explicit Rk4Stepper(const ModelParams& params)
        : h_(build_hamiltonian(params)), k1_(params.n()), k2_(params.n()), k3_(params.n()), k4_(params.n()),
          tmp_(params.n()) {}

    void step(AmplitudeVector& x, double dt) {
        const std::size_t n = x.size();
        const double half = 0.5 * dt;
        apply_generator(h_, x, k1_);
        for (std::size_t i = 0; i < n; ++i) tmp_[i] = x[i] + half * k1_[i];
        apply_generator(h_, tmp_, k2_);
        for (std::size_t i = 0; i < n; ++i) tmp_[i] = x[i] + half * k2_[i];
        apply_generator(h_, tmp_, k3_);
        for (std::size_t i = 0; i < n; ++i) tmp_[i] = x[i] + dt * k3_[i];
        apply_generator(h_, tmp_, k4_);
        const double sixth = dt / 6.0;
        for (std::size_t i = 0; i < n; ++i) {
            x[i] += sixth * (k1_[i] + 2.0 * (k2_[i] + k3_[i]) + k4_[i]);
        }
    }

private:
    ArrowheadHamiltonian h_;
    AmplitudeVector k1_, k2_, k3_, k4_, tmp_;
};

bool all_finite(const AmplitudeVector& x) {
    for (const auto& c : x) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
    }
    return true;
}

} // namespace

AmplitudeVector initial_state(const ModelParams& params) {
    AmplitudeVector x(params.n(), Complex{0.0, 0.0});
    x[0] = Complex{1.0, 0.0};
    return x;
}

double total_probability(std::span<const Complex> state) {
    double sum = 0.0;
    for (const auto& c : state) sum += std::norm(c);
    return sum;
}

AmplitudeVector derivative(const ModelParams& params, std::span<const Complex> state) {
    check_length(params, state.size());
    AmplitudeVector out(state.size());
    apply_generator(build_hamiltonian(params), state, out);
    return out;
}

StepPlan plan_steps(double t_final, double dt_max) {
    // t_final / dt_max is often an integer up to rounding (60 / 0.001); don't
    // let the rounding add a step.
    const double ratio = t_final / dt_max;
    const double nearest = std::round(ratio);
    double steps = std::abs(ratio - nearest) <= 1e-9 * std::max(1.0, ratio) ? nearest : std::ceil(ratio);
    if (steps < 1.0) steps = 1.0;
    const auto count = static_cast<std::size_t>(steps);
    return {count, t_final / static_cast<double>(count)};
}

Trajectory integrate(const ModelParams& params, double t_final, const IntegrateOptions& opts) {
    return integrate(params, initial_state(params), t_final, opts);
}

Trajectory integrate(const ModelParams& params, const AmplitudeVector& initial, double t_final,
                     const IntegrateOptions& opts) {
    using Kind = ValidationError::Kind;
    validate(params);
    check_length(params, initial.size());
    if (!std::isfinite(t_final) || !(t_final > 0.0)) {
        throw ValidationError(Kind::BadArgument, "t_final", "t_final must be finite and > 0");
    }
    if (!std::isfinite(opts.dt_max) || !(opts.dt_max > 0.0)) {
        throw ValidationError(Kind::BadArgument, "dt_max", "dt_max must be finite and > 0");
    }
    if (opts.dt_max > kDefaultDtMax && !opts.allow_coarse) {
        throw ValidationError(Kind::BadArgument, "dt_max", "dt_max above 0.001 requires allow_coarse");
    }
    if (opts.sample_stride == 0) {
        throw ValidationError(Kind::BadArgument, "sample_stride", "sample_stride must be >= 1");
    }
    if (!all_finite(initial)) throw NonFiniteStateError("initial state has non-finite entries");

    const StepPlan plan = plan_steps(t_final, opts.dt_max);
    const double reference = total_probability(initial);

    Trajectory traj;
    traj.params = params;
    traj.dt_max = opts.dt_max;
    traj.dt = plan.dt;
    traj.sample_stride = opts.sample_stride;
    const std::size_t expected = plan.steps / opts.sample_stride + 2;
    traj.times.reserve(expected);
    traj.states.reserve(expected);

    auto record = [&](double t, const AmplitudeVector& x) {
        if (!all_finite(x)) {
            std::ostringstream msg;
            msg << "non-finite amplitude at t = " << t;
            throw NonFiniteStateError(msg.str());
        }
        const double dev = std::abs(total_probability(x) - reference);
        if (opts.enforce_conservation && dev > opts.conservation_tolerance) {
            std::ostringstream msg;
            msg << "total probability deviates by " << dev << " at t = " << t << " (tolerance "
                << opts.conservation_tolerance << "); reduce dt_max";
            throw ConservationError(t, dev, msg.str());
        }
        traj.times.push_back(t);
        traj.states.push_back(x);
    };

    AmplitudeVector x = initial;
    record(0.0, x);
    Rk4Stepper stepper(params);
    for (std::size_t s = 1; s <= plan.steps; ++s) {
        stepper.step(x, plan.dt);
        if (s == plan.steps) {
            record(t_final, x);
        } else if (s % opts.sample_stride == 0) {
            record(static_cast<double>(s) * plan.dt, x);
        }
    }
    return traj;
}

double rhs_norm_preservation_check(const Trajectory& traj) {
    double worst = 0.0;
    for (const auto& x : traj.states) worst = std::max(worst, std::abs(total_probability(x) - 1.0));
    return worst;
}

} // namespace bjlab
