// model.cpp — Ladder-model parameter validation and Hamiltonian construction

#include "bjlab/model.hpp"

#include "bjlab/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace bjlab {

void validate(const ModelParams& p) {
    using Kind = ValidationError::Kind;
    if (!std::isfinite(p.vbar)) throw ValidationError(Kind::NonFinite, "vbar", "vbar must be finite");
    if (!std::isfinite(p.epsilon)) throw ValidationError(Kind::NonFinite, "epsilon", "epsilon must be finite");
    if (!std::isfinite(p.omega_s)) throw ValidationError(Kind::NonFinite, "omega_s", "omega_s must be finite");
    if (p.m < 0) throw ValidationError(Kind::NegativeHalfWidth, "m", "m must be >= 0");
    if (!(p.epsilon > 0.0)) throw ValidationError(Kind::NonPositiveSpacing, "epsilon", "epsilon must be > 0");
    if (p.vbar < 0.0) throw ValidationError(Kind::NegativeCoupling, "vbar", "vbar must be >= 0");
}

ModelParams make_params(int m, double vbar, double epsilon, double omega_s) {
    ModelParams p{m, vbar, epsilon, omega_s};
    validate(p);
    return p;
}

bool StateIndex::valid_for(const ModelParams& params) const noexcept {
    return bright_ || (k_ >= -params.m && k_ <= params.m);
}

std::size_t StateIndex::position(const ModelParams& params) const {
    if (!valid_for(params)) {
        throw ValidationError(ValidationError::Kind::BadIndex, "k",
                              "dark index " + std::to_string(k_) + " outside [-m, m] for m = " +
                                  std::to_string(params.m));
    }
    return bright_ ? 0 : static_cast<std::size_t>(k_ + params.m + 1);
}

StateIndex state_at(const ModelParams& params, std::size_t position) {
    if (position >= params.n()) {
        throw ValidationError(ValidationError::Kind::BadIndex, "position", "state position out of range");
    }
    if (position == 0) return StateIndex::bright();
    return StateIndex::dark(static_cast<int>(position) - params.m - 1);
}

double level_frequency(const ModelParams& params, StateIndex idx) {
    if (!idx.valid_for(params)) {
        throw ValidationError(ValidationError::Kind::BadIndex, "k", "dark index outside [-m, m]");
    }
    if (idx.is_bright()) return params.omega_s;
    return params.omega_s + idx.k() * params.epsilon;
}

std::vector<double> ArrowheadHamiltonian::dense() const {
    const std::size_t n = diag.size();
    std::vector<double> h(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) h[i * n + i] = diag[i];
    for (std::size_t i = 1; i < n; ++i) {
        h[i] = coupling;     // row 0
        h[i * n] = coupling; // column 0
    }
    return h;
}

ArrowheadHamiltonian build_hamiltonian(const ModelParams& params) {
    ArrowheadHamiltonian h;
    h.coupling = params.vbar;
    h.diag.reserve(params.n());
    h.diag.push_back(params.omega_s);
    for (int k = -params.m; k <= params.m; ++k) {
        h.diag.push_back(level_frequency(params, StateIndex::dark(k)));
    }
    return h;
}

double golden_rule_gamma(const ModelParams& params) {
    return 2.0 * std::numbers::pi * params.vbar * params.vbar / params.epsilon;
}

double recurrence_time(const ModelParams& params) {
    return 2.0 * std::numbers::pi / params.epsilon;
}

} // namespace bjlab
