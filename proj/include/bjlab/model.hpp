// model.hpp — Ladder-model parameter set, state indexing and the arrowhead Hamiltonian
//
// Units: hbar = 1, so every energy is an angular frequency (inverse time).
// Canonical state ordering: the bright state s first, then Dark(-m) .. Dark(m).

#pragma once

#include <cstddef>
#include <vector>

namespace bjlab {

struct ModelParams {
    int m{12};            // dark ladder half-width, k in [-m, m]
    double vbar{0.10};    // uniform s<->k coupling
    double epsilon{0.25}; // dark level spacing
    double omega_s{0.0};  // bright state frequency

    // Total state count 2m + 2.
    std::size_t n() const noexcept { return static_cast<std::size_t>(2 * m + 2); }
    std::size_t dark_count() const noexcept { return static_cast<std::size_t>(2 * m + 1); }
};

// Validates and builds a parameter set. Throws ValidationError with a distinct
// Kind for non-finite values, epsilon <= 0, vbar < 0 and m < 0.
ModelParams make_params(int m, double vbar, double epsilon, double omega_s = 0.0);

// Re-runs the make_params checks on an existing value.
void validate(const ModelParams& params);

class StateIndex {
public:
    static constexpr StateIndex bright() noexcept { return StateIndex(true, 0); }
    static constexpr StateIndex dark(int k) noexcept { return StateIndex(false, k); }

    constexpr bool is_bright() const noexcept { return bright_; }
    // Ladder index k; zero for the bright state.
    constexpr int k() const noexcept { return k_; }

    bool valid_for(const ModelParams& params) const noexcept;

    // Position in the canonical ordering. Throws ValidationError if the index
    // is out of range for params.
    std::size_t position(const ModelParams& params) const;

    friend constexpr bool operator==(StateIndex a, StateIndex b) noexcept {
        return a.bright_ == b.bright_ && a.k_ == b.k_;
    }

private:
    constexpr StateIndex(bool bright, int k) noexcept : bright_(bright), k_(bright ? 0 : k) {}

    bool bright_;
    int k_;
};

// Inverse of StateIndex::position.
StateIndex state_at(const ModelParams& params, std::size_t position);

// omega_s for Bright, omega_s + k * epsilon for Dark(k).
double level_frequency(const ModelParams& params, StateIndex idx);

// Stored structurally: diagonal frequencies in canonical order plus the single
// coupling between the bright state and every dark state. Dark states are not
// coupled to each other.
struct ArrowheadHamiltonian {
    std::vector<double> diag;
    double coupling{0.0};

    std::size_t size() const noexcept { return diag.size(); }

    // Row-major n x n matrix. Used by brute-force checks only.
    std::vector<double> dense() const;
};

ArrowheadHamiltonian build_hamiltonian(const ModelParams& params);

// Continuum-limit decay rate 2 pi vbar^2 / epsilon.
double golden_rule_gamma(const ModelParams& params);

// Quasi-period 2 pi / epsilon of the equally spaced dark ladder.
double recurrence_time(const ModelParams& params);

} // namespace bjlab
