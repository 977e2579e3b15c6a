// errors.hpp — Exception types shared by the bjlab modules

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace bjlab {

// Rejected input parameters. `field` names the offending parameter.
class ValidationError : public std::invalid_argument {
public:
    enum class Kind { NonFinite, NonPositiveSpacing, NegativeCoupling, NegativeHalfWidth, BadIndex, BadDimension, BadArgument };

    ValidationError(Kind kind, std::string field, const std::string& what)
        : std::invalid_argument(what), kind_(kind), field_(std::move(field)) {}

    Kind kind() const noexcept { return kind_; }
    const std::string& field() const noexcept { return field_; }

private:
    Kind kind_;
    std::string field_;
};

// Total probability drifted outside the tolerated band during integration.
class ConservationError : public std::runtime_error {
public:
    ConservationError(double time, double deviation, const std::string& what)
        : std::runtime_error(what), time_(time), deviation_(deviation) {}

    double time() const noexcept { return time_; }
    double deviation() const noexcept { return deviation_; }

private:
    double time_;
    double deviation_;
};

class NonFiniteStateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// secular_function evaluated exactly on a dark-level frequency.
class PoleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Root refinement did not converge. Indicates an internal fault.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class FitError : public std::runtime_error {
public:
    enum class Kind { EmptyWindow, NonPositiveValue, NoDecay, InsufficientSamples };

    FitError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

} // namespace bjlab
