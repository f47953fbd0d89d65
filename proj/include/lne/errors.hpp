#pragma once

#include <stdexcept>
#include <string>

namespace lne {

/// Raised when an operation receives input outside its contract
/// (zero polynomial where nonzero is required, constant curve, ...).
class DegenerateInputError : public std::invalid_argument {
public:
    explicit DegenerateInputError(const std::string& what) : std::invalid_argument(what) {}
};

/// Wrong usage of an API surface (unknown variable, malformed flag value).
class UsageError : public std::invalid_argument {
public:
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

/// A polynomial system expected to be zero-dimensional has a curve of solutions.
class NonIsolatedSolutionsError : public std::runtime_error {
public:
    explicit NonIsolatedSolutionsError(const std::string& what) : std::runtime_error(what) {}
};

/// The deterministic shear stream was exhausted without reaching a valid frame.
class RetryExhaustedError : public std::runtime_error {
public:
    RetryExhaustedError(const std::string& what, int attempts)
        : std::runtime_error(what + " (attempts: " + std::to_string(attempts) + ")"),
          attempts_(attempts) {}
    int attempts() const { return attempts_; }

private:
    int attempts_;
};

/// A stated precondition does not hold (point not on curve, non-LNE input to DSGM).
class PreconditionError : public std::logic_error {
public:
    explicit PreconditionError(const std::string& what) : std::logic_error(what) {}
};

/// Numerical path tracking could not keep the fiber roots separated.
class TrackingError : public std::runtime_error {
public:
    explicit TrackingError(const std::string& what) : std::runtime_error(what) {}
};

/// Internally inconsistent results (permutation product not closing, odd Euler
/// characteristic, negative genus from the closed formula).
class ConsistencyError : public std::runtime_error {
public:
    explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

/// Curve sampling produced no points inside the requested ball.
class SamplingError : public std::runtime_error {
public:
    explicit SamplingError(const std::string& what) : std::runtime_error(what) {}
};

/// Proximity graph disconnected although the symbolic verdict says connected.
class ResolutionError : public std::runtime_error {
public:
    explicit ResolutionError(const std::string& what) : std::runtime_error(what) {}
};

/// Numeric domain violation (nonpositive value passed to a log-log fit).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace lne
