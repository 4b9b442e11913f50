#pragma once

#include <stdexcept>
#include <string>

namespace eiv {

// Estimation failures that a caller may want to recover from (e.g. by
// counting them as diagnostics inside a Monte Carlo loop) derive from
// EstimationError; plain precondition violations use the std exceptions.
class EstimationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Moment matrix of the fit is numerically singular.
class DegenerateDesignError : public EstimationError {
public:
    using EstimationError::EstimationError;
};

// Estimated latent variance is not positive.
class DegenerateVarianceError : public EstimationError {
public:
    using EstimationError::EstimationError;
};

// Smoothed distribution estimate is flat over the requested support.
class DegenerateCdfError : public EstimationError {
public:
    using EstimationError::EstimationError;
};

// Replicated data contain no group with two or more measurements.
class InsufficientReplicationError : public EstimationError {
public:
    using EstimationError::EstimationError;
};

// Operation not available for this noise model configuration.
class UnsupportedOperationError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// CSV / config file syntax error, with the offending line number.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, long line)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
    explicit ParseError(const std::string& what) : std::runtime_error(what), line_(0) {}
    long line() const { return line_; }

private:
    long line_;
};

}  // namespace eiv
