#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace nrqc {

// Base class of all library errors. what() always starts with the error
// name so CLI and logs can route on it.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A requested parameter inversion has no solution with kappa, Gamma >= 0.
class NoPhysicalSolution : public Error {
public:
    NoPhysicalSolution(std::string constraint, const std::string& detail)
        : Error("NoPhysicalSolution: " + constraint + " (" + detail + ")"),
          constraint_(std::move(constraint)) {}
    const std::string& constraint() const noexcept { return constraint_; }

private:
    std::string constraint_;
};

class SingularAtFrequency : public Error {
public:
    using Error::Error;
};

class DegenerateDecay : public Error {
public:
    using Error::Error;
};

class TruncationLeak : public Error {
public:
    using Error::Error;
};

class IntegratorFailure : public Error {
public:
    using Error::Error;
};

class FitFailure : public Error {
public:
    using Error::Error;
};

class RatioUndefined : public Error {
public:
    using Error::Error;
};

class TooFewValidSamples : public Error {
public:
    using Error::Error;
};

// Invalid user-supplied configuration, preset or input file.
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace nrqc
