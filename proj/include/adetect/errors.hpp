#pragma once

#include <stdexcept>
#include <string>

namespace adetect {

// Invalid scenario or experiment configuration.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Matrix shapes disagree between inputs.
class DimensionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A matrix that must be positive definite / full rank is not.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Ordinary detectors need an invertible SCM, i.e. L >= N training samples.
// Bayesian detectors do not and keep working down to L = 0.
class SampleStarvedError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

// Malformed input file (matrix files, JSON configs).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace adetect
