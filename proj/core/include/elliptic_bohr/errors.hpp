#pragma once

#include <stdexcept>
#include <string>

namespace ebohr {

/// Argument outside the mathematical domain of an operation (e.g. w = 0).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Parameter outside the admissible interval (e.g. r < R).
class RangeError : public std::range_error {
public:
    using std::range_error::range_error;
};

/// A defining series evaluated at or beyond its radius of convergence.
class DivergenceError : public RangeError {
public:
    using RangeError::RangeError;
};

/// Input violates the hypotheses under which an inequality is claimed.
class HypothesisError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Quadrature grid too coarse for the requested coefficient index.
class AliasingError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The random series generator could not certify positivity.
class GeneratorError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace ebohr
