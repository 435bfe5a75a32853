#pragma once

#include <stdexcept>
#include <string>

namespace steiner {

// Argument outside the domain of an operation (bad dimension, face index,
// non-solid body, negative radius...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Adaptive quadrature could not reach the requested tolerance.
class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Polynomial value disagrees with the Monte Carlo oracle beyond the z-score limit.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace steiner
