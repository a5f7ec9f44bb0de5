#pragma once

#include <stdexcept>
#include <string>

namespace gegen {

/// Argument outside the mathematical domain of an operation, or a violated
/// hypothesis (e.g. mu = 0 where mu > 0 is required).
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A numerical procedure failed: non-convergence, non-finite samples,
/// insufficient quadrature points.
class computation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Result not representable as a finite double.
class overflow_error : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

}  // namespace gegen
