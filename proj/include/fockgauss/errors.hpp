#pragma once

#include <stdexcept>
#include <string>

namespace fockgauss {

/// A numerical residual (quadrature doubling, series tail) exceeded its tolerance.
class ResidualError : public std::runtime_error {
 public:
  ResidualError(const std::string& what, double residual, double tolerance)
      : std::runtime_error(what + ": residual " + std::to_string(residual) + " exceeds tolerance " +
                           std::to_string(tolerance)),
        residual_(residual),
        tolerance_(tolerance) {}

  double residual() const noexcept { return residual_; }
  double tolerance() const noexcept { return tolerance_; }

 private:
  double residual_;
  double tolerance_;
};

/// An input violates a mathematical precondition (e.g. a multiplier with a zero).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace fockgauss
