#ifndef SURFGRAV_ERRORS_HPP
#define SURFGRAV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace surfgrav {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of an operation
/// (non-positive distance, non-finite value, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A quantity was constructed from a non-finite or otherwise unusable value.
class InvalidQuantity : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The modified law was evaluated at a surface gap below the Planck length.
class PlanckBoundError : public DomainError {
 public:
  PlanckBoundError(double gap_m, double planck_m);

  double gap_m() const noexcept { return gap_m_; }
  double planck_m() const noexcept { return planck_m_; }

 private:
  double gap_m_;
  double planck_m_;
};

/// Inconsistent or malformed problem setup (grid, window, flags).
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace surfgrav

#endif  // SURFGRAV_ERRORS_HPP
