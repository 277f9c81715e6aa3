#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace freud {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain (e.g. Gamma at x <= 0).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Caller violated a documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Index outside the range a table or formula supports.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Evaluation at a pole of a rational coefficient.
class SingularityError : public Error {
 public:
  using Error::Error;
};

/// Working precision exhausted; carries the failing index and a digit estimate.
class PrecisionError : public Error {
 public:
  PrecisionError(const std::string& what, int index, int required_digits)
      : Error(what), index_(index), required_digits_(required_digits) {}
  int index() const { return index_; }
  int required_digits() const { return required_digits_; }

 private:
  int index_;
  int required_digits_;
};

/// Adaptive quadrature or series failed to reach its tolerance.
class AccuracyError : public Error {
 public:
  AccuracyError(const std::string& what, double achieved_log10)
      : Error(what), achieved_log10_(achieved_log10) {}
  double achieved_log10() const { return achieved_log10_; }

 private:
  double achieved_log10_;
};

/// Forward recursion produced a vanishing pivot or a non-positive value.
class InstabilityError : public Error {
 public:
  InstabilityError(const std::string& what, int index, std::vector<std::string> partial)
      : Error(what), index_(index), partial_(std::move(partial)) {}
  int index() const { return index_; }
  /// Decimal renderings of gamma_0..gamma_{index-1} produced before the failure.
  const std::vector<std::string>& partial() const { return partial_; }

 private:
  int index_;
  std::vector<std::string> partial_;
};

}  // namespace freud
