#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace kzeta {

using Cplx = std::complex<double>;

// Value plus an honest absolute error estimate. abs_error is meant as an
// upper estimate: doubling the truncation must not move the value by more
// than 2*abs_error.
struct EvalResult {
  Cplx value{};
  double abs_error = 0.0;
  long terms_used = 0;
  double truncation = 0.0;  // series length / integral cutoff actually used
};

struct ToleranceConfig {
  double target_abs_tol = 1e-10;
  long max_terms = 2000000;
  double pole_exclusion_radius = 1e-8;
  // Shared series floor so round-trip comparisons telescope against the same
  // partial sums. 0 = off.
  double min_truncation = 0.0;
};

enum class ErrorKind {
  InvalidArgument,
  OutsideConvergenceRegion,
  PoleProximity,
  ContourPoleCollision,
  NonConvergent,
  QuadratureNonConvergent,
  DatasetInsufficient,
  ResourceLimit,
  ParseError,
  ValidationError,
  Overflow,
  Io,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

}  // namespace kzeta
