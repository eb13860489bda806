#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chebwidom {

enum class Errc {
  EmptyInput,
  DegenerateBand,
  NoConvergence,
  IllConditioned,
  RootPolishFailure,
  SingularSystem,
  OutsideSupport,
  QuadratureFailure,
  BranchDomain,
  EdgeCountMismatch,
  OnSpectrum,
  NotPeriodic,
  InvalidArgument,
};

/// Module-qualified code, e.g. "chebyshev.NoConvergence".
std::string_view code_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail, double achieved = 0.0);

  Errc code() const noexcept { return code_; }
  std::string_view code_name() const noexcept { return chebwidom::code_name(code_); }

  /// Solver-specific figure of merit reached before failing (defect, condition number, ...).
  double achieved() const noexcept { return achieved_; }

 private:
  Errc code_;
  double achieved_;
};

}  // namespace chebwidom
