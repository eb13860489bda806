#include "chebwidom/errors.hpp"

namespace chebwidom {

std::string_view code_name(Errc code) noexcept {
  switch (code) {
    case Errc::EmptyInput: return "realsets.EmptyInput";
    case Errc::DegenerateBand: return "realsets.DegenerateBand";
    case Errc::NoConvergence: return "chebyshev.NoConvergence";
    case Errc::IllConditioned: return "chebyshev.IllConditioned";
    case Errc::RootPolishFailure: return "chebyshev.RootPolishFailure";
    case Errc::SingularSystem: return "potential.SingularSystem";
    case Errc::OutsideSupport: return "potential.OutsideSupport";
    case Errc::QuadratureFailure: return "potential.QuadratureFailure";
    case Errc::BranchDomain: return "potential.BranchDomain";
    case Errc::EdgeCountMismatch: return "bands.EdgeCountMismatch";
    case Errc::OnSpectrum: return "bands.OnSpectrum";
    case Errc::NotPeriodic: return "asymptotics.NotPeriodic";
    case Errc::InvalidArgument: return "core.InvalidArgument";
  }
  return "core.Unknown";
}

Error::Error(Errc code, const std::string& detail, double achieved)
    : std::runtime_error(std::string(chebwidom::code_name(code)) + ": " + detail),
      code_(code),
      achieved_(achieved) {}

}  // namespace chebwidom
