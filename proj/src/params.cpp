#include "cascade/params.hpp"

#include <algorithm>
#include <cmath>

namespace cascade {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonFiniteInput: return "NonFiniteInput";
    case ErrorCode::NegativeRate: return "NegativeRate";
    case ErrorCode::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorCode::NonContractive: return "NonContractive";
    case ErrorCode::LossyParams: return "LossyParams";
    case ErrorCode::StepTooLarge: return "StepTooLarge";
    case ErrorCode::NonFiniteState: return "NonFiniteState";
    case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NoAtomFactor: return "NoAtomFactor";
    case ErrorCode::LeakageExceeded: return "LeakageExceeded";
    case ErrorCode::NormDrift: return "NormDrift";
    case ErrorCode::TraceDrift: return "TraceDrift";
    case ErrorCode::UnknownKey: return "UnknownKey";
    case ErrorCode::MalformedValue: return "MalformedValue";
    case ErrorCode::ConstraintViolation: return "ConstraintViolation";
  }
  return "UnknownError";
}

ValidationReport validate_params(const SystemParams& p) {
  const double values[] = {p.g1, p.g2, p.Omega, p.Omega1,
                           p.Omega2, p.delta, p.kappa};
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw SimError(ErrorCode::NonFiniteInput,
                     "system parameters must be finite");
    }
  }
  if (p.kappa < 0.0) {
    throw SimError(ErrorCode::NegativeRate, "kappa must be >= 0");
  }
  if (p.g1 <= 0.0 || p.g2 <= 0.0) {
    throw SimError(ErrorCode::NegativeRate, "g1 and g2 must be > 0");
  }
  if (p.delta == p.Omega) {
    throw SimError(ErrorCode::DegenerateDenominator,
                   "delta == Omega makes the effective couplings undefined");
  }
  ValidationReport rep;
  const double fast = std::max({p.g1, p.g2, p.Omega1, p.Omega2});
  rep.large_detuning = p.delta >= 10.0 * fast && p.delta >= 2.0 * p.Omega;
  return rep;
}

DerivedCouplings derive_couplings(const SystemParams& p) {
  validate_params(p);
  const double den = p.delta * p.delta - p.Omega * p.Omega;
  DerivedCouplings c;
  c.xi = 2.0 * p.g1 * p.g2 * p.Omega / den;
  c.eta1 = 2.0 * p.g1 * p.g1 * p.delta / den;
  c.eta2 = 2.0 * p.g2 * p.g2 * p.delta / den;
  return c;
}

}  // namespace cascade
