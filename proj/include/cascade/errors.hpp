#pragma once

#include <stdexcept>
#include <string>

namespace cascade {

// Failure categories surfaced by the library. Each maps 1:1 to a thrown
// SimError so callers (CLI, tests) can branch on the cause.
enum class ErrorCode {
  NonFiniteInput,         // NaN/Inf in user-supplied parameters
  NegativeRate,           // kappa < 0 or non-positive coupling magnitudes
  DegenerateDenominator,  // delta == Omega: derived couplings undefined
  NonContractive,         // |A_plus| >= 1: squeeze parameters undefined
  LossyParams,            // closed-form engine asked to handle kappa != 0
  StepTooLarge,           // integration monitor tripped; dt too coarse
  NonFiniteState,         // NaN/Inf appeared in an evolving state
  DimensionTooSmall,      // Fock truncation below the minimum (2 per mode)
  DimensionMismatch,      // operator/state built over different truncations
  NoAtomFactor,           // atom marginal requested from a field-only state
  LeakageExceeded,        // Fock-tail mass above the leakage threshold
  NormDrift,              // pure-state norm drifted beyond tolerance
  TraceDrift,             // density-matrix trace drifted beyond tolerance
  UnknownKey,             // unrecognised key in a scenario file
  MalformedValue,         // scenario value failed to parse
  ConstraintViolation,    // scenario violates an engine/parameter constraint
};

const char* error_code_name(ErrorCode code);

class SimError : public std::runtime_error {
 public:
  SimError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cascade
