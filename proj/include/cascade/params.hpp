#pragma once

#include "cascade/errors.hpp"

namespace cascade {

// Physical inputs of the driven three-level model. All rates are expressed
// in units of g1, matching the convention used throughout the code: time is
// then dimensionless (g1*t) and every other coupling is a pure ratio.
struct SystemParams {
  double g1 = 1.0;      // cavity coupling, upper transition (mode 1)
  double g2 = 2.0;      // cavity coupling, lower transition (mode 2)
  double Omega = 200.0; // classical field bridging the outer atomic levels
  double Omega1 = 10.0; // drive on mode 1 (displacement Omega1/g1)
  double Omega2 = 40.0; // drive on mode 2 (displacement Omega2/g2)
  double delta = 1000.0; // shared detuning of the outer levels
  double kappa = 0.0;   // cavity amplitude-damping rate (both modes)
};

// Report of validate_params. `ok` is false only when an exception-worthy
// defect was found (the throwing overload is the normal entry point);
// large_detuning records whether the dispersive regime assumptions hold:
// delta must dominate the cavity couplings and mode drives (factor >= 10)
// and exceed the bridging drive by at least 2x. The Omega dependence of the
// derived couplings is handled exactly through the delta^2 - Omega^2
// denominators, so Omega is held to the looser bound.
struct ValidationReport {
  bool ok = true;
  bool large_detuning = false;
};

// Effective two-mode couplings generated by the far-detuned atom:
//   xi   = 2 g1 g2 Omega / (delta^2 - Omega^2)   pair creation/annihilation
//   eta1 = 2 g1^2 delta  / (delta^2 - Omega^2)   Stark shift of mode 1
//   eta2 = 2 g2^2 delta  / (delta^2 - Omega^2)   Stark shift of mode 2
struct DerivedCouplings {
  double xi = 0.0;
  double eta1 = 0.0;
  double eta2 = 0.0;
};

// Throws SimError (NonFiniteInput, NegativeRate, DegenerateDenominator) on
// invalid input; otherwise returns the large-detuning indicator.
ValidationReport validate_params(const SystemParams& p);

// Pure function of the validated inputs; identical inputs give bit-identical
// outputs. Validates internally.
DerivedCouplings derive_couplings(const SystemParams& p);

}  // namespace cascade
