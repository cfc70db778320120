#pragma once

#include <complex>
#include <vector>

#include "cascade/params.hpp"
#include "cascade/timeseries.hpp"

namespace cascade {

using Complex = std::complex<double>;

// The five independent field moments; the conjugate moments <a_j^dag> and
// <a_1^dag a_2^dag> are implied, which keeps Hermiticity exact by
// construction. Occupations n1, n2 are stored as reals for the same reason.
struct MomentVector {
  Complex a1{0.0, 0.0};   // <a_1>
  Complex a2{0.0, 0.0};   // <a_2>
  double n1 = 0.0;        // <a_1^dag a_1>
  double n2 = 0.0;        // <a_2^dag a_2>
  Complex c12{0.0, 0.0};  // <a_1 a_2>

  MomentVector operator+(const MomentVector& o) const {
    return {a1 + o.a1, a2 + o.a2, n1 + o.n1, n2 + o.n2, c12 + o.c12};
  }
  friend MomentVector operator*(double s, const MomentVector& m) {
    return {s * m.a1, s * m.a2, s * m.n1, s * m.n2, s * m.c12};
  }
};

// Precomputed coefficients of the moment equations. L1, L2 are the linear
// drive terms seen by each mode: L1 = eta1 Omega1/g1 + xi Omega2/g2 and
// L2 = eta2 Omega2/g2 + xi Omega1/g1.
struct MomentOde {
  double xi = 0.0;
  double eta1 = 0.0;
  double eta2 = 0.0;
  double L1 = 0.0;
  double L2 = 0.0;
  double kappa = 0.0;
};

MomentOde make_moment_ode(const SystemParams& p);

// Time derivative of the moment vector under cavity damping kappa:
//   d<a_1>/dt   = -i (xi <a_2>* + L1) - (kappa + i eta1) <a_1>
//   d<n_1>/dt   = -2 xi Im<a_1 a_2> - 2 L1 Im<a_1> - 2 kappa <n_1>
//   d<a_1a_2>/dt= -i (xi (n1+n2+1) + L1 <a_2> + L2 <a_1>)
//                 - (2 kappa + i (eta1+eta2)) <a_1 a_2>
// and the 1<->2 images (which also swap L1, L2).
MomentVector moment_rhs(const MomentOde& ode, const MomentVector& m);

struct Observables {
  double n1 = 0.0;
  double n2 = 0.0;
  double photons = 0.0;
  double duan = 0.0;
};

// Quadrature-sum fluctuation at angle psi from the non-central moments.
// First-moment contributions cancel exactly in exact arithmetic, which is
// why the duan column is insensitive to the drives.
Observables observables_from_moments(const MomentVector& m, double psi);

// Fixed-step RK4 from vacuum over the uniform grid (one step per interval).
// Monitors each step: occupations must stay >= -1e-9 (StepTooLarge) and all
// entries finite (NonFiniteState). When `trajectory` is non-null the raw
// moment vector at every grid point is appended to it.
TimeSeries integrate_moments(const SystemParams& p, const TimeGrid& grid,
                             double psi,
                             std::vector<MomentVector>* trajectory = nullptr);

// Same integration from an arbitrary initial condition.
TimeSeries integrate_moments_from(const SystemParams& p, const TimeGrid& grid,
                                  double psi, const MomentVector& m0,
                                  std::vector<MomentVector>* trajectory =
                                      nullptr);

}  // namespace cascade
