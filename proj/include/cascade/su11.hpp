#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "cascade/params.hpp"
#include "cascade/timeseries.hpp"

namespace cascade {

using Complex = std::complex<double>;

// Group factors of the disentangled two-mode evolution at a fixed time.
// phi_sq = (xi^2 - ((eta1+eta2)/2)^2) t^2 may take either sign; the factors
// are evaluated as entire functions of phi_sq so the oscillatory regime
// (phi_sq < 0) needs no branch handling.
struct SU11Factors {
  Complex a0{1.0, 0.0};
  Complex A_plus{0.0, 0.0};  // pair-creation factor; |A_plus| < 1 always
  Complex A0{1.0, 0.0};      // == a0^2
  double phi_sq = 0.0;
};

// Squeeze decomposition of the evolved field state:
//   A_plus = -e^{i epsilon} tanh r,  r >= 0,  epsilon in (-pi, pi],
// with (r, epsilon) = (0, 0) at A_plus = 0, plus the displacement
// amplitudes alpha1, alpha2 of the factorized state.
struct SqueezeState {
  double r = 0.0;
  double epsilon = 0.0;
  Complex alpha1{0.0, 0.0};
  Complex alpha2{0.0, 0.0};
};

// cosh(sqrt(x)) and sinh(sqrt(x))/sqrt(x) continued through x <= 0.
// Near zero (|x| < 1e-12) a 4-term Taylor series avoids 0/0.
double cosh_sqrt(double x);
double sinhc_sqrt(double x);

SU11Factors su11_factors(const DerivedCouplings& c, double t);

// Drive-induced displacements of the evolved state (zero when the mode
// drives vanish). These are the disentangling-order parameters of the
// factorized state, not the state's first moments; see
// closed_form_first_moments for the latter.
std::pair<Complex, Complex> displacement_amplitudes(const SystemParams& p,
                                                    const DerivedCouplings& c,
                                                    double t);

// Throws NonContractive when |A_plus| >= 1.
SqueezeState squeeze_parameters(Complex A_plus);

// Full closed-form state parameters at time t (lossless dynamics only).
SqueezeState closed_form_state(const SystemParams& p,
                               const DerivedCouplings& c, double t);

// Total photon number of the coherent-squeezed state.
double closed_form_photon_number(const SqueezeState& s);

// Per-mode occupations; their sum equals closed_form_photon_number.
std::pair<double, double> closed_form_mode_occupations(const SqueezeState& s);

// First moments <a_1>, <a_2> of the state: cosh^2(r) (alpha_j + A_plus
// conj(alpha_k)) with k the opposite mode.
std::pair<Complex, Complex> closed_form_first_moments(const SqueezeState& s);

// Pair correlation <a_1 a_2> of the state.
Complex closed_form_pair_correlation(const SqueezeState& s);

// Quadrature-sum fluctuation at quadrature angle pi/4:
//   D = 2 (cosh 2r - sin(epsilon) sinh 2r).
// Depends only on the squeeze parameters, never on the displacements.
double closed_form_duan(double r, double epsilon);

// Closed-form series over a uniform grid. Requires kappa == 0 (LossyParams
// otherwise). psi is the quadrature angle; at the default pi/4 the duan
// column comes from closed_form_duan, otherwise from the general quadrature
// expression evaluated on the closed-form moments.
TimeSeries analytic_timeseries(const SystemParams& p, const TimeGrid& grid,
                               double psi);

}  // namespace cascade
