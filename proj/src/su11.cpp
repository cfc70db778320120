#include "cascade/su11.hpp"

#include <cmath>
#include <tuple>

#include "cascade/moments.hpp"

namespace cascade {

namespace {
constexpr double kSeriesCutoff = 1e-12;
constexpr double kPi = 3.14159265358979323846;
}  // namespace

double cosh_sqrt(double x) {
  if (std::abs(x) < kSeriesCutoff) {
    return 1.0 + x * (1.0 / 2.0 + x * (1.0 / 24.0 + x / 720.0));
  }
  if (x > 0.0) return std::cosh(std::sqrt(x));
  return std::cos(std::sqrt(-x));
}

double sinhc_sqrt(double x) {
  if (std::abs(x) < kSeriesCutoff) {
    return 1.0 + x * (1.0 / 6.0 + x * (1.0 / 120.0 + x / 5040.0));
  }
  const double u = std::sqrt(std::abs(x));
  if (x > 0.0) return std::sinh(u) / u;
  return std::sin(u) / u;
}

SU11Factors su11_factors(const DerivedCouplings& c, double t) {
  if (!std::isfinite(t)) {
    throw SimError(ErrorCode::NonFiniteInput, "time must be finite");
  }
  const double half_sum = 0.5 * (c.eta1 + c.eta2);
  SU11Factors f;
  f.phi_sq = (c.xi - half_sum) * (c.xi + half_sum) * t * t;
  const double ch = cosh_sqrt(f.phi_sq);
  const double sc = sinhc_sqrt(f.phi_sq);
  f.a0 = 1.0 / Complex(ch, t * half_sum * sc);
  f.A_plus = Complex(0.0, -c.xi * t * sc) * f.a0;
  f.A0 = f.a0 * f.a0;
  if (!(std::abs(f.A_plus) < 1.0)) {
    throw SimError(ErrorCode::NonContractive,
                   "|A_plus| >= 1; evolution factors lost contractivity");
  }
  return f;
}

std::pair<Complex, Complex> displacement_amplitudes(const SystemParams& p,
                                                    const DerivedCouplings& c,
                                                    double t) {
  const SU11Factors f = su11_factors(c, t);
  const double b1 = p.Omega1 / p.g1;
  const double b2 = p.Omega2 / p.g2;
  const double half_diff = 0.5 * (c.eta1 - c.eta2);
  const Complex rot = std::polar(1.0, -half_diff * t);
  const Complex alpha1 = b2 * f.A_plus + b1 * (f.a0 * rot - 1.0);
  const Complex alpha2 = b1 * f.A_plus + b2 * (f.a0 / rot - 1.0);
  return {alpha1, alpha2};
}

SqueezeState squeeze_parameters(Complex A_plus) {
  const double mag = std::abs(A_plus);
  if (!(mag < 1.0)) {
    throw SimError(ErrorCode::NonContractive,
                   "|A_plus| >= 1 has no squeeze decomposition");
  }
  SqueezeState s;
  if (mag == 0.0) return s;  // convention: (r, epsilon) = (0, 0)
  s.r = std::atanh(mag);
  s.epsilon = std::atan2(-A_plus.imag(), -A_plus.real());
  if (s.epsilon == -kPi) s.epsilon = kPi;
  return s;
}

SqueezeState closed_form_state(const SystemParams& p,
                               const DerivedCouplings& c, double t) {
  const SU11Factors f = su11_factors(c, t);
  SqueezeState s = squeeze_parameters(f.A_plus);
  auto [a1, a2] = displacement_amplitudes(p, c, t);
  s.alpha1 = a1;
  s.alpha2 = a2;
  return s;
}

double closed_form_photon_number(const SqueezeState& s) {
  const double sh = std::sinh(s.r);
  const double ch = std::cosh(s.r);
  const Complex phase = std::polar(1.0, -s.epsilon);
  const double cross = 2.0 * (s.alpha1 * s.alpha2 * phase).real();
  const double mag2 = std::norm(s.alpha1) + std::norm(s.alpha2);
  return 2.0 * sh * sh +
         ch * ch * (mag2 * std::cosh(2.0 * s.r) -
                    cross * std::sinh(2.0 * s.r));
}

std::pair<double, double> closed_form_mode_occupations(const SqueezeState& s) {
  const double ch = std::cosh(s.r);
  const double sh = std::sinh(s.r);
  const Complex b1 = s.alpha1 * ch;
  const Complex b2 = s.alpha2 * ch;
  const Complex phase = std::polar(1.0, -s.epsilon);
  const double cross = std::sinh(2.0 * s.r) * (b1 * b2 * phase).real();
  const double n1 =
      ch * ch * std::norm(b1) + sh * sh * (1.0 + std::norm(b2)) - cross;
  const double n2 =
      ch * ch * std::norm(b2) + sh * sh * (1.0 + std::norm(b1)) - cross;
  return {n1, n2};
}

std::pair<Complex, Complex> closed_form_first_moments(const SqueezeState& s) {
  const double ch2 = std::cosh(s.r) * std::cosh(s.r);
  const Complex A_plus = -std::polar(std::tanh(s.r), s.epsilon);
  return {ch2 * (s.alpha1 + A_plus * std::conj(s.alpha2)),
          ch2 * (s.alpha2 + A_plus * std::conj(s.alpha1))};
}

Complex closed_form_pair_correlation(const SqueezeState& s) {
  const double ch = std::cosh(s.r);
  const double sh = std::sinh(s.r);
  const Complex b1 = s.alpha1 * ch;
  const Complex b2 = s.alpha2 * ch;
  const Complex eps = std::polar(1.0, s.epsilon);
  return b1 * b2 * ch * ch -
         eps * sh * ch * (std::norm(b1) + std::norm(b2) + 1.0) +
         eps * eps * sh * sh * std::conj(b1) * std::conj(b2);
}

double closed_form_duan(double r, double epsilon) {
  return 2.0 * (std::cosh(2.0 * r) - std::sin(epsilon) * std::sinh(2.0 * r));
}

TimeSeries analytic_timeseries(const SystemParams& p, const TimeGrid& grid,
                               double psi) {
  if (p.kappa != 0.0) {
    throw SimError(ErrorCode::LossyParams,
                   "closed-form evolution requires kappa == 0");
  }
  if (!(grid.dt > 0.0)) {
    throw SimError(ErrorCode::ConstraintViolation, "grid dt must be > 0");
  }
  const DerivedCouplings c = derive_couplings(p);
  const bool default_angle = psi == kPi / 4.0;

  TimeSeries out;
  out.t0 = grid.t0;
  out.dt = grid.dt;
  out.has_squeeze = true;
  out.rows.reserve(grid.steps + 1);
  for (std::size_t k = 0; k <= grid.steps; ++k) {
    const double t = grid.t0 + static_cast<double>(k) * grid.dt;
    const SqueezeState s = closed_form_state(p, c, t);
    TimeSeriesRow row;
    row.t = t;
    std::tie(row.n1, row.n2) = closed_form_mode_occupations(s);
    row.photons = row.n1 + row.n2;
    if (default_angle) {
      row.duan = closed_form_duan(s.r, s.epsilon);
    } else {
      MomentVector m;
      m.n1 = row.n1;
      m.n2 = row.n2;
      std::tie(m.a1, m.a2) = closed_form_first_moments(s);
      m.c12 = closed_form_pair_correlation(s);
      row.duan = observables_from_moments(m, psi).duan;
    }
    row.r = s.r;
    row.epsilon = s.epsilon;
    row.alpha1 = s.alpha1;
    row.alpha2 = s.alpha2;
    out.rows.push_back(row);
  }
  out.count = out.rows.size();
  return out;
}

}  // namespace cascade
