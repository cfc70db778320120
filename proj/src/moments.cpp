#include "cascade/moments.hpp"

#include <cmath>

#include "cascade/detail/rk4.hpp"

namespace cascade {

namespace {
constexpr double kOccupationFloor = -1e-9;
const Complex kI{0.0, 1.0};

bool finite(const MomentVector& m) {
  return std::isfinite(m.a1.real()) && std::isfinite(m.a1.imag()) &&
         std::isfinite(m.a2.real()) && std::isfinite(m.a2.imag()) &&
         std::isfinite(m.n1) && std::isfinite(m.n2) &&
         std::isfinite(m.c12.real()) && std::isfinite(m.c12.imag());
}
}  // namespace

MomentOde make_moment_ode(const SystemParams& p) {
  const DerivedCouplings c = derive_couplings(p);
  MomentOde ode;
  ode.xi = c.xi;
  ode.eta1 = c.eta1;
  ode.eta2 = c.eta2;
  ode.L1 = c.eta1 * p.Omega1 / p.g1 + c.xi * p.Omega2 / p.g2;
  ode.L2 = c.eta2 * p.Omega2 / p.g2 + c.xi * p.Omega1 / p.g1;
  ode.kappa = p.kappa;
  return ode;
}

MomentVector moment_rhs(const MomentOde& o, const MomentVector& m) {
  MomentVector d;
  d.a1 = -kI * (o.xi * std::conj(m.a2) + o.L1) -
         Complex(o.kappa, o.eta1) * m.a1;
  d.a2 = -kI * (o.xi * std::conj(m.a1) + o.L2) -
         Complex(o.kappa, o.eta2) * m.a2;
  d.n1 = -2.0 * o.xi * m.c12.imag() - 2.0 * o.L1 * m.a1.imag() -
         2.0 * o.kappa * m.n1;
  d.n2 = -2.0 * o.xi * m.c12.imag() - 2.0 * o.L2 * m.a2.imag() -
         2.0 * o.kappa * m.n2;
  d.c12 = -kI * (o.xi * (m.n1 + m.n2 + 1.0) + o.L1 * m.a2 + o.L2 * m.a1) -
          Complex(2.0 * o.kappa, o.eta1 + o.eta2) * m.c12;
  return d;
}

Observables observables_from_moments(const MomentVector& m, double psi) {
  Observables obs;
  obs.n1 = m.n1;
  obs.n2 = m.n2;
  obs.photons = m.n1 + m.n2;
  const Complex rot = std::polar(1.0, -psi);
  const double u = std::sqrt(2.0) * ((m.a1 + m.a2) * rot).real();
  const double v = std::sqrt(2.0) * ((m.a1 - m.a2) * rot).imag();
  obs.duan = 2.0 + 2.0 * obs.photons + 4.0 * (rot * rot * m.c12).real() -
             u * u - v * v;
  return obs;
}

TimeSeries integrate_moments_from(const SystemParams& p, const TimeGrid& grid,
                                  double psi, const MomentVector& m0,
                                  std::vector<MomentVector>* trajectory) {
  if (!(grid.dt > 0.0)) {
    throw SimError(ErrorCode::ConstraintViolation, "grid dt must be > 0");
  }
  const MomentOde ode = make_moment_ode(p);
  const auto rhs = [&ode](const MomentVector& m) { return moment_rhs(ode, m); };

  TimeSeries out;
  out.t0 = grid.t0;
  out.dt = grid.dt;
  out.rows.reserve(grid.steps + 1);

  MomentVector m = m0;
  for (std::size_t k = 0;; ++k) {
    if (!finite(m)) {
      throw SimError(ErrorCode::NonFiniteState,
                     "moment integration produced a non-finite value");
    }
    if (m.n1 < kOccupationFloor || m.n2 < kOccupationFloor) {
      throw SimError(ErrorCode::StepTooLarge,
                     "occupation went negative; reduce dt");
    }
    const double t = grid.t0 + static_cast<double>(k) * grid.dt;
    const Observables obs = observables_from_moments(m, psi);
    TimeSeriesRow row;
    row.t = t;
    row.n1 = obs.n1;
    row.n2 = obs.n2;
    row.photons = obs.photons;
    row.duan = obs.duan;
    out.rows.push_back(row);
    if (trajectory) trajectory->push_back(m);
    if (k == grid.steps) break;
    m = detail::rk4_step(rhs, m, grid.dt);
  }
  out.count = out.rows.size();
  return out;
}

TimeSeries integrate_moments(const SystemParams& p, const TimeGrid& grid,
                             double psi,
                             std::vector<MomentVector>* trajectory) {
  return integrate_moments_from(p, grid, psi, MomentVector{}, trajectory);
}

}  // namespace cascade
