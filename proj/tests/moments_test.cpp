#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "cascade/moments.hpp"
#include "cascade/su11.hpp"

using namespace cascade;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPsi = kPi / 4;

SystemParams undriven() {
  SystemParams p;
  p.Omega1 = 0.0;
  p.Omega2 = 0.0;
  return p;
}

double max_abs_diff(const MomentVector& a, const MomentVector& b) {
  double m = std::abs(a.a1 - b.a1);
  m = std::max(m, std::abs(a.a2 - b.a2));
  m = std::max(m, std::abs(a.n1 - b.n1));
  m = std::max(m, std::abs(a.n2 - b.n2));
  return std::max(m, std::abs(a.c12 - b.c12));
}

MomentVector closed_form_moments(const SystemParams& p,
                                 const DerivedCouplings& c, double t) {
  const SqueezeState s = closed_form_state(p, c, t);
  const auto [a1, a2] = closed_form_first_moments(s);
  const auto [n1, n2] = closed_form_mode_occupations(s);
  MomentVector m;
  m.a1 = a1;
  m.a2 = a2;
  m.n1 = n1;
  m.n2 = n2;
  m.c12 = closed_form_pair_correlation(s);
  return m;
}

}  // namespace

TEST_CASE("drive coefficients combine the Stark and pair couplings") {
  const MomentOde ode = make_moment_ode(SystemParams{});
  // L1 = eta1 * (Omega1/g1) + xi * (Omega2/g2) = 10/480 + 20/1200
  CHECK(ode.L1 == doctest::Approx(0.0375).epsilon(1e-14));
  // L2 = eta2 * (Omega2/g2) + xi * (Omega1/g1) = 20/120 + 10/1200
  CHECK(ode.L2 == doctest::Approx(0.175).epsilon(1e-14));
  CHECK(ode.kappa == 0.0);
}

TEST_CASE("vacuum derivatives") {
  const MomentOde ode = make_moment_ode(SystemParams{});
  const MomentVector rhs = moment_rhs(ode, MomentVector{});
  CHECK(std::abs(rhs.a1 - Complex{0.0, -0.0375}) < 1e-15);
  CHECK(std::abs(rhs.a2 - Complex{0.0, -0.175}) < 1e-15);
  CHECK(rhs.n1 == 0.0);
  CHECK(rhs.n2 == 0.0);
  CHECK(std::abs(rhs.c12 - Complex{0.0, -ode.xi}) < 1e-18);
}

TEST_CASE("quadrature observables of simple states") {
  MomentVector vac;
  const Observables ov = observables_from_moments(vac, kPsi);
  CHECK(ov.photons == doctest::Approx(0.0));
  CHECK(ov.duan == doctest::Approx(2.0).epsilon(1e-15));

  // A displaced mode keeps the vacuum fluctuation: D stays exactly 2.
  MomentVector coh;
  coh.a1 = Complex{0.5, 0.0};
  coh.n1 = 0.25;
  const Observables oc = observables_from_moments(coh, kPsi);
  CHECK(oc.n1 == doctest::Approx(0.25));
  CHECK(oc.duan == doctest::Approx(2.0).epsilon(1e-14));

  // Pure pair-squeezed moments at the aligned phase: D = 2 exp(-2r).
  const double r = std::atanh(0.16);
  const double sh = std::sinh(r);
  const double ch = std::cosh(r);
  MomentVector sq;
  sq.n1 = sh * sh;
  sq.n2 = sh * sh;
  sq.c12 = Complex{0.0, -sh * ch};
  const Observables os = observables_from_moments(sq, kPsi);
  CHECK(os.duan == doctest::Approx(2.0 * (1.0 - 0.16) / (1.0 + 0.16))
                       .epsilon(1e-13));
}

TEST_CASE("lossless integration reproduces the closed forms") {
  const SystemParams p;
  const DerivedCouplings c = derive_couplings(p);
  const TimeGrid grid{0.0, 0.01, 10000};
  std::vector<MomentVector> traj;
  const TimeSeries ts = integrate_moments(p, grid, kPsi, &traj);
  REQUIRE(ts.count == 10001);
  REQUIRE(traj.size() == 10001);
  CHECK_FALSE(ts.has_squeeze);

  double worst = 0.0;
  for (std::size_t k = 0; k <= 10000; k += 500) {
    const double t = grid.dt * static_cast<double>(k);
    worst = std::max(worst, max_abs_diff(traj[k], closed_form_moments(p, c, t)));
  }
  CHECK(worst < 1e-9);

  // The emitted rows are the observables of the trajectory.
  const Observables o = observables_from_moments(traj[10000], kPsi);
  CHECK(ts.rows[10000].photons == doctest::Approx(o.photons).epsilon(1e-14));
  CHECK(ts.rows[10000].duan == doctest::Approx(o.duan).epsilon(1e-14));
}

TEST_CASE("fluctuation column is insensitive to the drives under damping") {
  SystemParams driven;
  driven.kappa = 0.01;
  SystemParams un = undriven();
  un.kappa = 0.01;
  const TimeGrid grid{0.0, 0.01, 5000};
  const TimeSeries a = integrate_moments(driven, grid, kPsi);
  const TimeSeries b = integrate_moments(un, grid, kPsi);
  double worst = 0.0;
  for (std::size_t k = 0; k < a.count; ++k) {
    worst = std::max(worst, std::abs(a.rows[k].duan - b.rows[k].duan));
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("pure damping empties a seeded mode at rate 2 kappa") {
  SystemParams p;
  p.Omega = 0.0;  // no pair coupling
  p.Omega1 = 0.0;
  p.Omega2 = 0.0;
  p.kappa = 0.05;
  MomentVector m0;
  m0.n1 = 1.0;
  const TimeGrid grid{0.0, 0.01, 1000};
  std::vector<MomentVector> traj;
  integrate_moments_from(p, grid, kPsi, m0, &traj);
  CHECK(traj.back().n1 == doctest::Approx(std::exp(-1.0)).epsilon(1e-10));
  CHECK(traj.back().n2 == doctest::Approx(0.0));
}

TEST_CASE("integration monitors reject broken states") {
  const SystemParams p;
  MomentVector bad;
  bad.n1 = -1e-6;  // below the occupation floor
  const TimeGrid grid{0.0, 0.01, 10};
  CHECK_THROWS_AS(integrate_moments_from(p, grid, kPsi, bad), SimError);
  try {
    integrate_moments_from(p, grid, kPsi, bad);
  } catch (const SimError& e) {
    CHECK(e.code() == ErrorCode::StepTooLarge);
  }

  MomentVector nan;
  nan.a1 = Complex{std::nan(""), 0.0};
  try {
    integrate_moments_from(p, grid, kPsi, nan);
    FAIL("expected SimError");
  } catch (const SimError& e) {
    CHECK(e.code() == ErrorCode::NonFiniteState);
  }

  const TimeGrid zero_dt{0.0, 0.0, 10};
  try {
    integrate_moments(p, zero_dt, kPsi);
    FAIL("expected SimError");
  } catch (const SimError& e) {
    CHECK(e.code() == ErrorCode::ConstraintViolation);
  }
}
