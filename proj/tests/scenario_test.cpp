#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>
#include <string>

#include "cascade/fock.hpp"
#include "cascade/scenario.hpp"
#include "cascade/su11.hpp"

using namespace cascade;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const SimError& e) {
    return e.code();
  }
  FAIL("expected SimError");
  return ErrorCode::NonFiniteInput;
}

}  // namespace

TEST_CASE("empty config gives the reference scenario") {
  const Scenario s = parse_scenario("");
  CHECK(s.engine == Engine::kAnalytic);
  CHECK(s.params.g1 == 1.0);
  CHECK(s.params.g2 == 2.0);
  CHECK(s.params.Omega == 200.0);
  CHECK(s.params.Omega1 == 10.0);
  CHECK(s.params.Omega2 == 40.0);
  CHECK(s.params.delta == 1000.0);
  CHECK(s.params.kappa == 0.0);
  CHECK(s.t_max == 100.0);
  CHECK(s.dt == 0.01);
  CHECK(s.psi == doctest::Approx(std::numbers::pi / 4).epsilon(1e-15));
  CHECK(s.trunc1 == 40);
  CHECK(s.trunc2 == 40);
  CHECK(s.sample_every == 1);
  CHECK(s.output == "timeseries.csv");
}

TEST_CASE("key-value parsing") {
  const Scenario s = parse_scenario(
      "# comment line\n"
      "kappa = 0.02   # trailing comment\n"
      "engine=moments\n"
      "\n"
      "t_max = 20\n");
  CHECK(s.engine == Engine::kMoments);
  CHECK(s.params.kappa == 0.02);
  CHECK(s.t_max == 20.0);
  CHECK(s.dt == 0.01);

  CHECK(code_of([] { parse_scenario("volume=3\n"); }) == ErrorCode::UnknownKey);
  CHECK(code_of([] { parse_scenario("g1=abc\n"); }) ==
        ErrorCode::MalformedValue);
  CHECK(code_of([] { parse_scenario("g1=\n"); }) == ErrorCode::MalformedValue);
  CHECK(code_of([] { parse_scenario("g1 3\n"); }) == ErrorCode::MalformedValue);
  CHECK(code_of([] { parse_scenario("g1=1\ng1=2\n"); }) ==
        ErrorCode::MalformedValue);
  CHECK(code_of([] { parse_scenario("engine=magic\n"); }) ==
        ErrorCode::MalformedValue);
  CHECK(code_of([] { parse_scenario("trunc1=2.5\n"); }) ==
        ErrorCode::MalformedValue);
}

TEST_CASE("engine-dependent defaults") {
  const Scenario full = parse_scenario("engine=fock-full\n");
  CHECK(full.engine == Engine::kFockFull);
  CHECK(full.dt == doctest::Approx(1e-4));
  CHECK(full.sample_every == 100);

  const Scenario lind = parse_scenario("engine=lindblad\nkappa=0.01\n");
  CHECK(lind.trunc1 == 15);
  CHECK(lind.trunc2 == 15);
  CHECK(lind.dt == 0.01);

  // Explicit values beat the engine defaults.
  const Scenario custom =
      parse_scenario("engine=fock-full\ndt=0.001\nsample_every=10\n");
  CHECK(custom.dt == 0.001);
  CHECK(custom.sample_every == 10);

  const Scenario eff = parse_scenario("engine=fock-effective\ntrunc1=30\n");
  CHECK(eff.trunc1 == 30);
  CHECK(eff.trunc2 == 40);
}

TEST_CASE("overrides replace file values before validation") {
  ScenarioOverrides ov;
  ov.engine = Engine::kMoments;
  ov.kappa = 0.0;
  ov.t_max = 5.0;
  ov.output = "other.csv";
  const Scenario s = parse_scenario("kappa=0.3\nt_max=50\n", ov);
  CHECK(s.engine == Engine::kMoments);
  CHECK(s.params.kappa == 0.0);
  CHECK(s.t_max == 5.0);
  CHECK(s.output == "other.csv");

  // An override can also repair an otherwise-invalid file.
  ScenarioOverrides fix;
  fix.kappa = 0.0;
  const Scenario fixed = parse_scenario("engine=analytic\nkappa=0.01\n", fix);
  CHECK(fixed.params.kappa == 0.0);
}

TEST_CASE("constraint checks") {
  CHECK(code_of([] { parse_scenario("engine=analytic\nkappa=0.01\n"); }) ==
        ErrorCode::ConstraintViolation);
  CHECK(code_of([] { parse_scenario("engine=fock-effective\nkappa=0.01\n"); }) ==
        ErrorCode::ConstraintViolation);
  CHECK(code_of([] { parse_scenario("engine=fock-full\nkappa=0.01\n"); }) ==
        ErrorCode::ConstraintViolation);
  CHECK(code_of([] { parse_scenario("t_max=-1\n"); }) ==
        ErrorCode::ConstraintViolation);
  CHECK(code_of([] { parse_scenario("dt=0\n"); }) ==
        ErrorCode::ConstraintViolation);
  CHECK(code_of([] { parse_scenario("sample_every=0\n"); }) ==
        ErrorCode::ConstraintViolation);
  CHECK(code_of([] { parse_scenario("engine=lindblad\ntrunc1=1\n"); }) ==
        ErrorCode::DimensionTooSmall);
  CHECK(code_of([] { parse_scenario("kappa=-0.1\nengine=moments\n"); }) ==
        ErrorCode::NegativeRate);
  CHECK(code_of([] { parse_scenario("delta=200\n"); }) ==
        ErrorCode::DegenerateDenominator);
}

TEST_CASE("engine names round-trip") {
  for (const char* name :
       {"analytic", "moments", "fock-effective", "fock-full", "lindblad"}) {
    CHECK(engine_name(parse_engine_name(name)) == std::string(name));
  }
  CHECK(code_of([] { parse_engine_name("bogus"); }) ==
        ErrorCode::MalformedValue);
}

TEST_CASE("scenario runs produce consistent engines") {
  Scenario s = parse_scenario("t_max=5\n");
  const TimeSeries analytic = run_scenario(s);
  REQUIRE(analytic.count == 501);
  CHECK(analytic.has_squeeze);
  CHECK(analytic.rows[0].duan == doctest::Approx(2.0));
  CHECK(analytic.rows[500].t == doctest::Approx(5.0));

  s = parse_scenario("engine=moments\nt_max=5\n");
  const TimeSeries moments = run_scenario(s);
  REQUIRE(moments.count == 501);
  CHECK_FALSE(moments.has_squeeze);
  double worst = 0.0;
  for (std::size_t k = 0; k < 501; ++k) {
    worst = std::max(worst,
                     std::abs(moments.rows[k].photons -
                              analytic.rows[k].photons));
    worst = std::max(worst,
                     std::abs(moments.rows[k].duan - analytic.rows[k].duan));
  }
  CHECK(worst < 1e-6);
}

TEST_CASE("lattice scenarios sample the integration grid") {
  const Scenario s = parse_scenario(
      "engine=fock-effective\nt_max=2\ndt=0.01\nsample_every=10\n"
      "trunc1=12\ntrunc2=12\n");
  FockState final_state;
  const TimeSeries ts = run_scenario(s, &final_state);
  REQUIRE(ts.count == 21);
  CHECK(ts.rows[1].t == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(ts.rows[20].t == doctest::Approx(2.0).epsilon(1e-12));

  // Final state is returned normalized and matches the run's tail row.
  CHECK(final_state.layout.dim1 == 12);
  CHECK(final_state.amp.squaredNorm() == doctest::Approx(1.0).epsilon(1e-12));
  const MomentVector m = moments_from_state(final_state);
  CHECK(m.n1 + m.n2 == doctest::Approx(ts.rows[20].photons).epsilon(1e-10));

  // Cross-engine agreement on the overlapping grid.
  const Scenario sa = parse_scenario("t_max=2\ndt=0.1\n");
  const TimeSeries ref = run_scenario(sa);
  REQUIRE(ref.count == 21);
  double worst = 0.0;
  for (std::size_t k = 0; k < 21; ++k) {
    worst = std::max(worst,
                     std::abs(ts.rows[k].photons - ref.rows[k].photons));
  }
  CHECK(worst < 1e-6);

  FockState unused;
  CHECK(code_of([&] { run_scenario(parse_scenario("t_max=1\n"), &unused); }) ==
        ErrorCode::ConstraintViolation);
}

TEST_CASE("damped scenario stays below the vacuum fluctuation ceiling") {
  const Scenario s = parse_scenario(
      "engine=lindblad\nkappa=0.02\nt_max=1\ndt=0.02\ntrunc1=8\ntrunc2=8\n");
  const TimeSeries ts = run_scenario(s);
  REQUIRE(ts.count == 51);
  for (const auto& row : ts.rows) {
    CHECK(std::isfinite(row.duan));
    CHECK(row.duan <= 2.0 + 1e-9);
    CHECK(row.n1 >= -1e-12);
  }
}
