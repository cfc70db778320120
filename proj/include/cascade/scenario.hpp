#pragma once

#include <optional>
#include <string>

#include "cascade/params.hpp"
#include "cascade/timeseries.hpp"

namespace cascade {

enum class Engine {
  kAnalytic,        // closed forms; lossless only
  kMoments,         // damped moment equations
  kFockEffective,   // truncated-lattice evolution, b-manifold generator
  kFockFull,        // truncated-lattice evolution, three-level generator
  kLindblad,        // damped density-operator evolution
};

Engine parse_engine_name(const std::string& name);  // MalformedValue
const char* engine_name(Engine engine);

// A fully resolved run request. Defaults (applied for omitted keys):
// engine=analytic, t_max=100, psi=pi/4, output=timeseries.csv,
// dt=0.01 (1e-4 for fock-full, whose generator carries the fast detuning
// scale), trunc1=trunc2=40 (15 for lindblad, which squares the dimension),
// sample_every=1 (100 for fock-full, keeping rows at 0.01 spacing).
struct Scenario {
  SystemParams params;
  Engine engine = Engine::kAnalytic;
  double t_max = 100.0;
  double dt = 0.01;
  double psi = 0.0;  // quadrature angle; default pi/4 set by the parser
  std::size_t trunc1 = 40;
  std::size_t trunc2 = 40;
  std::size_t sample_every = 1;  // emit every k-th integration step
  std::string output = "timeseries.csv";
};

// Flag-level overrides applied before engine-dependent defaults resolve, so
// e.g. forcing the fock-full engine over an empty config still picks the
// fock-full dt default.
struct ScenarioOverrides {
  std::optional<Engine> engine;
  std::optional<double> kappa;
  std::optional<double> t_max;
  std::optional<double> dt;
  std::optional<std::string> output;
};

// Flat key=value text, one pair per line, '#' starts a comment, blank lines
// ignored. Keys: g1 g2 Omega Omega1 Omega2 delta kappa engine t_max dt
// trunc1 trunc2 sample_every psi output. Unknown keys are rejected
// (UnknownKey), unparsable or duplicate values too (MalformedValue). The
// result is validated (see validate_scenario) before being returned.
Scenario parse_scenario(const std::string& text,
                        const ScenarioOverrides& overrides = {});
Scenario parse_scenario_file(const std::string& path,
                             const ScenarioOverrides& overrides = {});

// Parameter validity plus engine constraints: t_max > 0, dt > 0,
// sample_every >= 1, psi finite, truncations >= 2 where used, and kappa = 0
// for the pure-state engines (analytic, fock-effective, fock-full), which
// cannot represent damping (ConstraintViolation).
void validate_scenario(const Scenario& s);

// Runs the configured engine over the uniform grid [0, t_max] and returns
// rows every sample_every steps (the final step is always included). When
// final_state is non-null the scenario must use a lattice engine
// (fock-effective or fock-full; ConstraintViolation otherwise) and the final
// evolved state is stored there.
struct FockState;
TimeSeries run_scenario(const Scenario& s, FockState* final_state = nullptr);

}  // namespace cascade
