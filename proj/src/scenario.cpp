#include "cascade/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>
#include <utility>
#include <vector>

#include "cascade/fock.hpp"
#include "cascade/moments.hpp"
#include "cascade/su11.hpp"

namespace cascade {

namespace {

const std::map<std::string, Engine>& engine_table() {
  static const std::map<std::string, Engine> table = {
      {"analytic", Engine::kAnalytic},
      {"moments", Engine::kMoments},
      {"fock-effective", Engine::kFockEffective},
      {"fock-full", Engine::kFockFull},
      {"lindblad", Engine::kLindblad},
  };
  return table;
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(value, &pos);
  } catch (const std::exception&) {
    throw SimError(ErrorCode::MalformedValue,
                   "key '" + key + "': not a number: '" + value + "'");
  }
  if (pos != value.size()) {
    throw SimError(ErrorCode::MalformedValue,
                   "key '" + key + "': trailing characters in '" + value + "'");
  }
  return v;
}

std::size_t parse_size(const std::string& key, const std::string& value) {
  std::size_t v = 0;
  const char* begin = value.data();
  const char* end = begin + value.size();
  const auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc{} || ptr != end) {
    throw SimError(ErrorCode::MalformedValue,
                   "key '" + key + "': not a non-negative integer: '" + value +
                       "'");
  }
  return v;
}

bool uses_truncation(Engine e) {
  return e == Engine::kFockEffective || e == Engine::kFockFull ||
         e == Engine::kLindblad;
}

bool pure_state_engine(Engine e) {
  return e == Engine::kAnalytic || e == Engine::kFockEffective ||
         e == Engine::kFockFull;
}

std::size_t grid_steps(double t_max, double dt) {
  return static_cast<std::size_t>(t_max / dt + 1e-9);
}

// Shared row construction for the truncated-lattice engines: sample the
// moments every `sample_every` steps (plus the final step) and convert to
// observables at quadrature angle psi.
class RowCollector {
 public:
  RowCollector(const Scenario& s, std::size_t steps, TimeSeries* out)
      : psi_(s.psi), every_(s.sample_every), steps_(steps), out_(out) {
    out_->t0 = 0.0;
    out_->dt = s.dt * static_cast<double>(s.sample_every);
    out_->has_squeeze = false;
  }

  template <typename State>
  void operator()(double t, const State& state) {
    const std::size_t k = next_++;
    if (k % every_ != 0 && k != steps_) return;
    const Observables obs =
        observables_from_moments(moments_from_state(state), psi_);
    TimeSeriesRow row;
    row.t = t;
    row.n1 = obs.n1;
    row.n2 = obs.n2;
    row.photons = obs.photons;
    row.duan = obs.duan;
    out_->rows.push_back(row);
  }

 private:
  double psi_;
  std::size_t every_;
  std::size_t steps_;
  TimeSeries* out_;
  std::size_t next_ = 0;
};

TimeSeries fock_timeseries(const Scenario& s, FockState* final_state) {
  FockLayout layout{s.trunc1, s.trunc2, s.engine == Engine::kFockFull};
  const DerivedCouplings c = derive_couplings(s.params);
  const OperatorMatrix H =
      s.engine == Engine::kFockFull
          ? build_full_hamiltonian(s.params, layout)
          : build_effective_hamiltonian(s.params, c, layout);
  // The three-level run starts from the confined level b, the reduced run
  // from the field vacuum.
  const FockState psi0 = s.engine == Engine::kFockFull
                             ? basis_state(layout, 0, 0, 1)
                             : basis_state(layout, 0, 0, 0);
  const std::size_t steps = grid_steps(s.t_max, s.dt);
  TimeSeries out;
  RowCollector collect(s, steps, &out);
  EvolveOptions opts;
  opts.observe_state = [&collect](double t, const FockState& st) {
    collect(t, st);
  };
  FockState final =
      evolve_state(H, psi0, static_cast<double>(steps) * s.dt, s.dt, opts);
  if (final_state) *final_state = std::move(final);
  out.count = out.rows.size();
  return out;
}

TimeSeries lindblad_timeseries(const Scenario& s) {
  FockLayout layout{s.trunc1, s.trunc2, false};
  DensityMatrix rho0;
  rho0.layout = layout;
  const auto n = static_cast<Eigen::Index>(layout.size());
  rho0.rho = Eigen::MatrixXcd::Zero(n, n);
  rho0.rho(0, 0) = Complex(1.0, 0.0);
  const std::size_t steps = grid_steps(s.t_max, s.dt);
  TimeSeries out;
  RowCollector collect(s, steps, &out);
  EvolveOptions opts;
  opts.observe_density = [&collect](double t, const DensityMatrix& st) {
    collect(t, st);
  };
  evolve_lindblad(s.params, rho0, static_cast<double>(steps) * s.dt, s.dt,
                  opts);
  out.count = out.rows.size();
  return out;
}

}  // namespace

Engine parse_engine_name(const std::string& name) {
  const auto& table = engine_table();
  const auto it = table.find(name);
  if (it == table.end()) {
    throw SimError(ErrorCode::MalformedValue, "unknown engine: '" + name + "'");
  }
  return it->second;
}

const char* engine_name(Engine engine) {
  for (const auto& [name, e] : engine_table()) {
    if (e == engine) return name.c_str();
  }
  return "?";
}

Scenario parse_scenario(const std::string& text,
                        const ScenarioOverrides& overrides) {
  static const std::vector<std::string> known = {
      "g1",     "g2", "Omega",  "Omega1", "Omega2",       "delta",
      "kappa",  "engine",       "t_max",  "dt",           "trunc1",
      "trunc2", "sample_every", "psi",    "output",
  };
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw SimError(ErrorCode::MalformedValue,
                     "line " + std::to_string(lineno) + ": expected key=value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw SimError(ErrorCode::UnknownKey,
                     "line " + std::to_string(lineno) + ": '" + key + "'");
    }
    if (value.empty()) {
      throw SimError(ErrorCode::MalformedValue,
                     "line " + std::to_string(lineno) + ": empty value for '" +
                         key + "'");
    }
    if (!kv.emplace(key, value).second) {
      throw SimError(ErrorCode::MalformedValue,
                     "line " + std::to_string(lineno) + ": duplicate key '" +
                         key + "'");
    }
  }

  Scenario s;
  const auto lookup = [&kv](const char* key) -> const std::string* {
    const auto it = kv.find(key);
    return it == kv.end() ? nullptr : &it->second;
  };
  if (overrides.engine) {
    s.engine = *overrides.engine;
  } else if (const auto* v = lookup("engine")) {
    s.engine = parse_engine_name(*v);
  }
  const auto set_double = [&lookup](const char* key, double* dst) {
    if (const auto* v = lookup(key)) *dst = parse_double(key, *v);
  };
  set_double("g1", &s.params.g1);
  set_double("g2", &s.params.g2);
  set_double("Omega", &s.params.Omega);
  set_double("Omega1", &s.params.Omega1);
  set_double("Omega2", &s.params.Omega2);
  set_double("delta", &s.params.delta);
  set_double("kappa", &s.params.kappa);
  if (overrides.kappa) s.params.kappa = *overrides.kappa;
  set_double("t_max", &s.t_max);
  if (overrides.t_max) s.t_max = *overrides.t_max;
  s.dt = s.engine == Engine::kFockFull ? 1e-4 : 0.01;
  set_double("dt", &s.dt);
  if (overrides.dt) s.dt = *overrides.dt;
  s.trunc1 = s.trunc2 = (s.engine == Engine::kLindblad) ? 15 : 40;
  if (const auto* v = lookup("trunc1")) s.trunc1 = parse_size("trunc1", *v);
  if (const auto* v = lookup("trunc2")) s.trunc2 = parse_size("trunc2", *v);
  s.sample_every = s.engine == Engine::kFockFull ? 100 : 1;
  if (const auto* v = lookup("sample_every")) {
    s.sample_every = parse_size("sample_every", *v);
  }
  s.psi = std::numbers::pi / 4.0;
  set_double("psi", &s.psi);
  if (const auto* v = lookup("output")) s.output = *v;
  if (overrides.output) s.output = *overrides.output;

  validate_scenario(s);
  return s;
}

Scenario parse_scenario_file(const std::string& path,
                             const ScenarioOverrides& overrides) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw SimError(ErrorCode::MalformedValue, "cannot open config: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str(), overrides);
}

void validate_scenario(const Scenario& s) {
  validate_params(s.params);
  if (!std::isfinite(s.t_max) || !(s.t_max > 0.0)) {
    throw SimError(ErrorCode::ConstraintViolation, "t_max must be > 0");
  }
  if (!std::isfinite(s.dt) || !(s.dt > 0.0)) {
    throw SimError(ErrorCode::ConstraintViolation, "dt must be > 0");
  }
  if (!std::isfinite(s.psi)) {
    throw SimError(ErrorCode::NonFiniteInput, "psi must be finite");
  }
  if (s.sample_every < 1) {
    throw SimError(ErrorCode::ConstraintViolation, "sample_every must be >= 1");
  }
  if (pure_state_engine(s.engine) && s.params.kappa != 0.0) {
    throw SimError(ErrorCode::ConstraintViolation,
                   std::string(engine_name(s.engine)) +
                       " engine cannot represent kappa != 0; use moments or "
                       "lindblad");
  }
  if (uses_truncation(s.engine) && (s.trunc1 < 2 || s.trunc2 < 2)) {
    throw SimError(ErrorCode::DimensionTooSmall,
                   "truncations must be >= 2 per mode");
  }
}

TimeSeries run_scenario(const Scenario& s, FockState* final_state) {
  validate_scenario(s);
  if (final_state && s.engine != Engine::kFockEffective &&
      s.engine != Engine::kFockFull) {
    throw SimError(ErrorCode::ConstraintViolation,
                   "final-state capture needs a lattice engine");
  }
  const std::size_t steps = grid_steps(s.t_max, s.dt);
  const TimeGrid grid{0.0, s.dt, steps};
  switch (s.engine) {
    case Engine::kAnalytic:
      return analytic_timeseries(s.params, grid, s.psi);
    case Engine::kMoments:
      return integrate_moments(s.params, grid, s.psi);
    case Engine::kFockEffective:
    case Engine::kFockFull:
      return fock_timeseries(s, final_state);
    case Engine::kLindblad:
      return lindblad_timeseries(s);
  }
  throw SimError(ErrorCode::ConstraintViolation, "unreachable engine");
}

}  // namespace cascade
