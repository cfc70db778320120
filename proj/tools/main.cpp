#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cascade/errors.hpp"
#include "cascade/figures.hpp"
#include "cascade/fock.hpp"
#include "cascade/scenario.hpp"
#include "cascade/timeseries.hpp"
#include "cascade/validate.hpp"

int main(int argc, char** argv) {
  CLI::App app{"driven two-mode cavity entanglement simulator"};
  app.require_subcommand(1);

  auto* sim = app.add_subcommand(
      "simulate", "run one scenario and write a CSV time series");
  std::string config_path;
  std::optional<std::string> engine_opt;
  std::optional<std::string> out_opt;
  std::optional<std::string> dump_opt;
  std::optional<double> kappa_opt;
  std::optional<double> tmax_opt;
  std::optional<double> dt_opt;
  sim->add_option("--config", config_path,
                  "flat key=value scenario file ('#' comments)");
  sim->add_option("--engine", engine_opt,
                  "analytic|moments|fock-effective|fock-full|lindblad");
  sim->add_option("--kappa", kappa_opt, "cavity decay rate");
  sim->add_option("--tmax", tmax_opt, "time horizon");
  sim->add_option("--dt", dt_opt, "integration step");
  sim->add_option("--out", out_opt, "output CSV path");
  sim->add_option("--dump-state", dump_opt,
                  "also write the final lattice state (fock engines only)");

  auto* fig = app.add_subcommand(
      "figure", "write a figure data set, one CSV per curve");
  std::string fig_name;
  std::string outdir = ".";
  fig->add_option("name", fig_name, "fig2|fig3a|fig3b|fig4")
      ->required()
      ->check(CLI::IsMember({"fig2", "fig3a", "fig3b", "fig4"}));
  fig->add_option("--outdir", outdir, "output directory (created if missing)");

  auto* val =
      app.add_subcommand("validate", "run the cross-engine validation suite");
  bool as_json = false;
  val->add_flag("--json", as_json, "emit a machine-readable report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (sim->parsed()) {
      cascade::Scenario scenario;
      try {
        cascade::ScenarioOverrides ov;
        if (engine_opt) ov.engine = cascade::parse_engine_name(*engine_opt);
        ov.kappa = kappa_opt;
        ov.t_max = tmax_opt;
        ov.dt = dt_opt;
        ov.output = out_opt;
        scenario = config_path.empty()
                       ? cascade::parse_scenario("", ov)
                       : cascade::parse_scenario_file(config_path, ov);
        if (dump_opt && scenario.engine != cascade::Engine::kFockEffective &&
            scenario.engine != cascade::Engine::kFockFull) {
          throw cascade::SimError(cascade::ErrorCode::ConstraintViolation,
                                  "--dump-state needs a lattice engine");
        }
      } catch (const cascade::SimError& e) {
        std::cerr << e.what() << "\n";
        return 2;
      }
      cascade::FockState final_state;
      const cascade::TimeSeries ts = cascade::run_scenario(
          scenario, dump_opt ? &final_state : nullptr);
      cascade::write_timeseries_csv(ts, scenario.output);
      if (dump_opt) cascade::dump_state(final_state, *dump_opt);
      std::cout << "wrote " << scenario.output << " (" << ts.count
                << " rows, engine " << cascade::engine_name(scenario.engine)
                << ")\n";
      return 0;
    }
    if (fig->parsed()) {
      for (const std::string& path : cascade::run_figure(fig_name, outdir)) {
        std::cout << "wrote " << path << "\n";
      }
      return 0;
    }
    const cascade::ValidateReport report = cascade::run_validate();
    if (as_json) {
      std::cout << cascade::validate_report_json(report) << "\n";
    } else {
      cascade::print_validate_report(report, std::cout);
    }
    return report.all_pass ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
}
