#include "cascade/figures.hpp"

#include <filesystem>
#include <numbers>

#include "cascade/errors.hpp"
#include "cascade/moments.hpp"
#include "cascade/su11.hpp"
#include "cascade/timeseries.hpp"

namespace cascade {

namespace {

constexpr double kPsi = std::numbers::pi / 4.0;

SystemParams undriven() {
  SystemParams p;
  p.Omega1 = 0.0;
  p.Omega2 = 0.0;
  return p;
}

std::string emit(const TimeSeries& ts, const std::filesystem::path& outdir,
                 const std::string& filename) {
  const std::filesystem::path path = outdir / filename;
  write_timeseries_csv(ts, path.string());
  return path.string();
}

TimeSeries closed_form_series(const SystemParams& p, double t_max, double dt) {
  const TimeGrid grid{0.0, dt, static_cast<std::size_t>(t_max / dt + 0.5)};
  return analytic_timeseries(p, grid, kPsi);
}

TimeSeries damped_series(SystemParams p, double kappa, double t_max,
                         double dt) {
  p.kappa = kappa;
  const TimeGrid grid{0.0, dt, static_cast<std::size_t>(t_max / dt + 0.5)};
  return integrate_moments(p, grid, kPsi);
}

std::vector<std::string> figure_losses(const std::string& stem,
                                       const SystemParams& p,
                                       const std::filesystem::path& outdir) {
  std::vector<std::string> paths;
  paths.push_back(emit(closed_form_series(p, 100.0, 0.01), outdir,
                       stem + "_lossless.csv"));
  paths.push_back(emit(damped_series(p, 0.01, 100.0, 0.01), outdir,
                       stem + "_kappa_0.01.csv"));
  paths.push_back(emit(damped_series(p, 0.02, 100.0, 0.01), outdir,
                       stem + "_kappa_0.02.csv"));
  return paths;
}

}  // namespace

std::vector<std::string> run_figure(const std::string& name,
                                    const std::string& outdir) {
  const std::filesystem::path dir =
      outdir.empty() ? std::filesystem::path(".") : std::filesystem::path(outdir);
  std::filesystem::create_directories(dir);
  if (name == "fig2") {
    return {emit(closed_form_series(SystemParams{}, 2500.0, 0.5), dir,
                 "fig2.csv")};
  }
  if (name == "fig3a") return figure_losses("fig3a", undriven(), dir);
  if (name == "fig3b") return figure_losses("fig3b", SystemParams{}, dir);
  if (name == "fig4") {
    std::vector<std::string> paths;
    paths.push_back(
        emit(damped_series(SystemParams{}, 0.0, 100.0, 0.01), dir,
             "fig4_kappa_0.csv"));
    paths.push_back(
        emit(damped_series(SystemParams{}, 0.01, 100.0, 0.01), dir,
             "fig4_kappa_0.01.csv"));
    paths.push_back(
        emit(damped_series(SystemParams{}, 0.02, 100.0, 0.01), dir,
             "fig4_kappa_0.02.csv"));
    return paths;
  }
  throw SimError(ErrorCode::MalformedValue, "unknown figure: '" + name + "'");
}

}  // namespace cascade
