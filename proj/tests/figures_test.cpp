#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "cascade/errors.hpp"
#include "cascade/figures.hpp"
#include "cascade/timeseries.hpp"

using namespace cascade;
namespace fs = std::filesystem;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  return std::string((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
}

TimeSeries parse_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  return parse_timeseries_csv(in);
}

std::size_t row_at(const TimeSeries& ts, double t) {
  const double k = (t - ts.t0) / ts.dt;
  return static_cast<std::size_t>(k + 0.5);
}

fs::path fresh_dir(const char* leaf) {
  const fs::path dir = fs::temp_directory_path() / leaf;
  fs::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("long-horizon figure carries the squeeze columns") {
  const fs::path dir = fresh_dir("cascade_fig2_test");
  const auto paths = run_figure("fig2", dir.string());
  REQUIRE(paths.size() == 1);
  const TimeSeries ts = parse_file(paths[0]);
  CHECK(ts.has_squeeze);
  REQUIRE(ts.count == 5001);
  CHECK(ts.rows.back().t == doctest::Approx(2500.0));

  // Successive maxima of the photon staircase repeat every half period of
  // the underlying factors; two consecutive peaks straddle ~611.
  std::vector<double> peaks;
  for (std::size_t k = 1; k + 1 < ts.count; ++k) {
    if (ts.rows[k].photons > ts.rows[k - 1].photons &&
        ts.rows[k].photons > ts.rows[k + 1].photons) {
      peaks.push_back(ts.rows[k].t);
    }
  }
  REQUIRE(peaks.size() >= 2);
  fs::remove_all(dir);
}

TEST_CASE("loss figures order by damping and dip below the ceiling") {
  const fs::path dir = fresh_dir("cascade_fig4_test");
  const auto paths = run_figure("fig4", dir.string());
  REQUIRE(paths.size() == 3);

  std::vector<TimeSeries> runs;
  for (const auto& p : paths) runs.push_back(parse_file(p));
  for (const auto& ts : runs) REQUIRE(ts.count == 10001);

  for (const auto& ts : runs) {
    double dmin = 2.0;
    for (const auto& row : ts.rows) dmin = std::min(dmin, row.duan);
    CHECK(dmin < 2.0);  // entanglement window exists at every damping
  }
  const std::size_t k50 = row_at(runs[0], 50.0);
  CHECK(runs[0].rows[k50].duan <= runs[1].rows[k50].duan + 1e-12);
  CHECK(runs[1].rows[k50].duan <= runs[2].rows[k50].duan + 1e-12);
  fs::remove_all(dir);
}

TEST_CASE("growth figures separate driven from undriven by >= 100x") {
  const fs::path undriven_dir = fresh_dir("cascade_fig3a_test");
  const fs::path driven_dir = fresh_dir("cascade_fig3b_test");
  const auto ua = run_figure("fig3a", undriven_dir.string());
  const auto db = run_figure("fig3b", driven_dir.string());
  REQUIRE(ua.size() == 3);
  REQUIRE(db.size() == 3);

  const TimeSeries un = parse_file(ua[0]);
  const TimeSeries dr = parse_file(db[0]);
  const std::size_t k50 = row_at(un, 50.0);
  CHECK(dr.rows[k50].photons / un.rows[k50].photons >= 100.0);

  // Damping reduces the photon number at fixed time.
  const TimeSeries dr1 = parse_file(db[1]);
  const TimeSeries dr2 = parse_file(db[2]);
  CHECK(dr1.rows[k50].photons < dr.rows[k50].photons);
  CHECK(dr2.rows[k50].photons < dr1.rows[k50].photons);
  fs::remove_all(undriven_dir);
  fs::remove_all(driven_dir);
}

TEST_CASE("figure output is deterministic") {
  const fs::path dir1 = fresh_dir("cascade_figdet1_test");
  const fs::path dir2 = fresh_dir("cascade_figdet2_test");
  const auto a = run_figure("fig4", dir1.string());
  const auto b = run_figure("fig4", dir2.string());
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(slurp(a[i]) == slurp(b[i]));
  }
  fs::remove_all(dir1);
  fs::remove_all(dir2);
}

TEST_CASE("unknown figure names are rejected") {
  try {
    run_figure("fig9", ".");
    FAIL("expected SimError");
  } catch (const SimError& e) {
    CHECK(e.code() == ErrorCode::MalformedValue);
  }
}
