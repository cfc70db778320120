#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace cascade {

// Uniform output grid: rows at t0 + k*dt for k = 0..steps (steps+1 rows).
struct TimeGrid {
  double t0 = 0.0;
  double dt = 0.01;
  std::size_t steps = 0;
};

struct TimeSeriesRow {
  double t = 0.0;
  double n1 = 0.0;       // mode-1 occupation
  double n2 = 0.0;       // mode-2 occupation
  double photons = 0.0;  // n1 + n2
  double duan = 0.0;     // quadrature-sum fluctuation; < 2 flags entanglement
  // Populated only when has_squeeze is set on the series.
  double r = 0.0;
  double epsilon = 0.0;
  std::complex<double> alpha1{0.0, 0.0};
  std::complex<double> alpha2{0.0, 0.0};
};

struct TimeSeries {
  double t0 = 0.0;
  double dt = 0.0;
  std::size_t count = 0;  // == rows.size()
  bool has_squeeze = false;
  std::vector<TimeSeriesRow> rows;
};

// CSV contract: ASCII, LF line endings, '.' decimal separator, header
// "t,n1,n2,N,duan" plus ",r,epsilon" when the series carries squeeze data.
// Values use scientific notation with 15 significant digits, so re-emitting
// a parsed file reproduces it byte for byte.
void write_timeseries_csv(const TimeSeries& series, std::ostream& out);
void write_timeseries_csv(const TimeSeries& series, const std::string& path);
TimeSeries parse_timeseries_csv(std::istream& in);

}  // namespace cascade
