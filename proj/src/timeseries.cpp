#include "cascade/timeseries.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "cascade/errors.hpp"

namespace cascade {

namespace {

constexpr const char* kHeaderPlain = "t,n1,n2,N,duan";
constexpr const char* kHeaderSqueeze = "t,n1,n2,N,duan,r,epsilon";

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.14e", v);
  return buf;
}

double parse_field(const std::string& token) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(token, &pos);
  } catch (const std::exception&) {
    throw SimError(ErrorCode::MalformedValue,
                   "CSV field is not a number: '" + token + "'");
  }
  if (pos != token.size()) {
    throw SimError(ErrorCode::MalformedValue,
                   "trailing characters in CSV field: '" + token + "'");
  }
  return v;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

void write_timeseries_csv(const TimeSeries& series, std::ostream& out) {
  out << (series.has_squeeze ? kHeaderSqueeze : kHeaderPlain) << '\n';
  for (const TimeSeriesRow& row : series.rows) {
    out << fmt(row.t) << ',' << fmt(row.n1) << ',' << fmt(row.n2) << ','
        << fmt(row.photons) << ',' << fmt(row.duan);
    if (series.has_squeeze) {
      out << ',' << fmt(row.r) << ',' << fmt(row.epsilon);
    }
    out << '\n';
  }
}

void write_timeseries_csv(const TimeSeries& series, const std::string& path) {
  std::ofstream out(path, std::ios::binary);  // binary: keep LF on all hosts
  if (!out) {
    throw SimError(ErrorCode::MalformedValue, "cannot open for write: " + path);
  }
  write_timeseries_csv(series, out);
  if (!out.good()) {
    throw SimError(ErrorCode::MalformedValue, "write failed: " + path);
  }
}

TimeSeries parse_timeseries_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw SimError(ErrorCode::MalformedValue, "empty CSV input");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();

  TimeSeries series;
  if (line == kHeaderSqueeze) {
    series.has_squeeze = true;
  } else if (line == kHeaderPlain) {
    series.has_squeeze = false;
  } else {
    throw SimError(ErrorCode::MalformedValue, "unrecognized CSV header: '" + line + "'");
  }
  const std::size_t expected = series.has_squeeze ? 7 : 5;

  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> fields = split_csv(line);
    if (fields.size() != expected) {
      throw SimError(ErrorCode::MalformedValue,
                     "wrong CSV field count in row: '" + line + "'");
    }
    TimeSeriesRow row;
    row.t = parse_field(fields[0]);
    row.n1 = parse_field(fields[1]);
    row.n2 = parse_field(fields[2]);
    row.photons = parse_field(fields[3]);
    row.duan = parse_field(fields[4]);
    if (series.has_squeeze) {
      row.r = parse_field(fields[5]);
      row.epsilon = parse_field(fields[6]);
    }
    series.rows.push_back(row);
  }
  series.count = series.rows.size();
  if (!series.rows.empty()) {
    series.t0 = series.rows.front().t;
    if (series.rows.size() > 1) {
      series.dt = series.rows[1].t - series.rows[0].t;
    }
  }
  return series;
}

}  // namespace cascade
