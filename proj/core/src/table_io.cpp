// SPDX-License-Identifier: Apache-2.0

#include "singreen/table_io.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace singreen::table_io {

std::string format_double(double v) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12e", v);
  return buf;
}

CsvWriter::CsvWriter(const Meta& meta, const std::vector<std::string>& columns)
    : n_cols_(columns.size()) {
  for (const auto& [k, v] : meta) {
    out_ += "# " + k + "=" + v + "\n";
  }
  for (std::size_t i = 0; i < columns.size(); ++i) {
    out_ += columns[i];
    out_ += (i + 1 < columns.size()) ? "," : "\n";
  }
}

void CsvWriter::row(const std::vector<double>& values) {
  if (values.size() != n_cols_) throw std::invalid_argument("CsvWriter: column count mismatch");
  for (std::size_t i = 0; i < values.size(); ++i) {
    out_ += format_double(values[i]);
    out_ += (i + 1 < values.size()) ? "," : "\n";
  }
}

GridSpec parse_grid(const std::string& text) {
  GridSpec g;
  double start = 0, stop = 0;
  int points = 0;
  char spacing[8] = "log";
  const int n = std::sscanf(text.c_str(), "%lf:%lf:%d:%7s", &start, &stop, &points, spacing);
  if (n < 3) throw std::invalid_argument("grid spec must be start:stop:points[:spacing]");
  g.start = start;
  g.stop = stop;
  g.points = points;
  const std::string sp = spacing;
  if (sp == "log") {
    g.log_spacing = true;
  } else if (sp == "lin") {
    g.log_spacing = false;
  } else {
    throw std::invalid_argument("grid spacing must be log or lin");
  }
  if (!(g.stop > g.start) || g.points < 2 || (g.log_spacing && !(g.start > 0.0))) {
    throw std::invalid_argument("bad grid spec range");
  }
  return g;
}

std::string grid_to_string(const GridSpec& g) {
  return format_double(g.start) + ":" + format_double(g.stop) + ":" + std::to_string(g.points) +
         ":" + (g.log_spacing ? "log" : "lin");
}

std::vector<double> GridSpec::values() const {
  std::vector<double> out(points);
  for (int i = 0; i < points; ++i) {
    const double t = static_cast<double>(i) / (points - 1);
    out[i] = log_spacing ? start * std::pow(stop / start, t) : start + (stop - start) * t;
  }
  return out;
}

}  // namespace singreen::table_io
