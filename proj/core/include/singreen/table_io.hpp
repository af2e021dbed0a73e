// SPDX-License-Identifier: Apache-2.0

#ifndef SINGREEN_TABLE_IO_HPP
#define SINGREEN_TABLE_IO_HPP

#include <string>
#include <utility>
#include <vector>

namespace singreen::table_io {

/// Fixed-format numeric rendering shared by every emitter, so that repeated
/// runs with the same configuration are byte-identical.
std::string format_double(double v);

/// key=value metadata echoed verbatim at the top of every artifact.
using Meta = std::vector<std::pair<std::string, std::string>>;

/// CSV with '#'-prefixed metadata header, comma separator, '.' decimal,
/// complex values as paired Re/Im columns (the caller lays out columns).
class CsvWriter {
 public:
  CsvWriter(const Meta& meta, const std::vector<std::string>& columns);
  void row(const std::vector<double>& values);
  const std::string& str() const { return out_; }

 private:
  std::string out_;
  std::size_t n_cols_;
};

/// Grid specification "start:stop:points[:spacing]", spacing log|lin
/// (default log).
struct GridSpec {
  double start = 1e-4;
  double stop = 1e-2;
  int points = 48;
  bool log_spacing = true;

  std::vector<double> values() const;
};
GridSpec parse_grid(const std::string& text);
std::string grid_to_string(const GridSpec& g);

}  // namespace singreen::table_io

#endif
