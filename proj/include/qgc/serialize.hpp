#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qgc/extension.hpp"
#include "qgc/structure.hpp"

namespace qgc {

/// Shortest fixed formatting with 15 significant digits; used for every
/// CSV/JSON number so outputs are byte-identical across runs.
std::string format_double(double v);

/// One CSV line from preformatted cells.
std::string csv_row(const std::vector<std::string>& cells);

/// Structure table as a JSON array of records
/// {l1,m1,l2,m2,l3,m3,re,im}, lexicographically sorted; both orientations
/// of every pair are materialized.
std::string table_to_json(const StructureTable& table);

/// Initial-condition file: {"modes": [{"l","m","re","im"}...], "central": x}.
HatVector read_init_file(const std::string& path);

/// Optional run configuration; command-line flags override file values.
struct Config {
  std::optional<int> lmax;
  std::optional<double> alpha;
  std::optional<Backend> backend;
  std::optional<int> threads;
  std::map<std::string, double> tolerances;
};

Config read_config_file(const std::string& path);

}  // namespace qgc
