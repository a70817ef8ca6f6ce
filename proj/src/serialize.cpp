#include "qgc/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qgc {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

std::string csv_row(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += cells[i];
  }
  out += '\n';
  return out;
}

std::string table_to_json(const StructureTable& table) {
  struct Record {
    ModeIndex p, q, t;
    Complex v;
  };
  std::vector<Record> records;
  for (int l1 = 1; l1 <= table.lmax(); ++l1)
    for (int m1 = -l1; m1 <= l1; ++m1)
      for (int l2 = 1; l2 <= table.lmax(); ++l2)
        for (int m2 = -l2; m2 <= l2; ++m2) {
          const ModeIndex p{l1, m1}, q{l2, m2};
          table.for_each(p, q, [&](ModeIndex t, Complex v) { records.push_back({p, q, t, v}); });
        }
  // pair iteration above is already lexicographic; entries are target-sorted
  std::string out = "[\n";
  for (std::size_t i = 0; i < records.size(); ++i) {
    const Record& r = records[i];
    out += "{\"l1\":" + std::to_string(r.p.l) + ",\"m1\":" + std::to_string(r.p.m) +
           ",\"l2\":" + std::to_string(r.q.l) + ",\"m2\":" + std::to_string(r.q.m) +
           ",\"l3\":" + std::to_string(r.t.l) + ",\"m3\":" + std::to_string(r.t.m) +
           ",\"re\":" + format_double(r.v.real()) + ",\"im\":" + format_double(r.v.imag()) + "}";
    if (i + 1 < records.size()) out += ",";
    out += "\n";
  }
  out += "]\n";
  return out;
}

HatVector read_init_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open init file: " + path);
  nlohmann::json j;
  in >> j;
  HatVector out;
  if (j.contains("modes")) {
    for (const auto& rec : j.at("modes")) {
      const int l = rec.at("l").get<int>();
      const int m = rec.at("m").get<int>();
      const ModeIndex mode{l, m};
      if (!mode.valid()) throw std::invalid_argument("init file: invalid mode");
      const double re = rec.value("re", 0.0);
      const double im = rec.value("im", 0.0);
      out.coeffs[mode] += Complex{re, im};
    }
  }
  out.central = j.value("central", 0.0);
  return out;
}

Config read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  nlohmann::json j;
  in >> j;
  Config cfg;
  if (j.contains("lmax")) cfg.lmax = j.at("lmax").get<int>();
  if (j.contains("alpha")) cfg.alpha = j.at("alpha").get<double>();
  if (j.contains("backend")) {
    const std::string b = j.at("backend").get<std::string>();
    if (b == "quadrature")
      cfg.backend = Backend::quadrature;
    else if (b == "analytic")
      cfg.backend = Backend::analytic;
    else
      throw std::invalid_argument("config: unknown backend '" + b + "'");
  }
  if (j.contains("threads")) cfg.threads = j.at("threads").get<int>();
  if (j.contains("tolerances"))
    for (const auto& [k, v] : j.at("tolerances").items())
      cfg.tolerances[k] = v.get<double>();
  return cfg;
}

}  // namespace qgc
