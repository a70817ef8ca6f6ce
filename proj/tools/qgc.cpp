// qgc: curvature, spectral dynamics and predictability estimates for
// area-preserving flows on the rotating sphere.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qgc/curvature.hpp"
#include "qgc/dynamics.hpp"
#include "qgc/errors.hpp"
#include "qgc/forecast.hpp"
#include "qgc/report.hpp"
#include "qgc/serialize.hpp"

namespace {

using namespace qgc;

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << content;
}

void emit(const std::optional<std::string>& path, const std::string& content) {
  if (path)
    write_file(*path, content);
  else
    std::cout << content;
}

std::string forecast_json(const ForecastReport& r) {
  std::string out = "{";
  out += "\"kappa_av\":" + format_double(r.kappa_av);
  out += ",\"S\":" + format_double(r.S);
  out += ",\"per_orbit_factor\":" + format_double(r.per_orbit);
  out += ",\"log10_growth\":" + format_double(r.log10_growth);
  out += ",\"log10_growth_exact\":" + format_double(r.log10_growth_exact);
  out += ",\"months_to_1e5\":" + format_double(r.months_to_1e5);
  out += "}\n";
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"qgc - curvature and spectral dynamics of area-preserving flows on the rotating sphere"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path, "optional JSON config; flags override file values");

  // constants
  auto* cmd_constants = app.add_subcommand("constants", "emit the bracket-constant table as JSON");
  int c_lmax = 4;
  std::string c_backend = "quadrature";
  int c_threads = 0;
  std::optional<std::string> c_out;
  auto* c_lmax_opt = cmd_constants->add_option("--lmax", c_lmax, "truncation degree");
  auto* c_backend_opt = cmd_constants->add_option("--backend", c_backend, "quadrature|analytic")
                            ->check(CLI::IsMember({"quadrature", "analytic"}));
  cmd_constants->add_option("--threads", c_threads, "worker threads (0 = QGC_THREADS/auto)");
  cmd_constants->add_option("--out", c_out, "output path (default stdout)");

  // check
  auto* cmd_check = app.add_subcommand("check", "run the oracle-equivalence suites");
  int k_lmax = 3;
  std::optional<std::string> k_out;
  auto* k_lmax_opt = cmd_check->add_option("--lmax", k_lmax, "band for the suites");
  cmd_check->add_option("--out", k_out, "also write the report JSON here");

  // zonal
  auto* cmd_zonal = app.add_subcommand("zonal", "sectional curvature of a zonal-flow plane");
  double z_nu = 1.0, z_a = 0.0, z_alpha = 0.0;
  int z_l0 = 1, z_m0 = 1;
  cmd_zonal->add_option("--nu", z_nu, "zonal amplitude");
  cmd_zonal->add_option("--a", z_a, "central strength");
  auto* z_alpha_opt = cmd_zonal->add_option("--alpha", z_alpha, "Froude parameter");
  cmd_zonal->add_option("--l0", z_l0, "degree of the plane's second vector");
  cmd_zonal->add_option("--m0", z_m0, "order of the plane's second vector");

  // tradewind
  auto* cmd_tw = app.add_subcommand("tradewind", "tradewind-plane curvature sweep over l0");
  double t_a = 0.0, t_alpha = 0.0;
  int t_lmax = 10;
  std::optional<int> t_m0;
  cmd_tw->add_option("--a", t_a, "central strength");
  auto* t_alpha_opt = cmd_tw->add_option("--alpha", t_alpha, "Froude parameter");
  auto* t_lmax_opt = cmd_tw->add_option("--lmax", t_lmax, "largest l0");
  cmd_tw->add_option("--m0", t_m0, "fixed order (default: m0 = l0)");
  std::optional<std::string> t_out;
  cmd_tw->add_option("--out", t_out, "output path (default stdout)");

  // figure2
  auto* cmd_f2 = app.add_subcommand("figure2", "CSV sweep of tradewind curvature, m0 = l0");
  std::vector<double> f_a{0.0, 2.0, 6.0, 12.0};
  int f_lmax = 30;
  double f_alpha = 0.0;
  std::optional<std::string> f_out;
  cmd_f2->add_option("--a", f_a, "central strengths")->delimiter(',');
  auto* f_lmax_opt = cmd_f2->add_option("--lmax", f_lmax, "largest l0");
  auto* f_alpha_opt = cmd_f2->add_option("--alpha", f_alpha, "Froude parameter");
  cmd_f2->add_option("--out", f_out, "output path (default stdout)");

  // evolve
  auto* cmd_ev = app.add_subcommand("evolve", "integrate the truncated spectral flow");
  std::string e_init;
  int e_lmax = 5, e_steps = 1000;
  double e_dt = 1e-3;
  std::optional<double> e_a, e_alpha;
  std::optional<std::string> e_out;
  cmd_ev->add_option("--init", e_init, "initial-condition JSON")->required();
  auto* e_lmax_opt = cmd_ev->add_option("--lmax", e_lmax, "Galerkin band");
  cmd_ev->add_option("--a", e_a, "override the central component");
  cmd_ev->add_option("--alpha", e_alpha, "Froude parameter");
  cmd_ev->add_option("--dt", e_dt, "time step");
  cmd_ev->add_option("--steps", e_steps, "number of RK4 steps");
  cmd_ev->add_option("--out", e_out, "trajectory CSV (default stdout)");

  // forecast
  auto* cmd_fc = app.add_subcommand("forecast", "predictability estimate");
  double fc_a = 0.0, fc_beta = 0.25, fc_months = 0.0;
  std::optional<std::string> fc_out;
  cmd_fc->add_option("--a", fc_a, "central strength");
  cmd_fc->add_option("--beta", fc_beta, "averaging constant in (0,1)");
  cmd_fc->add_option("--months", fc_months, "horizon in months");
  cmd_fc->add_option("--out", fc_out, "output path (default stdout)");

  // report
  auto* cmd_rep = app.add_subcommand("report", "emit the discrepancy report");
  int r_lmax = 3;
  std::optional<std::string> r_out;
  auto* r_lmax_opt = cmd_rep->add_option("--lmax", r_lmax, "band for the suites");
  cmd_rep->add_option("--out", r_out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    std::cerr << "qgc: error: args: " << e.what() << "\n";
    return 2;
  }

  Config cfg;
  if (!config_path.empty()) cfg = read_config_file(config_path);
  const auto cfg_int = [&](const CLI::Option* opt, int& value, const std::optional<int>& fromcfg) {
    if (opt->count() == 0 && fromcfg) value = *fromcfg;
  };
  const auto cfg_dbl = [&](const CLI::Option* opt, double& value,
                           const std::optional<double>& fromcfg) {
    if (opt->count() == 0 && fromcfg) value = *fromcfg;
  };

  if (cmd_constants->parsed()) {
    cfg_int(c_lmax_opt, c_lmax, cfg.lmax);
    Backend backend = c_backend == "analytic" ? Backend::analytic : Backend::quadrature;
    if (c_backend_opt->count() == 0 && cfg.backend) backend = *cfg.backend;
    const int threads = c_threads > 0 ? c_threads : cfg.threads.value_or(0);
    const StructureTable table = build_table(c_lmax, backend, threads);
    emit(c_out, table_to_json(table));
    return 0;
  }

  if (cmd_check->parsed()) {
    cfg_int(k_lmax_opt, k_lmax, cfg.lmax);
    const DiscrepancyReport rep = run_checks(k_lmax, cfg.tolerances);
    std::cout << report_to_text(rep);
    if (k_out) write_file(*k_out, report_to_json(rep));
    if (!rep.all_pass()) {
      std::cerr << "qgc: error: numeric: oracle suite failed\n";
      return 1;
    }
    return 0;
  }

  if (cmd_zonal->parsed()) {
    cfg_dbl(z_alpha_opt, z_alpha, cfg.alpha);
    std::cout << format_double(zonal_sectional(z_nu, z_a, z_alpha, z_l0, z_m0)) << "\n";
    return 0;
  }

  if (cmd_tw->parsed()) {
    cfg_int(t_lmax_opt, t_lmax, cfg.lmax);
    cfg_dbl(t_alpha_opt, t_alpha, cfg.alpha);
    std::string out = "l0,kappa\n";
    const int l0_min = t_m0 ? std::max(1, std::abs(*t_m0)) : 1;
    for (int l0 = l0_min; l0 <= t_lmax; ++l0) {
      const int m0 = t_m0 ? *t_m0 : l0;
      out += csv_row({std::to_string(l0), format_double(tradewind_sectional(t_a, t_alpha, l0, m0))});
    }
    emit(t_out, out);
    return 0;
  }

  if (cmd_f2->parsed()) {
    cfg_int(f_lmax_opt, f_lmax, cfg.lmax);
    cfg_dbl(f_alpha_opt, f_alpha, cfg.alpha);
    std::string out = "a,l0,kappa\n";
    for (const Figure2Row& row : figure2_sweep(f_a, 1, f_lmax, f_alpha))
      out += csv_row({format_double(row.a), std::to_string(row.l0), format_double(row.kappa)});
    emit(f_out, out);
    return 0;
  }

  if (cmd_ev->parsed()) {
    cfg_int(e_lmax_opt, e_lmax, cfg.lmax);
    const double alpha = e_alpha.value_or(cfg.alpha.value_or(0.0));
    HatVector u0 = read_init_file(e_init);
    if (e_a) u0.central = *e_a;
    for (const auto& [mode, v] : u0.coeffs)
      if (mode.l > e_lmax)
        throw std::invalid_argument("evolve: init mode (" + std::to_string(mode.l) + "," +
                                    std::to_string(mode.m) + ") exceeds --lmax");
    const StructureTable table = build_table(e_lmax, Backend::analytic,
                                             cfg.threads.value_or(0));
    const DynamicsConfig dyn{MetricContext{alpha}, &table, e_lmax};
    const Trajectory traj = integrate({u0, 0.0}, e_dt, e_steps, dyn);
    std::string out = "t,E,a,enstrophy,max|c|\n";
    for (const StepDiagnostics& d : traj.diagnostics)
      out += csv_row({format_double(d.t), format_double(d.energy), format_double(d.central),
                      format_double(d.enstrophy), format_double(d.max_abs)});
    emit(e_out, out);
    return 0;
  }

  if (cmd_fc->parsed()) {
    ForecastParams p;
    p.a = fc_a;
    p.beta_luk = fc_beta;
    p.months = fc_months;
    emit(fc_out, forecast_json(make_forecast_report(p)));
    return 0;
  }

  if (cmd_rep->parsed()) {
    cfg_int(r_lmax_opt, r_lmax, cfg.lmax);
    const DiscrepancyReport rep = run_checks(r_lmax, cfg.tolerances);
    emit(r_out, report_to_json(rep));
    return rep.all_pass() ? 0 : 1;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const GridError& e) {
    std::cerr << "qgc: error: numeric: " << e.what() << "\n";
    return 1;
  } catch (const TruncationError& e) {
    std::cerr << "qgc: error: numeric: " << e.what() << "\n";
    return 1;
  } catch (const DegeneratePlaneError& e) {
    std::cerr << "qgc: error: numeric: " << e.what() << "\n";
    return 1;
  } catch (const BlowupError& e) {
    std::cerr << "qgc: error: numeric: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "qgc: error: args: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "qgc: error: args: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "qgc: error: internal: " << e.what() << "\n";
    return 1;
  }
}
