// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion pins its tolerance in code.

#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "qgc/curvature.hpp"
#include "qgc/dynamics.hpp"
#include "qgc/forecast.hpp"
#include "qgc/report.hpp"
#include "qgc/serialize.hpp"

using namespace qgc;

namespace {

constexpr double kPi = std::numbers::pi;
int g_failures = 0;

void criterion(int id, const std::string& what, bool pass, const std::string& detail) {
  std::printf("criterion %2d %s: %s (%s)\n", id, pass ? "PASS" : "FAIL", what.c_str(),
              detail.c_str());
  if (!pass) ++g_failures;
}

HatVector random_real_hv(std::mt19937& rng, int lmax, int nmodes = 3) {
  std::normal_distribution<double> g(0.0, 1.0);
  HatVector out;
  for (int i = 0; i < nmodes; ++i) {
    std::uniform_int_distribution<int> dl(1, lmax);
    const int l = dl(rng);
    std::uniform_int_distribution<int> dm(0, l);
    const int m = dm(rng);
    const Complex c = (m == 0) ? Complex{g(rng), 0.0} : Complex{g(rng), g(rng)};
    out.coeffs[{l, m}] += c;
    if (m != 0) out.coeffs[{l, -m}] += parity(m) * std::conj(c);
  }
  out.central = g(rng);
  return out;
}

}  // namespace

int main() {
  // 1. structure-constant backends agree entrywise up to degree 8
  {
    const double resid = backend_agreement(8);
    criterion(1, "backend agreement l<=8", resid <= 1e-10,
              "max entry delta = " + format_double(resid));
  }

  const StructureTable table3 = build_table(3, Backend::quadrature);

  // 2. curvature formula == Koszul assembly: full basis sweep l<=3 with
  //    centrals in {0,1}, plus 100 random real vectors, alpha in {0, 0.7}
  double canonical_delta = 0.0, shifted_delta = 0.0;
  {
    double resid = 0.0;
    for (double alpha : {0.0, 0.7}) {
      const KSweepResult s = formula_koszul_sweep(table3, 3, alpha);
      resid = std::max(resid, s.canonical);
      shifted_delta = std::max(shifted_delta, s.shifted);
      resid = std::max(resid, formula_koszul_random(table3, 3, alpha, 100, 20240818));
    }
    canonical_delta = resid;
    criterion(2, "curvature formula vs Koszul oracle l<=3", resid <= 1e-10,
              "max |formula - koszul| = " + format_double(resid));
  }

  // 3. zonal literature reduction at a = alpha = 0
  {
    double closed = 0.0, oracle = 0.0;
    const StructureTable table6 = build_table(6, Backend::quadrature);
    for (int l0 = 1; l0 <= 6; ++l0)
      for (int m0 = 1; m0 <= l0; ++m0) {
        const double want = 3.0 / (8.0 * kPi) * m0 * m0 /
                            (static_cast<double>(l0) * l0 * (l0 + 1.0) * (l0 + 1.0));
        closed = std::max(closed, std::abs(zonal_sectional(1, 0, 0, l0, m0) - want));
        const MetricContext ctx{0.0};
        const SectionalReport rep =
            sectional(zonal_xi(1.0, 0.0), unit_eta_pair(l0, m0, ctx), ctx, table6);
        oracle = std::max(oracle, std::abs(rep.kappa - want));
      }
    criterion(3, "zonal reduction to (3/8pi) m^2/(l^2(l+1)^2), l<=6",
              closed <= 1e-12 && oracle <= 1e-10,
              "closed delta = " + format_double(closed) +
                  ", oracle delta = " + format_double(oracle));
  }

  // 4. connection-weight identity
  {
    double resid = 0.0;
    for (double alpha : {0.0, 0.5, 2.0}) {
      const ConnectionCoefficients conn{alpha};
      for (int l0 = 1; l0 <= 10; ++l0) {
        const double w = alpha * alpha + static_cast<double>(l0) * (l0 + 1);
        const double want = -(alpha * alpha + 2.0) * (alpha * alpha + 2.0) / (4.0 * w * w);
        resid = std::max(resid,
                         std::abs(conn.d(l0, 1, l0) * conn.d(1, l0, l0) + conn.k(1, l0, l0) - want));
      }
    }
    criterion(4, "d*d + k identity, l0<=10, alpha in {0,.5,2}", resid <= 1e-14,
              "max residual = " + format_double(resid));
  }

  // 5. tradewind limit at l0 = m0 = 200
  {
    bool ok = true;
    double worst = 0.0;
    for (double a : {0.0, 2.0, 12.0})
      for (double alpha : {0.0, 1.0}) {
        const double lim = -15.0 / (8.0 * kPi) / (3.0 / 8.0 * alpha * alpha + 1.0 + a * a);
        const double rel = std::abs(tradewind_sectional(a, alpha, 200, 200) - lim) / std::abs(lim);
        worst = std::max(worst, rel);
        ok = ok && rel <= 0.05;
        const double th = 200.0 * 200.0 * tradewind_theta(200, 200, alpha);
        ok = ok && std::abs(th + 4.0) / 4.0 <= 0.05;
      }
    criterion(5, "tradewind limit at l0=200 within 5%", ok,
              "worst relative deviation = " + format_double(worst));
  }

  // 6. figure-2 qualitative shape and closed-form equality
  {
    bool ok = true;
    std::string detail;
    const auto rows12 = figure2_sweep({12.0}, 2, 60, 0.0);
    for (const auto& r : rows12)
      ok = ok && r.kappa == tradewind_sectional(12.0, 0.0, r.l0, r.l0);
    bool pos23 = true;
    for (const auto& r : rows12)
      if (r.l0 == 2 || r.l0 == 3) pos23 = pos23 && r.kappa > 0.0;
    ok = ok && pos23;
    int threshold = -1;
    for (const auto& r : rows12)
      if (r.kappa < 0.0) {
        threshold = r.l0;
        break;
      }
    ok = ok && threshold > 3;
    for (const auto& r : rows12) ok = ok && (r.l0 < threshold || r.kappa < 0.0);
    const auto rows0 = figure2_sweep({0.0}, 2, 60, 0.0);
    for (const auto& r : rows0) ok = ok && r.kappa < 0.0;
    // spot-check two rows against the Gram-normalized oracle
    const StructureTable table5 = build_table(5, Backend::quadrature);
    const MetricContext ctx{0.0};
    for (int l0 : {2, 4}) {
      const double oracle =
          sectional(tradewind_xi(12.0), unit_eta_pair(l0, l0, ctx), ctx, table5).kappa;
      ok = ok && std::abs(oracle - tradewind_sectional(12.0, 0.0, l0, l0)) <= 1e-10;
    }
    detail = "a=12 first negative l0 = " + std::to_string(threshold);
    criterion(6, "figure-2 shape: a=12 positive pocket, a=0 all negative", ok, detail);
  }

  // 7. forecast printed numbers
  {
    ForecastParams p16;
    p16.a = 2.0;
    p16.beta_luk = 1.0 / 16.0;
    const double months = months_to_exponent(5.0, p16);
    ForecastParams p4;
    p4.a = 2.0;
    p4.beta_luk = 0.25;
    const double growth = growth_after_months(2.0, p4).log10_rounded;
    ForecastParams p0;
    p0.a = 0.0;
    p0.beta_luk = 0.25;
    const double luk = growth_after_months(1.0, p0).log10_rounded;
    const bool ok = std::abs(months - 4.47) <= 0.05 && std::abs(growth - 4.47) <= 0.05 &&
                    std::abs(luk - 5.0) <= 1e-12;
    criterion(7, "forecast: 4.5 months to 1e5 at (a=2, beta=1/16); 10^4.5 after 2 months", ok,
              "months = " + format_double(months) + ", log10 growth = " + format_double(growth) +
                  ", a=0 exponent = " + format_double(luk));
  }

  // 8. dynamics invariants
  {
    bool ok = true;
    std::string detail;
    const StructureTable table5 = build_table(5, Backend::quadrature);
    double steady = 0.0;
    for (double a : {0.0, 2.0})
      for (double alpha : {0.0, 1.0}) {
        const DynamicsConfig cfg{MetricContext{alpha}, &table5, 5};
        for (const HatVector& u : {zonal_xi(1.0, a), tradewind_xi(a)}) {
          const HatVector d = rhs({u, 0.0}, cfg);
          double mx = std::abs(d.central);
          for (const auto& [mode, v] : d.coeffs) mx = std::max(mx, std::abs(v));
          steady = std::max(steady, mx);
        }
      }
    ok = ok && steady < 1e-12;

    std::mt19937 rng(5150);
    HatVector u0 = random_real_hv(rng, 5, 6);
    u0.central = 2.0;
    const DynamicsConfig cfg{MetricContext{0.5}, &table5, 5};
    const Trajectory traj = integrate({u0, 0.0}, 1e-3, 10000, cfg, 500);
    const double e0 = traj.diagnostics.front().energy;
    double drift = 0.0;
    bool central_const = true;
    double reality = 0.0;
    for (const auto& d : traj.diagnostics) {
      drift = std::max(drift, std::abs(d.energy - e0) / e0);
      reality = std::max(reality, d.reality);
    }
    for (const auto& s : traj.states)
      central_const = central_const && s.u.central.real() == 2.0 && s.u.central.imag() == 0.0;
    ok = ok && drift < 1e-8 && central_const && reality < 1e-11;
    detail = "steady residual = " + format_double(steady) +
             ", energy drift = " + format_double(drift) +
             ", central bit-constant = " + (central_const ? std::string("yes") : std::string("no"));
    criterion(8, "dynamics: steady states, energy drift < 1e-8 over 1e4 steps, constant central",
              ok, detail);
  }

  // 9. algebraic property suite
  DiscrepancyReport rep;
  {
    rep = run_checks(3);
    const char* names[] = {"bracket_antisymmetry", "jacobi",          "cocycle_identity",
                           "torsion_free",      "koszul_compatibility", "sign_invariance",
                           "riemann_pair_symmetry", "riemann_skew_symmetry", "t_realization",
                           "selection_rules",   "zonal_oracle",        "tradewind_oracle",
                           "formula_vs_koszul", "backend_agreement",   "d_k_identity"};
    bool ok = true;
    std::string failing;
    for (const char* n : names) {
      const SuiteResult* s = rep.find(n);
      if (s == nullptr || !s->pass()) {
        ok = false;
        failing += std::string(n) + " ";
      }
    }
    criterion(9, "algebraic property suites at lmax 3", ok,
              ok ? "all suites green" : ("failing: " + failing));
  }

  // 10. discrepancy report completeness; green overall under the canonical k
  {
    const std::string json = report_to_json(rep);
    const bool has_sections = json.find("\"k_variants\"") != std::string::npos &&
                              json.find("\"tradewind_vs_y20\"") != std::string::npos &&
                              json.find("\"suites\"") != std::string::npos;
    const bool k_documented = rep.shifted_k_delta > 1e-3 && rep.canonical_k_delta <= 1e-10 &&
                              shifted_delta > 1e-3 && canonical_delta <= 1e-10;
    const bool adjudication = rep.tradewind.constants_delta < 1e-12 &&
                              std::abs(rep.tradewind.kappa_g_alpha0 -
                                       rep.tradewind.kappa_y20_alpha0) < 1e-12 &&
                              std::abs(rep.tradewind.kappa_g_alpha1 -
                                       rep.tradewind.kappa_y20_alpha1) > 1e-3;
    const bool ok = has_sections && k_documented && adjudication && rep.all_pass() &&
                    g_failures == 0;
    criterion(10, "discrepancy report: k-variant deltas, generator-vs-y20 evidence, residuals",
              ok,
              "shifted-k delta = " + format_double(rep.shifted_k_delta) +
                  ", generator/y20 kappa split at alpha=1 = " +
                  format_double(std::abs(rep.tradewind.kappa_g_alpha1 -
                                         rep.tradewind.kappa_y20_alpha1)));
  }

  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
