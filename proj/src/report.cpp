#include "qgc/report.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "qgc/harmonics.hpp"
#include "qgc/serialize.hpp"

namespace qgc {

namespace {

double tol_of(const ToleranceMap& overrides, const std::string& name, double fallback) {
  auto it = overrides.find(name);
  return it == overrides.end() ? fallback : it->second;
}

std::vector<ModeIndex> modes_up_to(int lmax, int lmin = 1) {
  std::vector<ModeIndex> out;
  for (int l = lmin; l <= lmax; ++l)
    for (int m = -l; m <= l; ++m) out.push_back({l, m});
  return out;
}

double entry_delta(const EntryList& a, const EntryList& b) {
  double mx = 0.0;
  std::map<ModeIndex, Complex> ma, mb;
  for (const auto& e : a) ma[e.target] = e.value;
  for (const auto& e : b) mb[e.target] = e.value;
  for (const auto& [t, v] : ma) mx = std::max(mx, std::abs(v - (mb.count(t) ? mb[t] : 0.0)));
  for (const auto& [t, v] : mb)
    if (!ma.count(t)) mx = std::max(mx, std::abs(v));
  return mx;
}

double hv_max_abs(const HatVector& v) {
  double m = std::abs(v.central);
  for (const auto& [mode, c] : v.coeffs) m = std::max(m, std::abs(c));
  return m;
}

HatVector basis(ModeIndex p, Complex a = 0.0) {
  HatVector v;
  v.coeffs[p] = 1.0;
  v.central = a;
  return v;
}

HatVector random_real_hv(std::mt19937& rng, int lmax, int nmodes = 3) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::uniform_int_distribution<int> dl(1, lmax);
  HatVector out;
  for (int i = 0; i < nmodes; ++i) {
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

double jacobi_residual(const StructureTable& wide, int lmax) {
  // [[p,q],r] + [[q,r],p] + [[r,p],q] = 0 through the G-composition
  double mx = 0.0;
  const auto modes = modes_up_to(lmax);
  for (const auto& p : modes)
    for (const auto& q : modes)
      for (const auto& r : modes) {
        CoeffMap acc;
        const ModeIndex trip[3][2] = {{p, q}, {q, r}, {r, p}};
        const ModeIndex third[3] = {r, p, q};
        for (int c = 0; c < 3; ++c) {
          wide.for_each(trip[c][0], trip[c][1], [&](ModeIndex t, Complex g) {
            wide.for_each(t, third[c], [&](ModeIndex t2, Complex g2) { acc[t2] += g * g2; });
          });
        }
        for (const auto& [t, v] : acc) mx = std::max(mx, std::abs(v));
      }
  return mx;
}

double cocycle_identity_residual(const StructureTable& table, int lmax) {
  // Omega([u,v],w) + Omega([v,w],u) + Omega([w,u],v) = 0
  double mx = 0.0;
  const auto modes = modes_up_to(lmax);
  for (const auto& p : modes)
    for (const auto& q : modes)
      for (const auto& r : modes) {
        Complex s = 0.0;
        const ModeIndex trip[3][2] = {{p, q}, {q, r}, {r, p}};
        const ModeIndex third[3] = {r, p, q};
        for (int c = 0; c < 3; ++c) {
          table.for_each(trip[c][0], trip[c][1],
                         [&](ModeIndex t, Complex g) { s += g * cocycle(t, third[c]); });
        }
        mx = std::max(mx, std::abs(s));
      }
  return mx;
}

double torsion_residual(const StructureTable& wide, const MetricContext& ctx, int lmax) {
  double mx = 0.0;
  const auto modes = modes_up_to(lmax);
  for (const auto& p : modes)
    for (const auto& q : modes) {
      const HatVector x = basis(p, 0.3), y = basis(q, -0.2);
      HatVector t = nabla_hat(x, y, ctx, wide);
      t = axpy(t, nabla_hat(y, x, ctx, wide), Complex{-1.0});
      t = axpy(t, bracket_hat(x, y, wide), Complex{-1.0});
      mx = std::max(mx, hv_max_abs(t));
    }
  return mx;
}

double koszul_compat_residual(const StructureTable& table, const MetricContext& ctx, int lmax,
                              int n_samples, unsigned seed) {
  std::mt19937 rng(seed);
  double mx = 0.0;
  for (int i = 0; i < n_samples; ++i) {
    const HatVector x = random_real_hv(rng, lmax);
    const HatVector y = random_real_hv(rng, lmax);
    const HatVector z = random_real_hv(rng, lmax);
    const Complex lhs = 2.0 * metric(nabla_hat(x, y, ctx, table), z, ctx);
    const Complex rhs = metric(bracket_hat(x, y, table), z, ctx) -
                        metric(bracket_hat(y, z, table), x, ctx) +
                        metric(bracket_hat(z, x, table), y, ctx);
    mx = std::max(mx, std::abs(lhs - rhs));
  }
  return mx;
}

double sign_invariance_residual(const StructureTable& table, int lmax, unsigned seed) {
  const StructureTable flipped = table.flipped();
  std::mt19937 rng(seed);
  const MetricContext ctx{0.7};
  double mx = 0.0;
  for (int i = 0; i < 30; ++i) {
    CurvatureQuery q{random_real_hv(rng, std::min(lmax, 3)),
                     random_real_hv(rng, std::min(lmax, 3)),
                     random_real_hv(rng, std::min(lmax, 3)),
                     random_real_hv(rng, std::min(lmax, 3)),
                     ctx,
                     &table};
    CurvatureQuery qf = q;
    qf.table = &flipped;
    mx = std::max(mx, std::abs(curvature_formula(q) - curvature_formula(qf)));
    mx = std::max(mx, std::abs(curvature_koszul(q) - curvature_koszul(qf)));
  }
  return mx;
}

struct SymmetryResiduals {
  double pair_sym = 0.0;
  double skew = 0.0;
};

SymmetryResiduals riemann_symmetry_residual(const StructureTable& table, int lmax,
                                            unsigned seed) {
  std::mt19937 rng(seed);
  const MetricContext ctx{0.7};
  SymmetryResiduals r;
  for (int i = 0; i < 40; ++i) {
    const HatVector x = random_real_hv(rng, std::min(lmax, 3));
    const HatVector y = random_real_hv(rng, std::min(lmax, 3));
    const HatVector z = random_real_hv(rng, std::min(lmax, 3));
    const HatVector w = random_real_hv(rng, std::min(lmax, 3));
    const Complex v1 = curvature_koszul({x, y, z, w, ctx, &table});
    const Complex v2 = curvature_koszul({z, w, x, y, ctx, &table});
    const Complex v3 = curvature_koszul({x, y, w, z, ctx, &table});
    r.pair_sym = std::max(r.pair_sym, std::abs(v1 - v2));
    r.skew = std::max(r.skew, std::abs(v1 + v3));
  }
  return r;
}

double t_realization_residual(int lmax) {
  // metric((T u, 0), (v, 0)) = Omega(u, v) on basis fields
  double mx = 0.0;
  const auto modes = modes_up_to(lmax);
  for (double alpha : {0.0, 0.5, 1.0}) {
    const MetricContext ctx{alpha};
    for (const auto& p : modes)
      for (const auto& q : modes) {
        const StructureEntry te = t_operator(p, alpha);
        HatVector tu;
        tu.coeffs[te.target] = te.value;
        mx = std::max(mx, std::abs(metric(tu, basis(q), ctx) - cocycle(p, q)));
      }
  }
  return mx;
}

double dk_identity_residual() {
  double mx = 0.0;
  for (double alpha : {0.0, 0.5, 2.0}) {
    const ConnectionCoefficients conn{alpha};
    for (int l0 = 1; l0 <= 10; ++l0) {
      const double w = alpha * alpha + static_cast<double>(l0) * (l0 + 1);
      const double lhs = conn.d(l0, 1, l0) * conn.d(1, l0, l0) + conn.k(1, l0, l0);
      const double rhs = -(alpha * alpha + 2.0) * (alpha * alpha + 2.0) / (4.0 * w * w);
      mx = std::max(mx, std::abs(lhs - rhs));
    }
  }
  return mx;
}

double zonal_oracle_residual(const StructureTable& table) {
  double mx = 0.0;
  const struct {
    double nu, a, alpha;
    int l0, m0;
  } cases[] = {{1, 0, 0, 1, 1}, {1, 0, 0, 2, 1}, {1, 1, 0, 1, 1}, {2, 3, 0.8, 3, 2},
               {1, 0.5, 1.2, 3, 3}};
  for (const auto& c : cases) {
    const MetricContext ctx{c.alpha};
    const SectionalReport rep =
        sectional(zonal_xi(c.nu, c.a), unit_eta_pair(c.l0, c.m0, ctx), ctx, table);
    mx = std::max(mx, std::abs(rep.kappa - zonal_sectional(c.nu, c.a, c.alpha, c.l0, c.m0)));
  }
  return mx;
}

double tradewind_oracle_residual(const StructureTable& table) {
  double mx = 0.0;
  const struct {
    double a, alpha;
    int l0, m0;
  } cases[] = {{0, 0, 2, 2}, {0, 0, 3, 1}, {12, 0, 2, 2}, {2, 1, 3, 3}, {0.5, 0.7, 3, 2}};
  for (const auto& c : cases) {
    const MetricContext ctx{c.alpha};
    const SectionalReport rep =
        sectional(tradewind_xi(c.a), unit_eta_pair(c.l0, c.m0, ctx), ctx, table);
    mx = std::max(mx, std::abs(rep.kappa - tradewind_sectional(c.a, c.alpha, c.l0, c.m0)));
  }
  return mx;
}

TradewindComparison tradewind_comparison(const StructureTable& table) {
  TradewindComparison cmp;
  const double inv_sqrt6 = 1.0 / std::sqrt(6.0);
  for (const ModeIndex mode : {ModeIndex{2, 1}, {3, 2}, {3, 3}, {2, 2}}) {
    EntryList scaled_y20;
    for (const auto& e : structure_constants_analytic({2, 0}, mode))
      scaled_y20.push_back({e.target, inv_sqrt6 * e.value});
    cmp.constants_delta =
        std::max(cmp.constants_delta, entry_delta(tradewind_constants(mode.l, mode.m), scaled_y20));
  }
  HatVector y20;
  y20.coeffs[{2, 0}] = 1.0;
  {
    const MetricContext ctx{0.0};
    cmp.kappa_g_alpha0 = sectional(tradewind_xi(0.0), unit_eta_pair(3, 3, ctx), ctx, table).kappa;
    cmp.kappa_y20_alpha0 = sectional(y20, unit_eta_pair(3, 3, ctx), ctx, table).kappa;
  }
  {
    const MetricContext ctx{1.0};
    cmp.kappa_g_alpha1 = sectional(tradewind_xi(0.0), unit_eta_pair(3, 3, ctx), ctx, table).kappa;
    cmp.kappa_y20_alpha1 = sectional(y20, unit_eta_pair(3, 3, ctx), ctx, table).kappa;
  }
  return cmp;
}

}  // namespace

double backend_agreement(int lmax) {
  const SphereGrid grid = SphereGrid::for_truncation(lmax);
  double mx = 0.0;
  const auto modes = modes_up_to(lmax);
  for (const auto& p : modes)
    for (const auto& q : modes) {
      if (!(p < q)) continue;
      mx = std::max(mx, entry_delta(structure_constants_quadrature(p, q, grid),
                                    structure_constants_analytic(p, q)));
    }
  return mx;
}

double bracket_antisymmetry(int lmax) {
  // both orientations computed independently by quadrature, no storage trick
  const SphereGrid grid = SphereGrid::for_truncation(lmax);
  double mx = 0.0;
  const auto modes = modes_up_to(lmax);
  for (const auto& p : modes)
    for (const auto& q : modes) {
      if (!(p < q)) continue;
      EntryList neg;
      for (const auto& e : structure_constants_quadrature(q, p, grid))
        neg.push_back({e.target, -e.value});
      mx = std::max(mx, entry_delta(structure_constants_quadrature(p, q, grid), neg));
    }
  return mx;
}

double selection_rule_scan(int lmax) {
  const SphereGrid grid = SphereGrid::for_truncation(lmax);
  double mx = 0.0;
  const auto modes = modes_up_to(lmax);
  for (const auto& p : modes)
    for (const auto& q : modes) {
      if (!(p < q)) continue;
      const GridSamples f = sample_ylm(grid, p);
      const GridSamples g = sample_ylm(grid, q);
      const GridSamples br = poisson_bracket_grid(f, g, grid);
      for (int l3 = 0; l3 <= p.l + q.l + 1; ++l3)
        for (int m3 = -l3; m3 <= l3; ++m3) {
          if (!grid.can_project(l3, m3)) continue;
          const bool allowed = m3 == p.m + q.m && l3 >= std::abs(p.l - q.l) + 1 &&
                               l3 <= p.l + q.l - 1 && ((p.l + q.l + l3) & 1);
          if (allowed) continue;
          mx = std::max(mx, std::abs(project(br, {l3, m3}, grid)));
        }
    }
  return mx;
}

KSweepResult formula_koszul_sweep(const StructureTable& table, int lmax, double alpha) {
  KSweepResult sweep;
  const MetricContext ctx{alpha};
  const auto modes = modes_up_to(std::min(lmax, 3));
  const double centrals[2] = {0.0, 1.0};
  for (const auto& p1 : modes)
    for (const auto& p2 : modes)
      for (const auto& p3 : modes)
        for (const auto& p4 : modes)
          for (double a1 : centrals)
            for (double a2 : centrals)
              for (double a3 : centrals)
                for (double a4 : centrals) {
                  CurvatureQuery q{basis(p1, a1), basis(p2, a2), basis(p3, a3),
                                   basis(p4, a4),  ctx,          &table};
                  const Complex koszul = curvature_koszul(q);
                  q.kvariant = KVariant::canonical;
                  sweep.canonical =
                      std::max(sweep.canonical, std::abs(curvature_formula(q) - koszul));
                  q.kvariant = KVariant::shifted;
                  sweep.shifted =
                      std::max(sweep.shifted, std::abs(curvature_formula(q) - koszul));
                }
  return sweep;
}

double formula_koszul_random(const StructureTable& table, int lmax, double alpha,
                             int n_samples, unsigned seed) {
  std::mt19937 rng(seed);
  const MetricContext ctx{alpha};
  double mx = 0.0;
  for (int i = 0; i < n_samples; ++i) {
    CurvatureQuery q{random_real_hv(rng, std::min(lmax, 3)),
                     random_real_hv(rng, std::min(lmax, 3)),
                     random_real_hv(rng, std::min(lmax, 3)),
                     random_real_hv(rng, std::min(lmax, 3)),
                     ctx,
                     &table};
    mx = std::max(mx, std::abs(curvature_formula(q) - curvature_koszul(q)));
  }
  return mx;
}

bool DiscrepancyReport::all_pass() const {
  return std::all_of(suites.begin(), suites.end(),
                     [](const SuiteResult& s) { return s.pass(); });
}

const SuiteResult* DiscrepancyReport::find(const std::string& name) const {
  for (const auto& s : suites)
    if (s.name == name) return &s;
  return nullptr;
}

DiscrepancyReport run_checks(int lmax, const ToleranceMap& tol) {
  DiscrepancyReport rep;
  rep.lmax = lmax;
  const int sweep_l = std::min(lmax, 3);
  const StructureTable table = build_table(lmax, Backend::quadrature);
  const StructureTable wide = build_table(std::max(lmax, 2 * sweep_l - 1), Backend::analytic);

  const auto push = [&](const std::string& name, double residual, double fallback) {
    rep.suites.push_back({name, residual, tol_of(tol, name, fallback)});
  };

  push("backend_agreement", backend_agreement(lmax), 1e-10);
  push("bracket_antisymmetry", bracket_antisymmetry(std::min(lmax, 4)), 1e-12);
  push("selection_rules", selection_rule_scan(std::min(lmax, 6)), 1e-12);

  double canon = 0.0, shifted = 0.0;
  for (double alpha : {0.0, 0.7}) {
    const KSweepResult s = formula_koszul_sweep(table, sweep_l, alpha);
    canon = std::max(canon, s.canonical);
    shifted = std::max(shifted, s.shifted);
    canon = std::max(canon, formula_koszul_random(table, lmax, alpha, 40, 1234));
  }
  rep.canonical_k_delta = canon;
  rep.shifted_k_delta = shifted;
  push("formula_vs_koszul", canon, 1e-10);

  push("jacobi", jacobi_residual(wide, sweep_l), 1e-10);
  push("cocycle_identity", cocycle_identity_residual(table, sweep_l), 1e-10);
  push("torsion_free", torsion_residual(wide, MetricContext{0.7}, std::min(lmax, 4)), 1e-12);
  push("koszul_compatibility",
       koszul_compat_residual(table, MetricContext{0.7}, sweep_l, 50, 777), 1e-10);
  push("sign_invariance", sign_invariance_residual(table, lmax, 99), 1e-12);
  const SymmetryResiduals sym = riemann_symmetry_residual(table, lmax, 4321);
  push("riemann_pair_symmetry", sym.pair_sym, 1e-10);
  push("riemann_skew_symmetry", sym.skew, 1e-10);
  push("t_realization", t_realization_residual(std::min(lmax, 4)), 1e-12);
  push("d_k_identity", dk_identity_residual(), 1e-14);
  {
    const StructureTable wide5 = build_table(std::max(lmax, 5), Backend::analytic);
    push("zonal_oracle", zonal_oracle_residual(wide5), 1e-10);
    push("tradewind_oracle", tradewind_oracle_residual(wide5), 1e-10);
  }
  rep.tradewind = tradewind_comparison(build_table(std::max(lmax, 5), Backend::analytic));
  return rep;
}

std::string report_to_json(const DiscrepancyReport& r) {
  std::string out = "{\n";
  out += "\"lmax\":" + std::to_string(r.lmax) + ",\n";
  out += "\"suites\":[\n";
  for (std::size_t i = 0; i < r.suites.size(); ++i) {
    const SuiteResult& s = r.suites[i];
    out += "{\"name\":\"" + s.name + "\",\"residual\":" + format_double(s.residual) +
           ",\"tolerance\":" + format_double(s.tolerance) +
           ",\"pass\":" + (s.pass() ? std::string("true") : std::string("false")) + "}";
    if (i + 1 < r.suites.size()) out += ",";
    out += "\n";
  }
  out += "],\n";
  out += "\"k_variants\":{\"canonical_vs_koszul\":" + format_double(r.canonical_k_delta) +
         ",\"shifted_vs_koszul\":" + format_double(r.shifted_k_delta) + "},\n";
  out += "\"tradewind_vs_y20\":{";
  out += "\"constants_delta\":" + format_double(r.tradewind.constants_delta);
  out += ",\"kappa_generator_alpha0\":" + format_double(r.tradewind.kappa_g_alpha0);
  out += ",\"kappa_y20_alpha0\":" + format_double(r.tradewind.kappa_y20_alpha0);
  out += ",\"kappa_generator_alpha1\":" + format_double(r.tradewind.kappa_g_alpha1);
  out += ",\"kappa_y20_alpha1\":" + format_double(r.tradewind.kappa_y20_alpha1);
  out += "},\n";
  out += std::string("\"all_pass\":") + (r.all_pass() ? "true" : "false") + "\n";
  out += "}\n";
  return out;
}

std::string report_to_text(const DiscrepancyReport& r) {
  std::string out;
  for (const auto& s : r.suites) {
    out += (s.pass() ? "PASS " : "FAIL ") + s.name + "  residual=" + format_double(s.residual) +
           "  tol=" + format_double(s.tolerance) + "\n";
  }
  out += "k variant deltas vs Koszul assembly: canonical=" + format_double(r.canonical_k_delta) +
         "  shifted=" + format_double(r.shifted_k_delta) + "\n";
  out += "tradewind generator vs (2,0) harmonic: constants delta (after 1/sqrt6 scaling)=" +
         format_double(r.tradewind.constants_delta) + "\n";
  out += "  kappa at alpha=0: generator=" + format_double(r.tradewind.kappa_g_alpha0) +
         "  y20=" + format_double(r.tradewind.kappa_y20_alpha0) + "\n";
  out += "  kappa at alpha=1: generator=" + format_double(r.tradewind.kappa_g_alpha1) +
         "  y20=" + format_double(r.tradewind.kappa_y20_alpha1) + "\n";
  return out;
}

}  // namespace qgc
