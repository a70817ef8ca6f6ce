#include "qgc/curvature.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "qgc/errors.hpp"

namespace qgc {

namespace {

constexpr double kPi = std::numbers::pi;

double a_lm(int l, int m) {
  return (static_cast<double>(l) * l - static_cast<double>(m) * m) / (4.0 * l * l - 1.0);
}

// One multilinear factor of a hat vector: either a field mode (central 0)
// or the bare central direction (no mode).
struct Component {
  bool has_mode = false;
  ModeIndex mode;
  Complex a{0.0};      // central part of the decorated basis element
  Complex weight{1.0}; // multilinear coefficient
};

std::vector<Component> components(const HatVector& x) {
  std::vector<Component> out;
  out.reserve(x.coeffs.size() + 1);
  for (const auto& [mode, v] : x.coeffs) {
    if (v == Complex{0.0}) continue;
    out.push_back({true, mode, Complex{0.0}, v});
  }
  if (x.central != Complex{0.0}) out.push_back({false, {}, x.central, Complex{1.0}});
  return out;
}

using TargetMap = std::map<ModeIndex, Complex>;

// <A, B> over target lists: sum (-1)^m (alpha^2 + l(l+1)) A^{lm} B^{l,-m}.
Complex pair_targets(const TargetMap& A, const TargetMap& B, const MetricContext& ctx) {
  Complex s = 0.0;
  for (const auto& [t, v] : A) {
    auto it = B.find({t.l, -t.m});
    if (it != B.end()) s += parity(t.m) * ctx.weight(t.l) * v * it->second;
  }
  return s;
}

// Connection coefficient list Gamma_{b1 b3}: d * G minus the central
// corrections through the diagonal operator.
TargetMap gamma_targets(const Component& b1, const Component& b3, const StructureTable& table,
                        const MetricContext& ctx) {
  const ConnectionCoefficients conn{ctx.alpha};
  const double sign = table.bracket_sign();
  TargetMap out;
  if (b1.has_mode && b3.has_mode) {
    table.for_each(b1.mode, b3.mode, [&](ModeIndex t, Complex g) {
      out[t] += conn.d(b1.mode.l, b3.mode.l, t.l) * g;
    });
  }
  if (b3.has_mode && b1.a != Complex{0.0}) {
    const StructureEntry te = t_operator(b3.mode, ctx.alpha);
    if (te.value != Complex{0.0}) out[te.target] -= 0.5 * b1.a * sign * te.value;
  }
  if (b1.has_mode && b3.a != Complex{0.0}) {
    const StructureEntry te = t_operator(b1.mode, ctx.alpha);
    if (te.value != Complex{0.0}) out[te.target] -= 0.5 * b3.a * sign * te.value;
  }
  return out;
}

bool mirrored(const Component& p, const Component& q) {
  return p.has_mode && q.has_mode && p.mode.l == q.mode.l && p.mode.m == -q.mode.m;
}

Complex formula_basis(const Component& b1, const Component& b2, const Component& b3,
                      const Component& b4, const StructureTable& table,
                      const MetricContext& ctx, KVariant kvariant) {
  const ConnectionCoefficients conn{ctx.alpha};
  const double sign = table.bracket_sign();

  const TargetMap g13 = gamma_targets(b1, b3, table, ctx);
  const TargetMap g24 = gamma_targets(b2, b4, table, ctx);
  const TargetMap g23 = gamma_targets(b2, b3, table, ctx);
  const TargetMap g14 = gamma_targets(b1, b4, table, ctx);
  Complex s = pair_targets(g13, g24, ctx) - pair_targets(g23, g14, ctx);

  // G_{12} paired against G_{34} k + (a4 T_{3} - a3 T_{4}) / 2
  if (b1.has_mode && b2.has_mode) {
    TargetMap g12;
    table.for_each(b1.mode, b2.mode, [&](ModeIndex t, Complex g) { g12[t] += g; });
    if (!g12.empty()) {
      TargetMap inner;
      if (b3.has_mode && b4.has_mode) {
        table.for_each(b3.mode, b4.mode, [&](ModeIndex t, Complex g) {
          inner[t] += g * conn.k(b3.mode.l, b4.mode.l, t.l, kvariant);
        });
      }
      if (b3.has_mode && b4.a != Complex{0.0}) {
        const StructureEntry te = t_operator(b3.mode, ctx.alpha);
        if (te.value != Complex{0.0}) inner[te.target] += 0.5 * b4.a * sign * te.value;
      }
      if (b4.has_mode && b3.a != Complex{0.0}) {
        const StructureEntry te = t_operator(b4.mode, ctx.alpha);
        if (te.value != Complex{0.0}) inner[te.target] -= 0.5 * b3.a * sign * te.value;
      }
      s += pair_targets(g12, inner, ctx);
    }
  }

  // central Kronecker tails (products of two cocycle factors, orientation
  // independent)
  const int m1 = b1.has_mode ? b1.mode.m : 0;
  const int m2 = b2.has_mode ? b2.mode.m : 0;
  const int m3 = b3.has_mode ? b3.mode.m : 0;
  if (mirrored(b1, b3) && mirrored(b2, b4)) s -= 0.25 * m1 * m2 * parity(m1 + m2);
  if (mirrored(b2, b3) && mirrored(b1, b4)) s += 0.25 * m1 * m2 * parity(m1 + m2);
  if (mirrored(b1, b2) && mirrored(b3, b4)) s -= 0.5 * m1 * m3 * parity(m1 + m3);
  return s;
}

}  // namespace

Complex curvature_formula(const CurvatureQuery& q) {
  if (q.table == nullptr) throw std::invalid_argument("curvature_formula: missing table");
  Complex s = 0.0;
  for (const Component& b1 : components(q.x))
    for (const Component& b2 : components(q.y))
      for (const Component& b3 : components(q.z))
        for (const Component& b4 : components(q.w)) {
          const Complex c = b1.weight * b2.weight * b3.weight * b4.weight;
          s += c * formula_basis(b1, b2, b3, b4, *q.table, q.ctx, q.kvariant);
        }
  return s;
}

Complex curvature_koszul(const CurvatureQuery& q) {
  if (q.table == nullptr) throw std::invalid_argument("curvature_koszul: missing table");
  const StructureTable& tab = *q.table;
  const HatVector nxz = nabla_hat(q.x, q.z, q.ctx, tab);
  const HatVector nyw = nabla_hat(q.y, q.w, q.ctx, tab);
  const HatVector nyz = nabla_hat(q.y, q.z, q.ctx, tab);
  const HatVector nxw = nabla_hat(q.x, q.w, q.ctx, tab);
  Complex s = metric(nxz, nyw, q.ctx) - metric(nyz, nxw, q.ctx);

  const HatVector bxy = bracket_hat(q.x, q.y, tab);
  HatVector rhs = bracket_hat(q.z, q.w, tab);
  rhs = axpy(rhs, coad_hat(q.z, q.w, q.ctx, tab), Complex{-1.0});
  rhs = axpy(rhs, coad_hat(q.w, q.z, q.ctx, tab), Complex{1.0});
  s += 0.5 * metric(bxy, rhs, q.ctx);
  return s;
}

namespace {

std::string describe(const HatVector& v) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [mode, c] : v.coeffs) {
    if (!first) os << ",";
    os << "(" << mode.l << "," << mode.m << ")";
    first = false;
  }
  os << "}";
  if (v.central != Complex{0.0}) os << "+central";
  return os.str();
}

}  // namespace

SectionalReport sectional(const HatVector& xi, const HatVector& eta, const MetricContext& ctx,
                          const StructureTable& table) {
  if (reality_residual(xi) > 1e-9 || reality_residual(eta) > 1e-9)
    throw std::invalid_argument("sectional: inputs must be real vector fields");
  const double g11 = metric(xi, xi, ctx).real();
  const double g22 = metric(eta, eta, ctx).real();
  const double g12 = metric(xi, eta, ctx).real();
  const double gram = g11 * g22 - g12 * g12;
  if (gram < 1e-12) throw DegeneratePlaneError("sectional: plane is degenerate");
  CurvatureQuery q{xi, eta, eta, xi, ctx, &table, KVariant::canonical};
  const double num = curvature_koszul(q).real();
  SectionalReport rep;
  rep.kappa = num / gram;
  rep.numerator = num;
  rep.gram = gram;
  rep.plane = "xi=" + describe(xi) + " eta=" + describe(eta);
  return rep;
}

double zonal_sectional(double nu, double a, double alpha, int l0, int m0) {
  if (l0 < 1 || std::abs(m0) > l0)
    throw std::domain_error("zonal_sectional: need l0 >= 1 and |m0| <= l0");
  const double a2 = alpha * alpha;
  const double L = a2 + static_cast<double>(l0) * (l0 + 1);
  const double den = (nu * nu * 4.0 * kPi / 3.0 * (a2 + 2.0) + a * a) * L * L;
  if (den <= 0.0) throw std::domain_error("zonal_sectional: degenerate plane");
  const double num = static_cast<double>(m0) * m0 *
                     (nu * nu / 4.0 * (a2 + 2.0) * (a2 + 2.0) +
                      nu * a / 2.0 * (a2 + 2.0) + a * a / 4.0);
  return num / den;
}

double tradewind_theta(int l0, int m0, double alpha) {
  if (l0 < 1 || m0 == 0 || std::abs(m0) > l0)
    throw std::domain_error("tradewind_theta: need l0 >= 1 and 1 <= |m0| <= l0");
  const double a2 = alpha * alpha;
  const auto w = [a2](int l) { return a2 + static_cast<double>(l) * (l + 1); };
  const auto b = [&](int l) { return w(l) / (a2 + static_cast<double>(l) * (l - 1)); };
  const auto x = [&](int l) { return a2 / w(l); };
  const double c = 6.0 / w(l0);
  const double A1 = a_lm(l0, m0);
  const double A2 = a_lm(l0 + 1, m0);
  const double B2 = b(l0 + 1);
  double theta = (1.0 - c) * (1.0 - c) * (A2 / B2) + 2.0 * (1.0 + c) * (A1 + A2) -
                 3.0 * (A2 * B2) +
                 x(l0 + 1) * A2 * B2 * (x(l0 + 1) - 2.0 / B2 * (1.0 - c) + 2.0);
  // the lower channel enters weighted by A1 = a^{l0}_{m0}, which vanishes
  // for |m0| = l0; skipping it avoids the 0 * inf at l0 = 1, alpha = 0
  if (A1 > 0.0) {
    const double B1 = b(l0);
    theta += (1.0 - c) * (1.0 - c) * (A1 * B1) - 3.0 * (A1 / B1) +
             x(l0 - 1) * (A1 / B1) * (x(l0 - 1) - 2.0 * B1 * (1.0 - c) + 2.0);
  }
  return theta;
}

double tradewind_sectional(double a, double alpha, int l0, int m0) {
  const double theta = tradewind_theta(l0, m0, alpha);
  const double L = alpha * alpha + static_cast<double>(l0) * (l0 + 1);
  const double norm = 3.0 / 8.0 * alpha * alpha + 1.0 + a * a;
  return (15.0 * m0 * m0 / (32.0 * kPi) * theta +
          0.25 * a * a * m0 * m0 / (L * L)) / norm;
}

std::vector<Figure2Row> figure2_sweep(const std::vector<double>& a_values, int l0_min,
                                      int l0_max, double alpha) {
  std::vector<Figure2Row> rows;
  for (double a : a_values)
    for (int l0 = l0_min; l0 <= l0_max; ++l0)
      rows.push_back({a, l0, tradewind_sectional(a, alpha, l0, l0)});
  return rows;
}

HatVector unit_eta_pair(int l0, int m0, const MetricContext& ctx) {
  if (l0 < 1 || m0 == 0 || std::abs(m0) > l0)
    throw std::domain_error("unit_eta_pair: need l0 >= 1 and 1 <= |m0| <= l0");
  const double r = 1.0 / std::sqrt(2.0 * ctx.weight(l0));
  return real_mode_pair(l0, m0, Complex{r, 0.0});
}

HatVector zonal_xi(double nu, double a) {
  HatVector out;
  out.coeffs[{1, 0}] = nu * std::sqrt(4.0 * kPi / 3.0);
  out.central = a;
  return out;
}

HatVector tradewind_xi(double a) {
  HatVector out;
  out.coeffs = TradewindGenerator::stream_spectrum();
  out.central = a;
  return out;
}

}  // namespace qgc
