#include "qgc/extension.hpp"

#include <cmath>
#include <stdexcept>

#include "qgc/errors.hpp"

namespace qgc {

namespace {

void apply_policy(CoeffMap& coeffs, TruncationPolicy policy) {
  if (policy.mode == TruncationMode::exact) return;
  for (auto it = coeffs.begin(); it != coeffs.end();) {
    if (it->first.l > policy.lmax) {
      if (policy.mode == TruncationMode::strict && std::abs(it->second) > 1e-15)
        throw TruncationError("bracket output exceeds the configured band limit");
      it = coeffs.erase(it);
    } else {
      ++it;
    }
  }
}

}  // namespace

HatVector axpy(const HatVector& x, const HatVector& y, Complex s) {
  HatVector out = x;
  for (const auto& [mode, v] : y.coeffs) out.coeffs[mode] += s * v;
  out.central += s * y.central;
  return out;
}

HatVector scaled(const HatVector& x, Complex s) {
  HatVector out;
  for (const auto& [mode, v] : x.coeffs) out.coeffs[mode] = s * v;
  out.central = s * x.central;
  return out;
}

double reality_residual(const HatVector& x) {
  double r = std::abs(x.central.imag());
  for (const auto& [mode, v] : x.coeffs) {
    const Complex mirror = x.coeff({mode.l, -mode.m});
    r = std::max(r, std::abs(mirror - parity(mode.m) * std::conj(v)));
  }
  return r;
}

HatVector real_mode_pair(int l, int m, Complex amplitude, double central) {
  HatVector out;
  out.coeffs[{l, m}] = amplitude;
  if (m != 0) out.coeffs[{l, -m}] = parity(m) * std::conj(amplitude);
  out.central = central;
  return out;
}

Complex metric(const HatVector& x, const HatVector& y, const MetricContext& ctx) {
  Complex s = 0.0;
  for (const auto& [mode, v] : x.coeffs) {
    auto it = y.coeffs.find({mode.l, -mode.m});
    if (it != y.coeffs.end()) s += ctx.weight(mode.l) * parity(mode.m) * v * it->second;
  }
  return s + x.central * y.central;
}

HatVector bracket_hat(const HatVector& x, const HatVector& y, const StructureTable& table,
                      TruncationPolicy policy) {
  HatVector out;
  for (const auto& [p, v] : x.coeffs)
    for (const auto& [q, w] : y.coeffs) {
      const Complex vw = v * w;
      table.for_each(p, q, [&](ModeIndex t, Complex g) { out.coeffs[t] += vw * g; });
    }
  out.central = table.bracket_sign() * cocycle(x.coeffs, y.coeffs);
  apply_policy(out.coeffs, policy);
  return out;
}

HatVector coad_hat(const HatVector& x, const HatVector& y, const MetricContext& ctx,
                   const StructureTable& table, TruncationPolicy policy) {
  HatVector out;
  for (const auto& [p, v] : y.coeffs) {  // argument modes
    const double wp = ctx.weight(p.l);
    for (const auto& [q, w] : x.coeffs) {  // acting modes
      const Complex vw = v * w;
      table.for_each(p, q, [&](ModeIndex t, Complex g) {
        out.coeffs[t] += vw * (-wp / ctx.weight(t.l)) * g;
      });
    }
  }
  if (y.central != Complex{0.0}) {
    for (const auto& [q, w] : x.coeffs) {
      const StructureEntry te = t_operator(q, ctx.alpha);
      if (te.value != Complex{0.0})
        out.coeffs[te.target] -= y.central * w * table.bracket_sign() * te.value;
    }
  }
  out.central = Complex{0.0};
  apply_policy(out.coeffs, policy);
  return out;
}

HatVector nabla_hat(const HatVector& x, const HatVector& y, const MetricContext& ctx,
                    const StructureTable& table, TruncationPolicy policy) {
  const ConnectionCoefficients conn{ctx.alpha};
  HatVector out;
  for (const auto& [p, v] : x.coeffs)
    for (const auto& [q, w] : y.coeffs) {
      const Complex vw = v * w;
      table.for_each(p, q, [&](ModeIndex t, Complex g) {
        out.coeffs[t] += vw * conn.d(p.l, q.l, t.l) * g;
      });
    }
  // -1/2 (a_x * T on y's modes + a_y * T on x's modes)
  const double sign = table.bracket_sign();
  if (x.central != Complex{0.0}) {
    for (const auto& [q, w] : y.coeffs) {
      const StructureEntry te = t_operator(q, ctx.alpha);
      if (te.value != Complex{0.0})
        out.coeffs[te.target] -= 0.5 * x.central * w * sign * te.value;
    }
  }
  if (y.central != Complex{0.0}) {
    for (const auto& [p, v] : x.coeffs) {
      const StructureEntry te = t_operator(p, ctx.alpha);
      if (te.value != Complex{0.0})
        out.coeffs[te.target] -= 0.5 * y.central * v * sign * te.value;
    }
  }
  out.central = 0.5 * sign * cocycle(x.coeffs, y.coeffs);
  apply_policy(out.coeffs, policy);
  return out;
}

double ConnectionCoefficients::d(int l1, int l2, int l3) const {
  const double w3 = alpha * alpha + static_cast<double>(l3) * (l3 + 1);
  return 0.5 * (w3 - static_cast<double>(l1) * (l1 + 1) + static_cast<double>(l2) * (l2 + 1)) / w3;
}

double ConnectionCoefficients::k(int l3, int l4, int l, KVariant variant) const {
  const double w = alpha * alpha + static_cast<double>(l) * (l + 1);
  const double offset = (variant == KVariant::shifted) ? 1.0 : 0.0;
  return (offset - alpha * alpha + static_cast<double>(l) * (l + 1) -
          static_cast<double>(l3) * (l3 + 1) - static_cast<double>(l4) * (l4 + 1)) /
         (2.0 * w);
}

}  // namespace qgc
