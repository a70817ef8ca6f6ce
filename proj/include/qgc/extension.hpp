#pragma once

#include "qgc/modes.hpp"
#include "qgc/structure.hpp"

namespace qgc {

/// Froude parameter; the metric weight of degree l is alpha^2 + l(l+1).
struct MetricContext {
  double alpha = 0.0;
  double weight(int l) const { return alpha * alpha + static_cast<double>(l) * (l + 1); }
};

/// Element of the extended algebra: a sparse stream-function spectrum plus
/// one central component. Everything here is complex-bilinear; real vector
/// fields form the subspace with c_{l,-m} = (-1)^m conj(c_{lm}) and real
/// central part (see reality_residual).
struct HatVector {
  CoeffMap coeffs;
  Complex central{0.0};

  Complex coeff(ModeIndex mode) const {
    auto it = coeffs.find(mode);
    return it == coeffs.end() ? Complex{0.0} : it->second;
  }
};

/// x + s * y
HatVector axpy(const HatVector& x, const HatVector& y, Complex s);
HatVector scaled(const HatVector& x, Complex s);

/// Largest deviation from the real-field symmetry, including the imaginary
/// part of the central component.
double reality_residual(const HatVector& x);

/// Hat vector with c_{lm} = amplitude and c_{l,-m} = (-1)^m conj(amplitude),
/// i.e. a real vector field concentrated on one |m|.
HatVector real_mode_pair(int l, int m, Complex amplitude, double central = 0.0);

/// Bilinear metric: sum (alpha^2 + l(l+1)) (-1)^m x_{lm} y_{l,-m} plus the
/// central product. Real-valued on real-symmetric inputs.
Complex metric(const HatVector& x, const HatVector& y, const MetricContext& ctx);

enum class TruncationMode {
  exact,     ///< keep every produced mode
  galerkin,  ///< drop modes with l beyond the policy band
  strict     ///< throw TruncationError if any mode exceeds the band
};

struct TruncationPolicy {
  TruncationMode mode = TruncationMode::exact;
  int lmax = 0;
};

/// Extended bracket [x, y] = (G-contraction of the fields, Omega(x, y)).
HatVector bracket_hat(const HatVector& x, const HatVector& y, const StructureTable& table,
                      TruncationPolicy policy = {});

/// Extended coadjoint of x acting on y:
/// (ad*_{x.field} y.field - y.central * T(x.field), 0).
/// Defining property: metric(coad_hat(x,y), z) = -metric(y, bracket_hat(x,z)).
HatVector coad_hat(const HatVector& x, const HatVector& y, const MetricContext& ctx,
                   const StructureTable& table, TruncationPolicy policy = {});

/// Levi-Civita covariant derivative of the right-invariant metric, in
/// coefficient form; central part is Omega(x.field, y.field) / 2.
HatVector nabla_hat(const HatVector& x, const HatVector& y, const MetricContext& ctx,
                    const StructureTable& table, TruncationPolicy policy = {});

/// Variant selector for the k connection weight. `canonical` satisfies
/// d(l0,1,l0) d(1,l0,l0) + k(1,l0,l0) = -(alpha^2+2)^2 / (4 (alpha^2+l0(l0+1))^2)
/// identically; `shifted` adds 1 to the numerator and is kept only for the
/// discrepancy report.
enum class KVariant { canonical, shifted };

/// Connection weights entering the curvature machinery.
struct ConnectionCoefficients {
  double alpha = 0.0;

  /// d^{l3}_{l1 l2} = (alpha^2 + l3(l3+1) - l1(l1+1) + l2(l2+1)) / (2 (alpha^2 + l3(l3+1)))
  double d(int l1, int l2, int l3) const;

  /// k^{l}_{l3 l4} = (l(l+1) - l3(l3+1) - l4(l4+1) - alpha^2) / (2 (alpha^2 + l(l+1))),
  /// numerator offset by +1 for the shifted variant.
  double k(int l3, int l4, int l, KVariant variant = KVariant::canonical) const;
};

}  // namespace qgc
