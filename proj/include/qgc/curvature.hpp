#pragma once

#include <string>
#include <vector>

#include "qgc/extension.hpp"

namespace qgc {

/// Arguments of one curvature evaluation <R(x, y) z, w>.
struct CurvatureQuery {
  HatVector x, y, z, w;
  MetricContext ctx;
  const StructureTable* table = nullptr;
  KVariant kvariant = KVariant::canonical;
};

/// Curvature pairing through the structure-constant formula: paired
/// connection-coefficient sums plus the k-weighted bracket term and the
/// central Kronecker tails, extended multilinearly over the coefficient
/// maps. The mode sums are finite because bracket targets are bounded by
/// l1 + l2 - 1.
Complex curvature_formula(const CurvatureQuery& q);

/// Ground-truth curvature pairing assembled from nabla_hat, bracket_hat
/// and coad_hat only:
///   <nabla_x z, nabla_y w> - <nabla_y z, nabla_x w>
///   + 1/2 <[x,y], [z,w] - coad_z w + coad_w z>.
/// No band truncation is applied, so the value is exact whenever the table
/// covers the supports of the inputs.
Complex curvature_koszul(const CurvatureQuery& q);

struct SectionalReport {
  double kappa = 0.0;
  double numerator = 0.0;
  double gram = 0.0;
  std::string plane;
};

/// Gram-normalized sectional curvature of span(xi, eta), numerator through
/// curvature_koszul. Inputs must be real-symmetric; throws
/// DegeneratePlaneError when the Gram determinant vanishes.
SectionalReport sectional(const HatVector& xi, const HatVector& eta, const MetricContext& ctx,
                          const StructureTable& table);

/// Closed form for the zonal plane: xi = (nu sqrt(4pi/3) e_{10}, a) against
/// a unit one-degree pair at (l0, +-m0).
double zonal_sectional(double nu, double a, double alpha, int l0, int m0);

/// The tradewind plane's scalar Theta(l0, m0, alpha); l0^2 Theta -> -4 for
/// m0 = l0 as l0 grows.
double tradewind_theta(int l0, int m0, double alpha);

/// Closed form for the plane spanned by the tradewind current (with
/// central component a) and a unit one-degree pair at (l0, +-m0).
double tradewind_sectional(double a, double alpha, int l0, int m0);

struct Figure2Row {
  double a;
  int l0;
  double kappa;
};

/// Sectional curvature of the tradewind planes with m0 = l0, for each
/// central strength in `a_values` and l0 in [l0_min, l0_max].
std::vector<Figure2Row> figure2_sweep(const std::vector<double>& a_values, int l0_min,
                                      int l0_max, double alpha);

/// Unit real pair at (l0, +-m0): equal moduli, c_{l0,-m0} = (-1)^{m0}
/// conj(c_{l0,m0}), normalized to metric norm 1.
HatVector unit_eta_pair(int l0, int m0, const MetricContext& ctx);

/// (nu sqrt(4pi/3) e_{10}, a) - rigid rotation about the polar axis.
HatVector zonal_xi(double nu, double a);

/// The tradewind current with central strength a, full stream spectrum.
HatVector tradewind_xi(double a);

}  // namespace qgc
