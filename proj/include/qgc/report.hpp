#pragma once

#include <map>
#include <string>
#include <vector>

#include "qgc/curvature.hpp"

namespace qgc {

/// One verification suite outcome: the measured residual against its bound.
struct SuiteResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass() const { return residual <= tolerance; }
};

/// Numerical evidence for the tradewind-generator-vs-(2,0)-harmonic
/// comparison: the generator's bracket constants are 1/sqrt(6) times the
/// (2,0) constants, the planes' curvatures coincide at alpha = 0 and split
/// for alpha > 0 through the generator's constant component.
struct TradewindComparison {
  double constants_delta = 0.0;  ///< max |generator constants - (2,0) table / sqrt(6)|
  double kappa_g_alpha0 = 0.0;
  double kappa_y20_alpha0 = 0.0;
  double kappa_g_alpha1 = 0.0;
  double kappa_y20_alpha1 = 0.0;
};

struct DiscrepancyReport {
  int lmax = 0;
  std::vector<SuiteResult> suites;
  /// residual of the curvature formula against the Koszul assembly with the
  /// canonical k weight (tiny) and with the shifted variant (order one)
  double canonical_k_delta = 0.0;
  double shifted_k_delta = 0.0;
  TradewindComparison tradewind;

  bool all_pass() const;
  const SuiteResult* find(const std::string& name) const;
};

/// Tolerance overrides: name -> bound; missing names use the defaults.
using ToleranceMap = std::map<std::string, double>;

/// Runs the oracle-equivalence and algebraic-property suites at band lmax
/// (basis sweeps are capped at l <= 3, backend agreement runs to lmax).
DiscrepancyReport run_checks(int lmax, const ToleranceMap& tolerances = {});

/// Residuals of the structure-constant formula against the Koszul assembly
/// for both k variants, over every basis 4-tuple with degrees <= lmax and
/// central parts in {0, 1}.
struct KSweepResult {
  double canonical = 0.0;
  double shifted = 0.0;
};
KSweepResult formula_koszul_sweep(const StructureTable& table, int lmax, double alpha);

/// Same comparison (canonical k only) on random real hat vectors.
double formula_koszul_random(const StructureTable& table, int lmax, double alpha,
                             int n_samples, unsigned seed);

/// Largest entrywise difference between the two structure-constant
/// backends over all pairs with degrees <= lmax.
double backend_agreement(int lmax);

/// Largest entrywise violation of G(p,q) = -G(q,p), with both
/// orientations computed independently by quadrature.
double bracket_antisymmetry(int lmax);

/// Exhaustive quadrature scan for bracket coefficients OUTSIDE the
/// selection pattern (m3 = m1+m2, |l1-l2|+1 <= l3 <= l1+l2-1, l1+l2+l3
/// odd); returns the largest such projection over all pairs with l <= lmax.
double selection_rule_scan(int lmax);

/// Deterministic JSON rendering of the report.
std::string report_to_json(const DiscrepancyReport& r);

/// Human-readable pass/fail lines.
std::string report_to_text(const DiscrepancyReport& r);

}  // namespace qgc
