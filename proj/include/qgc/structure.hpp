#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "qgc/grid.hpp"
#include "qgc/modes.hpp"

namespace qgc {

enum class Backend { quadrature, analytic };

/// One expansion term of a bracket: {Y_p, Y_q} = sum value * Y_target.
struct StructureEntry {
  ModeIndex target;
  Complex value;
};

using EntryList = std::vector<StructureEntry>;

/// Expansion of {Y_p, Y_q} in the harmonic basis, by sampling the bracket
/// on the grid and projecting. Targets are scanned over the full reachable
/// band l3 <= l_p + l_q; entries below `threshold` in modulus are dropped.
/// Requires l_p, l_q <= grid.lmax().
EntryList structure_constants_quadrature(ModeIndex p, ModeIndex q, const SphereGrid& grid,
                                         double threshold = 1e-12);

/// Same contract through a closed form. The bracket commutes with
/// rotations, so each target degree carries a single reduced coefficient
/// times the Clebsch-Gordan m-dependence (-1)^{m3} * 3j(l1 l2 l3; m1 m2 -m3).
/// The reduced coefficient is obtained from the stretched case m1 = l1,
/// where {Y_{l1 l1}, .} acts through the raising operator, combined with
/// the harmonic product expansion. Factorials go through log-gamma.
EntryList structure_constants_analytic(ModeIndex p, ModeIndex q, double threshold = 1e-12);

/// Bracket-constant table for all mode pairs with l <= lmax. Entries store
/// the full (untruncated) target lists; truncation is a consumer policy.
/// Immutable once built, safe to share across threads.
class StructureTable {
 public:
  int lmax() const { return lmax_; }
  Backend backend() const { return backend_; }

  /// +1 for the standard bracket orientation, -1 for a table built with
  /// every constant negated (used to check orientation independence).
  double bracket_sign() const { return sign_; }

  /// Streams the entries of {Y_p, Y_q}; antisymmetry is synthesized for
  /// swapped keys so only p < q is stored.
  void for_each(ModeIndex p, ModeIndex q,
                const std::function<void(ModeIndex, Complex)>& fn) const;

  /// Materialized entry list, sorted by target mode.
  EntryList bracket(ModeIndex p, ModeIndex q) const;

  /// Copy with every constant negated.
  StructureTable flipped() const;

  friend StructureTable build_table(int lmax, Backend backend, int threads);

 private:
  int lmax_ = 0;
  Backend backend_ = Backend::quadrature;
  double sign_ = 1.0;
  std::map<std::pair<ModeIndex, ModeIndex>, EntryList> entries_;
};

/// Builds the table for all pairs with l1, l2 <= lmax. `threads` <= 0 means
/// use the QGC_THREADS environment cap (default: hardware concurrency).
StructureTable build_table(int lmax, Backend backend, int threads = 0);

/// Central operator in the harmonic basis: T e_{lm} is diagonal with
/// coefficient -i m / (alpha^2 + l(l+1)); zero for l = 0.
StructureEntry t_operator(ModeIndex mode, double alpha);

/// Two-cocycle on basis fields:
/// Omega(e_p, e_q) = -i (-1)^{m_p} m_p when l_p = l_q and m_q = -m_p, else 0.
Complex cocycle(ModeIndex p, ModeIndex q);

/// Bilinear extension of the cocycle to coefficient maps.
Complex cocycle(const CoeffMap& f, const CoeffMap& g);

/// Bracket constants of the tradewind generator against e_{l0 m0}: entries
/// at (l0-1, m0) and (l0+1, m0) with weights -i m0 sqrt(15/8pi) sqrt(a^l_m),
/// a^l_m = (l^2 - m^2)/(4 l^2 - 1). The lower entry drops when |m0| = l0.
EntryList tradewind_constants(int l0, int m0);

/// The tradewind current: the flow of the stream function
/// (1/2) sqrt(15/8pi) mu^2. Its bracket action is tridiagonal in l
/// (tradewind_constants); its norm needs the full spectrum including the
/// constant component, which carries alpha^2-weighted length.
struct TradewindGenerator {
  /// Spectrum {(0,0): sqrt(15/2)/6, (2,0): 1/sqrt(6)} of the stream function.
  static CoeffMap stream_spectrum();

  /// Bracket with e_{l m}, from the closed-form constants.
  static EntryList bracket_with(ModeIndex mode);
};

}  // namespace qgc
