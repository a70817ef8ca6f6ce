#pragma once

#include <cmath>
#include <compare>
#include <complex>
#include <cstdlib>
#include <map>

namespace qgc {

using Complex = std::complex<double>;

/// Spherical-harmonic label (l, m). The basis vector field attached to a
/// mode is e_{lm} = sgrad Y_{lm}. Ordering is lexicographic in (l, m) so
/// that iteration over mode sets is deterministic.
struct ModeIndex {
  int l = 0;
  int m = 0;

  friend auto operator<=>(const ModeIndex&, const ModeIndex&) = default;

  bool valid() const { return l >= 0 && std::abs(m) <= l; }
};

/// Sparse spectrum of a stream function: mode -> complex amplitude.
/// An absent key means a zero coefficient.
using CoeffMap = std::map<ModeIndex, Complex>;

/// (-1)^m for possibly negative m.
inline double parity(int m) { return (m & 1) ? -1.0 : 1.0; }

}  // namespace qgc
