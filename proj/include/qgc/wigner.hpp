#pragma once

namespace qgc {

/// Wigner 3j symbol (j1 j2 j3; m1 m2 m3) for integer arguments, by the
/// Racah sum with log-gamma factorials. Returns 0 outside the triangle
/// and m-selection domain.
double wigner3j(int j1, int j2, int j3, int m1, int m2, int m3);

}  // namespace qgc
