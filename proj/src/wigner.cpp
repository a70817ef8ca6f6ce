#include "qgc/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace qgc {

namespace {
double lf(int n) { return std::lgamma(n + 1.0); }
}  // namespace

double wigner3j(int j1, int j2, int j3, int m1, int m2, int m3) {
  if (m1 + m2 + m3 != 0) return 0.0;
  if (std::abs(m1) > j1 || std::abs(m2) > j2 || std::abs(m3) > j3) return 0.0;
  if (j3 < std::abs(j1 - j2) || j3 > j1 + j2) return 0.0;

  // log of sqrt(Delta) * sqrt(prod (j_i +- m_i)!)
  const double pref =
      0.5 * (lf(j1 + j2 - j3) + lf(j1 - j2 + j3) + lf(-j1 + j2 + j3) - lf(j1 + j2 + j3 + 1) +
             lf(j1 + m1) + lf(j1 - m1) + lf(j2 + m2) + lf(j2 - m2) + lf(j3 + m3) + lf(j3 - m3));

  const int tmin = std::max({0, j2 - j3 - m1, j1 - j3 + m2});
  const int tmax = std::min({j1 + j2 - j3, j1 - m1, j2 + m2});
  // Scale the alternating sum by its largest term to keep the exponentials tame.
  double logmax = -1e300;
  for (int t = tmin; t <= tmax; ++t) {
    const double lt = pref - (lf(t) + lf(j3 - j2 + t + m1) + lf(j3 - j1 + t - m2) +
                              lf(j1 + j2 - j3 - t) + lf(j1 - t - m1) + lf(j2 - t + m2));
    logmax = std::max(logmax, lt);
  }
  if (tmin > tmax) return 0.0;
  double s = 0.0;
  for (int t = tmin; t <= tmax; ++t) {
    const double lt = pref - (lf(t) + lf(j3 - j2 + t + m1) + lf(j3 - j1 + t - m2) +
                              lf(j1 + j2 - j3 - t) + lf(j1 - t - m1) + lf(j2 - t + m2));
    const double term = std::exp(lt - logmax);
    s += (t & 1) ? -term : term;
  }
  const int ph = j1 - j2 - m3;
  return ((ph & 1) ? -1.0 : 1.0) * s * std::exp(logmax);
}

}  // namespace qgc
