#include "qgc/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qgc {

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  const int mid = (n + 1) / 2;
  for (int i = 0; i < mid; ++i) {
    // Tricomi-style initial guess, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    double w = 2.0 / ((1.0 - x * x) * pp * pp);
    weights[i] = w;
    weights[n - 1 - i] = w;
  }
}

SphereGrid::SphereGrid(int n_mu, int n_lambda, int lmax)
    : n_mu_(n_mu), n_lambda_(n_lambda), lmax_(lmax) {
  if (n_mu < lmax + 1 || n_lambda < 2 * lmax + 1)
    throw std::invalid_argument("SphereGrid: node counts too small for lmax");
  gauss_legendre(n_mu, mu_, w_);
  lambda_.resize(n_lambda);
  for (int j = 0; j < n_lambda; ++j)
    lambda_[j] = 2.0 * std::numbers::pi * j / n_lambda;
}

SphereGrid SphereGrid::for_truncation(int lmax) {
  return SphereGrid(2 * lmax + 2, 4 * lmax + 4, lmax);
}

bool SphereGrid::can_project(int l, int m) const {
  // Integrand degree: (2*lmax+1) from the product plus l from the target,
  // which Gauss-Legendre handles iff <= 2*n_mu - 1. The azimuthal sum is
  // exact iff the combined frequency stays below n_lambda.
  if (2 * lmax_ + 1 + l > 2 * n_mu_ - 1) return false;
  if (2 * lmax_ + std::abs(m) >= n_lambda_) return false;
  return true;
}

}  // namespace qgc
