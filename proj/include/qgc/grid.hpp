#pragma once

#include <vector>

namespace qgc {

/// Tensor-product quadrature grid on the sphere: Gauss-Legendre nodes in
/// mu = cos(theta) on (-1, 1) and uniform nodes in lambda on [0, 2pi).
///
/// A grid built with for_truncation(L) integrates products of two
/// band-limited functions of degree <= L against any harmonic of degree
/// <= 2L+1 exactly (up to roundoff), which is what the bracket projection
/// needs.
class SphereGrid {
 public:
  /// n_mu Gauss-Legendre nodes, n_lambda uniform azimuthal nodes.
  SphereGrid(int n_mu, int n_lambda, int lmax);

  /// Default sizing for truncation degree L: n_mu = 2L+2, n_lambda = 4L+4.
  static SphereGrid for_truncation(int lmax);

  int n_mu() const { return n_mu_; }
  int n_lambda() const { return n_lambda_; }
  int lmax() const { return lmax_; }

  const std::vector<double>& mu() const { return mu_; }
  const std::vector<double>& weights() const { return w_; }
  const std::vector<double>& lambda() const { return lambda_; }

  /// Flattened sample index, row-major in (mu, lambda).
  int index(int i_mu, int j_lambda) const { return i_mu * n_lambda_ + j_lambda; }
  int size() const { return n_mu_ * n_lambda_; }

  /// True when a coefficient of mode (l, m) of a product of two functions
  /// band-limited to lmax() can be recovered exactly by quadrature.
  bool can_project(int l, int m) const;

 private:
  int n_mu_;
  int n_lambda_;
  int lmax_;
  std::vector<double> mu_;
  std::vector<double> w_;
  std::vector<double> lambda_;
};

/// Gauss-Legendre nodes and weights on (-1, 1), by Newton iteration on P_n.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace qgc
