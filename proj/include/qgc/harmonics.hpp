#pragma once

#include <vector>

#include "qgc/grid.hpp"
#include "qgc/modes.hpp"

namespace qgc {

/// Grid samples of a complex function, row-major in (mu, lambda).
using GridSamples = std::vector<Complex>;

/// Associated Legendre function P_l^m(mu) for 0 <= m <= l, without any
/// Condon-Shortley phase: P_m^m = (2m-1)!! (1-mu^2)^{m/2}. Evaluated by
/// the standard upward recurrence in l at fixed m, stable for l up to a
/// few hundred.
double assoc_legendre(int l, int m, double mu);

/// Normalization constant of Y_{lm}. The Condon-Shortley factor (-1)^m is
/// applied for m >= 0 only; this is the choice for which the conjugation
/// rule conj(Y_{lm}) = (-1)^m Y_{l,-m} and the bilinear orthogonality
/// pattern hold together.
double ylm_norm(int l, int m);

/// Complex spherical harmonic Y_{lm}(lambda, mu) = C_l^m P_l^{|m|}(mu) e^{i m lambda}.
Complex ylm_eval(ModeIndex mode, double lambda, double mu);

/// Bilinear (non-conjugated) pairing of two coefficient maps:
/// sum over modes of (-1)^m f_{lm} g_{l,-m}.
Complex pair(const CoeffMap& f, const CoeffMap& g);

/// Samples of Y_{lm} on the grid.
GridSamples sample_ylm(const SphereGrid& grid, ModeIndex mode);

/// Samples of (1 - mu^2) dY_{lm}/dmu on the grid, from the exact two-term
/// recurrence; band-limited of degree l+1.
GridSamples sample_ylm_dmu_weighted(const SphereGrid& grid, ModeIndex mode);

/// Coefficient c_{lm} of a band-limited sampled function, such that
/// f = sum c_{lm} Y_{lm}. Quadrature of f * conj(Y_{lm}); exact when the
/// grid's projection precondition holds, else throws GridError.
Complex project(const GridSamples& samples, ModeIndex mode, const SphereGrid& grid);

/// All coefficients with l <= lmax.
CoeffMap project_all(const GridSamples& samples, const SphereGrid& grid, int lmax);

/// Pointwise Poisson bracket {f, g} = f_lambda g_mu - f_mu g_lambda of two
/// band-limited sampled functions. Partial derivatives are taken through
/// the harmonic expansion (exact for inputs of degree <= grid.lmax()).
GridSamples poisson_bracket_grid(const GridSamples& f, const GridSamples& g,
                                 const SphereGrid& grid);

/// Pointwise Laplace-Beltrami operator, assembled from the same derivative
/// machinery as the bracket (not from the eigenvalue relation):
/// Delta f = d/dmu[(1-mu^2) df/dmu] + (1-mu^2)^{-1} d^2f/dlambda^2.
GridSamples laplacian_grid(const GridSamples& f, const SphereGrid& grid);

}  // namespace qgc
