#include "qgc/harmonics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qgc/errors.hpp"

namespace qgc {

namespace {

constexpr double kFourPi = 4.0 * std::numbers::pi;

// sqrt((l^2 - m^2) / (4l^2 - 1)); the recurrence weight for mu * Y_{lm}.
double eps_lm(int l, int m) {
  if (l <= std::abs(m)) return 0.0;
  return std::sqrt((static_cast<double>(l) * l - static_cast<double>(m) * m) /
                   (4.0 * l * l - 1.0));
}

}  // namespace

double assoc_legendre(int l, int m, double mu) {
  if (m < 0 || m > l) throw std::domain_error("assoc_legendre: need 0 <= m <= l");
  if (std::abs(mu) > 1.0) throw std::domain_error("assoc_legendre: |mu| > 1");
  double pmm = 1.0;
  if (m > 0) {
    const double somx2 = std::sqrt((1.0 - mu) * (1.0 + mu));
    double fact = 1.0;
    for (int i = 0; i < m; ++i) {
      pmm *= fact * somx2;
      fact += 2.0;
    }
  }
  if (l == m) return pmm;
  double pmmp1 = mu * (2.0 * m + 1.0) * pmm;
  if (l == m + 1) return pmmp1;
  double pll = 0.0;
  for (int ll = m + 2; ll <= l; ++ll) {
    pll = (mu * (2.0 * ll - 1.0) * pmmp1 - (ll + m - 1.0) * pmm) / (ll - m);
    pmm = pmmp1;
    pmmp1 = pll;
  }
  return pll;
}

double ylm_norm(int l, int m) {
  const int am = std::abs(m);
  const double sign = (m >= 0) ? parity(m) : 1.0;
  return sign * std::sqrt((2.0 * l + 1.0) / kFourPi *
                          std::exp(std::lgamma(l - am + 1.0) - std::lgamma(l + am + 1.0)));
}

Complex ylm_eval(ModeIndex mode, double lambda, double mu) {
  if (!mode.valid()) throw std::domain_error("ylm_eval: invalid mode");
  const double p = assoc_legendre(mode.l, std::abs(mode.m), mu);
  return ylm_norm(mode.l, mode.m) * p *
         std::polar(1.0, static_cast<double>(mode.m) * lambda);
}

Complex pair(const CoeffMap& f, const CoeffMap& g) {
  Complex s = 0.0;
  for (const auto& [mode, v] : f) {
    auto it = g.find({mode.l, -mode.m});
    if (it != g.end()) s += parity(mode.m) * v * it->second;
  }
  return s;
}

GridSamples sample_ylm(const SphereGrid& grid, ModeIndex mode) {
  if (!mode.valid()) throw std::domain_error("sample_ylm: invalid mode");
  const double c = ylm_norm(mode.l, mode.m);
  GridSamples out(grid.size());
  for (int i = 0; i < grid.n_mu(); ++i) {
    const double p = c * assoc_legendre(mode.l, std::abs(mode.m), grid.mu()[i]);
    for (int j = 0; j < grid.n_lambda(); ++j)
      out[grid.index(i, j)] = p * std::polar(1.0, mode.m * grid.lambda()[j]);
  }
  return out;
}

GridSamples sample_ylm_dmu_weighted(const SphereGrid& grid, ModeIndex mode) {
  // (1 - mu^2) dY_{lm}/dmu = (l+1) eps(l,m) Y_{l-1,m} - l eps(l+1,m) Y_{l+1,m}
  GridSamples out(grid.size(), Complex{0.0});
  const int l = mode.l, m = mode.m;
  if (l - 1 >= std::abs(m)) {
    const GridSamples lo = sample_ylm(grid, {l - 1, m});
    const double c = (l + 1.0) * eps_lm(l, m);
    for (int k = 0; k < grid.size(); ++k) out[k] += c * lo[k];
  }
  {
    const GridSamples hi = sample_ylm(grid, {l + 1, m});
    const double c = -static_cast<double>(l) * eps_lm(l + 1, m);
    for (int k = 0; k < grid.size(); ++k) out[k] += c * hi[k];
  }
  return out;
}

Complex project(const GridSamples& samples, ModeIndex mode, const SphereGrid& grid) {
  if (!mode.valid()) throw std::domain_error("project: invalid mode");
  if (static_cast<int>(samples.size()) != grid.size())
    throw std::invalid_argument("project: sample size does not match grid");
  if (!grid.can_project(mode.l, mode.m))
    throw GridError("project: grid too small for requested mode");
  const int nl = grid.n_lambda();
  const double dlam = 2.0 * std::numbers::pi / nl;
  const double c = ylm_norm(mode.l, mode.m);
  Complex acc = 0.0;
  for (int i = 0; i < grid.n_mu(); ++i) {
    Complex row = 0.0;
    for (int j = 0; j < nl; ++j)
      row += samples[grid.index(i, j)] * std::polar(1.0, -mode.m * grid.lambda()[j]);
    acc += grid.weights()[i] * assoc_legendre(mode.l, std::abs(mode.m), grid.mu()[i]) * row;
  }
  return c * dlam * acc;
}

CoeffMap project_all(const GridSamples& samples, const SphereGrid& grid, int lmax) {
  CoeffMap out;
  for (int l = 0; l <= lmax; ++l)
    for (int m = -l; m <= l; ++m) out[{l, m}] = project(samples, {l, m}, grid);
  return out;
}

namespace {

struct PartialFields {
  GridSamples d_lambda;       // df/dlambda
  GridSamples d_mu_weighted;  // (1 - mu^2) df/dmu
};

PartialFields partials_from_coeffs(const CoeffMap& coeffs, const SphereGrid& grid) {
  PartialFields p;
  p.d_lambda.assign(grid.size(), Complex{0.0});
  p.d_mu_weighted.assign(grid.size(), Complex{0.0});
  for (const auto& [mode, c] : coeffs) {
    if (std::abs(c) == 0.0) continue;
    if (mode.m != 0) {
      const GridSamples y = sample_ylm(grid, mode);
      const Complex im{0.0, static_cast<double>(mode.m)};
      for (int k = 0; k < grid.size(); ++k) p.d_lambda[k] += c * im * y[k];
    }
    const GridSamples dy = sample_ylm_dmu_weighted(grid, mode);
    for (int k = 0; k < grid.size(); ++k) p.d_mu_weighted[k] += c * dy[k];
  }
  return p;
}

}  // namespace

GridSamples poisson_bracket_grid(const GridSamples& f, const GridSamples& g,
                                 const SphereGrid& grid) {
  const CoeffMap cf = project_all(f, grid, grid.lmax());
  const CoeffMap cg = project_all(g, grid, grid.lmax());
  const PartialFields pf = partials_from_coeffs(cf, grid);
  const PartialFields pg = partials_from_coeffs(cg, grid);
  GridSamples out(grid.size());
  for (int i = 0; i < grid.n_mu(); ++i) {
    const double omm = 1.0 - grid.mu()[i] * grid.mu()[i];
    for (int j = 0; j < grid.n_lambda(); ++j) {
      const int k = grid.index(i, j);
      out[k] = (pf.d_lambda[k] * pg.d_mu_weighted[k] -
                pf.d_mu_weighted[k] * pg.d_lambda[k]) / omm;
    }
  }
  return out;
}

GridSamples laplacian_grid(const GridSamples& f, const SphereGrid& grid) {
  const CoeffMap cf = project_all(f, grid, grid.lmax());
  // h = (1 - mu^2) df/dmu as an exact coefficient map (band lmax+1)
  CoeffMap ch;
  for (const auto& [mode, c] : cf) {
    if (std::abs(c) == 0.0) continue;
    const int l = mode.l, m = mode.m;
    if (l - 1 >= std::abs(m)) ch[{l - 1, m}] += c * (l + 1.0) * eps_lm(l, m);
    ch[{l + 1, m}] += c * (-static_cast<double>(l)) * eps_lm(l + 1, m);
  }
  const PartialFields ph = partials_from_coeffs(ch, grid);
  GridSamples out(grid.size(), Complex{0.0});
  // dh/dmu = [(1-mu^2) dh/dmu] / (1-mu^2), plus the azimuthal second derivative
  for (const auto& [mode, c] : cf) {
    if (mode.m == 0 || std::abs(c) == 0.0) continue;
    const GridSamples y = sample_ylm(grid, mode);
    const double mm = static_cast<double>(mode.m) * mode.m;
    for (int k = 0; k < grid.size(); ++k) out[k] -= c * mm * y[k];
  }
  for (int i = 0; i < grid.n_mu(); ++i) {
    const double omm = 1.0 - grid.mu()[i] * grid.mu()[i];
    for (int j = 0; j < grid.n_lambda(); ++j) {
      const int k = grid.index(i, j);
      out[k] = ph.d_mu_weighted[k] / omm + out[k] / omm;
    }
  }
  return out;
}

}  // namespace qgc
