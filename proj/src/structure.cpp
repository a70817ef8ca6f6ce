#include "qgc/structure.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "qgc/errors.hpp"
#include "qgc/harmonics.hpp"
#include "qgc/wigner.hpp"

namespace qgc {

namespace {

constexpr double kPi = std::numbers::pi;

double a_lm(int l, int m) {
  return (static_cast<double>(l) * l - static_cast<double>(m) * m) / (4.0 * l * l - 1.0);
}

void sort_entries(EntryList& e) {
  std::sort(e.begin(), e.end(),
            [](const StructureEntry& a, const StructureEntry& b) { return a.target < b.target; });
}

int env_thread_cap() {
  if (const char* s = std::getenv("QGC_THREADS")) {
    const int v = std::atoi(s);
    if (v >= 1) return v;
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

}  // namespace

EntryList structure_constants_quadrature(ModeIndex p, ModeIndex q, const SphereGrid& grid,
                                         double threshold) {
  if (!p.valid() || !q.valid())
    throw std::domain_error("structure_constants_quadrature: invalid mode");
  if (p.l > grid.lmax() || q.l > grid.lmax())
    throw GridError("structure_constants_quadrature: grid too small for mode pair");
  EntryList out;
  if (p == q) return out;

  // {Y_p, Y_q} = (i m_p Y_p) (dY_q/dmu) - (dY_p/dmu) (i m_q Y_q), sampled
  // pointwise with the weighted derivative divided out at the nodes.
  const GridSamples yp = sample_ylm(grid, p);
  const GridSamples yq = sample_ylm(grid, q);
  const GridSamples dp = sample_ylm_dmu_weighted(grid, p);
  const GridSamples dq = sample_ylm_dmu_weighted(grid, q);
  GridSamples br(grid.size());
  const Complex imp{0.0, static_cast<double>(p.m)};
  const Complex imq{0.0, static_cast<double>(q.m)};
  for (int i = 0; i < grid.n_mu(); ++i) {
    const double omm = 1.0 - grid.mu()[i] * grid.mu()[i];
    for (int j = 0; j < grid.n_lambda(); ++j) {
      const int k = grid.index(i, j);
      br[k] = (imp * yp[k] * dq[k] - dp[k] * imq * yq[k]) / omm;
    }
  }

  const int m3 = p.m + q.m;
  for (int l3 = std::max(std::abs(m3), 1); l3 <= p.l + q.l; ++l3) {
    const Complex v = project(br, {l3, m3}, grid);
    if (std::abs(v) > threshold) out.push_back({{l3, m3}, v});
  }
  sort_entries(out);
  return out;
}

namespace {

// Reduced bracket coefficient for the degree triple (l1, l2, l3), from the
// stretched evaluation m1 = l1: {Y_{l1 l1}, Y_{l2 m2}} factors through the
// raising operator, and the remaining harmonic product expands by Gaunt's
// formula. Any m2 with a nonvanishing divisor gives the same value.
double reduced_bracket_coef_imag(int l1, int l2, int l3) {
  for (int m2 = -l2; m2 < l2; ++m2) {
    const int m3 = l1 + m2;
    if (std::abs(m3) > l3) continue;
    const double den = parity(m3) * wigner3j(l1, l2, l3, l1, m2, -m3);
    if (std::abs(den) < 1e-14) continue;
    const double ladder = std::sqrt(static_cast<double>(l2 - m2) * (l2 + m2 + 1));
    const double hw_ratio = -std::sqrt((2.0 * l1 + 1.0) / (2.0 * l1));
    const double val = -static_cast<double>(l1) * ladder * hw_ratio * parity(m3) *
                       std::sqrt((2.0 * l1 - 1.0) * (2.0 * l2 + 1.0) * (2.0 * l3 + 1.0) /
                                 (4.0 * kPi)) *
                       wigner3j(l1 - 1, l2, l3, 0, 0, 0) *
                       wigner3j(l1 - 1, l2, l3, l1 - 1, m2 + 1, -m3);
    return val / den;
  }
  return 0.0;
}

}  // namespace

EntryList structure_constants_analytic(ModeIndex p, ModeIndex q, double threshold) {
  if (!p.valid() || !q.valid())
    throw std::domain_error("structure_constants_analytic: invalid mode");
  EntryList out;
  if (p.l < 1 || q.l < 1 || p == q) return out;
  const int m3 = p.m + q.m;
  for (int l3 = std::max(std::abs(m3), std::abs(p.l - q.l) + 1); l3 <= p.l + q.l - 1; ++l3) {
    if (((p.l + q.l + l3) & 1) == 0) continue;  // parity-even couplings vanish
    const double r = reduced_bracket_coef_imag(p.l, q.l, l3);
    const double g = r * parity(m3) * wigner3j(p.l, q.l, l3, p.m, q.m, -m3);
    const Complex v{0.0, g};
    if (std::abs(v) > threshold) out.push_back({{l3, m3}, v});
  }
  sort_entries(out);
  return out;
}

void StructureTable::for_each(ModeIndex p, ModeIndex q,
                              const std::function<void(ModeIndex, Complex)>& fn) const {
  if (p.l > lmax_ || q.l > lmax_)
    throw std::out_of_range("StructureTable: mode pair beyond table truncation");
  if (p == q) return;
  const bool swapped = q < p;
  const auto key = swapped ? std::make_pair(q, p) : std::make_pair(p, q);
  const auto it = entries_.find(key);
  if (it == entries_.end()) return;
  const double s = swapped ? -1.0 : 1.0;
  for (const auto& e : it->second) fn(e.target, s * e.value);
}

EntryList StructureTable::bracket(ModeIndex p, ModeIndex q) const {
  EntryList out;
  for_each(p, q, [&](ModeIndex t, Complex v) { out.push_back({t, v}); });
  return out;
}

StructureTable StructureTable::flipped() const {
  StructureTable t(*this);
  t.sign_ = -sign_;
  for (auto& [key, list] : t.entries_)
    for (auto& e : list) e.value = -e.value;
  return t;
}

StructureTable build_table(int lmax, Backend backend, int threads) {
  if (lmax < 1) throw std::invalid_argument("build_table: lmax must be >= 1");
  StructureTable table;
  table.lmax_ = lmax;
  table.backend_ = backend;

  std::vector<std::pair<ModeIndex, ModeIndex>> pairs;
  for (int l1 = 1; l1 <= lmax; ++l1)
    for (int m1 = -l1; m1 <= l1; ++m1)
      for (int l2 = 1; l2 <= lmax; ++l2)
        for (int m2 = -l2; m2 <= l2; ++m2) {
          const ModeIndex p{l1, m1}, q{l2, m2};
          if (p < q) pairs.emplace_back(p, q);
        }

  std::vector<EntryList> results(pairs.size());
  const int nthreads = std::min(threads > 0 ? threads : env_thread_cap(),
                                static_cast<int>(pairs.size()));
  auto worker = [&](int tid) {
    // the quadrature grid is immutable after construction; one per thread
    // avoids sharing the sample buffers
    const SphereGrid grid = SphereGrid::for_truncation(lmax);
    for (std::size_t i = tid; i < pairs.size(); i += nthreads) {
      results[i] = backend == Backend::quadrature
                       ? structure_constants_quadrature(pairs[i].first, pairs[i].second, grid)
                       : structure_constants_analytic(pairs[i].first, pairs[i].second);
    }
  };
  if (nthreads <= 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (!results[i].empty()) table.entries_[pairs[i]] = std::move(results[i]);
  return table;
}

StructureEntry t_operator(ModeIndex mode, double alpha) {
  if (!mode.valid()) throw std::domain_error("t_operator: invalid mode");
  if (mode.l == 0 || mode.m == 0) return {mode, Complex{0.0}};
  const double w = alpha * alpha + static_cast<double>(mode.l) * (mode.l + 1);
  return {mode, Complex{0.0, -static_cast<double>(mode.m) / w}};
}

Complex cocycle(ModeIndex p, ModeIndex q) {
  if (p.l == q.l && q.m == -p.m) return Complex{0.0, -parity(p.m) * p.m};
  return Complex{0.0};
}

Complex cocycle(const CoeffMap& f, const CoeffMap& g) {
  Complex s = 0.0;
  for (const auto& [p, v] : f) {
    if (p.m == 0) continue;
    auto it = g.find({p.l, -p.m});
    if (it != g.end()) s += v * it->second * Complex{0.0, -parity(p.m) * p.m};
  }
  return s;
}

EntryList tradewind_constants(int l0, int m0) {
  if (l0 < 1 || std::abs(m0) > l0)
    throw std::domain_error("tradewind_constants: need l0 >= 1 and |m0| <= l0");
  EntryList out;
  if (m0 == 0) return out;
  const double c = std::sqrt(15.0 / (8.0 * kPi));
  const double lo = a_lm(l0, m0);
  if (lo > 0.0)
    out.push_back({{l0 - 1, m0}, Complex{0.0, -m0 * c * std::sqrt(lo)}});
  out.push_back({{l0 + 1, m0}, Complex{0.0, -m0 * c * std::sqrt(a_lm(l0 + 1, m0))}});
  sort_entries(out);
  return out;
}

CoeffMap TradewindGenerator::stream_spectrum() {
  // (1/2) sqrt(15/8pi) mu^2 = (1/sqrt6) Y_{20} + sqrt(15/2)/6 Y_{00}
  return {{{0, 0}, Complex{std::sqrt(15.0 / 2.0) / 6.0}},
          {{2, 0}, Complex{1.0 / std::sqrt(6.0)}}};
}

EntryList TradewindGenerator::bracket_with(ModeIndex mode) {
  return tradewind_constants(mode.l, mode.m);
}

}  // namespace qgc
