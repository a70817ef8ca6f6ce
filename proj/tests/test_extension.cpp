#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qgc/curvature.hpp"
#include "qgc/errors.hpp"
#include "qgc/extension.hpp"

using namespace qgc;

namespace {
constexpr double kPi = std::numbers::pi;

HatVector basis(ModeIndex p, Complex a = 0.0) {
  HatVector v;
  v.coeffs[p] = 1.0;
  v.central = a;
  return v;
}

HatVector random_real(std::mt19937& rng, int lmax) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::uniform_int_distribution<int> dl(1, lmax);
  HatVector out;
  for (int i = 0; i < 3; ++i) {
    const int l = dl(rng);
    std::uniform_int_distribution<int> dm(0, l);
    const int m = dm(rng);
    const Complex c = (m == 0) ? Complex{g(rng), 0.0} : Complex{g(rng), g(rng)};
    out.coeffs[{l, m}] += c;
    if (m != 0) out.coeffs[{l, -m}] += parity(m) * std::conj(c);
  }
  out.central = g(rng);
  return out;
}

double hv_max(const HatVector& v) {
  double m = std::abs(v.central);
  for (const auto& [mode, c] : v.coeffs) m = std::max(m, std::abs(c));
  return m;
}
}  // namespace

TEST_CASE("metric values") {
  const MetricContext a0{0.0};
  CHECK(metric(basis({1, 0}), basis({1, 0}), a0).real() == doctest::Approx(2.0));

  // central-only vectors pair through the plain product
  HatVector c;
  c.central = 1.7;
  CHECK(metric(c, c, a0).real() == doctest::Approx(1.7 * 1.7));

  // tradewind norm: 3/8 alpha^2 + 1 + a^2
  for (double alpha : {0.0, 0.9, 1.3})
    for (double a : {0.0, 0.7, 12.0}) {
      const HatVector xi = tradewind_xi(a);
      CHECK(metric(xi, xi, MetricContext{alpha}).real() ==
            doctest::Approx(3.0 / 8.0 * alpha * alpha + 1.0 + a * a).epsilon(1e-14));
    }
}

TEST_CASE("reality helpers") {
  const HatVector v = real_mode_pair(3, 2, Complex{0.4, -1.1}, 0.3);
  CHECK(reality_residual(v) < 1e-15);
  HatVector broken = v;
  broken.coeffs[{3, -2}] += Complex{0.0, 0.1};
  CHECK(reality_residual(broken) > 0.05);
}

TEST_CASE("bracket_hat") {
  const StructureTable table = build_table(3, Backend::quadrature);

  SUBCASE("antisymmetry and self-bracket") {
    std::mt19937 rng(5);
    const HatVector x = random_real(rng, 3);
    CHECK(hv_max(bracket_hat(x, x, table)) < 1e-12);
    const HatVector y = random_real(rng, 3);
    const HatVector xy = bracket_hat(x, y, table);
    const HatVector yx = bracket_hat(y, x, table);
    CHECK(hv_max(axpy(xy, yx, Complex{1.0})) < 1e-12);
  }

  SUBCASE("zonal against e_21 stays diagonal") {
    const HatVector b = bracket_hat(basis({1, 0}), basis({2, 1}), table);
    REQUIRE(b.coeffs.size() == 1);
    CHECK(std::abs(b.coeffs.at({2, 1}) - Complex{0.0, -std::sqrt(3.0 / (4.0 * kPi))}) < 1e-13);
    CHECK(std::abs(b.central) == 0.0);
  }

  SUBCASE("central part is the cocycle") {
    const HatVector b = bracket_hat(basis({2, 1}), basis({2, -1}), table);
    CHECK(std::abs(b.central - Complex{0.0, 1.0}) < 1e-13);
  }

  SUBCASE("truncation policies") {
    const HatVector x = basis({3, 1}), y = basis({3, 2});
    const HatVector full = bracket_hat(x, y, table);
    bool beyond = false;
    for (const auto& [mode, v] : full.coeffs) beyond |= mode.l > 3;
    CHECK(beyond);  // the pair genuinely produces l = 4, 5 targets
    const HatVector cut = bracket_hat(x, y, table, {TruncationMode::galerkin, 3});
    for (const auto& [mode, v] : cut.coeffs) CHECK(mode.l <= 3);
    CHECK_THROWS_AS(bracket_hat(x, y, table, {TruncationMode::strict, 3}), TruncationError);
  }
}

TEST_CASE("coad_hat") {
  const StructureTable table = build_table(3, Backend::quadrature);
  const MetricContext ctx{0.0};

  SUBCASE("golden value, duality-confirmed") {
    // acting e_21, argument (e_10, 1):
    // field = (i/3) sqrt(3/4pi) e_21 + (i/6) e_21
    const HatVector out = coad_hat(basis({2, 1}), basis({1, 0}, 1.0), ctx, table);
    REQUIRE(out.coeffs.count({2, 1}) == 1);
    const Complex want =
        Complex{0.0, std::sqrt(3.0 / (4.0 * kPi)) / 3.0} + Complex{0.0, 1.0 / 6.0};
    CHECK(std::abs(out.coeffs.at({2, 1}) - want) < 1e-13);
    CHECK(std::abs(out.central) == 0.0);
  }

  SUBCASE("central output is always zero") {
    std::mt19937 rng(17);
    for (int i = 0; i < 10; ++i) {
      const HatVector out =
          coad_hat(random_real(rng, 3), random_real(rng, 3), MetricContext{0.7}, table);
      CHECK(std::abs(out.central) == 0.0);
    }
  }

  SUBCASE("duality against the bracket") {
    // <coad_x y, z> = -<y, [x, z]> on the extension
    std::mt19937 rng(23);
    const MetricContext c7{0.7};
    for (int i = 0; i < 40; ++i) {
      const HatVector x = random_real(rng, 3);
      const HatVector y = random_real(rng, 3);
      const HatVector z = random_real(rng, 3);
      const Complex lhs = metric(coad_hat(x, y, c7, table), z, c7);
      const Complex rhs = -metric(y, bracket_hat(x, z, table), c7);
      CHECK(std::abs(lhs - rhs) < 1e-10);
    }
  }
}

TEST_CASE("nabla_hat") {
  const StructureTable table = build_table(4, Backend::quadrature);
  const MetricContext ctx{0.7};

  SUBCASE("zonal pair with matched centrals is parallel") {
    const HatVector out = nabla_hat(basis({1, 0}, 0.8), basis({1, 0}, 0.8), ctx, table);
    CHECK(hv_max(out) < 1e-15);
  }

  SUBCASE("central part is half the cocycle") {
    const HatVector out = nabla_hat(basis({2, 1}), basis({2, -1}), ctx, table);
    CHECK(std::abs(out.central - Complex{0.0, 0.5}) < 1e-13);
  }

  SUBCASE("torsion-free against the bracket, basis pairs l <= 4") {
    for (int l1 = 1; l1 <= 4; ++l1)
      for (int m1 = -l1; m1 <= l1; ++m1)
        for (int l2 = 1; l2 <= 4; ++l2)
          for (int m2 = -l2; m2 <= l2; ++m2) {
            const HatVector x = basis({l1, m1}, 0.3);
            const HatVector y = basis({l2, m2}, -0.4);
            HatVector t = nabla_hat(x, y, ctx, table);
            t = axpy(t, nabla_hat(y, x, ctx, table), Complex{-1.0});
            t = axpy(t, bracket_hat(x, y, table), Complex{-1.0});
            CHECK(hv_max(t) < 1e-12);
          }
  }

  SUBCASE("Koszul compatibility on random real triples") {
    std::mt19937 rng(31);
    for (int i = 0; i < 40; ++i) {
      const HatVector x = random_real(rng, 3);
      const HatVector y = random_real(rng, 3);
      const HatVector z = random_real(rng, 3);
      const Complex lhs = 2.0 * metric(nabla_hat(x, y, ctx, table), z, ctx);
      const Complex rhs = metric(bracket_hat(x, y, table), z, ctx) -
                          metric(bracket_hat(y, z, table), x, ctx) +
                          metric(bracket_hat(z, x, table), y, ctx);
      CHECK(std::abs(lhs - rhs) < 1e-10);
    }
  }
}

TEST_CASE("cocycle identity on bracket triples, l <= 3") {
  const StructureTable table = build_table(3, Backend::quadrature);
  double mx = 0.0;
  for (int l1 = 1; l1 <= 3; ++l1)
    for (int m1 = -l1; m1 <= l1; ++m1)
      for (int l2 = 1; l2 <= 3; ++l2)
        for (int m2 = -l2; m2 <= l2; ++m2)
          for (int l3 = 1; l3 <= 3; ++l3)
            for (int m3 = -l3; m3 <= l3; ++m3) {
              const ModeIndex u{l1, m1}, v{l2, m2}, w{l3, m3};
              Complex s = 0.0;
              const ModeIndex pairs[3][2] = {{u, v}, {v, w}, {w, u}};
              const ModeIndex third[3] = {w, u, v};
              for (int c = 0; c < 3; ++c)
                table.for_each(pairs[c][0], pairs[c][1],
                               [&](ModeIndex t, Complex g) { s += g * cocycle(t, third[c]); });
              mx = std::max(mx, std::abs(s));
            }
  CHECK(mx < 1e-10);
}

TEST_CASE("T is the metric realization of the cocycle, l <= 4") {
  for (double alpha : {0.0, 0.5, 1.0}) {
    const MetricContext ctx{alpha};
    for (int l1 = 1; l1 <= 4; ++l1)
      for (int m1 = -l1; m1 <= l1; ++m1)
        for (int l2 = 1; l2 <= 4; ++l2)
          for (int m2 = -l2; m2 <= l2; ++m2) {
            const StructureEntry te = t_operator({l1, m1}, alpha);
            HatVector tu;
            tu.coeffs[te.target] = te.value;
            CHECK(std::abs(metric(tu, basis({l2, m2}), ctx) - cocycle(ModeIndex{l1, m1}, ModeIndex{l2, m2})) <
                  1e-12);
          }
  }
}

TEST_CASE("connection weight identity and the shifted variant") {
  for (double alpha : {0.0, 0.5, 2.0}) {
    const ConnectionCoefficients conn{alpha};
    for (int l0 = 1; l0 <= 10; ++l0) {
      const double w = alpha * alpha + static_cast<double>(l0) * (l0 + 1);
      const double want = -(alpha * alpha + 2.0) * (alpha * alpha + 2.0) / (4.0 * w * w);
      const double canonical = conn.d(l0, 1, l0) * conn.d(1, l0, l0) + conn.k(1, l0, l0);
      CHECK(std::abs(canonical - want) < 1e-14);
      const double shifted =
          conn.d(l0, 1, l0) * conn.d(1, l0, l0) + conn.k(1, l0, l0, KVariant::shifted);
      CHECK(std::abs(shifted - want) > 1e-3);  // the +1 numerator breaks the identity
    }
  }
}
