#include "qgc/forecast.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qgc {

namespace {

constexpr double kPi = std::numbers::pi;

void validate(const ForecastParams& p) {
  if (!(p.beta_luk > 0.0 && p.beta_luk < 1.0))
    throw std::domain_error("forecast: beta_luk must lie in (0, 1)");
  if (p.months < 0.0) throw std::domain_error("forecast: months must be >= 0");
}

double rate(const ForecastParams& p) {
  return std::sqrt(p.beta_luk / (1.0 + p.a * p.a));
}

}  // namespace

double mean_curvature(const ForecastParams& p) {
  validate(p);
  return -15.0 / (8.0 * kPi * (1.0 + p.a * p.a)) * p.beta_luk;
}

double characteristic_length(const ForecastParams& p) {
  return std::sqrt(-1.0 / mean_curvature(p));
}

double per_orbit_factor(const ForecastParams& p) {
  validate(p);
  return std::exp(2.0 * std::sqrt(2.0) * kPi * rate(p));
}

GrowthExponent growth_after_months(double n, const ForecastParams& p) {
  validate(p);
  if (n < 0.0) throw std::domain_error("growth_after_months: n must be >= 0");
  if (p.wind_kmh <= 0.0 || p.orbit_km <= 0.0)
    throw std::domain_error("growth_after_months: wind and orbit length must be positive");
  GrowthExponent g;
  g.log10_rounded = 10.0 * n * rate(p);
  // per-orbit e-exponent 2 sqrt(2) pi rate, times orbits per month from the
  // physical inputs (defaults: 100 km/h over a 40000/sqrt(2) km orbit give
  // the 9.82... that the display convention rounds to 10)
  const double hours_per_orbit = p.orbit_km / p.wind_kmh;
  const double orbits_per_month = 30.0 * 24.0 / hours_per_orbit;
  g.log10_exact =
      n * orbits_per_month * 2.0 * std::sqrt(2.0) * kPi * rate(p) * std::log10(std::exp(1.0));
  return g;
}

double months_to_exponent(double target_log10, const ForecastParams& p) {
  validate(p);
  if (target_log10 < 0.0) throw std::domain_error("months_to_exponent: target must be >= 0");
  return target_log10 / (10.0 * rate(p));
}

ForecastReport make_forecast_report(const ForecastParams& p) {
  ForecastReport r;
  r.kappa_av = mean_curvature(p);
  r.S = characteristic_length(p);
  r.per_orbit = per_orbit_factor(p);
  const GrowthExponent g = growth_after_months(p.months, p);
  r.log10_growth = g.log10_rounded;
  r.log10_growth_exact = g.log10_exact;
  r.months_to_1e5 = months_to_exponent(5.0, p);
  return r;
}

}  // namespace qgc
