#pragma once

namespace qgc {

/// Inputs of the predictability estimate. Everything is evaluated at
/// alpha = 0 (the large-scale regime); the rotation strength enters as a.
struct ForecastParams {
  double a = 0.0;          ///< central / Coriolis parameter
  double beta_luk = 0.25;  ///< averaging constant in (0, 1)
  double months = 0.0;
  double wind_kmh = 100.0;          ///< mean tradewind speed
  double orbit_km = 40000.0 / 1.4142135623730951;  ///< orbit length at +-45 deg
};

/// Mean sectional curvature -15 beta / (8 pi (1 + a^2)).
double mean_curvature(const ForecastParams& p);

/// Characteristic path length S = sqrt(-1 / kappa_av).
double characteristic_length(const ForecastParams& p);

/// Error amplification over one orbit at +-45 deg:
/// exp(2 sqrt(2) pi sqrt(beta / (1 + a^2))).
double per_orbit_factor(const ForecastParams& p);

struct GrowthExponent {
  double log10_rounded = 0.0;  ///< 10 n sqrt(beta / (1+a^2)); the display convention
  double log10_exact = 0.0;    ///< n (30*24/400) 4 pi sqrt(beta/(1+a^2)) log10(e)
};

/// Base-10 exponent of the error growth after n months, in both the
/// rounded-10 convention and the exact hour-count chain.
GrowthExponent growth_after_months(double n, const ForecastParams& p);

/// Months until the rounded-convention exponent reaches `target_log10`.
double months_to_exponent(double target_log10, const ForecastParams& p);

struct ForecastReport {
  double kappa_av = 0.0;
  double S = 0.0;
  double per_orbit = 0.0;
  double log10_growth = 0.0;
  double log10_growth_exact = 0.0;
  double months_to_1e5 = 0.0;
};

ForecastReport make_forecast_report(const ForecastParams& p);

}  // namespace qgc
