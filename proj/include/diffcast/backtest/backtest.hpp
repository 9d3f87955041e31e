#pragma once

#include <optional>
#include <vector>

#include "diffcast/forecast/forecast.hpp"

namespace diffcast {

struct BacktestConfig {
  IdentificationConfig ident;
  SmootherConfig smoother;
  /// fc.ma_window selects which window's coverage is reported as the headline.
  ForecastConfig fc;
  std::vector<Eigen::Index> ma_windows{50, 100, 200, 300};
  /// First candidate origin; defaults to the earliest origin feasible for every window.
  std::optional<TimeIndex> start;
  Eigen::Index stride = 1;

  void validate() const;
};

struct CoverageScore {
  double multiplier = 0.0;
  /// Percentages.
  double nominal = 0.0;
  double empirical = 0.0;
  Eigen::Index inside = 0;
};

struct WindowScore {
  Eigen::Index ma_window = 0;
  Eigen::Index hits = 0;
  Eigen::Index misses = 0;
  /// Percentage of origins whose forecast sign matched the realized position.
  double hit_rate = 0.0;
  std::vector<CoverageScore> coverage;
  std::vector<ForecastRecord> records;
};

struct BacktestReport {
  Eigen::Index horizon = 0;
  Eigen::Index n_forecasts = 0;
  std::vector<TimeIndex> origins;
  /// x(t+h) and the causal trendline at t+h, per origin.
  std::vector<double> realized;
  std::vector<double> realized_trendline;
  std::vector<WindowScore> windows;
  Eigen::Index coverage_window = 0;
  std::vector<CoverageScore> per_k_coverage;
  double rmse_trendline = 0.0;

  const WindowScore& window(Eigen::Index ma_window) const;
};

/// Nominal two-sided coverage (percent) printed for mean +- k std: 68/95/99 for k = 1/2/3.
double nominal_coverage(double multiplier);

/**
 * Rolling evaluation. Every origin on the stride grid is forecast once per
 * moving-average window; all windows share the same origins. A hit counts when
 * the forecast sign of the moving average matches the sign of
 * x(t+h) - trendline(t+h), zero counting as above.
 */
BacktestReport run_backtest(const TimeSeries& series, const BacktestConfig& config);

/// One report per horizon over a common origin grid.
std::vector<BacktestReport> sweep_report(const TimeSeries& series, const BacktestConfig& config,
                                         const std::vector<Eigen::Index>& horizons);

}  // namespace diffcast
