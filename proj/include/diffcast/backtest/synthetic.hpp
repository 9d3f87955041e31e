#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "diffcast/core/time_series.hpp"

namespace diffcast::synthetic {

/**
 * Daily-rate-like test series: level + amplitude * sin(phase(t)) where the
 * period drifts linearly from period_start to period_end samples, so the
 * trend locally obeys an order-3 recursion with slowly varying coefficients
 * (1 + 2 cos w, -(1 + 2 cos w), 1). Gaussian zero-mean noise of standard
 * deviation sigma is added, multiplied by sigma_factor from `change_point` on.
 */
struct MarketFixture {
  Eigen::Index length = 2400;
  double level = 1.3;
  double amplitude = 0.2;
  double period_start = 600.0;
  double period_end = 400.0;
  double sigma = 0.005;
  double sigma_factor = 2.0;
  /// Defaults to length / 2 when negative.
  Eigen::Index change_point = -1;
  std::uint64_t seed = 7;

  Eigen::Index resolved_change_point() const noexcept { return change_point < 0 ? length / 2 : change_point; }
};

struct MarketSeries {
  TimeSeries series;
  Vector<double> trend;
  Vector<double> sigma;
};

MarketSeries market_series(const MarketFixture& fixture);

/// Noise-free sequence of an order-n recursion from its initial values.
TimeSeries recursion_series(const std::vector<double>& coefficients, const std::vector<double>& initials,
                            Eigen::Index length, TimeIndex start = 0);

/// ISO-8601 calendar dates, one per day starting from `first` (YYYY-MM-DD).
std::vector<std::string> daily_labels(Eigen::Index count, int year = 2000, unsigned month = 1, unsigned day = 1);

}  // namespace diffcast::synthetic
