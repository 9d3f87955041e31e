#pragma once

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "diffcast/core/time_series.hpp"
#include "diffcast/estimate/identify.hpp"
#include "diffcast/estimate/smoother.hpp"

namespace diffcast {

struct ForecastConfig {
  Eigen::Index horizon = 5;
  /// N: moving average and moving standard deviation use N+1 terms.
  Eigen::Index ma_window = 100;
  std::vector<double> interval_multipliers{1.0, 2.0, 3.0};
  /**
   * A window whose magnitude is below zero_tolerance times the local series
   * scale is treated as the zero sequence, which every recursion preserves.
   * Keeps round-off residuals of exactly modelled data from being identified
   * as signal.
   */
  double zero_tolerance = 1e-10;

  void validate() const;
};

enum class Position { Above, Under };

const char* to_string(Position p) noexcept;

struct Interval {
  double multiplier = 0.0;
  double lower = 0.0;
  double upper = 0.0;

  bool contains(double v, double slack = 0.0) const noexcept { return v >= lower - slack && v <= upper + slack; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

struct ForecastRecord {
  TimeIndex origin = 0;
  TimeIndex target = 0;
  double trendline_forecast = 0.0;
  double ma_forecast = 0.0;
  double mstd_forecast = 0.0;
  Position indicator = Position::Above;
  std::vector<Interval> intervals;

  double center() const noexcept { return trendline_forecast + ma_forecast; }

  friend bool operator==(const ForecastRecord&, const ForecastRecord&) = default;
};

/// Iterates the recursion h steps from the n most recent values (oldest first).
template <typename Scalar>
std::vector<Scalar> iterate_forecast(const DifferenceEquationModel<Scalar>& model, std::span<const Scalar> seed,
                                     Eigen::Index horizon) {
  const auto n = static_cast<std::size_t>(model.order());
  if (seed.size() != n) {
    throw DomainError("forecast seed must hold exactly n=" + std::to_string(n) + " values, got " +
                      std::to_string(seed.size()));
  }
  if (horizon < 1) throw DomainError("forecast horizon must be >= 1");
  std::vector<Scalar> buffer(seed.begin(), seed.end());
  buffer.reserve(n + static_cast<std::size_t>(horizon));
  for (Eigen::Index step = 0; step < horizon; ++step) {
    buffer.push_back(model.predict(std::span<const Scalar>(buffer)));
  }
  return {buffer.begin() + static_cast<std::ptrdiff_t>(n), buffer.end()};
}

/// Trailing (N+1)-term mean: output at t averages residual(t-N..t); starts at start+N.
template <typename Scalar>
BasicTimeSeries<Scalar> moving_average(const BasicTimeSeries<Scalar>& residual, Eigen::Index window) {
  if (window < 0) throw DomainError("moving average window must be non-negative");
  if (residual.size() < window + 1) {
    throw DomainError("moving average with N=" + std::to_string(window) + " needs at least " +
                      std::to_string(window + 1) + " samples, got " + std::to_string(residual.size()));
  }
  const auto& v = residual.values();
  const Eigen::Index count = residual.size() - window;
  Vector<Scalar> out(count);
  for (Eigen::Index j = 0; j < count; ++j) out(j) = v.segment(j, window + 1).sum() / Scalar(window + 1);
  return BasicTimeSeries<Scalar>(std::move(out), residual.start_index() + window);
}

/**
 * Trailing moving standard deviation: output at t is the root mean square of
 * residual(s) - MA(s) over s = t-N..t, pairing each residual with its own
 * moving average. Starts at start+2N.
 */
template <typename Scalar>
BasicTimeSeries<Scalar> moving_std(const BasicTimeSeries<Scalar>& residual, Eigen::Index window) {
  if (window < 0) throw DomainError("moving standard deviation window must be non-negative");
  if (residual.size() < 2 * window + 1) {
    throw DomainError("moving standard deviation with N=" + std::to_string(window) + " needs at least " +
                      std::to_string(2 * window + 1) + " samples, got " + std::to_string(residual.size()));
  }
  const auto ma = moving_average(residual, window);
  // deviation(j) pairs residual and MA at time start + N + j.
  const Vector<Scalar> deviation = residual.values().tail(ma.size()) - ma.values();
  const Eigen::Index count = residual.size() - 2 * window;
  Vector<Scalar> out(count);
  for (Eigen::Index j = 0; j < count; ++j) {
    out(j) = std::sqrt(deviation.segment(j, window + 1).squaredNorm() / Scalar(window + 1));
  }
  return BasicTimeSeries<Scalar>(std::move(out), residual.start_index() + 2 * window);
}

/**
 * Causal forecasting state for one series: the smoothed trendline, residuals,
 * their moving average and moving standard deviation are computed once. Every
 * one of them depends only on samples at or before its own time, so a forecast
 * at origin t reads nothing beyond t.
 */
class ForecastEngine {
 public:
  ForecastEngine(TimeSeries series, IdentificationConfig ident, SmootherConfig smoother, ForecastConfig fc);

  /// Earliest origin with enough history for every stage.
  TimeIndex earliest_origin() const noexcept { return earliest_; }
  TimeIndex last_origin() const noexcept { return series_.last_index(); }

  ForecastRecord forecast_at(TimeIndex origin) const;

  const TimeSeries& series() const noexcept { return series_; }
  const TimeSeries& trendline() const noexcept { return decomposition_.trendline; }
  const TimeSeries& residual() const noexcept { return decomposition_.residual; }
  const TimeSeries& moving_average() const noexcept { return ma_; }
  const TimeSeries& moving_std() const noexcept { return mstd_; }

  const IdentificationConfig& identification() const noexcept { return ident_; }
  const SmootherConfig& smoother() const noexcept { return smoother_; }
  const ForecastConfig& forecast_config() const noexcept { return fc_; }

  /// Identify on the L-window of `source` ending at origin and iterate h steps.
  double extrapolate(const TimeSeries& source, TimeIndex origin, double scale) const;

 private:
  TimeSeries series_;
  IdentificationConfig ident_;
  SmootherConfig smoother_;
  ForecastConfig fc_;
  ResidualDecomposition<double> decomposition_;
  TimeSeries ma_;
  TimeSeries mstd_;
  TimeIndex earliest_ = 0;
};

/**
 * Single forecast made at `origin` from the samples up to and including it.
 * Throws DomainError naming the binding history constraint when too short.
 */
ForecastRecord forecast_series(const TimeSeries& series, const IdentificationConfig& ident,
                               const SmootherConfig& smoother, const ForecastConfig& fc, TimeIndex origin);

/// Minimum number of samples through the origin required by the pipeline.
Eigen::Index required_history(const IdentificationConfig& ident, const SmootherConfig& smoother,
                              const ForecastConfig& fc);

}  // namespace diffcast
