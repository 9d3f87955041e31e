#include "diffcast/forecast/forecast.hpp"

#include <algorithm>
#include <sstream>

namespace diffcast {

void ForecastConfig::validate() const {
  if (horizon < 1) throw ConfigError("forecast horizon must be >= 1, got " + std::to_string(horizon));
  if (ma_window < 1) throw ConfigError("moving average window must be >= 1, got " + std::to_string(ma_window));
  if (interval_multipliers.empty()) throw ConfigError("at least one interval multiplier is required");
  for (std::size_t i = 0; i < interval_multipliers.size(); ++i) {
    if (!(interval_multipliers[i] > 0.0)) throw ConfigError("interval multipliers must be positive");
    if (i > 0 && !(interval_multipliers[i] > interval_multipliers[i - 1])) {
      throw ConfigError("interval multipliers must be strictly ascending");
    }
  }
  if (!(zero_tolerance >= 0.0)) throw ConfigError("zero tolerance must be non-negative");
}

const char* to_string(Position p) noexcept { return p == Position::Above ? "above" : "under"; }

Eigen::Index required_history(const IdentificationConfig& ident, const SmootherConfig& smoother,
                              const ForecastConfig& fc) {
  return std::max(smoother.window, 2 * fc.ma_window + ident.window);
}

ForecastEngine::ForecastEngine(TimeSeries series, IdentificationConfig ident, SmootherConfig smoother,
                               ForecastConfig fc)
    : series_(std::move(series)), ident_(ident), smoother_(smoother), fc_(std::move(fc)) {
  ident_.validate();
  smoother_.validate();
  fc_.validate();
  const Eigen::Index needed = required_history(ident_, smoother_, fc_);
  if (series_.size() < needed) {
    std::ostringstream msg;
    msg << "series of length " << series_.size() << " is too short: forecasting needs " << needed
        << " samples (2N+L = " << 2 * fc_.ma_window + ident_.window << " for the moving standard deviation window,"
        << " W = " << smoother_.window << " for the smoother)";
    throw DomainError(msg.str());
  }
  decomposition_ = decompose(series_, causal_smooth(series_, smoother_));
  ma_ = diffcast::moving_average(decomposition_.residual, fc_.ma_window);
  mstd_ = diffcast::moving_std(decomposition_.residual, fc_.ma_window);
  earliest_ = series_.start_index() + needed - 1;
}

double ForecastEngine::extrapolate(const TimeSeries& source, TimeIndex origin, double scale) const {
  const auto segment = slice(source, origin - ident_.window + 1, ident_.window);
  if (max_abs(segment.values()) <= fc_.zero_tolerance * scale) return 0.0;
  const auto model = identify_window(segment, ident_);
  const auto& v = segment.values();
  const std::span<const double> seed(v.data() + (v.size() - ident_.order), static_cast<std::size_t>(ident_.order));
  return iterate_forecast(model, seed, fc_.horizon).back();
}

ForecastRecord ForecastEngine::forecast_at(TimeIndex origin) const {
  if (origin > last_origin()) {
    throw RangeError("forecast origin " + std::to_string(origin) + " lies beyond the last sample " +
                     std::to_string(last_origin()));
  }
  if (origin < earliest_) {
    std::ostringstream msg;
    msg << "forecast origin " << origin << " has " << origin - series_.start_index() + 1
        << " samples of history; the binding constraint is ";
    if (2 * fc_.ma_window + ident_.window >= smoother_.window) {
      msg << "2N+L = " << 2 * fc_.ma_window + ident_.window << " (moving standard deviation over N="
          << fc_.ma_window << " then identification over L=" << ident_.window << ")";
    } else {
      msg << "the smoother window W = " << smoother_.window;
    }
    throw DomainError(msg.str());
  }

  const TimeIndex from = origin - ident_.window + 1;
  const auto n = static_cast<Eigen::Index>(ident_.window);
  const double scale =
      std::max(max_abs(slice(series_, from, n).values()), max_abs(slice(trendline(), from, n).values()));

  ForecastRecord rec;
  rec.origin = origin;
  rec.target = origin + fc_.horizon;
  rec.trendline_forecast = extrapolate(trendline(), origin, scale);
  rec.ma_forecast = extrapolate(ma_, origin, scale);
  rec.mstd_forecast = std::max(0.0, extrapolate(mstd_, origin, scale));
  rec.indicator = rec.ma_forecast >= 0.0 ? Position::Above : Position::Under;
  rec.intervals.reserve(fc_.interval_multipliers.size());
  const double center = rec.center();
  for (double k : fc_.interval_multipliers) {
    rec.intervals.push_back({k, center - k * rec.mstd_forecast, center + k * rec.mstd_forecast});
  }
  return rec;
}

ForecastRecord forecast_series(const TimeSeries& series, const IdentificationConfig& ident,
                               const SmootherConfig& smoother, const ForecastConfig& fc, TimeIndex origin) {
  if (!series.contains(origin)) {
    throw RangeError("forecast origin " + std::to_string(origin) + " outside the series [" +
                     std::to_string(series.start_index()) + ", " + std::to_string(series.end_index()) + ")");
  }
  const Eigen::Index needed = required_history(ident, smoother, fc);
  if (origin - series.start_index() + 1 < needed) {
    std::ostringstream msg;
    msg << "forecast origin " << origin << " has " << origin - series.start_index() + 1
        << " samples of history but needs " << needed << " (binding constraint: "
        << (2 * fc.ma_window + ident.window >= smoother.window ? "2N+L for the moving standard deviation"
                                                                 : "smoother window W")
        << ")";
    throw DomainError(msg.str());
  }
  const ForecastEngine engine(prefix_through(series, origin), ident, smoother, fc);
  return engine.forecast_at(origin);
}

}  // namespace diffcast
