#include "diffcast/backtest/backtest.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <sstream>

namespace diffcast {

void BacktestConfig::validate() const {
  ident.validate();
  smoother.validate();
  fc.validate();
  if (ma_windows.empty()) throw ConfigError("at least one moving average window is required");
  for (std::size_t i = 0; i < ma_windows.size(); ++i) {
    if (ma_windows[i] < 1) throw ConfigError("moving average windows must be >= 1");
    if (i > 0 && ma_windows[i] <= ma_windows[i - 1]) {
      throw ConfigError("moving average windows must be strictly ascending");
    }
  }
  if (std::find(ma_windows.begin(), ma_windows.end(), fc.ma_window) == ma_windows.end()) {
    throw ConfigError("coverage window N=" + std::to_string(fc.ma_window) + " is not among the swept windows");
  }
  if (stride < 1) throw ConfigError("origin stride must be >= 1");
}

const WindowScore& BacktestReport::window(Eigen::Index ma_window) const {
  for (const auto& w : windows) {
    if (w.ma_window == ma_window) return w;
  }
  throw DomainError("no backtest results for N=" + std::to_string(ma_window));
}

double nominal_coverage(double multiplier) {
  if (multiplier == 1.0) return 68.0;
  if (multiplier == 2.0) return 95.0;
  if (multiplier == 3.0) return 99.0;
  return 100.0 * std::erf(multiplier / std::sqrt(2.0));
}

namespace {

struct OriginGrid {
  std::vector<TimeIndex> origins;
};

ForecastConfig with_window(ForecastConfig fc, Eigen::Index ma_window) {
  fc.ma_window = ma_window;
  return fc;
}

OriginGrid make_grid(const TimeSeries& series, const BacktestConfig& config, TimeIndex last) {
  ForecastConfig widest = with_window(config.fc, config.ma_windows.back());
  const TimeIndex warm = series.start_index() + required_history(config.ident, config.smoother, widest) - 1;
  const TimeIndex first = std::max(warm, config.start.value_or(warm));
  if (first > last) {
    std::ostringstream msg;
    msg << "series [" << series.start_index() << ", " << series.end_index() << ") has no forecast origin: the first "
        << "feasible origin is " << first << " but realizations end at origin " << last;
    throw DomainError(msg.str());
  }
  OriginGrid grid;
  for (TimeIndex t = first; t <= last; t += config.stride) grid.origins.push_back(t);
  return grid;
}

BacktestReport run_on_grid(const TimeSeries& series, const BacktestConfig& config, const OriginGrid& grid) {
  const double tol = config.fc.zero_tolerance;

  // One causal engine per window; the windows are independent.
  std::vector<std::future<WindowScore>> jobs;
  for (Eigen::Index ma_window : config.ma_windows) {
    jobs.push_back(std::async(std::launch::async, [&, ma_window] {
      const ForecastEngine engine(series, config.ident, config.smoother, with_window(config.fc, ma_window));
      WindowScore score;
      score.ma_window = ma_window;
      score.records.reserve(grid.origins.size());
      for (TimeIndex t : grid.origins) score.records.push_back(engine.forecast_at(t));
      return score;
    }));
  }

  BacktestReport report;
  report.horizon = config.fc.horizon;
  report.origins = grid.origins;
  report.n_forecasts = static_cast<Eigen::Index>(grid.origins.size());
  for (auto& job : jobs) report.windows.push_back(job.get());

  // Realized positions use the causal trendline once data through t+h exists.
  const TimeSeries trend = causal_smooth(series, config.smoother);
  std::vector<Position> realized_position;
  for (TimeIndex t : grid.origins) {
    const TimeIndex target = t + config.fc.horizon;
    const double x = series.at(target);
    const double s = trend.at(target);
    report.realized.push_back(x);
    report.realized_trendline.push_back(s);
    double deviation = x - s;
    if (std::abs(deviation) <= tol * std::max(std::abs(x), std::abs(s))) deviation = 0.0;
    realized_position.push_back(deviation >= 0.0 ? Position::Above : Position::Under);
  }

  for (auto& score : report.windows) {
    for (double k : config.fc.interval_multipliers) score.coverage.push_back({k, nominal_coverage(k), 0.0, 0});
    for (std::size_t i = 0; i < score.records.size(); ++i) {
      const auto& rec = score.records[i];
      if (rec.indicator == realized_position[i]) {
        ++score.hits;
      } else {
        ++score.misses;
      }
      const double x = report.realized[i];
      const double slack = tol * std::max(std::abs(x), std::abs(rec.center()));
      for (std::size_t j = 0; j < rec.intervals.size(); ++j) {
        if (rec.intervals[j].contains(x, slack)) ++score.coverage[j].inside;
      }
    }
    const double n = static_cast<double>(report.n_forecasts);
    score.hit_rate = 100.0 * static_cast<double>(score.hits) / n;
    for (auto& c : score.coverage) c.empirical = 100.0 * static_cast<double>(c.inside) / n;
  }

  const WindowScore& headline = report.window(config.fc.ma_window);
  report.coverage_window = headline.ma_window;
  report.per_k_coverage = headline.coverage;

  double sq = 0.0;
  for (std::size_t i = 0; i < headline.records.size(); ++i) {
    const double e = headline.records[i].trendline_forecast - report.realized_trendline[i];
    sq += e * e;
  }
  report.rmse_trendline = std::sqrt(sq / static_cast<double>(report.n_forecasts));
  return report;
}

}  // namespace

BacktestReport run_backtest(const TimeSeries& series, const BacktestConfig& config) {
  config.validate();
  const OriginGrid grid = make_grid(series, config, series.last_index() - config.fc.horizon);
  return run_on_grid(series, config, grid);
}

std::vector<BacktestReport> sweep_report(const TimeSeries& series, const BacktestConfig& config,
                                         const std::vector<Eigen::Index>& horizons) {
  std::vector<BacktestReport> reports;
  if (horizons.empty()) return reports;
  const Eigen::Index longest = *std::max_element(horizons.begin(), horizons.end());
  for (Eigen::Index h : horizons) {
    BacktestConfig c = config;
    c.fc.horizon = h;
    c.validate();
    const OriginGrid grid = make_grid(series, c, series.last_index() - longest);
    reports.push_back(run_on_grid(series, c, grid));
  }
  return reports;
}

}  // namespace diffcast
