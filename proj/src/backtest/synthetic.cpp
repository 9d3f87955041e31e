#include "diffcast/backtest/synthetic.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

namespace diffcast::synthetic {
namespace {

// Days since 1970-01-01 for a proleptic Gregorian date, and back.
long days_from_civil(int y, unsigned m, unsigned d) {
  y -= m <= 2 ? 1 : 0;
  const long era = (y >= 0 ? y : y - 399) / 400;
  const auto yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m > 2 ? m - 3 : m + 9) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<long>(doe) - 719468;
}

void civil_from_days(long z, int& y, unsigned& m, unsigned& d) {
  z += 719468;
  const long era = (z >= 0 ? z : z - 146096) / 146097;
  const auto doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  d = doy - (153 * mp + 2) / 5 + 1;
  m = mp < 10 ? mp + 3 : mp - 9;
  y = static_cast<int>(yoe) + static_cast<int>(era) * 400 + (m <= 2 ? 1 : 0);
}

}  // namespace

MarketSeries market_series(const MarketFixture& f) {
  std::mt19937_64 rng(f.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  const Eigen::Index change = f.resolved_change_point();

  MarketSeries out;
  out.trend.resize(f.length);
  out.sigma.resize(f.length);
  Vector<double> values(f.length);
  double phase = 0.0;
  for (Eigen::Index t = 0; t < f.length; ++t) {
    const double period = f.period_start + (f.period_end - f.period_start) * static_cast<double>(t) /
                                               static_cast<double>(f.length);
    phase += 2.0 * std::numbers::pi / period;
    out.trend(t) = f.level + f.amplitude * std::sin(phase);
    out.sigma(t) = t < change ? f.sigma : f.sigma * f.sigma_factor;
    values(t) = out.trend(t) + out.sigma(t) * normal(rng);
  }
  out.series = TimeSeries(std::move(values), 0, daily_labels(f.length));
  return out;
}

TimeSeries recursion_series(const std::vector<double>& coefficients, const std::vector<double>& initials,
                            Eigen::Index length, TimeIndex start) {
  const auto n = coefficients.size();
  if (initials.size() != n) throw DomainError("recursion needs exactly one initial value per coefficient");
  std::vector<double> x(initials);
  while (static_cast<Eigen::Index>(x.size()) < length) {
    double next = 0.0;
    for (std::size_t i = 0; i < n; ++i) next += coefficients[i] * x[x.size() - 1 - i];
    x.push_back(next);
  }
  x.resize(static_cast<std::size_t>(length));
  return TimeSeries(x, start);
}

std::vector<std::string> daily_labels(Eigen::Index count, int year, unsigned month, unsigned day) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(count));
  const long first = days_from_civil(year, month, day);
  for (Eigen::Index k = 0; k < count; ++k) {
    int y;
    unsigned m, d;
    civil_from_days(first + k, y, m, d);
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", y, m, d);
    labels.emplace_back(buf);
  }
  return labels;
}

}  // namespace diffcast::synthetic
