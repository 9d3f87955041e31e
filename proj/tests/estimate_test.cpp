#include <doctest.h>

#include <random>

#include "diffcast/estimate/identify.hpp"
#include "diffcast/estimate/smoother.hpp"
#include "oracles.hpp"

using namespace diffcast;

namespace {

TimeSeries series_of(const std::vector<double>& v, TimeIndex start = 0) { return TimeSeries(v, start); }

/// Right-endpoint value of the affine least-squares fit over four samples, from the 2x2 normal equations.
double affine_endpoint_oracle(const double* x) {
  double s0 = 0, s1 = 0, s2 = 0, b0 = 0, b1 = 0;
  for (int k = 0; k < 4; ++k) {
    s0 += 1;
    s1 += k;
    s2 += k * k;
    b0 += x[k];
    b1 += k * x[k];
  }
  const double det = s0 * s2 - s1 * s1;
  const double intercept = (s2 * b0 - s1 * b1) / det;
  const double slope = (s0 * b1 - s1 * b0) / det;
  return intercept + slope * 3;
}

IdentificationConfig ident(Eigen::Index n, Eigen::Index L) {
  IdentificationConfig c;
  c.order = n;
  c.window = L;
  return c;
}

}  // namespace

TEST_CASE("smoother configuration checks") {
  CHECK_THROWS_AS((SmootherConfig{0, 0}.validate()), ConfigError);
  CHECK_THROWS_AS((SmootherConfig{3, 3}.validate()), ConfigError);
  CHECK_NOTHROW((SmootherConfig{3, 2}.validate()));
  CHECK_THROWS_AS(causal_smooth(TimeSeries{}, SmootherConfig{}), DomainError);
}

TEST_CASE("four-point affine endpoint weights") {
  const auto w = endpoint_weights<double>(4, 1);
  const double expected[] = {-0.2, 0.1, 0.4, 0.7};
  for (int k = 0; k < 4; ++k) CHECK(w(k) == doctest::Approx(expected[k]).epsilon(1e-12));
}

TEST_CASE("smoothing a constant series reproduces it") {
  const std::vector<double> c(30, 1.7);
  for (const auto& cfg : {SmootherConfig{5, 0}, SmootherConfig{10, 2}, SmootherConfig{20, 3}}) {
    const auto s = causal_smooth(series_of(c), cfg);
    for (Eigen::Index i = 0; i < s.size(); ++i) CHECK(s[i] == doctest::Approx(1.7).epsilon(1e-12));
  }
}

TEST_CASE("smoothing a ramp with an affine fit reproduces it") {
  std::vector<double> ramp(25);
  for (std::size_t t = 0; t < ramp.size(); ++t) ramp[t] = 2.0 * static_cast<double>(t);
  const auto s = causal_smooth(series_of(ramp), SmootherConfig{5, 1});
  for (Eigen::Index i = 0; i < s.size(); ++i) CHECK(s[i] == doctest::Approx(ramp[static_cast<std::size_t>(i)]).epsilon(1e-12));
}

TEST_CASE("ramp plus alternating noise matches the closed-form four-point fit") {
  std::vector<double> x(16);
  for (std::size_t t = 0; t < x.size(); ++t) x[t] = 0.5 * static_cast<double>(t) + (t % 2 ? -1.0 : 1.0);
  const auto s = causal_smooth(series_of(x, 3), SmootherConfig{4, 1});
  CHECK(s.start_index() == 3);
  for (std::size_t t = 3; t < x.size(); ++t) {
    CHECK(s.at(static_cast<TimeIndex>(t) + 3) == doctest::Approx(affine_endpoint_oracle(&x[t - 3])).epsilon(1e-12));
  }
  // Prefix: one sample is returned as is, two samples define a line through both.
  CHECK(s.at(3) == doctest::Approx(x[0]));
  CHECK(s.at(4) == doctest::Approx(x[1]));
}

TEST_CASE("property: smoothing is causal and commutes with scaling") {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g(0, 1);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<double> x(60);
    for (auto& v : x) v = g(rng);
    const SmootherConfig cfg{static_cast<Eigen::Index>(3 + rng() % 15), static_cast<Eigen::Index>(rng() % 3)};
    const auto base = causal_smooth(series_of(x), cfg);
    const std::size_t cut = 10 + rng() % 40;
    auto mutated = x;
    for (std::size_t t = cut + 1; t < x.size(); ++t) mutated[t] += 100 * g(rng);
    const auto changed = causal_smooth(series_of(mutated), cfg);
    for (std::size_t t = 0; t <= cut; ++t) CHECK(changed[static_cast<Eigen::Index>(t)] == base[static_cast<Eigen::Index>(t)]);

    const double lambda = -3.5;
    auto scaled = x;
    for (auto& v : scaled) v *= lambda;
    const auto s2 = causal_smooth(series_of(scaled), cfg);
    for (Eigen::Index t = 0; t < s2.size(); ++t) CHECK(s2[t] == doctest::Approx(lambda * base[t]).epsilon(1e-9));
  }
}

TEST_CASE("identification configuration checks") {
  CHECK_THROWS_AS(ident(3, 5).validate(), ConfigError);
  CHECK_THROWS_AS(ident(0, 5).validate(), ConfigError);
  CHECK_NOTHROW(ident(3, 6).validate());
  CHECK_THROWS_AS(identify_window(series_of(std::vector<double>(10, 1.0)), ident(3, 5)), ConfigError);
  CHECK_THROWS_AS(identify_window(series_of(std::vector<double>(9, 1.0)), ident(3, 10)), ConfigError);
  CHECK_THROWS_AS(identify_window(series_of(std::vector<double>(10, 0.0)), ident(3, 10)), DegenerateInputError);
}

TEST_CASE("identify_window examples") {
  SUBCASE("geometric doubling") {
    std::vector<double> x(10);
    for (std::size_t t = 0; t < x.size(); ++t) x[t] = std::pow(2.0, static_cast<double>(t));
    const auto m = identify_window(series_of(x, 4), ident(1, 10));
    CHECK(m.coefficients(0) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(m.window_origin == 4);
  }
  SUBCASE("Fibonacci") {
    const auto x = oracle::iterate_recursion<double>({1, 1}, {0, 1}, 13);
    const auto m = identify_window(series_of(x), ident(2, 13));
    CHECK(std::abs(m.coefficients(0) - 1) <= 1e-9);
    CHECK(std::abs(m.coefficients(1) - 1) <= 1e-9);
  }
  SUBCASE("sinusoid with cos w = 0.8") {
    std::vector<double> x(20);
    const double w = std::acos(0.8);
    for (std::size_t t = 0; t < x.size(); ++t) x[t] = std::sin(w * static_cast<double>(t));
    const auto m = identify_window(series_of(x), ident(2, 20));
    CHECK(std::abs(m.coefficients(0) - 1.6) <= 1e-9);
    CHECK(std::abs(m.coefficients(1) + 1) <= 1e-9);
  }
}

TEST_CASE("constant window gives the minimum-norm solution") {
  // Six samples, n = 3: three identical rows (c, c, c) -> c. The pseudo-inverse of the rank-one regressor
  // c * 1 1^T applied to c * 1 is 1/3 per coefficient.
  const auto m = identify_window(series_of(std::vector<double>(6, 4.2)), ident(3, 6));
  for (int i = 0; i < 3; ++i) CHECK(m.coefficients(i) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(m.rank == 1);
  CHECK(m.truncated());
  CHECK(m.condition_number > 1e10);
  CHECK(in_window_rms_residual(m, series_of(std::vector<double>(6, 4.2))) <= 1e-9);
}

TEST_CASE("property: exact recovery on minimal recursions at every well-conditioned window placement") {
  // A decaying mode drops below round-off a few dozen samples in, after which
  // the window no longer determines it; only placements whose regressor is
  // well conditioned are held to the tolerance.
  std::mt19937_64 rng(31);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const auto roots = oracle::separated_roots(rng, n);
    const auto a = oracle::coefficients_from_roots(roots);
    const auto x = oracle::root_sequence(rng, roots, 70);
    const auto s = series_of(x);
    for (TimeIndex from : {0, 7, 25}) {
      Eigen::MatrixXd regressor(45 - n, n);
      for (int t = 0; t < 45 - n; ++t) {
        for (int i = 0; i < n; ++i) regressor(t, i) = x[static_cast<std::size_t>(from + t + n - 1 - i)];
      }
      const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXd>(regressor).singularValues();
      if (sv(0) / sv(n - 1) > 1e6) continue;
      ++checked;
      const auto m = identify_window(slice(s, from, 45), ident(n, 45));
      for (int i = 0; i < n; ++i) CHECK(std::abs(m.coefficients(i) - a[static_cast<std::size_t>(i)]) <= 1e-8);
    }
  }
  CHECK(checked >= 60);
}

TEST_CASE("property: least squares beats perturbed coefficient vectors") {
  std::mt19937_64 rng(8);
  std::normal_distribution<double> g(0, 1);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<double> x(15);
    for (auto& v : x) v = g(rng);
    const auto seg = series_of(x);
    const auto m = identify_window(seg, ident(2, 15));
    const double best = in_window_rms_residual(m, seg);
    // Normal-equations oracle.
    const auto [A, b] = regression_system(seg.values(), 2);
    const Eigen::Vector2d normal = (A.transpose() * A).ldlt().solve(A.transpose() * b);
    CHECK(std::abs(normal(0) - m.coefficients(0)) <= 1e-9);
    CHECK(std::abs(normal(1) - m.coefficients(1)) <= 1e-9);
    for (double d1 : {-1e-3, 0.0, 1e-3}) {
      for (double d2 : {-1e-3, 0.0, 1e-3}) {
        auto other = m;
        other.coefficients(0) += d1;
        other.coefficients(1) += d2;
        CHECK(in_window_rms_residual(other, seg) >= best - 1e-15);
      }
    }
  }
}

TEST_CASE("property: identification is scale invariant") {
  std::mt19937_64 rng(17);
  std::normal_distribution<double> g(0, 1);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<double> x(45);
    for (auto& v : x) v = g(rng);
    const auto base = identify_window(series_of(x), ident(3, 45));
    for (double lambda : {1e-3, -2.0, 750.0}) {
      auto y = x;
      for (auto& v : y) v *= lambda;
      const auto scaled = identify_window(series_of(y), ident(3, 45));
      for (int i = 0; i < 3; ++i) CHECK(scaled.coefficients(i) == doctest::Approx(base.coefficients(i)).epsilon(1e-9));
    }
  }
}

TEST_CASE("rolling identification") {
  SUBCASE("exact order-2 recursion is recovered once the smoother is warm") {
    const auto x = oracle::iterate_recursion<double>({1.5, -0.7}, {1.0, 0.3}, 120);
    const auto models = rolling_identify(series_of(x), ident(2, 20), SmootherConfig{10, 2});
    REQUIRE(models.size() == 120 - 20 + 1);
    for (std::size_t k = 0; k < models.size(); ++k) {
      CHECK(models[k].window_origin == static_cast<TimeIndex>(k));
      // Once the smoother has a full window it is a fixed linear filter, which
      // commutes with the shift and so preserves the recursion.
      if (k < 9) continue;
      CHECK(std::abs(models[k].coefficients(0) - 1.5) <= 1e-9);
      CHECK(std::abs(models[k].coefficients(1) + 0.7) <= 1e-9);
    }
  }
  SUBCASE("ratio-2 then ratio-3 geometric segments") {
    std::vector<double> x;
    double v = 1.0;
    for (int t = 0; t < 15; ++t) {
      x.push_back(v);
      v *= 2.0;
    }
    for (int t = 0; t < 15; ++t) {
      x.push_back(v);
      v *= 3.0;
    }
    // A one-point smoother is the identity, so each window is plain least squares on the raw data.
    const auto models = rolling_identify(series_of(x), ident(1, 6), SmootherConfig{1, 0});
    CHECK(models.front().coefficients(0) == doctest::Approx(2.0));
    CHECK(models.back().coefficients(0) == doctest::Approx(3.0));
    for (const auto& m : models) {
      const auto from = static_cast<std::size_t>(m.window_origin);
      double num = 0, den = 0;
      for (std::size_t t = from; t + 1 < from + 6; ++t) {
        num += x[t + 1] * x[t];
        den += x[t] * x[t];
      }
      CHECK(m.coefficients(0) == doctest::Approx(num / den).epsilon(1e-10));
      CHECK(m.coefficients(0) >= 2.0 - 1e-9);
      CHECK(m.coefficients(0) <= 3.0 + 1e-9);
    }
  }
  SUBCASE("constant series flags conditioning and predicts exactly") {
    const std::vector<double> x(80, 1.25);
    const auto s = series_of(x);
    for (const auto& m : rolling_identify(s, ident(3, 45), SmootherConfig{})) {
      CHECK(m.condition_number > 1e10);
      for (int i = 0; i < 3; ++i) CHECK(m.coefficients(i) == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
      CHECK(in_window_rms_residual(m, slice(s, m.window_origin, 45)) <= 1e-9);
    }
  }
}

TEST_CASE("property: models ending before a mutation are unchanged") {
  std::mt19937_64 rng(23);
  std::normal_distribution<double> g(0, 1);
  std::vector<double> x(150);
  for (auto& v : x) v = 1 + 0.1 * g(rng);
  const auto base = rolling_identify(series_of(x), ident(3, 45), SmootherConfig{});
  auto mutated = x;
  const std::size_t cut = 100;
  for (std::size_t t = cut + 1; t < x.size(); ++t) mutated[t] = 5 * g(rng);
  const auto changed = rolling_identify(series_of(mutated), ident(3, 45), SmootherConfig{});
  for (std::size_t k = 0; k < base.size(); ++k) {
    if (base[k].window_origin + 45 - 1 > static_cast<TimeIndex>(cut)) break;
    CHECK((changed[k].coefficients.array() == base[k].coefficients.array()).all());
  }
}
