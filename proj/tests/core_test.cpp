#include <doctest.h>

#include <random>

#include "diffcast/core/time_series.hpp"

using namespace diffcast;

namespace {

std::vector<double> values_of(const TimeSeries& s) { return {s.values().data(), s.values().data() + s.size()}; }

}  // namespace

TEST_CASE("slice returns the requested contiguous range") {
  const TimeSeries s(std::vector<double>{1, 2, 3, 4});
  const auto sub = slice(s, 1, 2);
  CHECK(sub.start_index() == 1);
  CHECK(values_of(sub) == std::vector<double>{2, 3});
}

TEST_CASE("slice of the full span is the identity") {
  const TimeSeries s(std::vector<double>{1, 2, 3, 4}, 5, {"a", "b", "c", "d"});
  const auto sub = slice(s, 5, 4);
  CHECK(values_of(sub) == values_of(s));
  CHECK(sub.labels() == s.labels());
  CHECK(sub.start_index() == 5);
}

TEST_CASE("slice of a singleton") {
  const TimeSeries s(std::vector<double>{5}, 7);
  const auto sub = slice(s, 7, 1);
  CHECK(sub.start_index() == 7);
  CHECK(values_of(sub) == std::vector<double>{5});
}

TEST_CASE("slice slices labels alongside values") {
  const TimeSeries s(std::vector<double>{1, 2, 3}, 0, {"d0", "d1", "d2"});
  const auto sub = slice(s, 1, 2);
  CHECK(sub.labels() == std::vector<std::string>{"d1", "d2"});
  CHECK(sub.label_at(2) == "d2");
}

TEST_CASE("slice out of range names the valid span") {
  const TimeSeries s(std::vector<double>{1, 2, 3}, 10);
  CHECK_THROWS_AS(slice(s, 9, 2), RangeError);
  CHECK_THROWS_AS(slice(s, 12, 2), RangeError);
  CHECK_THROWS_AS(slice(s, 10, 0), RangeError);
  try {
    (void)slice(s, 12, 2);
  } catch (const RangeError& e) {
    CHECK(std::string(e.what()).find("[10, 13)") != std::string::npos);
  }
}

TEST_CASE("labels must match values in length") {
  CHECK_THROWS_AS(TimeSeries(std::vector<double>{1, 2}, 0, {"only-one"}), AlignmentError);
}

TEST_CASE("indexing is relative to the start index") {
  const TimeSeries s(std::vector<double>{4, 5, 6}, 100);
  CHECK(s.at(100) == 4);
  CHECK(s.at(102) == 6);
  CHECK(s.last_index() == 102);
  CHECK(s.end_index() == 103);
  CHECK_FALSE(s.contains(103));
  CHECK_THROWS_AS((void)s.at(99), RangeError);
}

TEST_CASE("decompose examples") {
  SUBCASE("perfect trendline") {
    const auto d = decompose(TimeSeries(std::vector<double>{3, 3, 3}), TimeSeries(std::vector<double>{3, 3, 3}));
    CHECK(values_of(d.residual) == std::vector<double>{0, 0, 0});
  }
  SUBCASE("zero trendline") {
    const auto d = decompose(TimeSeries(std::vector<double>{1, 2, 3}), TimeSeries(std::vector<double>{0, 0, 0}));
    CHECK(values_of(d.residual) == std::vector<double>{1, 2, 3});
  }
  SUBCASE("direct subtraction") {
    const auto d = decompose(TimeSeries(std::vector<double>{1.5, 2.5}), TimeSeries(std::vector<double>{1.0, 3.0}));
    CHECK(values_of(d.residual) == std::vector<double>{0.5, -0.5});
  }
}

TEST_CASE("decompose rejects misaligned inputs") {
  CHECK_THROWS_AS(decompose(TimeSeries(std::vector<double>{1, 2}), TimeSeries(std::vector<double>{1, 2}, 1)),
                  AlignmentError);
  CHECK_THROWS_AS(decompose(TimeSeries(std::vector<double>{1, 2}), TimeSeries(std::vector<double>{1})),
                  AlignmentError);
}

TEST_CASE("property: reconstruction is exact to machine addition") {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> g(0.0, 10.0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t len = 1 + rng() % 50;
    std::vector<double> raw(len), trend(len);
    for (std::size_t i = 0; i < len; ++i) {
      raw[i] = g(rng);
      trend[i] = g(rng);
    }
    const auto start = static_cast<TimeIndex>(rng() % 1000) - 500;
    const auto d = decompose(TimeSeries(raw, start), TimeSeries(trend, start));
    CHECK(d.residual.start_index() == start);
    for (std::size_t i = 0; i < len; ++i) {
      CHECK(d.residual[static_cast<Eigen::Index>(i)] == raw[i] - trend[i]);
    }
  }
}

TEST_CASE("property: adjacent slices concatenate to the original") {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t len = 2 + rng() % 40;
    std::vector<double> v(len);
    for (auto& x : v) x = u(rng);
    const TimeSeries s(v, 3);
    const auto cut = static_cast<Eigen::Index>(1 + rng() % (len - 1));
    const auto left = slice(s, 3, cut);
    const auto right = slice(s, 3 + cut, static_cast<Eigen::Index>(len) - cut);
    auto joined = values_of(left);
    const auto tail = values_of(right);
    joined.insert(joined.end(), tail.begin(), tail.end());
    CHECK(joined == v);
    CHECK(right.start_index() == left.end_index());
  }
}

TEST_CASE("model prediction uses the most recent value first") {
  DifferenceEquationModel<double> m;
  m.coefficients = Vector<double>(2);
  m.coefficients << 1, 1;
  const std::vector<double> history{5, 8};
  CHECK(m.predict(history) == 13);
  CHECK(m.order() == 2);
}
