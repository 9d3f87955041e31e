#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "diffcast/core/errors.hpp"

namespace diffcast {

/// Integer time index. Calendar dates only ever travel as opaque labels.
using TimeIndex = std::int64_t;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/**
 * Uniformly indexed, immutable sequence of observations.
 *
 * The value at time t is stored at position t - start_index(). Optional date
 * labels, when present, have exactly one entry per value.
 */
template <typename Scalar>
class BasicTimeSeries {
 public:
  using scalar_type = Scalar;
  using vector_type = Vector<Scalar>;

  BasicTimeSeries() = default;

  explicit BasicTimeSeries(vector_type values, TimeIndex start_index = 0,
                           std::vector<std::string> labels = {})
      : values_(std::move(values)), start_(start_index), labels_(std::move(labels)) {
    if (!labels_.empty() && static_cast<Eigen::Index>(labels_.size()) != values_.size()) {
      throw AlignmentError("time series labels (" + std::to_string(labels_.size()) +
                           ") do not match values (" + std::to_string(values_.size()) + ")");
    }
  }

  BasicTimeSeries(const std::vector<Scalar>& values, TimeIndex start_index = 0,
                  std::vector<std::string> labels = {})
      : BasicTimeSeries(Eigen::Map<const vector_type>(values.data(),
                                                      static_cast<Eigen::Index>(values.size())),
                        start_index, std::move(labels)) {}

  const vector_type& values() const noexcept { return values_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  bool has_labels() const noexcept { return !labels_.empty(); }

  Eigen::Index size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.size() == 0; }

  TimeIndex start_index() const noexcept { return start_; }
  /// One past the last stored time.
  TimeIndex end_index() const noexcept { return start_ + values_.size(); }
  TimeIndex last_index() const noexcept { return end_index() - 1; }

  bool contains(TimeIndex t) const noexcept { return t >= start_ && t < end_index(); }

  /// Value at time t (not position).
  Scalar at(TimeIndex t) const {
    if (!contains(t)) {
      throw RangeError("time " + std::to_string(t) + " outside [" + std::to_string(start_) + ", " +
                       std::to_string(end_index()) + ")");
    }
    return values_(static_cast<Eigen::Index>(t - start_));
  }

  /// Value at storage position k.
  Scalar operator[](Eigen::Index k) const { return values_(k); }

  const std::string& label_at(TimeIndex t) const {
    if (!has_labels()) throw DomainError("time series carries no labels");
    at(t);
    return labels_[static_cast<std::size_t>(t - start_)];
  }

  std::vector<Scalar> to_vector() const { return {values_.data(), values_.data() + values_.size()}; }

 private:
  vector_type values_;
  TimeIndex start_ = 0;
  std::vector<std::string> labels_;
};

using TimeSeries = BasicTimeSeries<double>;

/// Contiguous sub-series [from, from + length). Labels are sliced identically.
template <typename Scalar>
BasicTimeSeries<Scalar> slice(const BasicTimeSeries<Scalar>& series, TimeIndex from,
                              Eigen::Index length) {
  if (length < 1 || from < series.start_index() || from + length > series.end_index()) {
    throw RangeError("slice [" + std::to_string(from) + ", " + std::to_string(from + length) +
                     ") outside valid span [" + std::to_string(series.start_index()) + ", " +
                     std::to_string(series.end_index()) + ")");
  }
  const auto offset = static_cast<Eigen::Index>(from - series.start_index());
  std::vector<std::string> labels;
  if (series.has_labels()) {
    labels.assign(series.labels().begin() + offset, series.labels().begin() + offset + length);
  }
  return BasicTimeSeries<Scalar>(series.values().segment(offset, length), from, std::move(labels));
}

/// Prefix of a series ending at time `last` (inclusive).
template <typename Scalar>
BasicTimeSeries<Scalar> prefix_through(const BasicTimeSeries<Scalar>& series, TimeIndex last) {
  return slice(series, series.start_index(), static_cast<Eigen::Index>(last - series.start_index() + 1));
}

/// Order-n homogeneous linear difference equation
///   x(t+n) = a_1 x(t+n-1) + ... + a_n x(t)
/// as identified on one window, with regression diagnostics.
template <typename Scalar>
struct DifferenceEquationModel {
  Vector<Scalar> coefficients;
  /// Largest over smallest singular value of the regressor (infinite when singular).
  Scalar condition_number = Scalar(1);
  /// Number of singular values kept by the truncated solve.
  Eigen::Index rank = 0;
  TimeIndex window_origin = 0;

  Eigen::Index order() const noexcept { return coefficients.size(); }
  bool truncated() const noexcept { return rank < order(); }

  /// One-step prediction from the n most recent values, oldest first.
  Scalar predict(std::span<const Scalar> history) const {
    const auto n = order();
    if (static_cast<Eigen::Index>(history.size()) < n) {
      throw DomainError("prediction needs " + std::to_string(n) + " past values");
    }
    Scalar acc = Scalar(0);
    const auto last = history.size() - 1;
    for (Eigen::Index i = 0; i < n; ++i) acc += coefficients(i) * history[last - static_cast<std::size_t>(i)];
    return acc;
  }
};

/// Additive split raw = trendline + residual over a shared index range.
template <typename Scalar>
struct ResidualDecomposition {
  BasicTimeSeries<Scalar> trendline;
  BasicTimeSeries<Scalar> residual;

  TimeIndex start_index() const noexcept { return trendline.start_index(); }
};

template <typename Scalar>
ResidualDecomposition<Scalar> decompose(const BasicTimeSeries<Scalar>& raw,
                                        const BasicTimeSeries<Scalar>& trendline) {
  if (raw.start_index() != trendline.start_index() || raw.size() != trendline.size()) {
    throw AlignmentError("raw series [" + std::to_string(raw.start_index()) + ", " +
                         std::to_string(raw.end_index()) + ") and trendline [" +
                         std::to_string(trendline.start_index()) + ", " +
                         std::to_string(trendline.end_index()) + ") cover different ranges");
  }
  Vector<Scalar> residual = raw.values() - trendline.values();
  return {trendline, BasicTimeSeries<Scalar>(std::move(residual), raw.start_index(), raw.labels())};
}

/// Largest absolute value, 0 for an empty series.
template <typename Derived>
typename Derived::Scalar max_abs(const Eigen::MatrixBase<Derived>& v) {
  return v.size() == 0 ? typename Derived::Scalar(0) : v.cwiseAbs().maxCoeff();
}

}  // namespace diffcast
