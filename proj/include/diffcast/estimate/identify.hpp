#pragma once

#include <limits>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "diffcast/core/time_series.hpp"
#include "diffcast/estimate/smoother.hpp"

namespace diffcast {

/// Order n of the difference equation and the window length L used per fit.
struct IdentificationConfig {
  Eigen::Index order = 3;
  Eigen::Index window = 45;
  /// Singular values below rank_tolerance * sigma_max are discarded.
  double rank_tolerance = 1e-10;

  void validate() const {
    if (order < 1) throw ConfigError("difference equation order must be >= 1, got " + std::to_string(order));
    if (window < 2 * order) {
      throw ConfigError("identification window L=" + std::to_string(window) + " must be at least 2n=" +
                        std::to_string(2 * order));
    }
    if (!(rank_tolerance >= 0.0)) throw ConfigError("rank tolerance must be non-negative");
  }
};

/// (L-n) x n regressor with rows (x(t+n-1), ..., x(t)) and targets x(t+n).
template <typename Derived>
std::pair<Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>,
          Vector<typename Derived::Scalar>>
regression_system(const Eigen::MatrixBase<Derived>& x, Eigen::Index order) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index rows = x.size() - order;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a(rows, order);
  Vector<Scalar> b(rows);
  for (Eigen::Index t = 0; t < rows; ++t) {
    for (Eigen::Index i = 0; i < order; ++i) a(t, i) = x(t + order - 1 - i);
    b(t) = x(t + order);
  }
  return {std::move(a), std::move(b)};
}

/**
 * Least-squares fit of x(t+n) = a_1 x(t+n-1) + ... + a_n x(t) on one window.
 *
 * Solved through a thin SVD: singular values below rank_tolerance * sigma_max
 * are dropped and the minimum-norm solution of the truncated system is
 * returned. condition_number is sigma_max / sigma_min of the full regressor,
 * so a truncated (rank-deficient) window reports a value above
 * 1 / rank_tolerance.
 */
template <typename Scalar>
DifferenceEquationModel<Scalar> identify_window(const BasicTimeSeries<Scalar>& segment,
                                                const IdentificationConfig& config) {
  config.validate();
  if (segment.size() != config.window) {
    throw ConfigError("segment length " + std::to_string(segment.size()) + " differs from identification window L=" +
                      std::to_string(config.window));
  }
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const auto [a, b] = regression_system(segment.values(), config.order);
  if (a.isZero(Scalar(0))) {
    throw DegenerateInputError("all-zero regressor on window starting at t=" + std::to_string(segment.start_index()));
  }

  const Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sigma = svd.singularValues();
  const Scalar sigma_max = sigma(0);
  const Scalar cutoff = Scalar(config.rank_tolerance) * sigma_max;

  DifferenceEquationModel<Scalar> model;
  model.coefficients = Vector<Scalar>::Zero(config.order);
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    if (sigma(i) <= cutoff) break;
    model.coefficients += svd.matrixV().col(i) * (svd.matrixU().col(i).dot(b) / sigma(i));
    ++model.rank;
  }
  const Scalar sigma_min = sigma(sigma.size() - 1);
  model.condition_number =
      sigma_min > Scalar(0) ? sigma_max / sigma_min : std::numeric_limits<Scalar>::infinity();
  model.window_origin = segment.start_index();
  return model;
}

/// Root-mean-square one-step residual of a model over a window.
template <typename Scalar>
Scalar in_window_rms_residual(const DifferenceEquationModel<Scalar>& model, const BasicTimeSeries<Scalar>& segment) {
  const auto [a, b] = regression_system(segment.values(), model.order());
  if (b.size() == 0) return Scalar(0);
  return std::sqrt((b - a * model.coefficients).squaredNorm() / Scalar(b.size()));
}

/**
 * Smooths once, then identifies a model on every full L-window of the
 * smoothed series, in window order.
 */
template <typename Scalar>
std::vector<DifferenceEquationModel<Scalar>> rolling_identify(const BasicTimeSeries<Scalar>& series,
                                                              const IdentificationConfig& config,
                                                              const SmootherConfig& smoother) {
  config.validate();
  smoother.validate();
  if (series.size() < config.window) {
    throw DomainError("series of length " + std::to_string(series.size()) + " is shorter than the identification window " +
                      std::to_string(config.window));
  }
  const auto smoothed = causal_smooth(series, smoother);
  std::vector<DifferenceEquationModel<Scalar>> models;
  models.reserve(static_cast<std::size_t>(series.size() - config.window + 1));
  for (TimeIndex from = series.start_index(); from + config.window <= series.end_index(); ++from) {
    models.push_back(identify_window(slice(smoothed, from, config.window), config));
  }
  return models;
}

}  // namespace diffcast
