#pragma once

#include <map>
#include <string>
#include <utility>

#include <Eigen/Dense>

#include "diffcast/core/time_series.hpp"

namespace diffcast {

/// Causal local-polynomial smoother: window W samples, degree d < W.
struct SmootherConfig {
  Eigen::Index window = 20;
  Eigen::Index degree = 2;

  void validate() const {
    if (window < 1) throw ConfigError("smoother window must be >= 1, got " + std::to_string(window));
    if (degree < 0 || degree >= window) {
      throw ConfigError("smoother degree must lie in [0, window), got d=" + std::to_string(degree) +
                        " with W=" + std::to_string(window));
    }
  }
};

/**
 * Weights w such that w . (x(t-W+1), ..., x(t)) is the value at t of the
 * degree-d least-squares polynomial through those W samples. Samples are
 * placed on the local abscissa (k - (W-1)) / W to keep the Vandermonde matrix
 * well conditioned.
 */
template <typename Scalar>
Vector<Scalar> endpoint_weights(Eigen::Index window, Eigen::Index degree) {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Matrix vandermonde(window, degree + 1);
  for (Eigen::Index k = 0; k < window; ++k) {
    const Scalar s = Scalar(k - (window - 1)) / Scalar(window);
    Scalar power(1);
    for (Eigen::Index j = 0; j <= degree; ++j) {
      vandermonde(k, j) = power;
      power *= s;
    }
  }
  // The fitted value at s = 0 is the intercept: first row of the pseudo-inverse.
  const Eigen::CompleteOrthogonalDecomposition<Matrix> cod(vandermonde);
  return cod.pseudoInverse().row(0).transpose();
}

/**
 * Right-endpoint local polynomial smoother. The output at t depends only on
 * samples at times <= t; the first W-1 outputs use the available prefix with
 * the degree capped at (prefix length - 1).
 */
template <typename Scalar>
BasicTimeSeries<Scalar> causal_smooth(const BasicTimeSeries<Scalar>& series, const SmootherConfig& config) {
  config.validate();
  if (series.empty()) throw DomainError("cannot smooth an empty series");
  if (series.size() < config.window) {
    throw DomainError("series of length " + std::to_string(series.size()) + " is shorter than the smoother window " +
                      std::to_string(config.window));
  }
  const auto& x = series.values();
  Vector<Scalar> out(x.size());
  std::map<std::pair<Eigen::Index, Eigen::Index>, Vector<Scalar>> cache;
  for (Eigen::Index t = 0; t < x.size(); ++t) {
    const Eigen::Index w = std::min(config.window, t + 1);
    const Eigen::Index d = std::min(config.degree, w - 1);
    auto it = cache.find({w, d});
    if (it == cache.end()) it = cache.emplace(std::make_pair(w, d), endpoint_weights<Scalar>(w, d)).first;
    out(t) = it->second.dot(x.segment(t - w + 1, w));
  }
  return BasicTimeSeries<Scalar>(std::move(out), series.start_index(), series.labels());
}

}  // namespace diffcast
