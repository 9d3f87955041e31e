#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "diffcast/algebra/rational_function.hpp"

namespace diffcast::algebra {

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

enum class WronskianKind {
  /// (2n+1) x (2n+1): derivatives of z^n Y, ..., Y, z^{n-1}, ..., 1.
  Full,
  /// (n+1) x (n+1): derivatives of order n..2n of z^n Y, ..., Y.
  Dynamics,
};

/// Largest order accepted by wronskian_certificate.
inline constexpr int kMaxCertificateOrder = 6;

struct CertificateOptions {
  std::uint64_t seed = 20080101;
  /// Pole-free evaluations whose ranks are combined (maximum kept).
  int evaluations = 4;
  /// Total random draws allowed before giving up.
  int max_draws = 64;
  /// Evaluation points are p/q with |p|, q <= this bound.
  int point_bound = 997;
};

struct WronskianCertificate {
  WronskianKind kind = WronskianKind::Full;
  int claimed_order = 0;
  int matrix_order = 0;
  int rank = 0;
  /// Point at which the reported (maximal) rank was attained.
  Rational evaluation_point = 0;
  int evaluations = 0;
  bool identifiable = false;

  int expected_rank() const noexcept { return kind == WronskianKind::Full ? 2 * claimed_order : claimed_order; }
};

/**
 * Symbolic Wronskian of the generating function X for a claimed order n.
 *
 * Entries are built on Y = X / z, the strictly proper form sum_t x(t) z^{-t-1}
 * in which the numerator of the rational representation has degree < n.
 * The k-th derivative of a column N/D is carried as N_k / D^(k+1) and
 * reduced only when the entry is materialized.
 */
std::vector<std::vector<RationalFunctionQ>> wronskian_matrix(const RationalFunctionQ& x, int claimed_order,
                                                             WronskianKind kind);

/// Exact rank by Gaussian elimination over the rationals.
int exact_rank(RationalMatrix m);

/**
 * Rank certificate for the linear identifiability of an order-n recursion.
 *
 * The symbolic matrix is evaluated at random rational points that are not
 * poles of any entry; the largest rank seen is reported. Identifiable iff the
 * rank equals 2n (Full) or n (Dynamics).
 */
WronskianCertificate wronskian_certificate(const RationalFunctionQ& x, int claimed_order, WronskianKind kind,
                                           const CertificateOptions& options = {});

const char* to_string(WronskianKind kind) noexcept;

}  // namespace diffcast::algebra
