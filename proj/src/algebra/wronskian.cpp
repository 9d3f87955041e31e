#include "diffcast/algebra/wronskian.hpp"

#include <random>
#include <sstream>
#include <string>

#include "diffcast/algebra/generating_function.hpp"

namespace diffcast::algebra {
namespace {

/**
 * Successive derivatives of f = N / D kept over powers of the fixed
 * denominator: f^(k) = N_k / D^(k+1) with N_{k+1} = N_k' D - (k+1) N_k D'.
 * Nothing is reduced along the way, so no polynomial gcd is ever taken.
 */
struct DerivativeLadder {
  RationalPolynomial denominator;
  std::vector<RationalPolynomial> numerators;

  DerivativeLadder(const RationalFunctionQ& f, int max_order) : denominator(f.denominator()) {
    const RationalPolynomial slope = denominator.derivative();
    numerators.reserve(static_cast<std::size_t>(max_order) + 1);
    numerators.push_back(f.numerator());
    for (int k = 0; k < max_order; ++k) {
      const auto& nk = numerators.back();
      numerators.push_back(nk.derivative() * denominator - nk * slope * Rational(k + 1));
    }
  }

  RationalFunctionQ function(int order) const {
    return RationalFunctionQ(numerators[static_cast<std::size_t>(order)], denominator.pow(static_cast<unsigned>(order + 1)));
  }

  /// Value of the order-th derivative at z, given d = D(z) != 0.
  Rational value(int order, const Rational& z, const Rational& d) const {
    Rational power = d;
    for (int k = 0; k < order; ++k) power *= d;
    return numerators[static_cast<std::size_t>(order)](z) / power;
  }
};

struct Layout {
  std::vector<RationalFunctionQ> columns;
  int first_order = 0;
  int rows = 0;
};

Layout layout(const RationalFunctionQ& x, int claimed_order, WronskianKind kind) {
  if (claimed_order < 1 || claimed_order > kMaxCertificateOrder) {
    throw DomainError("certificate order must lie in [1, " + std::to_string(kMaxCertificateOrder) + "], got " +
                      std::to_string(claimed_order));
  }
  if (!x.is_proper()) throw DomainError("generating function " + to_string(x) + " is improper");

  const int n = claimed_order;
  const RationalFunctionQ y = shifted_transform(x);
  Layout l;
  // Columns: z^n Y, ..., Y, then (Full only) z^{n-1}, ..., 1.
  for (int i = n; i >= 0; --i) l.columns.push_back(y * RationalFunctionQ(RationalPolynomial::monomial(i)));
  if (kind == WronskianKind::Full) {
    for (int j = n - 1; j >= 0; --j) l.columns.emplace_back(RationalPolynomial::monomial(j));
  }
  l.first_order = kind == WronskianKind::Full ? 0 : n;
  l.rows = kind == WronskianKind::Full ? 2 * n + 1 : n + 1;
  return l;
}

}  // namespace

const char* to_string(WronskianKind kind) noexcept {
  return kind == WronskianKind::Full ? "full" : "dynamics";
}

std::vector<std::vector<RationalFunctionQ>> wronskian_matrix(const RationalFunctionQ& x, int claimed_order,
                                                             WronskianKind kind) {
  const Layout l = layout(x, claimed_order, kind);
  std::vector<std::vector<RationalFunctionQ>> m(static_cast<std::size_t>(l.rows),
                                                std::vector<RationalFunctionQ>(l.columns.size()));
  for (std::size_t c = 0; c < l.columns.size(); ++c) {
    const DerivativeLadder ladder(l.columns[c], l.first_order + l.rows - 1);
    for (int r = 0; r < l.rows; ++r) m[static_cast<std::size_t>(r)][c] = ladder.function(l.first_order + r);
  }
  return m;
}

int exact_rank(RationalMatrix m) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  Eigen::Index rank = 0;
  for (Eigen::Index c = 0; c < cols && rank < rows; ++c) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = rank; r < rows; ++r) {
      if (m(r, c) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) m.row(pivot).swap(m.row(rank));
    const Rational inv = 1 / m(rank, c);
    for (Eigen::Index r = rank + 1; r < rows; ++r) {
      if (m(r, c) == 0) continue;
      const Rational factor = m(r, c) * inv;
      for (Eigen::Index k = c; k < cols; ++k) {
        Rational updated = m(r, k) - factor * m(rank, k);
        m(r, k) = std::move(updated);
      }
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

WronskianCertificate wronskian_certificate(const RationalFunctionQ& x, int claimed_order, WronskianKind kind,
                                           const CertificateOptions& options) {
  const Layout l = layout(x, claimed_order, kind);
  std::vector<DerivativeLadder> ladders;
  for (const auto& column : l.columns) ladders.emplace_back(column, l.first_order + l.rows - 1);
  const auto rows = static_cast<Eigen::Index>(l.rows);
  const auto cols = static_cast<Eigen::Index>(l.columns.size());
  const RationalPolynomial pole_polynomial = shifted_transform(x).denominator();

  WronskianCertificate cert;
  cert.kind = kind;
  cert.claimed_order = claimed_order;
  cert.matrix_order = static_cast<int>(rows);
  cert.rank = -1;

  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> numerator(-options.point_bound, options.point_bound);
  std::uniform_int_distribution<int> denominator(1, options.point_bound);
  std::vector<Rational> rejected;

  for (int draw = 0; draw < options.max_draws && cert.evaluations < options.evaluations; ++draw) {
    const int p = numerator(rng);
    const int q = denominator(rng);
    const Rational z(p, q);
    if (pole_polynomial(z) == 0) {
      rejected.push_back(z);
      continue;
    }
    RationalMatrix evaluated(rows, cols);
    for (Eigen::Index c = 0; c < cols; ++c) {
      const auto& ladder = ladders[static_cast<std::size_t>(c)];
      const Rational d = ladder.denominator(z);
      for (Eigen::Index r = 0; r < rows; ++r) {
        evaluated(r, c) = ladder.value(l.first_order + static_cast<int>(r), z, d);
      }
    }
    ++cert.evaluations;
    const int rank = exact_rank(std::move(evaluated));
    if (rank > cert.rank) {
      cert.rank = rank;
      cert.evaluation_point = z;
    }
    if (cert.rank == cert.matrix_order) break;
  }

  if (cert.evaluations == 0) {
    std::ostringstream msg;
    msg << "no pole-free evaluation point within " << options.max_draws << " draws; poles are the roots of "
        << to_string(pole_polynomial) << "; rejected points:";
    for (const auto& z : rejected) msg << ' ' << to_string(z);
    throw EvaluationError(msg.str());
  }
  cert.identifiable = cert.rank == cert.expected_rank();
  return cert;
}

}  // namespace diffcast::algebra
