#pragma once

#include <algorithm>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "diffcast/algebra/rational.hpp"
#include "diffcast/core/errors.hpp"

namespace diffcast::algebra {

/**
 * Dense univariate polynomial over a field, coefficients in ascending degree.
 *
 * Trailing zeros are always trimmed, so the stored leading coefficient is
 * nonzero unless the polynomial is zero (empty storage, degree -1).
 */
template <typename Scalar>
class Polynomial {
 public:
  Polynomial() = default;

  explicit Polynomial(std::vector<Scalar> ascending) : coeffs_(std::move(ascending)) { trim(); }

  Polynomial(std::initializer_list<Scalar> ascending) : coeffs_(ascending) { trim(); }

  static Polynomial constant(const Scalar& c) { return Polynomial(std::vector<Scalar>{c}); }

  static Polynomial monomial(int degree, const Scalar& c = Scalar(1)) {
    std::vector<Scalar> v(static_cast<std::size_t>(degree) + 1, Scalar(0));
    v.back() = c;
    return Polynomial(std::move(v));
  }

  /// The polynomial z.
  static Polynomial identity() { return monomial(1); }

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Scalar>& coefficients() const noexcept { return coeffs_; }

  Scalar coefficient(int k) const {
    return (k < 0 || k > degree()) ? Scalar(0) : coeffs_[static_cast<std::size_t>(k)];
  }

  Scalar leading() const { return is_zero() ? Scalar(0) : coeffs_.back(); }

  Polynomial monic() const {
    if (is_zero()) return *this;
    const Scalar lead = coeffs_.back();
    return *this / lead;
  }

  Polynomial derivative() const {
    if (degree() < 1) return {};
    std::vector<Scalar> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * Scalar(static_cast<long>(k));
    return Polynomial(std::move(d));
  }

  /// Horner evaluation.
  Scalar operator()(const Scalar& z) const {
    Scalar acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      Scalar next = acc * z + *it;
      acc = std::move(next);
    }
    return acc;
  }

  Polynomial pow(unsigned exponent) const {
    Polynomial result = constant(Scalar(1));
    Polynomial base = *this;
    while (exponent != 0) {
      if (exponent & 1U) result = result * base;
      exponent >>= 1U;
      if (exponent != 0) base = base * base;
    }
    return result;
  }

  /// p(z) * z^k.
  Polynomial shifted_up(int k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<Scalar> v(static_cast<std::size_t>(k), Scalar(0));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(v));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Scalar> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Scalar(0));
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) v[k] += a.coeffs_[k];
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) v[k] += b.coeffs_[k];
    return Polynomial(std::move(v));
  }

  friend Polynomial operator-(const Polynomial& a) {
    std::vector<Scalar> v(a.coeffs_.size());
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = -a.coeffs_[k];
    return Polynomial(std::move(v));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> v(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == Scalar(0)) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(v));
  }

  friend Polynomial operator*(const Scalar& c, const Polynomial& p) {
    std::vector<Scalar> v(p.coeffs_.size());
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = c * p.coeffs_[k];
    return Polynomial(std::move(v));
  }

  friend Polynomial operator*(const Polynomial& p, const Scalar& c) { return c * p; }

  friend Polynomial operator/(const Polynomial& p, const Scalar& c) {
    if (c == Scalar(0)) throw DomainError("polynomial division by zero scalar");
    std::vector<Scalar> v(p.coeffs_.size());
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = p.coeffs_[k] / c;
    return Polynomial(std::move(v));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == Scalar(0)) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;
};

using RationalPolynomial = Polynomial<Rational>;

/// Euclidean division: returns (quotient, remainder) with deg remainder < deg divisor.
template <typename Scalar>
std::pair<Polynomial<Scalar>, Polynomial<Scalar>> divmod(const Polynomial<Scalar>& dividend,
                                                         const Polynomial<Scalar>& divisor) {
  if (divisor.is_zero()) throw DomainError("polynomial division by zero");
  const int dd = divisor.degree();
  if (dividend.degree() < dd) return {Polynomial<Scalar>{}, dividend};
  std::vector<Scalar> rem = dividend.coefficients();
  std::vector<Scalar> quo(static_cast<std::size_t>(dividend.degree() - dd + 1), Scalar(0));
  const Scalar lead = divisor.leading();
  const auto& dv = divisor.coefficients();
  for (int k = dividend.degree(); k >= dd; --k) {
    const Scalar factor = rem[static_cast<std::size_t>(k)] / lead;
    quo[static_cast<std::size_t>(k - dd)] = factor;
    if (factor == Scalar(0)) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k - dd + j)] -= factor * dv[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {Polynomial<Scalar>(std::move(quo)), Polynomial<Scalar>(std::move(rem))};
}

/// Monic greatest common divisor; gcd(0, 0) = 0.
template <typename Scalar>
Polynomial<Scalar> gcd(Polynomial<Scalar> a, Polynomial<Scalar> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

/// Monic least common multiple.
template <typename Scalar>
Polynomial<Scalar> lcm(const Polynomial<Scalar>& a, const Polynomial<Scalar>& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return divmod(a * b, gcd(a, b)).first.monic();
}

/// Human-readable form in descending powers, e.g. "z^2 - z - 1".
template <typename Scalar>
std::string to_string(const Polynomial<Scalar>& p, const std::string& var = "z") {
  using diffcast::algebra::to_string;
  using std::to_string;
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const Scalar c = p.coefficient(k);
    if (c == Scalar(0)) continue;
    const bool negative = c < Scalar(0);
    const Scalar mag = negative ? Scalar(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit = mag == Scalar(1);
    if (!unit || k == 0) out += to_string(mag);
    if (k > 0) {
      if (!unit) out += "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace diffcast::algebra
