#pragma once

// Independent reference computations used as test oracles. Nothing here calls
// into the library's algorithms; only its value types are shared.

#include <cmath>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "diffcast/algebra/rational.hpp"

namespace oracle {

using diffcast::algebra::Rational;

/// x(t+n) = sum_i a_i x(t+n-i), iterated directly from the initial values.
template <typename T>
std::vector<T> iterate_recursion(const std::vector<T>& a, const std::vector<T>& initials, std::size_t count) {
  std::vector<T> x(initials.begin(), initials.end());
  const std::size_t n = a.size();
  while (x.size() < count) {
    T next(0);
    for (std::size_t i = 0; i < n; ++i) next += a[i] * x[x.size() - 1 - i];
    x.push_back(next);
  }
  x.resize(count);
  return x;
}

/// Chebyshev polynomials of the second kind U_{t-1}(c) = sin(t w)/sin(w) and the first kind T_t(c) = cos(t w)
/// for c = cos(w). Both are rational for rational c, which makes sinusoids exact.
inline std::pair<std::vector<Rational>, std::vector<Rational>> chebyshev(const Rational& c, std::size_t count) {
  std::vector<Rational> u(count), t(count);
  for (std::size_t k = 0; k < count; ++k) {
    if (k == 0) {
      u[k] = 0;
      t[k] = 1;
    } else if (k == 1) {
      u[k] = 1;
      t[k] = c;
    } else {
      u[k] = 2 * c * u[k - 1] - u[k - 2];
      t[k] = 2 * c * t[k - 1] - t[k - 2];
    }
  }
  return {u, t};
}

/// (p(E) x)(t) with ascending coefficients p, evaluated naively.
inline std::vector<Rational> shift_apply(const std::vector<Rational>& p, const std::vector<Rational>& x) {
  std::vector<Rational> out;
  if (p.empty() || x.size() < p.size()) return out;
  for (std::size_t t = 0; t + p.size() <= x.size(); ++t) {
    Rational acc = 0;
    for (std::size_t k = 0; k < p.size(); ++k) acc += p[k] * x[t + k];
    out.push_back(acc);
  }
  return out;
}

/// Taylor coefficients of num/den around z0 up to `order` (inclusive), by substituting z = z0 + u and dividing
/// power series. Coefficient k times k! is the k-th derivative at z0.
inline std::vector<Rational> taylor(const std::vector<Rational>& num, const std::vector<Rational>& den,
                                    const Rational& z0, std::size_t order) {
  const auto shift = [&](const std::vector<Rational>& p) {
    // q(u) = p(z0 + u) via repeated synthetic division.
    std::vector<Rational> c = p;
    std::vector<Rational> out;
    for (std::size_t k = 0; k < p.size(); ++k) {
      Rational rem = 0;
      std::vector<Rational> quotient(c.size() > 0 ? c.size() - 1 : 0);
      for (std::size_t i = c.size(); i-- > 0;) {
        rem = rem * z0 + c[i];
        if (i > 0) quotient[i - 1] = rem;
      }
      out.push_back(rem);
      c = quotient;
    }
    return out;
  };
  auto n = shift(num);
  auto d = shift(den);
  n.resize(order + 1, Rational(0));
  d.resize(order + 1, Rational(0));
  std::vector<Rational> f(order + 1, Rational(0));
  for (std::size_t k = 0; k <= order; ++k) {
    Rational acc = n[k];
    for (std::size_t j = 1; j <= k; ++j) acc -= d[j] * f[k - j];
    f[k] = acc / d[0];
  }
  return f;
}

inline Rational factorial(std::size_t k) {
  Rational f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= Rational(static_cast<long>(i));
  return f;
}

/// Rank of a dense rational matrix by fraction-free (Bareiss-style) elimination on scaled integer rows.
inline int rank(std::vector<std::vector<Rational>> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  int r = 0;
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(r) < rows; ++c) {
    std::size_t pivot = static_cast<std::size_t>(r);
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[static_cast<std::size_t>(r)]);
    const auto& prow = m[static_cast<std::size_t>(r)];
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == static_cast<std::size_t>(r) || m[i][c] == 0) continue;
      const Rational a = prow[c];
      const Rational b = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] = a * m[i][j] - b * prow[j];
    }
    ++r;
  }
  return r;
}

/// Wronskian rank at z0 built from Taylor expansions of the entries z^j * Y, Y = X / z.
/// full: columns z^n Y..Y then z^{n-1}..1, derivative orders 0..2n.
/// dynamics: columns z^n Y..Y, derivative orders n..2n.
inline int wronskian_rank_at(const std::vector<Rational>& num, const std::vector<Rational>& den, int n, bool full,
                             const Rational& z0) {
  // Y = num / (z * den).
  std::vector<Rational> yden(den.size() + 1, Rational(0));
  for (std::size_t i = 0; i < den.size(); ++i) yden[i + 1] = den[i];
  const std::size_t top = static_cast<std::size_t>(2 * n);
  std::vector<std::vector<Rational>> columns;  // each holds derivatives 0..2n
  for (int j = n; j >= 0; --j) {
    std::vector<Rational> shifted(static_cast<std::size_t>(j), Rational(0));
    shifted.insert(shifted.end(), num.begin(), num.end());
    auto coeffs = taylor(shifted, yden, z0, top);
    for (std::size_t k = 0; k <= top; ++k) coeffs[k] *= factorial(k);
    columns.push_back(coeffs);
  }
  if (full) {
    for (int j = n - 1; j >= 0; --j) {
      std::vector<Rational> mono(static_cast<std::size_t>(j) + 1, Rational(0));
      mono.back() = 1;
      auto coeffs = taylor(mono, {Rational(1)}, z0, top);
      for (std::size_t k = 0; k <= top; ++k) coeffs[k] *= factorial(k);
      columns.push_back(coeffs);
    }
  }
  const std::size_t first_row = full ? 0 : static_cast<std::size_t>(n);
  std::vector<std::vector<Rational>> m;
  for (std::size_t k = first_row; k <= top; ++k) {
    std::vector<Rational> row;
    for (const auto& col : columns) row.push_back(col[k]);
    m.push_back(row);
  }
  return rank(m);
}

/// Small nonzero rational with numerator and denominator bounded by `bound`.
inline Rational random_rational(std::mt19937_64& rng, int bound, bool nonzero = false) {
  std::uniform_int_distribution<int> p(-bound, bound);
  std::uniform_int_distribution<int> q(1, bound);
  for (;;) {
    Rational r(p(rng), q(rng));
    if (!nonzero || r != 0) return r;
  }
}

/// Coefficients of prod_i (z - r_i), descending-recursion form: a_k with z^n - a_1 z^{n-1} - ... - a_n.
inline std::vector<double> coefficients_from_roots(const std::vector<double>& roots) {
  std::vector<double> poly{1.0};  // descending
  for (double r : roots) {
    std::vector<double> next(poly.size() + 1, 0.0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i] += poly[i];
      next[i + 1] -= r * poly[i];
    }
    poly = next;
  }
  std::vector<double> a;
  for (std::size_t k = 1; k < poly.size(); ++k) a.push_back(-poly[k]);
  return a;
}

/// Roots in [-1.05, 1.05] with |r| >= 0.3 and pairwise separation >= 0.2.
inline std::vector<double> separated_roots(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(-1.05, 1.05);
  for (;;) {
    std::vector<double> roots;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      const double r = u(rng);
      if (std::abs(r) < 0.3) ok = false;
      for (double s : roots) {
        if (std::abs(r - s) < 0.2) ok = false;
      }
      roots.push_back(r);
    }
    if (ok) return roots;
  }
}

/// Minimal order-n sequence: sum_i c_i r_i^t with every c_i bounded away from 0.
inline std::vector<double> root_sequence(std::mt19937_64& rng, const std::vector<double>& roots, std::size_t count) {
  std::uniform_real_distribution<double> mag(0.5, 1.5);
  std::bernoulli_distribution sign(0.5);
  std::vector<double> c;
  for (std::size_t i = 0; i < roots.size(); ++i) c.push_back(sign(rng) ? mag(rng) : -mag(rng));
  std::vector<double> x(count, 0.0);
  for (std::size_t t = 0; t < count; ++t) {
    for (std::size_t i = 0; i < roots.size(); ++i) x[t] += c[i] * std::pow(roots[i], static_cast<double>(t));
  }
  return x;
}

}  // namespace oracle
