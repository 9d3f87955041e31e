#pragma once

#include <span>
#include <vector>

#include "diffcast/algebra/rational_function.hpp"

namespace diffcast::algebra {

/// x(t+n) = a_1 x(t+n-1) + ... + a_n x(t) for t >= 0, with x(0..n-1) given.
struct Recursion {
  std::vector<Rational> coefficients;
  std::vector<Rational> initials;

  std::size_t order() const noexcept { return coefficients.size(); }

  /// First `count` terms of the sequence.
  std::vector<Rational> terms(std::size_t count) const;

  friend bool operator==(const Recursion&, const Recursion&) = default;
};

/// z^n - a_1 z^{n-1} - ... - a_n.
RationalPolynomial characteristic_polynomial(std::span<const Rational> coefficients);

/// Inverse of characteristic_polynomial for a monic polynomial of degree n.
std::vector<Rational> recursion_coefficients(const RationalPolynomial& characteristic);

/**
 * Z-transform X(z) = sum_t x(t) z^{-t} of the sequence generated by the
 * recursion, reduced to lowest terms. Multiplying the recursion by z^k for
 * each shift and collecting terms gives X = P/Q with Q the characteristic
 * polynomial and P of degree <= n with no constant term.
 */
RationalFunctionQ recursion_to_generating_function(std::span<const Rational> coefficients,
                                                   std::span<const Rational> initials);

inline RationalFunctionQ recursion_to_generating_function(const Recursion& r) {
  return recursion_to_generating_function(r.coefficients, r.initials);
}

/**
 * Minimal recursion (valid from t = 0) whose generating function is X.
 *
 * The order is the degree of the reduced denominator when the numerator has
 * no constant term (always the case for transforms produced above); otherwise
 * one more, since the recursion must also hold at t = 0. Initial conditions
 * come from the expansion of X in 1/z. The zero function gives order 0.
 */
Recursion generating_function_to_recursion(const RationalFunctionQ& x);

/// Strictly proper companion z^{-1} X = sum_t x(t) z^{-t-1}.
RationalFunctionQ shifted_transform(const RationalFunctionQ& x);

}  // namespace diffcast::algebra
