#pragma once

#include <span>
#include <vector>

#include "diffcast/algebra/polynomial.hpp"

namespace diffcast::algebra {

/**
 * One forcing term of an inhomogeneous recursion: either w(t) alpha^t or
 * w(t) sin(omega t + phi), with w a polynomial of degree `poly_degree`.
 *
 * Sinusoids are described by cos(omega) as an exact rational. The phase is
 * irrelevant to the annihilator and is not stored.
 */
struct ForcingTerm {
  enum class Kind { PolynomialExponential, Sinusoidal };

  Kind kind = Kind::PolynomialExponential;
  int poly_degree = 0;
  /// alpha for PolynomialExponential, cos(omega) for Sinusoidal.
  Rational base = 1;

  static ForcingTerm polynomial_exponential(int degree, Rational alpha);
  static ForcingTerm sinusoidal(int degree, Rational cos_omega, double phase = 0.0);

  /// (z - alpha)^{d+1} or (z^2 - 2 cos(omega) z + 1)^{d+1}.
  RationalPolynomial characteristic_factor() const;
};

/// Monic lcm of the characteristic factors of every term.
RationalPolynomial annihilating_recursion(std::span<const ForcingTerm> terms);

/// (p(E) x)(t) = sum_k p_k x(t+k), for every t where the window fits.
template <typename Scalar, typename Coeff>
std::vector<Scalar> apply_shift_operator(const Polynomial<Coeff>& p, std::span<const Scalar> sequence) {
  const int deg = p.degree();
  if (deg < 0 || static_cast<int>(sequence.size()) <= deg) return {};
  std::vector<Scalar> out(sequence.size() - static_cast<std::size_t>(deg), Scalar(0));
  for (std::size_t t = 0; t < out.size(); ++t) {
    for (int k = 0; k <= deg; ++k) {
      out[t] += static_cast<Scalar>(p.coefficient(k)) * sequence[t + static_cast<std::size_t>(k)];
    }
  }
  return out;
}

}  // namespace diffcast::algebra
