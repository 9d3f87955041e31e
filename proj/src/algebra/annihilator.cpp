#include "diffcast/algebra/annihilator.hpp"

#include <string>

namespace diffcast::algebra {

ForcingTerm ForcingTerm::polynomial_exponential(int degree, Rational alpha) {
  if (degree < 0) throw DomainError("forcing polynomial degree must be non-negative");
  return {Kind::PolynomialExponential, degree, std::move(alpha)};
}

ForcingTerm ForcingTerm::sinusoidal(int degree, Rational cos_omega, double /*phase*/) {
  if (degree < 0) throw DomainError("forcing polynomial degree must be non-negative");
  if (cos_omega > 1 || cos_omega < -1) {
    throw DomainError("cos(omega) = " + to_string(cos_omega) + " lies outside [-1, 1]");
  }
  return {Kind::Sinusoidal, degree, std::move(cos_omega)};
}

RationalPolynomial ForcingTerm::characteristic_factor() const {
  const auto multiplicity = static_cast<unsigned>(poly_degree + 1);
  if (kind == Kind::PolynomialExponential) {
    return RationalPolynomial{Rational(-base), Rational(1)}.pow(multiplicity);
  }
  return RationalPolynomial{Rational(1), Rational(-2 * base), Rational(1)}.pow(multiplicity);
}

RationalPolynomial annihilating_recursion(std::span<const ForcingTerm> terms) {
  if (terms.empty()) throw DomainError("annihilator needs at least one forcing term");
  RationalPolynomial acc = terms.front().characteristic_factor();
  for (const auto& term : terms.subspan(1)) acc = lcm(acc, term.characteristic_factor());
  return acc.monic();
}

}  // namespace diffcast::algebra
