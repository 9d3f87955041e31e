#include "diffcast/algebra/generating_function.hpp"

#include <string>

namespace diffcast::algebra {

std::vector<Rational> Recursion::terms(std::size_t count) const {
  const std::size_t n = order();
  std::vector<Rational> x(initials.begin(), initials.begin() + static_cast<std::ptrdiff_t>(std::min(n, count)));
  while (x.size() < count) {
    Rational next = 0;
    for (std::size_t i = 0; i < n; ++i) next += coefficients[i] * x[x.size() - 1 - i];
    x.push_back(std::move(next));
  }
  return x;
}

RationalPolynomial characteristic_polynomial(std::span<const Rational> coefficients) {
  const std::size_t n = coefficients.size();
  std::vector<Rational> q(n + 1);
  q[n] = 1;
  for (std::size_t k = 1; k <= n; ++k) q[n - k] = -coefficients[k - 1];
  return RationalPolynomial(std::move(q));
}

std::vector<Rational> recursion_coefficients(const RationalPolynomial& characteristic) {
  if (characteristic.is_zero() || characteristic.leading() != 1) {
    throw DomainError("characteristic polynomial must be monic");
  }
  const int n = characteristic.degree();
  std::vector<Rational> a(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) a[static_cast<std::size_t>(k - 1)] = -characteristic.coefficient(n - k);
  return a;
}

RationalFunctionQ recursion_to_generating_function(std::span<const Rational> coefficients,
                                                   std::span<const Rational> initials) {
  const std::size_t n = coefficients.size();
  if (initials.size() != n) {
    throw DomainError("recursion of order " + std::to_string(n) + " needs exactly " + std::to_string(n) +
                      " initial conditions, got " + std::to_string(initials.size()));
  }
  // P(z) = sum_{k=0}^{n-1} c_k z^{n-k} (x(0) + x(1) z^{-1} + ... + x(n-k-1) z^{-(n-k-1)}),
  // c_0 = 1, c_k = -a_k.
  std::vector<Rational> p(n + 1, Rational(0));
  for (std::size_t k = 0; k < n; ++k) {
    const Rational c = k == 0 ? Rational(1) : Rational(-coefficients[k - 1]);
    for (std::size_t j = 0; j + k < n; ++j) p[n - k - j] += c * initials[j];
  }
  return RationalFunctionQ(RationalPolynomial(std::move(p)), characteristic_polynomial(coefficients));
}

Recursion generating_function_to_recursion(const RationalFunctionQ& x) {
  if (!x.is_proper()) {
    throw DomainError("generating function " + to_string(x) +
                      " is improper; it is not the transform of a sequence starting at t = 0");
  }
  if (x.is_zero()) return {};
  const int extra = x.numerator().coefficient(0) == 0 ? 0 : 1;
  const RationalPolynomial q = x.denominator().shifted_up(extra);
  Recursion r;
  r.coefficients = recursion_coefficients(q);
  r.initials = x.series(r.coefficients.size());
  return r;
}

RationalFunctionQ shifted_transform(const RationalFunctionQ& x) {
  return RationalFunctionQ(x.numerator(), x.denominator().shifted_up(1));
}

}  // namespace diffcast::algebra
