#pragma once

#include <string>
#include <utility>
#include <vector>

#include "diffcast/algebra/polynomial.hpp"

namespace diffcast::algebra {

/**
 * Ratio of polynomials kept in canonical form: numerator and denominator
 * coprime, denominator monic. The zero function is 0/1.
 */
template <typename Scalar>
class RationalFunction {
 public:
  using polynomial_type = Polynomial<Scalar>;

  RationalFunction() : den_(polynomial_type::constant(Scalar(1))) {}

  /* implicit */ RationalFunction(polynomial_type p)
      : num_(std::move(p)), den_(polynomial_type::constant(Scalar(1))) {}

  RationalFunction(polynomial_type numerator, polynomial_type denominator)
      : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    reduce();
  }

  const polynomial_type& numerator() const noexcept { return num_; }
  const polynomial_type& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  /// deg numerator <= deg denominator.
  bool is_proper() const noexcept { return num_.degree() <= den_.degree(); }
  bool is_strictly_proper() const noexcept { return num_.degree() < den_.degree(); }

  bool is_pole(const Scalar& z) const { return den_(z) == Scalar(0); }

  Scalar operator()(const Scalar& z) const {
    const Scalar d = den_(z);
    if (d == Scalar(0)) throw EvaluationError("evaluation at a pole");
    return num_(z) / d;
  }

  /// Quotient rule, reduced.
  RationalFunction derivative() const {
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
  }

  RationalFunction nth_derivative(int order) const {
    RationalFunction r = *this;
    for (int k = 0; k < order; ++k) r = r.derivative();
    return r;
  }

  /**
   * Coefficients x(0), x(1), ... of the expansion sum_t x(t) z^{-t} of a proper
   * function (the one-sided Z-transform convention).
   */
  std::vector<Scalar> series(std::size_t count) const {
    if (!is_proper()) throw DomainError("power series in 1/z requires a proper rational function");
    const int m = den_.degree();
    std::vector<Scalar> x(count, Scalar(0));
    for (std::size_t j = 0; j < count; ++j) {
      const int jj = static_cast<int>(j);
      Scalar v = num_.coefficient(m - jj);
      for (int i = 1; i <= std::min(jj, m); ++i) v -= den_.coefficient(m - i) * x[j - static_cast<std::size_t>(i)];
      x[j] = std::move(v);
    }
    return x;
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw DomainError("rational function division by zero");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  void reduce() {
    if (num_.is_zero()) {
      den_ = polynomial_type::constant(Scalar(1));
      return;
    }
    const polynomial_type g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
    const Scalar lead = den_.leading();
    if (lead != Scalar(1)) {
      num_ = num_ / lead;
      den_ = den_ / lead;
    }
  }

  polynomial_type num_;
  polynomial_type den_;
};

using RationalFunctionQ = RationalFunction<Rational>;

template <typename Scalar>
std::string to_string(const RationalFunction<Scalar>& f, const std::string& var = "z") {
  if (f.denominator().degree() == 0) return to_string(f.numerator(), var);
  return "(" + to_string(f.numerator(), var) + ")/(" + to_string(f.denominator(), var) + ")";
}

}  // namespace diffcast::algebra
