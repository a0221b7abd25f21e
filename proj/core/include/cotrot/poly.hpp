#pragma once

#include <span>
#include <string>
#include <vector>

#include "cotrot/rational.hpp"

namespace cotrot {

/// Univariate polynomial over Rational, stored densely by ascending power.
///
/// Canonical form: no trailing zero coefficient; the zero polynomial has an
/// empty coefficient vector and degree() == kNegInfinity. All operations are
/// exact and return canonical results, so operator== is structural equality.
class Poly {
 public:
  /// Degree marker for the zero polynomial ("minus infinity").
  static constexpr int kNegInfinity = -1;

  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs);

  static Poly constant(const Rational& c);
  static Poly monomial(int power, const Rational& c);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of x^k; zero outside the stored range.
  const Rational& coeff(int k) const;
  const Rational& leading() const;  // throws on the zero polynomial
  std::span<const Rational> coeffs() const { return coeffs_; }

  Poly derivative() const;
  Rational eval(const Rational& x0) const;
  double eval_real(double x0) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& p, const Poly& q);
  friend Poly operator-(const Poly& p, const Poly& q);
  friend Poly operator*(const Poly& p, const Poly& q);
  friend Poly operator*(const Rational& c, const Poly& p);
  friend Poly operator*(const Poly& p, const Rational& c) { return c * p; }
  Poly& operator+=(const Poly& q) { return *this = *this + q; }
  Poly& operator-=(const Poly& q) { return *this = *this - q; }
  Poly& operator*=(const Poly& q) { return *this = *this * q; }

  friend bool operator==(const Poly& p, const Poly& q) { return p.coeffs_ == q.coeffs_; }

  /// Diagnostic form, e.g. "2*x^2 - 16/5*x + 1".
  std::string str() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// p^k by repeated multiplication (k >= 0).
Poly poly_pow(const Poly& p, int k);

}  // namespace cotrot
