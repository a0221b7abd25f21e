#include "cotrot/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace cotrot {

namespace {
const Rational kZero{};
}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly{c}; }

Poly Poly::monomial(int power, const Rational& c) {
  if (power < 0) throw std::invalid_argument("Poly::monomial: negative power");
  std::vector<Rational> v(power + 1);
  v[power] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Rational& Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[k];
}

const Rational& Poly::leading() const {
  if (is_zero()) throw std::logic_error("Poly::leading: zero polynomial");
  return coeffs_.back();
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly{};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    d[k - 1] = Rational(static_cast<long>(k)) * coeffs_[k];
  }
  return Poly(std::move(d));
}

Rational Poly::eval(const Rational& x0) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x0 + *it;
  }
  return acc;
}

double Poly::eval_real(double x0) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x0 + it->to_double();
  }
  return acc;
}

Poly Poly::operator-() const {
  std::vector<Rational> v(coeffs_.size());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) v[k] = -coeffs_[k];
  return Poly(std::move(v));
}

Poly operator+(const Poly& p, const Poly& q) {
  std::vector<Rational> v(std::max(p.coeffs_.size(), q.coeffs_.size()));
  for (std::size_t k = 0; k < v.size(); ++k) {
    v[k] = p.coeff(static_cast<int>(k)) + q.coeff(static_cast<int>(k));
  }
  return Poly(std::move(v));
}

Poly operator-(const Poly& p, const Poly& q) { return p + (-q); }

Poly operator*(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) return Poly{};
  std::vector<Rational> v(p.coeffs_.size() + q.coeffs_.size() - 1);
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    if (p.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) {
      v[i + j] += p.coeffs_[i] * q.coeffs_[j];
    }
  }
  return Poly(std::move(v));
}

Poly operator*(const Rational& c, const Poly& p) {
  std::vector<Rational> v(p.coeffs_.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = c * p.coeffs_[k];
  return Poly(std::move(v));
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    const Rational a = c.abs();
    if (k == 0) {
      os << a.str();
    } else {
      if (!(a == Rational(1))) os << a.str() << "*";
      os << "x";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

Poly poly_pow(const Poly& p, int k) {
  if (k < 0) throw std::invalid_argument("poly_pow: negative exponent");
  Poly acc = Poly::constant(1);
  for (int i = 0; i < k; ++i) acc *= p;
  return acc;
}

}  // namespace cotrot
