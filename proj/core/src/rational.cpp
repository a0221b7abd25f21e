#include "cotrot/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace cotrot {

namespace {

bool valid_integer(std::string_view s, bool allow_sign) {
  if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long num, long den) : q_(num, den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (sgn(den) == 0) throw std::invalid_argument("Rational: zero denominator");
  q_ = mpq_class(num) / mpq_class(den);
}

Rational Rational::from_string(std::string_view s) {
  const auto slash = s.find('/');
  std::string_view nums = s.substr(0, slash);
  if (!valid_integer(nums, /*allow_sign=*/true)) {
    throw std::invalid_argument("Rational: malformed numerator in '" + std::string(s) + "'");
  }
  mpz_class num(std::string(nums), 10);
  if (slash == std::string_view::npos) return Rational(num, mpz_class(1));
  std::string_view dens = s.substr(slash + 1);
  if (!valid_integer(dens, /*allow_sign=*/false)) {
    throw std::invalid_argument("Rational: malformed denominator in '" + std::string(s) + "'");
  }
  mpz_class den(std::string(dens), 10);
  if (sgn(den) == 0) throw std::invalid_argument("Rational: zero denominator in '" + std::string(s) + "'");
  return Rational(num, den);
}

Rational Rational::abs() const {
  Rational r = *this;
  r.q_ = ::abs(r.q_);
  return r;
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.q_ = -r.q_;
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

std::string Rational::str() const {
  if (den() == 1) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace cotrot
