#include "cotrot/legendre.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>

namespace cotrot {

Poly legendre_poly(int l) {
  if (l < 0) throw std::invalid_argument("legendre_poly: l must be >= 0");
  Poly pm1 = Poly::constant(1);      // P_0
  if (l == 0) return pm1;
  Poly p = Poly{Rational(0), Rational(1)};  // P_1 = c
  for (int k = 2; k <= l; ++k) {
    // k P_k = (2k-1) c P_{k-1} - (k-1) P_{k-2}
    Poly next = Rational(2L * k - 1, k) * (Poly{Rational(0), Rational(1)} * p) -
                Rational(k - 1, k) * pm1;
    pm1 = std::move(p);
    p = std::move(next);
  }
  return p;
}

AssocLegendre assoc_legendre(int l, int m) {
  const int am = std::abs(m);
  if (l < 0 || am > l) throw std::invalid_argument("assoc_legendre: need 0 <= |m| <= l");
  Poly q = legendre_poly(l);
  for (int k = 0; k < am; ++k) q = q.derivative();
  return AssocLegendre{l, am, std::move(q), am};
}

double eval_assoc_legendre(const AssocLegendre& p, double theta) {
  const double s = std::sin(theta);
  double spow = 1.0;
  for (int k = 0; k < p.sinpower; ++k) spow *= s;
  return spow * p.polypart.eval_real(std::cos(theta));
}

double sph_norm_constant(int l, int m) {
  const int am = std::abs(m);
  if (am > l) throw std::invalid_argument("sph_norm_constant: need |m| <= l");
  // (l+|m|)! / (l-|m|)! as a running product keeps everything in range
  // for the l used here.
  double ratio = 1.0;
  for (int j = l - am + 1; j <= l + am; ++j) ratio *= j;
  return std::sqrt((2.0 * l + 1.0) / (4.0 * std::numbers::pi * ratio));
}

double spherical_harmonic_abs(int l, int m, double theta) {
  return sph_norm_constant(l, m) * std::fabs(eval_assoc_legendre(assoc_legendre(l, m), theta));
}

}  // namespace cotrot
