#include "cotrot/romanovski.hpp"

#include <cmath>
#include <stdexcept>

namespace cotrot {

RomanovskiPoly rodrigues(const RomanovskiParams& params) {
  if (params.n < 0) throw std::invalid_argument("rodrigues: n must be >= 0");
  const Poly one_plus_x2{Rational(1), Rational(0), Rational(1)};
  Poly p = Poly::constant(1);
  // Invariant: current expression equals P(x) * (1+x^2)^k * w(x).
  // d/dx [P (1+x^2)^k w] = [P'(1+x^2) + ((2k + 2beta - 2)x + alpha) P]
  //                        * (1+x^2)^{k-1} w
  for (int k = params.n; k >= 1; --k) {
    const Poly drift{params.alpha, Rational(2L * k) + Rational(2) * params.beta - Rational(2)};
    p = p.derivative() * one_plus_x2 + drift * p;
  }
  return RomanovskiPoly{params, std::move(p)};
}

Poly ode_residual(const RomanovskiPoly& rp) {
  const Poly one_plus_x2{Rational(1), Rational(0), Rational(1)};
  const Poly first_order{rp.params.alpha, Rational(2) * rp.params.beta};
  const Rational eigen =
      Rational(rp.params.n) * (Rational(2) * rp.params.beta + Rational(rp.params.n - 1));
  const Poly d1 = rp.poly.derivative();
  return one_plus_x2 * d1.derivative() + first_order * d1 - eigen * rp.poly;
}

double arccot(double x) { return std::atan2(1.0, x); }

double weight_eval(double alpha, double beta, double x) {
  return std::pow(1.0 + x * x, beta - 1.0) * std::exp(-alpha * arccot(x));
}

}  // namespace cotrot
