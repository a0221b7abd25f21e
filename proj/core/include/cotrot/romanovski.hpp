#pragma once

#include "cotrot/poly.hpp"

namespace cotrot {

/// Parameters of the Romanovski family R_n^{alpha,beta} attached to the
/// weight w(x) = (1+x^2)^{beta-1} exp(-alpha * arccot x).
struct RomanovskiParams {
  int n = 0;  // polynomial order, >= 0
  Rational alpha;
  Rational beta;
};

struct RomanovskiPoly {
  RomanovskiParams params;
  Poly poly;
  /// False when the leading-coefficient product vanished and the Rodrigues
  /// construction degenerated to a polynomial of degree < n.
  bool full_degree() const { return poly.degree() == params.n; }
};

/// Generates R_n = w^{-1} d^n/dx^n [(1+x^2)^n w] in exact rational
/// arithmetic. Every intermediate is kept in the closed representation
/// P(x) * (1+x^2)^k * w, using w'/w = [2(beta-1)x + alpha] / (1+x^2); each
/// derivative lowers k by one, so after n steps the weight divides out
/// exactly and the result is the pure polynomial P.
RomanovskiPoly rodrigues(const RomanovskiParams& params);

/// Residual of the hypergeometric equation
///   (1+x^2) R'' + (alpha + 2 beta x) R' - n(2 beta + n - 1) R,
/// computed exactly; the zero polynomial certifies a genuine R_n.
Poly ode_residual(const RomanovskiPoly& rp);

/// w^{alpha,beta}(x) in double precision. The arccot branch is (0, pi),
/// so arccot(cot(theta)) = theta for theta in (0, pi).
double weight_eval(double alpha, double beta, double x);

/// arccot with range (0, pi).
double arccot(double x);

}  // namespace cotrot
