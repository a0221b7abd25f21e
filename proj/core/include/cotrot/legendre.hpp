#pragma once

#include "cotrot/poly.hpp"

namespace cotrot {

/// Associated Legendre function P_l^{|m|}(theta) = sin^{|m|}theta * polypart(cos theta).
///
/// Positive-phase convention (no Condon-Shortley factor): P_1^1 = +sin theta.
/// The function itself is unnormalized; normalization constants live in
/// spherical_harmonic_abs.
struct AssocLegendre {
  int l = 0;
  int m = 0;      // stored as |m|
  Poly polypart;  // in c = cos theta, degree l - |m|
  int sinpower = 0;
};

/// Legendre polynomial P_l(c), exact coefficients via the three-term recurrence.
Poly legendre_poly(int l);

/// polypart = d^{|m|}/dc^{|m|} P_l(c). Throws std::invalid_argument on |m| > l.
AssocLegendre assoc_legendre(int l, int m);

double eval_assoc_legendre(const AssocLegendre& p, double theta);

/// N_lm = sqrt((2l+1)(l-|m|)! / (4 pi (l+|m|)!)).
double sph_norm_constant(int l, int m);

/// |Y_l^m(theta, .)| = N_lm |P_l^{|m|}(theta)|; phi-independent.
double spherical_harmonic_abs(int l, int m, double theta);

}  // namespace cotrot
