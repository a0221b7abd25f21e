#pragma once

#include <map>
#include <vector>

#include "cotrot/legendre.hpp"
#include "cotrot/romanovski.hpp"

namespace cotrot {

/// Quantum labels of one hindered-rotator state: principal number t,
/// azimuthal separation root mtilde with |mtilde| <= t, and the cotangent
/// coupling b. The polynomial order is n = t - |mtilde|.
struct RotatorMode {
  int t = 0;
  int mtilde = 0;
  Rational b;

  int abs_m() const;
  int n() const { return t - abs_m(); }
  void validate() const;  // throws std::invalid_argument on |mtilde| > t or t < 0
};

/// Effective 1D potential parameters after the U = F*sqrt(sin) substitution:
/// coupling = mbar(mbar+1) with mbar = |mtilde| - 1/2. mtilde = 0 is admitted
/// (coupling -1/4, the critical inverse-square strength).
struct RosenMorseParams {
  Rational mbar;
  Rational b;
  Rational coupling;
};
RosenMorseParams rosen_morse_params(const RotatorMode& mode);

struct SpectrumEntry {
  int t = 0;
  Rational b;
  Rational epsilon;    // t(t+1) - b^2 / (t(t+1) + 1/4), exact
  int degeneracy = 1;  // 2t+1
};

struct ModeParams {
  int n = 0;
  Rational alpha;  // 2b / (t + 1/2)
  Rational beta;   // 1/2 - t
};

ModeParams params(const RotatorMode& mode);

SpectrumEntry energy(int t, const Rational& b);

/// E_t - E_{t-1} = 2t + 2 t b^2 / (t^2 - 1/4)^2, exact. Throws on t < 1.
Rational splitting(int t, const Rational& b);

/// Eigenvalue of the L^2 power-series Hamiltonian on spherical harmonics:
/// l(l+1) - b^2 / (l(l+1) + 1/4). Identical to energy(l, b).epsilon by
/// construction; the eigenfunctions are what differ.
Rational algebraic_energy(int l, const Rational& b);

/// Exact expansion of sin^t(theta) * rpoly(cot theta) over the associated
/// Legendre basis {P_t^k}, k = |mtilde|..t. Coefficients are raw (no
/// normalization, no sign fix applied).
struct Decomposition {
  int t = 0;
  int mtilde = 0;
  Rational b;
  std::map<int, Rational> coeffs;  // exactly the keys |mtilde|..t
};

Decomposition decompose(const RotatorMode& mode);

/// Normalized polar wavefunction
///   U(theta) = norm * signfix * sin^{t+1/2}theta e^{-b theta/(t+1/2)} rpoly(cot theta)
/// with int_0^pi U^2 dtheta = 1, and F = U / sqrt(sin theta). Evaluation uses
/// the cot-free form sin^t(theta) rpoly(cot theta) = sum_j a_j cos^j sin^{t-j},
/// stable at the endpoints. signfix makes the decomposition coefficient of
/// P_t^{|mtilde|} positive; that coefficient is independent of b and nonzero,
/// so the convention is deterministic and matches the free limit b -> 0.
class Wavefunction {
 public:
  const RotatorMode& mode() const { return mode_; }
  const Rational& alpha() const { return alpha_; }
  const Rational& beta() const { return beta_; }
  const Poly& rpoly() const { return rpoly_; }
  double norm() const { return norm_; }
  int signfix() const { return signfix_; }

  double eval_U(double theta) const;
  double eval_F(double theta) const;

 private:
  friend Wavefunction build_U(const RotatorMode& mode);
  double angular(double theta) const;  // sin^t * rpoly(cot), endpoint-safe

  RotatorMode mode_;
  Rational alpha_;
  Rational beta_;
  Poly rpoly_;
  std::vector<double> acoef_;
  double damp_rate_ = 0.0;  // b / (t + 1/2)
  double norm_ = 1.0;
  int signfix_ = 1;
};

Wavefunction build_U(const RotatorMode& mode);

/// e^{-b theta / (t + 1/2)}.
double damping_factor(int t, const Rational& b, double theta);

/// |Ytilde_t^m| = damping_factor * N_tm |P_t^{|m|}(theta)|; reduces to
/// spherical_harmonic_abs at b = 0.
double damped_harmonic(int t, int m, const Rational& b, double theta);

}  // namespace cotrot
