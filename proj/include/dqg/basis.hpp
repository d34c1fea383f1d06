#pragma once

#include <complex>

namespace dqg {

enum class Regime { Oscillatory, Hyperbolic, Degenerate };

struct GrowthFactors {
  std::complex<double> plus;
  std::complex<double> minus;
};

// Roots of g^2 - (2 - k^2 a^2) g + 1 = 0, with g_+ = 1 - s/2 + i ka sqrt(4 - s)/2
// (principal square root, so g_+ = -e^theta in the hyperbolic regime).
GrowthFactors growth_factors(double k, double a);

// Per-edge basis at wavenumber k. With s = k^2 a^2:
//   Oscillatory (s < 4): phase = 2 asin(ka/2), F(n) = sin(n phase)
//   Hyperbolic  (s > 4): phase = 2 acosh(ka/2), F(n) = (-1)^n sinh(n phase)
//   Degenerate  (s = 4): F = 0
// f(n) = g_+^n - g_-^n equals 2i F(n), resp. 2 F(n).
//
// C(n) = T_n(x), S(n) = U_{n-1}(x) with x = 1 - s/2 form a second real basis of
// the same recurrence that stays independent at every k.
class EdgeBasis {
 public:
  EdgeBasis(double k, double a);

  Regime regime() const { return regime_; }
  double k() const { return k_; }
  double step() const { return a_; }
  double s() const { return s_; }
  double x() const { return 1.0 - 0.5 * s_; }
  double phase() const { return phase_; }
  bool zero_energy() const { return k_ == 0.0; }

  double F(int n) const;

  // g_+^n and g_-^n evaluated in polar / exponential form.
  std::complex<double> g_plus_pow(int n) const;
  std::complex<double> g_minus_pow(int n) const;

  // Hyperbolic regime: D(n) = g_-^n = (-1)^n e^(-n phase). D(N - n) and D(n) span the
  // same solutions as C and S, and stay well conditioned once N phase is large.
  double D(int n) const;
  bool prefers_modes(int N) const { return regime_ == Regime::Hyperbolic && N * phase_ >= 1.0; }

  double C(int n) const;
  double S(int n) const;
  // C(n) - C(n-1) and S(n) - S(n-1), without cancellation.
  double C_step(int n) const;
  double S_step(int n) const;

 private:
  bool near_band_edge() const;
  void recurrence(int n, long double& c, long double& s, long double& c_prev, long double& s_prev) const;

  double k_;
  double a_;
  double s_;
  double phase_ = 0.0;
  Regime regime_;
};

inline EdgeBasis edge_basis(double k, double a) { return EdgeBasis(k, a); }

}  // namespace dqg
