#include "dqg/basis.hpp"

#include <cmath>

namespace dqg {

namespace {

// Switch to the Chebyshev recurrence when the closed forms divide by something this small.
constexpr double kEdgeGuard = 1e-6;

double parity(int n) { return (n % 2 == 0) ? 1.0 : -1.0; }

}  // namespace

GrowthFactors growth_factors(double k, double a) {
  const EdgeBasis b(k, a);
  return {b.g_plus_pow(1), b.g_minus_pow(1)};
}

EdgeBasis::EdgeBasis(double k, double a) : k_(k), a_(a), s_(k * k * a * a) {
  const double h = 0.5 * std::abs(k) * a;
  if (h < 1.0) {
    regime_ = Regime::Oscillatory;
    phase_ = 2.0 * std::asin(h);
  } else if (h > 1.0) {
    regime_ = Regime::Hyperbolic;
    phase_ = 2.0 * std::acosh(h);
  } else {
    regime_ = Regime::Degenerate;
    phase_ = M_PI;
  }
}

double EdgeBasis::F(int n) const {
  switch (regime_) {
    case Regime::Oscillatory: return std::sin(n * phase_);
    case Regime::Hyperbolic: return parity(n) * std::sinh(n * phase_);
    case Regime::Degenerate: return 0.0;
  }
  return 0.0;
}

double EdgeBasis::D(int n) const { return parity(n) * std::exp(-n * phase_); }

std::complex<double> EdgeBasis::g_plus_pow(int n) const {
  if (regime_ == Regime::Hyperbolic) return parity(n) * std::exp(n * phase_);
  if (regime_ == Regime::Degenerate) return parity(n);
  return std::polar(1.0, n * phase_);
}

std::complex<double> EdgeBasis::g_minus_pow(int n) const {
  if (regime_ == Regime::Hyperbolic) return parity(n) * std::exp(-n * phase_);
  if (regime_ == Regime::Degenerate) return parity(n);
  return std::polar(1.0, -n * phase_);
}

bool EdgeBasis::near_band_edge() const {
  if (regime_ == Regime::Degenerate || k_ == 0.0) return true;
  if (regime_ == Regime::Oscillatory) return std::cos(0.5 * phase_) < kEdgeGuard || std::sin(0.5 * phase_) < kEdgeGuard;
  return std::sinh(0.5 * phase_) < kEdgeGuard;
}

void EdgeBasis::recurrence(int n, long double& c, long double& s, long double& c_prev,
                           long double& s_prev) const {
  const long double x = 1.0L - 0.5L * static_cast<long double>(k_) * k_ * a_ * a_;
  c_prev = 1.0L;
  s_prev = 0.0L;
  c = x;
  s = 1.0L;
  if (n == 0) {
    c = 1.0L;
    s = 0.0L;
    c_prev = x;
    s_prev = -1.0L;
    return;
  }
  for (int m = 1; m < n; ++m) {
    const long double c_next = 2.0L * x * c - c_prev;
    const long double s_next = 2.0L * x * s - s_prev;
    c_prev = c;
    s_prev = s;
    c = c_next;
    s = s_next;
  }
}

double EdgeBasis::C(int n) const {
  if (near_band_edge()) {
    long double c, s, cp, sp;
    recurrence(n, c, s, cp, sp);
    return static_cast<double>(c);
  }
  if (regime_ == Regime::Oscillatory) return std::cos(n * phase_);
  return parity(n) * std::cosh(n * phase_);
}

double EdgeBasis::S(int n) const {
  if (near_band_edge()) {
    long double c, s, cp, sp;
    recurrence(n, c, s, cp, sp);
    return static_cast<double>(s);
  }
  if (regime_ == Regime::Oscillatory) {
    return std::sin(n * phase_) / (2.0 * std::sin(0.5 * phase_) * std::cos(0.5 * phase_));
  }
  return -parity(n) * std::sinh(n * phase_) / std::sinh(phase_);
}

double EdgeBasis::C_step(int n) const {
  if (near_band_edge()) {
    long double c, s, cp, sp;
    recurrence(n, c, s, cp, sp);
    return static_cast<double>(c - cp);
  }
  const double half = 0.5 * (2 * n - 1) * phase_;
  if (regime_ == Regime::Oscillatory) return -2.0 * std::sin(half) * std::sin(0.5 * phase_);
  return parity(n) * 2.0 * std::cosh(half) * std::cosh(0.5 * phase_);
}

double EdgeBasis::S_step(int n) const {
  if (near_band_edge()) {
    long double c, s, cp, sp;
    recurrence(n, c, s, cp, sp);
    return static_cast<double>(s - sp);
  }
  const double half = 0.5 * (2 * n - 1) * phase_;
  if (regime_ == Regime::Oscillatory) return std::cos(half) / std::cos(0.5 * phase_);
  return -parity(n) * std::sinh(half) / std::sinh(0.5 * phase_);
}

}  // namespace dqg
