#pragma once

// Reference computations used only by the tests. Each one takes a different
// route from the library code it checks.

#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

// (1 - s/2 + i ka sqrt(4 - s)/2)^n by repeated multiplication in long double.
inline std::complex<long double> g_plus_power(long double k, long double a, int n) {
  const long double s = k * k * a * a;
  std::complex<long double> g;
  if (s <= 4.0L) {
    g = {1.0L - s / 2.0L, k * a * std::sqrt(4.0L - s) / 2.0L};
  } else {
    g = {1.0L - s / 2.0L - k * a * std::sqrt(s - 4.0L) / 2.0L, 0.0L};
  }
  std::complex<long double> p = 1.0L;
  for (int m = 0; m < n; ++m) p *= g;
  return p;
}

inline std::complex<long double> g_minus_power(long double k, long double a, int n) {
  return std::complex<long double>(1.0L) / g_plus_power(k, a, n);
}

// arccos(1 - k^2 a^2 / 2) in long double.
inline long double phase_acos(long double k, long double a) { return std::acos(1.0L - k * k * a * a / 2.0L); }

// arccosh(k^2 a^2 / 2 - 1) in long double.
inline long double phase_acosh(long double k, long double a) { return std::acosh(k * k * a * a / 2.0L - 1.0L); }

// Cofactor expansion along the first row.
inline long double laplace_det(const Eigen::MatrixXd& m) {
  const auto n = m.rows();
  if (n == 1) return m(0, 0);
  long double total = 0.0L;
  for (Eigen::Index c = 0; c < n; ++c) {
    if (m(0, c) == 0.0) continue;
    Eigen::MatrixXd minor(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r) {
      Eigen::Index cc = 0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == c) continue;
        minor(r - 1, cc++) = m(r, j);
      }
    }
    total += ((c % 2 == 0) ? 1.0L : -1.0L) * m(0, c) * laplace_det(minor);
  }
  return total;
}

// Eigenvalues of a symmetric tridiagonal matrix by Sturm-sequence bisection.
inline std::vector<long double> sturm_eigenvalues(const std::vector<long double>& diag,
                                                  const std::vector<long double>& off) {
  const std::size_t n = diag.size();
  long double lo = 0.0L, hi = 0.0L;
  for (std::size_t i = 0; i < n; ++i) {
    long double r = 0.0L;
    if (i > 0) r += std::abs(off[i - 1]);
    if (i + 1 < n) r += std::abs(off[i]);
    lo = std::min(lo, diag[i] - r);
    hi = std::max(hi, diag[i] + r);
  }
  auto count_below = [&](long double x) {
    int count = 0;
    long double q = 1.0L;
    for (std::size_t i = 0; i < n; ++i) {
      const long double b2 = i > 0 ? off[i - 1] * off[i - 1] : 0.0L;
      q = diag[i] - x - (i > 0 ? b2 / q : 0.0L);
      if (q == 0.0L) q = -1e-30L;
      if (q < 0.0L) ++count;
    }
    return count;
  };
  std::vector<long double> out;
  for (std::size_t m = 0; m < n; ++m) {
    long double a = lo, b = hi;
    for (int it = 0; it < 200; ++it) {
      const long double mid = (a + b) / 2.0L;
      if (count_below(mid) > static_cast<int>(m)) {
        b = mid;
      } else {
        a = mid;
      }
    }
    out.push_back((a + b) / 2.0L);
  }
  return out;
}

// Eigenvalues k of a single chain with N intervals and step a: Dirichlet ends, or
// Neumann ends Psi(0) = Psi(1), Psi(N) = Psi(N-1).
inline std::vector<double> chain_k_sturm(int N, double a, bool neumann) {
  const long double w = 1.0L / (static_cast<long double>(a) * a);
  std::vector<long double> diag(static_cast<std::size_t>(N - 1), 2.0L * w), off(static_cast<std::size_t>(N - 2), -w);
  if (neumann) {
    diag.front() -= w;
    diag.back() -= w;
  }
  std::vector<double> ks;
  for (long double lam : sturm_eigenvalues(diag, off)) {
    if (lam > 1e-9L) ks.push_back(static_cast<double>(std::sqrt(lam)));
  }
  return ks;
}

// Continuous Neumann-leaf star: sum_j tan(k L_j).
template <typename Lengths>
double star_tan_sum(double k, const Lengths& lengths) {
  double s = 0.0;
  for (double L : lengths) s += std::tan(k * L);
  return s;
}

}  // namespace oracle
