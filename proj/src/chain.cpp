#include "dqg/chain.hpp"

#include <cmath>

#include "dqg/basis.hpp"

namespace dqg {

void check_chain(const ChainProblem& p) {
  if (!(p.length > 0.0) || !std::isfinite(p.length)) throw InvalidConfig("chain length must be positive");
  if (p.points < 2) throw InvalidConfig("chain needs at least 2 intervals");
}

std::complex<double> evaluate_exact_solution(double k, double a, std::complex<double> A,
                                             std::complex<double> B, int n) {
  const EdgeBasis b(k, a);
  return A * b.g_plus_pow(n) + B * b.g_minus_pow(n);
}

std::vector<double> dirichlet_eigenvalues(const ChainProblem& p) {
  check_chain(p);
  const double a = p.step();
  std::vector<double> ks;
  for (int m = 1; m < p.points; ++m) {
    ks.push_back(2.0 / a * std::sin(M_PI * m / (2.0 * p.points)));
  }
  return ks;
}

std::vector<ChainEigenvalue> neumann_eigenvalues(const ChainProblem& p) {
  check_chain(p);
  const double a = p.step();
  std::vector<ChainEigenvalue> ks{{0, 0.0, true}};
  for (int m = 1; m <= p.points - 2; ++m) {
    ks.push_back({m, 2.0 / a * std::sin(M_PI * m / (2.0 * (p.points - 1))), false});
  }
  return ks;
}

std::vector<double> chain_eigenvalues(const ChainProblem& p) {
  if (p.boundary == Boundary::Dirichlet) return dirichlet_eigenvalues(p);
  std::vector<double> ks;
  for (const auto& e : neumann_eigenvalues(p)) {
    if (!e.trivial) ks.push_back(e.k);
  }
  return ks;
}

std::vector<double> continuum_limit_error(int m, double length, std::span<const double> steps) {
  std::vector<double> errors;
  for (double a : steps) {
    const int n = intervals_for(length, a);
    if (m == 0) {
      errors.push_back(0.0);
      continue;
    }
    if (m < 0 || m >= n) throw InvalidConfig("mode " + std::to_string(m) + " does not exist for N=" + std::to_string(n));
    const auto ks = dirichlet_eigenvalues({length, n, Boundary::Dirichlet});
    errors.push_back(std::abs(ks[static_cast<std::size_t>(m - 1)] - M_PI * m / length));
  }
  return errors;
}

GraphSpec chain_graph(const ChainProblem& p) {
  check_chain(p);
  return chain_spec(p.length, p.points, p.boundary == Boundary::Dirichlet);
}

}  // namespace dqg
