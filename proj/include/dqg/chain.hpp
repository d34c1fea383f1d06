#pragma once

#include <complex>
#include <span>
#include <vector>

#include "dqg/graph.hpp"

namespace dqg {

enum class Boundary { Dirichlet, Neumann };

struct ChainProblem {
  double length = 1.0;
  int points = 10;
  Boundary boundary = Boundary::Dirichlet;

  double step() const { return length / points; }
};

struct ChainEigenvalue {
  int m = 0;
  double k = 0.0;
  bool trivial = false;  // the Neumann constant mode
};

// A g_+^n + B g_-^n.
std::complex<double> evaluate_exact_solution(double k, double a, std::complex<double> A,
                                             std::complex<double> B, int n);

// k_m = (2/a) sin(pi m / 2N), m = 1..N-1.
std::vector<double> dirichlet_eigenvalues(const ChainProblem& p);

// m = 0 (trivial) followed by k_m = (2/a) sin(pi m / 2(N-1)), m = 1..N-2.
std::vector<ChainEigenvalue> neumann_eigenvalues(const ChainProblem& p);

// Nonzero eigenvalues for the problem's boundary, ascending.
std::vector<double> chain_eigenvalues(const ChainProblem& p);

// |k_m(a) - pi m / L| for each step (Dirichlet chain).
std::vector<double> continuum_limit_error(int m, double length, std::span<const double> steps);

// Two-vertex graph for the problem: pinned ends for Dirichlet, Kirchhoff ends for Neumann.
GraphSpec chain_graph(const ChainProblem& p);

void check_chain(const ChainProblem& p);

}  // namespace dqg
