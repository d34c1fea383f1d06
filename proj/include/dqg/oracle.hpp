#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "dqg/graph.hpp"

namespace dqg {

// Lattice operator on interior points only. Vertex values are eliminated through
// continuity and the conservation rule: phi_v = sum of first interior neighbours / (deg v + lambda_v),
// or 0 for pinned and isolated vertices.
struct AssembledOperator {
  int dim = 0;
  Eigen::MatrixXd matrix;
  std::vector<std::vector<int>> index;  // index[e][n], -1 at n = 0 and n = N
  Eigen::MatrixXd vertex_map;           // V x dim, phi = vertex_map * interior
};

AssembledOperator assemble_operator(const ValidatedGraph& g);

struct OracleSpectrum {
  std::vector<double> lambda;  // all eigenvalues, ascending
  std::vector<double> k;       // sqrt(lambda) above the zero threshold, ascending
  Eigen::MatrixXd eigenvectors;  // columns aligned with lambda, when requested
  bool symmetric = false;
  double zero_threshold = 0.0;
};

// Eigenvalues at or below max(k_min^2, 1e-10 ||H||_inf) count as zero modes.
OracleSpectrum oracle_spectrum(const AssembledOperator& op, double k_min, bool vectors = false);

// Interior values plus eliminated vertex values on the full lattice.
LatticeFunction lift(const AssembledOperator& op, const ValidatedGraph& g, const Eigen::VectorXd& interior);

// -(1/a^2)(Psi(n-1) - 2 Psi(n) + Psi(n+1)) at interior points, 0 at edge endpoints.
LatticeFunction apply_hd(const LatticeFunction& psi, const ValidatedGraph& g);

// sum_e -(1/a_e^2) [Psi(0) Phi*(1) - Psi(1) Phi*(0) + Psi(N) Phi*(N-1) - Psi(N-1) Phi*(N)],
// which equals <H_d Psi, Phi> - <Psi, H_d Phi>.
std::complex<double> boundary_form(const LatticeFunction& psi, const LatticeFunction& phi, const ValidatedGraph& g);

}  // namespace dqg
