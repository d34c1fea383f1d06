#pragma once

#include <vector>

#include <Eigen/Dense>

#include "dqg/graph.hpp"

namespace dqg {

// Full: the matrix in the F basis, Psi_e(n) = A F(N-n) + B F(n).
// Reduced: Psi_e(n) = alpha C(n) + beta S(n). The two determinants differ by
// the factor prod_e F_e(N_e) F_e(1), so Full also vanishes wherever some
// F_e(N_e) = 0 even though no eigenfunction exists there.
enum class SecularForm { Full, Reduced };

const char* to_string(SecularForm form);

// Column layout [phi_1..phi_V | A_e (or alpha_e) | B_e (or beta_e)];
// rows [continuity at i per edge | continuity at j per edge | vertex rows].
// A vertex row is the conservation rule, or phi_v = 0 for pinned and isolated vertices.
struct SecularLayout {
  int vertices;
  int edges;

  int size() const { return 2 * edges + vertices; }
  int phi(int v) const { return v - 1; }
  int a(int e) const { return vertices + e; }
  int b(int e) const { return vertices + edges + e; }
  int start_row(int e) const { return e; }
  int end_row(int e) const { return edges + e; }
  int vertex_row(int v) const { return 2 * edges + v - 1; }
};

SecularLayout layout_of(const ValidatedGraph& g);

// Throws DegenerateBasis for the Full form when k a_e = 2 on some edge.
Eigen::MatrixXd assemble_secular(double k, const ValidatedGraph& g, SecularForm form = SecularForm::Full);

// The Reduced form with every edge where uses_modes() holds spanned by D(N - n), D(n)
// instead of C(n), S(n). Same nullity as Reduced but well conditioned above 2/a_e;
// its determinant is not continuous in k, so it is only used for rank decisions.
Eigen::MatrixXd assemble_conditioned(double k, const ValidatedGraph& g);
bool uses_modes(double k, const EdgeSpec& edge);

// For Reduced: det M(k) times prod over hyperbolic edges of e^(-N theta), which keeps the
// zeros and signs of det M(k) while avoiding its exponential growth above 2/a_e.
double secular_determinant(double k, const ValidatedGraph& g, SecularForm form = SecularForm::Full);

// Points 2/a_e where the Full form loses columns, ascending and unique.
std::vector<double> degenerate_points(const ValidatedGraph& g);

// Each row scaled by a power of two to unit max-abs entry; the nullspace is unchanged.
Eigen::MatrixXd row_balanced(const Eigen::MatrixXd& m);

// Smallest over largest singular value, after row balancing.
double singularity_ratio(const Eigen::MatrixXd& m);

// Number of singular values at or below tol times the largest one, after row balancing.
int numerical_nullity(const Eigen::MatrixXd& m, double tol);

// Total lattice phase sum_e N_e (phi_e + theta_e); increasing in k.
double lattice_phase(double k, const ValidatedGraph& g);

}  // namespace dqg
