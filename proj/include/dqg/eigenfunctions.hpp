#pragma once

#include <vector>

#include <Eigen/Dense>

#include "dqg/graph.hpp"
#include "dqg/secular.hpp"

namespace dqg {

struct Residuals {
  double interior_max = 0.0;
  double continuity_max = 0.0;
  double conservation_max = 0.0;

  double max() const;
};

struct EigenResult {
  double k = 0.0;
  // F-basis coefficients Psi_e(n) = A_e F(N-n) + B_e F(n); NaN on edges where F_e(N_e) = 0.
  std::vector<double> A;
  std::vector<double> B;
  // Chebyshev-basis coefficients Psi_e(n) = alpha_e C(n) + beta_e S(n).
  std::vector<double> alpha;
  std::vector<double> beta;
  std::vector<double> vertex_values;
  LatticeFunction samples;
  Residuals residuals;
  double norm = 0.0;  // <Psi, Psi> after normalization
};

// Orthonormal basis of the numerical nullspace of M(k): right singular vectors whose singular
// value is at most null_tol times the largest. Throws EmptyNullspace when there are none.
// For the Reduced form the vectors are in the layout of assemble_conditioned().
std::vector<Eigen::VectorXd> extract_nullspace(double k, const ValidatedGraph& g,
                                               SecularForm form = SecularForm::Reduced, double null_tol = 1e-8);

// Samples the eigenfunction, measures residuals relative to ||Psi||_inf, normalizes to
// <Psi, Psi> = 1 and fixes the sign. Throws ResidualExceeded when a residual is above tol.
EigenResult reconstruct(const Eigen::VectorXd& coeffs, double k, const ValidatedGraph& g,
                        SecularForm form = SecularForm::Reduced, double tol = 1e-9);

// One result per nullspace vector at k.
std::vector<EigenResult> eigenmodes(double k, const ValidatedGraph& g, double null_tol = 1e-8, double tol = 1e-9);

// Residuals of an arbitrary lattice function with vertex values taken from edge endpoints.
Residuals measure_residuals(double k, const LatticeFunction& psi, const std::vector<double>& vertex_values,
                            const ValidatedGraph& g);

}  // namespace dqg
