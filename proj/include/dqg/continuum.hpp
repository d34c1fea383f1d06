#pragma once

#include <Eigen/Dense>

#include "dqg/graph.hpp"
#include "dqg/rootfind.hpp"
#include "dqg/secular.hpp"

namespace dqg {

// Continuous metric graph on the same edges (lengths only; lattice sizes are ignored).
// Full: Psi_e(x) = A sin(k(L-x)) + B sin(kx). Reduced: Psi_e(x) = alpha cos(kx) + beta sin(kx)/k.
// Same row and column layout as the discrete secular matrix.
Eigen::MatrixXd assemble_continuous(double k, const ValidatedGraph& g, SecularForm form = SecularForm::Full);

double continuous_determinant(double k, const ValidatedGraph& g, SecularForm form = SecularForm::Full);

// A sin(k(L - x)) + B sin(kx).
double continuous_solution_sample(double k, double A, double B, double length, double x);

// k_min = 1e-6 pi / L_max, k_max = 6 pi / L_min.
ScanConfig default_continuous_config(const ValidatedGraph& g);

ScanTarget continuous_target(const ValidatedGraph& g, SecularForm form, double null_tol = 1e-8);

// Full-form roots are classified like the discrete ones.
RootSet find_continuous_roots(const ValidatedGraph& g, const ScanConfig& cfg, SecularForm form = SecularForm::Full);

}  // namespace dqg
