#include "dqg/continuum.hpp"

#include <cmath>

namespace dqg {

Eigen::MatrixXd assemble_continuous(double k, const ValidatedGraph& g, SecularForm form) {
  const SecularLayout L = layout_of(g);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(L.size(), L.size());
  for (int e = 0; e < g.edge_count(); ++e) {
    const EdgeSpec& edge = g.edge(e);
    const double sn = std::sin(k * edge.length), cs = std::cos(k * edge.length);
    const int rs = L.start_row(e), re = L.end_row(e);
    const int ci = L.vertex_row(edge.i), cj = L.vertex_row(edge.j);
    m(rs, L.phi(edge.i)) = -1.0;
    m(re, L.phi(edge.j)) = -1.0;
    if (form == SecularForm::Full) {
      m(rs, L.a(e)) = sn;
      m(re, L.b(e)) = sn;
      // Outgoing derivatives Psi'(0) at i and -Psi'(L) at j.
      m(ci, L.a(e)) += -k * cs;
      m(ci, L.b(e)) += k;
      m(cj, L.a(e)) += k;
      m(cj, L.b(e)) += -k * cs;
    } else {
      const double sinc = k == 0.0 ? edge.length : sn / k;
      m(rs, L.a(e)) = 1.0;
      m(re, L.a(e)) = cs;
      m(re, L.b(e)) = sinc;
      m(ci, L.b(e)) += 1.0;
      m(cj, L.a(e)) += k * sn;
      m(cj, L.b(e)) += -cs;
    }
  }
  for (int v = 1; v <= g.vertex_count(); ++v) {
    const int row = L.vertex_row(v);
    if (g.fixed_zero(v)) {
      m.row(row).setZero();
      m(row, L.phi(v)) = 1.0;
    } else {
      m(row, L.phi(v)) -= g.lambda(v);
    }
  }
  return m;
}

double continuous_determinant(double k, const ValidatedGraph& g, SecularForm form) {
  return assemble_continuous(k, g, form).partialPivLu().determinant();
}

double continuous_solution_sample(double k, double A, double B, double length, double x) {
  return A * std::sin(k * (length - x)) + B * std::sin(k * x);
}

ScanConfig default_continuous_config(const ValidatedGraph& g) {
  ScanConfig cfg;
  cfg.k_min = 1e-6 * M_PI / g.max_length();
  cfg.k_max = 6.0 * M_PI / g.min_length();
  return cfg;
}

ScanTarget continuous_target(const ValidatedGraph& g, SecularForm form, double null_tol) {
  ScanTarget t;
  t.value = [&g, form](double k) { return continuous_determinant(k, g, form); };
  t.singularity = [&g, form](double k) { return singularity_ratio(assemble_continuous(k, g, form)); };
  t.nullity = [&g, form, null_tol](double k) { return numerical_nullity(assemble_continuous(k, g, form), null_tol); };
  return t;
}

RootSet find_continuous_roots(const ValidatedGraph& g, const ScanConfig& cfg, SecularForm form) {
  RootSet roots = find_roots(continuous_target(g, form, cfg.null_tol), cfg);
  if (form == SecularForm::Full) {
    for (Root& r : roots.roots) {
      const int nullity = numerical_nullity(assemble_continuous(r.k, g, SecularForm::Reduced), cfg.null_tol);
      r.kind = nullity > 0 ? RootKind::Genuine : RootKind::BasisDegenerate;
      if (nullity > 0) r.multiplicity_hint = nullity;
    }
  }
  return roots;
}

}  // namespace dqg
