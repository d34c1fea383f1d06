#include "dqg/secular.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dqg/basis.hpp"

namespace dqg {

const char* to_string(SecularForm form) { return form == SecularForm::Full ? "full" : "reduced"; }

SecularLayout layout_of(const ValidatedGraph& g) { return {g.vertex_count(), g.edge_count()}; }

namespace {

void vertex_rows(Eigen::MatrixXd& m, const ValidatedGraph& g, const SecularLayout& L) {
  for (int v = 1; v <= g.vertex_count(); ++v) {
    const int row = L.vertex_row(v);
    if (g.fixed_zero(v)) {
      m.row(row).setZero();
      m(row, L.phi(v)) = 1.0;
    } else {
      m(row, L.phi(v)) -= g.lambda(v);
    }
  }
}

Eigen::MatrixXd assemble(double k, const ValidatedGraph& g, SecularForm form, bool modes) {
  const SecularLayout L = layout_of(g);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(L.size(), L.size());

  for (int e = 0; e < g.edge_count(); ++e) {
    const EdgeSpec& edge = g.edge(e);
    const int N = edge.points;
    const EdgeBasis basis(k, edge.step());
    const int rs = L.start_row(e), re = L.end_row(e);
    const int ci = L.vertex_row(edge.i), cj = L.vertex_row(edge.j);

    m(rs, L.phi(edge.i)) = -1.0;
    m(re, L.phi(edge.j)) = -1.0;

    if (form == SecularForm::Full) {
      if (basis.regime() == Regime::Degenerate) {
        std::ostringstream os;
        os << "k = " << k << " hits the band edge 2/a of edge (" << edge.i << "," << edge.j << ")";
        throw DegenerateBasis(os.str());
      }
      const double fN = basis.F(N);
      const double f1 = basis.F(1);
      const double r = basis.F(N - 1) - fN;
      m(rs, L.a(e)) = fN;
      m(re, L.b(e)) = fN;
      // Outgoing differences Psi(1) - Psi(0) at i and Psi(N-1) - Psi(N) at j.
      m(ci, L.a(e)) += r;
      m(ci, L.b(e)) += f1;
      m(cj, L.a(e)) += f1;
      m(cj, L.b(e)) += r;
    } else if (modes && basis.prefers_modes(N)) {
      const double dN = basis.D(N);
      const double r = basis.D(N - 1) - dN;
      const double d1 = basis.D(1) - 1.0;
      m(rs, L.a(e)) = dN;
      m(rs, L.b(e)) = 1.0;
      m(re, L.a(e)) = 1.0;
      m(re, L.b(e)) = dN;
      m(ci, L.a(e)) += r;
      m(ci, L.b(e)) += d1;
      m(cj, L.a(e)) += d1;
      m(cj, L.b(e)) += r;
    } else {
      m(rs, L.a(e)) = 1.0;
      m(re, L.a(e)) = basis.C(N);
      m(re, L.b(e)) = basis.S(N);
      m(ci, L.a(e)) += -0.5 * basis.s();
      m(ci, L.b(e)) += 1.0;
      m(cj, L.a(e)) += -basis.C_step(N);
      m(cj, L.b(e)) += -basis.S_step(N);
    }
  }
  vertex_rows(m, g, L);
  return m;
}

}  // namespace

Eigen::MatrixXd assemble_secular(double k, const ValidatedGraph& g, SecularForm form) {
  return assemble(k, g, form, false);
}

Eigen::MatrixXd assemble_conditioned(double k, const ValidatedGraph& g) {
  return assemble(k, g, SecularForm::Reduced, true);
}

bool uses_modes(double k, const EdgeSpec& edge) { return EdgeBasis(k, edge.step()).prefers_modes(edge.points); }

double secular_determinant(double k, const ValidatedGraph& g, SecularForm form) {
  if (form == SecularForm::Full) return assemble_secular(k, g, form).partialPivLu().determinant();
  double det = assemble_conditioned(k, g).partialPivLu().determinant();
  for (const auto& edge : g.edges()) {
    const EdgeBasis b(k, edge.step());
    if (b.regime() != Regime::Hyperbolic) continue;
    const double theta = b.phase();
    if (b.prefers_modes(edge.points)) {
      det /= (edge.points % 2 == 0 ? 2.0 : -2.0) * std::sinh(theta);
    } else {
      det *= std::exp(-edge.points * theta);
    }
  }
  return det;
}

std::vector<double> degenerate_points(const ValidatedGraph& g) {
  std::vector<double> pts;
  for (const auto& e : g.edges()) pts.push_back(2.0 / e.step());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

Eigen::MatrixXd row_balanced(const Eigen::MatrixXd& m) {
  Eigen::MatrixXd out = m;
  for (Eigen::Index i = 0; i < out.rows(); ++i) {
    const double r = out.row(i).cwiseAbs().maxCoeff();
    if (r > 0.0) out.row(i) *= std::exp2(-std::round(std::log2(r)));
  }
  return out;
}

double singularity_ratio(const Eigen::MatrixXd& m) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(row_balanced(m));
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0.0;
  return sv(sv.size() - 1) / sv(0);
}

int numerical_nullity(const Eigen::MatrixXd& m, double tol) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(row_balanced(m));
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) return 0;
  int n = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) <= tol * sv(0)) ++n;
  }
  return n;
}

double lattice_phase(double k, const ValidatedGraph& g) {
  double total = 0.0;
  for (const auto& e : g.edges()) {
    const double h = 0.5 * k * e.step();
    const double phase = h <= 1.0 ? 2.0 * std::asin(h) : M_PI + 2.0 * std::acosh(h);
    total += e.points * phase;
  }
  return total;
}

}  // namespace dqg
