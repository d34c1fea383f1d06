#include "dqg/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace dqg {

AssembledOperator assemble_operator(const ValidatedGraph& g) {
  AssembledOperator op;
  op.index.resize(static_cast<std::size_t>(g.edge_count()));
  int row = 0;
  for (int e = 0; e < g.edge_count(); ++e) {
    const int N = g.edge(e).points;
    auto& idx = op.index[static_cast<std::size_t>(e)];
    idx.assign(static_cast<std::size_t>(N) + 1, -1);
    for (int n = 1; n < N; ++n) idx[static_cast<std::size_t>(n)] = row++;
  }
  op.dim = row;

  op.vertex_map = Eigen::MatrixXd::Zero(g.vertex_count(), op.dim);
  for (int v = 1; v <= g.vertex_count(); ++v) {
    if (g.fixed_zero(v)) continue;
    const double denom = g.degree(v) + g.lambda(v);
    if (std::abs(denom) < 1e-12) {
      std::ostringstream os;
      os << "vertex " << v << ": degree + lambda = " << denom << " cannot be eliminated";
      throw SingularConstraint(os.str());
    }
    for (int e = 0; e < g.edge_count(); ++e) {
      const EdgeSpec& edge = g.edge(e);
      const auto& idx = op.index[static_cast<std::size_t>(e)];
      if (edge.i == v) op.vertex_map(v - 1, idx[1]) += 1.0 / denom;
      if (edge.j == v) op.vertex_map(v - 1, idx[static_cast<std::size_t>(edge.points) - 1]) += 1.0 / denom;
    }
  }

  op.matrix = Eigen::MatrixXd::Zero(op.dim, op.dim);
  for (int e = 0; e < g.edge_count(); ++e) {
    const EdgeSpec& edge = g.edge(e);
    const int N = edge.points;
    const double w = 1.0 / (edge.step() * edge.step());
    const auto& idx = op.index[static_cast<std::size_t>(e)];
    for (int n = 1; n < N; ++n) {
      const int r = idx[static_cast<std::size_t>(n)];
      op.matrix(r, r) += 2.0 * w;
      if (n > 1) {
        op.matrix(r, idx[static_cast<std::size_t>(n) - 1]) -= w;
      } else {
        op.matrix.row(r) -= w * op.vertex_map.row(edge.i - 1);
      }
      if (n < N - 1) {
        op.matrix(r, idx[static_cast<std::size_t>(n) + 1]) -= w;
      } else {
        op.matrix.row(r) -= w * op.vertex_map.row(edge.j - 1);
      }
    }
  }
  return op;
}

OracleSpectrum oracle_spectrum(const AssembledOperator& op, double k_min, bool vectors) {
  if (op.dim < 1) throw EigensolverFailure("operator has no interior points");
  OracleSpectrum out;
  const Eigen::MatrixXd& H = op.matrix;
  const double norm = H.cwiseAbs().rowwise().sum().maxCoeff();
  const double asym = (H - H.transpose()).cwiseAbs().maxCoeff();
  out.symmetric = asym <= 1e-13 * std::max(norm, 1.0);
  out.zero_threshold = std::max(k_min * k_min, 1e-10 * norm);

  std::vector<std::pair<double, Eigen::Index>> order;
  if (out.symmetric) {
    const Eigen::MatrixXd Hs = 0.5 * (H + H.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Hs, vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw EigensolverFailure("symmetric eigensolver did not converge");
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) order.emplace_back(es.eigenvalues()(i), i);
    if (vectors) out.eigenvectors = es.eigenvectors();
  } else {
    Eigen::EigenSolver<Eigen::MatrixXd> es(H, vectors);
    if (es.info() != Eigen::Success) throw EigensolverFailure("general eigensolver did not converge");
    const double imag_tol = 1e-9 * std::max(norm, 1.0);
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
      const auto ev = es.eigenvalues()(i);
      if (std::abs(ev.imag()) > imag_tol) {
        std::ostringstream os;
        os << "eigenvalue " << ev << " is not real";
        throw EigensolverFailure(os.str());
      }
      order.emplace_back(ev.real(), i);
    }
    if (vectors) out.eigenvectors = es.eigenvectors().real();
  }
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  Eigen::MatrixXd sorted_vectors;
  if (vectors) sorted_vectors.resize(op.dim, op.dim);
  for (std::size_t i = 0; i < order.size(); ++i) {
    out.lambda.push_back(order[i].first);
    if (order[i].first > out.zero_threshold) out.k.push_back(std::sqrt(order[i].first));
    if (vectors) sorted_vectors.col(static_cast<Eigen::Index>(i)) = out.eigenvectors.col(order[i].second);
  }
  if (vectors) out.eigenvectors = std::move(sorted_vectors);
  return out;
}

LatticeFunction lift(const AssembledOperator& op, const ValidatedGraph& g, const Eigen::VectorXd& interior) {
  if (interior.size() != op.dim) throw ShapeMismatch("interior vector has the wrong dimension");
  const Eigen::VectorXd phi = op.vertex_map * interior;
  LatticeFunction f = zero_function(g);
  for (int e = 0; e < g.edge_count(); ++e) {
    const EdgeSpec& edge = g.edge(e);
    auto& values = f.values[static_cast<std::size_t>(e)];
    const auto& idx = op.index[static_cast<std::size_t>(e)];
    values.front() = phi(edge.i - 1);
    values.back() = phi(edge.j - 1);
    for (int n = 1; n < edge.points; ++n) values[static_cast<std::size_t>(n)] = interior(idx[static_cast<std::size_t>(n)]);
  }
  return f;
}

LatticeFunction apply_hd(const LatticeFunction& psi, const ValidatedGraph& g) {
  check_shape(psi, g);
  LatticeFunction out = zero_function(g);
  for (int e = 0; e < g.edge_count(); ++e) {
    const double w = 1.0 / (g.edge(e).step() * g.edge(e).step());
    const auto& p = psi.values[static_cast<std::size_t>(e)];
    auto& o = out.values[static_cast<std::size_t>(e)];
    for (std::size_t n = 1; n + 1 < p.size(); ++n) o[n] = -w * (p[n - 1] - 2.0 * p[n] + p[n + 1]);
  }
  return out;
}

std::complex<double> boundary_form(const LatticeFunction& psi, const LatticeFunction& phi, const ValidatedGraph& g) {
  check_shape(psi, g);
  check_shape(phi, g);
  std::complex<double> total{};
  for (int e = 0; e < g.edge_count(); ++e) {
    const double w = 1.0 / (g.edge(e).step() * g.edge(e).step());
    const auto& p = psi.values[static_cast<std::size_t>(e)];
    const auto& q = phi.values[static_cast<std::size_t>(e)];
    const std::size_t N = p.size() - 1;
    total += -w * (p[0] * std::conj(q[1]) - p[1] * std::conj(q[0]) + p[N] * std::conj(q[N - 1]) -
                   p[N - 1] * std::conj(q[N]));
  }
  return total;
}

}  // namespace dqg
