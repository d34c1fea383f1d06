#include "dqg/eigenfunctions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "dqg/basis.hpp"

namespace dqg {

double Residuals::max() const { return std::max({interior_max, continuity_max, conservation_max}); }

std::vector<Eigen::VectorXd> extract_nullspace(double k, const ValidatedGraph& g, SecularForm form, double null_tol) {
  const Eigen::MatrixXd m =
      row_balanced(form == SecularForm::Reduced ? assemble_conditioned(k, g) : assemble_secular(k, g, form));
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  Eigen::Index count = 0;
  while (count < sv.size() && sv(sv.size() - 1 - count) <= null_tol * sv(0)) ++count;
  if (count == 0) {
    std::ostringstream os;
    os << "no nullspace at k = " << k << " (sigma_min/sigma_max = " << sv(sv.size() - 1) / sv(0) << ")";
    throw EmptyNullspace(os.str());
  }
  std::vector<Eigen::VectorXd> basis;
  for (Eigen::Index c = 0; c < count; ++c) basis.push_back(svd.matrixV().col(sv.size() - 1 - c));
  return basis;
}

Residuals measure_residuals(double k, const LatticeFunction& psi, const std::vector<double>& vertex_values,
                            const ValidatedGraph& g) {
  check_shape(psi, g);
  double scale = 0.0;
  for (const auto& edge : psi.values) {
    for (const auto& v : edge) scale = std::max(scale, std::abs(v));
  }
  if (scale == 0.0) scale = 1.0;

  Residuals r;
  std::vector<std::complex<double>> flux(static_cast<std::size_t>(g.vertex_count()));
  for (int e = 0; e < g.edge_count(); ++e) {
    const EdgeSpec& edge = g.edge(e);
    const auto& p = psi.values[static_cast<std::size_t>(e)];
    const double s = k * k * edge.step() * edge.step();
    const std::size_t N = p.size() - 1;
    for (std::size_t n = 1; n < N; ++n) {
      r.interior_max = std::max(r.interior_max, std::abs(p[n - 1] - (2.0 - s) * p[n] + p[n + 1]));
    }
    const double phi_i = vertex_values[static_cast<std::size_t>(edge.i) - 1];
    const double phi_j = vertex_values[static_cast<std::size_t>(edge.j) - 1];
    r.continuity_max = std::max({r.continuity_max, std::abs(p[0] - phi_i), std::abs(p[N] - phi_j)});
    flux[static_cast<std::size_t>(edge.i) - 1] += p[1] - p[0];
    flux[static_cast<std::size_t>(edge.j) - 1] += p[N - 1] - p[N];
  }
  for (int v = 1; v <= g.vertex_count(); ++v) {
    const double phi = vertex_values[static_cast<std::size_t>(v) - 1];
    const double res = g.fixed_zero(v) ? std::abs(phi) : std::abs(flux[static_cast<std::size_t>(v) - 1] - g.lambda(v) * phi);
    r.conservation_max = std::max(r.conservation_max, res);
  }
  r.interior_max /= scale;
  r.continuity_max /= scale;
  r.conservation_max /= scale;
  return r;
}

EigenResult reconstruct(const Eigen::VectorXd& coeffs, double k, const ValidatedGraph& g, SecularForm form, double tol) {
  const SecularLayout L = layout_of(g);
  if (coeffs.size() != L.size()) throw ShapeMismatch("coefficient vector does not match the secular layout");

  EigenResult out;
  out.k = k;
  out.samples = zero_function(g);
  const auto E = static_cast<std::size_t>(g.edge_count());
  const double nan = std::numeric_limits<double>::quiet_NaN();
  out.A.assign(E, nan);
  out.B.assign(E, nan);
  out.alpha.assign(E, nan);
  out.beta.assign(E, nan);
  for (int v = 1; v <= g.vertex_count(); ++v) out.vertex_values.push_back(coeffs(L.phi(v)));

  for (int e = 0; e < g.edge_count(); ++e) {
    const EdgeSpec& edge = g.edge(e);
    const int N = edge.points;
    const EdgeBasis b(k, edge.step());
    auto& p = out.samples.values[static_cast<std::size_t>(e)];
    const double c0 = coeffs(L.a(e)), c1 = coeffs(L.b(e));
    const auto ue = static_cast<std::size_t>(e);
    if (form == SecularForm::Reduced) {
      if (b.prefers_modes(N)) {
        for (int n = 0; n <= N; ++n) p[static_cast<std::size_t>(n)] = c0 * b.D(N - n) + c1 * b.D(n);
        out.alpha[ue] = p[0].real();
        out.beta[ue] = p[1].real() - b.x() * p[0].real();
      } else {
        out.alpha[ue] = c0;
        out.beta[ue] = c1;
        for (int n = 0; n <= N; ++n) p[static_cast<std::size_t>(n)] = c0 * b.C(n) + c1 * b.S(n);
      }
      const double fN = b.F(N), f1 = b.F(1);
      if (fN != 0.0 && f1 != 0.0) {
        // alpha = F(N) A, beta = (F(N-1) - x F(N)) A + F(1) B
        out.A[ue] = out.alpha[ue] / fN;
        out.B[ue] = (out.beta[ue] - (b.F(N - 1) - b.x() * fN) * out.A[ue]) / f1;
      }
    } else {
      out.A[ue] = c0;
      out.B[ue] = c1;
      for (int n = 0; n <= N; ++n) p[static_cast<std::size_t>(n)] = c0 * b.F(N - n) + c1 * b.F(n);
      out.alpha[ue] = c0 * b.F(N);
      out.beta[ue] = (b.F(N - 1) - b.x() * b.F(N)) * c0 + b.F(1) * c1;
    }
  }

  out.residuals = measure_residuals(k, out.samples, out.vertex_values, g);

  const double norm2 = inner_product(out.samples, out.samples, g).real();
  if (!(norm2 > 0.0)) throw EmptyNullspace("nullspace vector reconstructs to the zero function");
  double scale = 1.0 / std::sqrt(norm2);

  // Sign: first nonzero vertex value, else first nonzero sample, made positive.
  double inf = 0.0;
  for (const auto& edge : out.samples.values) {
    for (const auto& v : edge) inf = std::max(inf, std::abs(v));
  }
  const double cut = 1e-8 * inf;
  double pivot = 0.0;
  for (double phi : out.vertex_values) {
    if (std::abs(phi) > cut) {
      pivot = phi;
      break;
    }
  }
  if (pivot == 0.0) {
    for (const auto& edge : out.samples.values) {
      for (const auto& v : edge) {
        if (std::abs(v) > cut) {
          pivot = v.real();
          break;
        }
      }
      if (pivot != 0.0) break;
    }
  }
  if (pivot < 0.0) scale = -scale;

  for (auto& edge : out.samples.values) {
    for (auto& v : edge) v *= scale;
  }
  for (auto& phi : out.vertex_values) phi *= scale;
  for (std::size_t e = 0; e < E; ++e) {
    out.A[e] *= scale;
    out.B[e] *= scale;
    out.alpha[e] *= scale;
    out.beta[e] *= scale;
  }
  out.norm = inner_product(out.samples, out.samples, g).real();

  const Residuals& r = out.residuals;
  if (r.interior_max > tol) throw ResidualExceeded("interior", r.interior_max);
  if (r.continuity_max > tol) throw ResidualExceeded("continuity", r.continuity_max);
  if (r.conservation_max > tol) throw ResidualExceeded("conservation", r.conservation_max);
  return out;
}

std::vector<EigenResult> eigenmodes(double k, const ValidatedGraph& g, double null_tol, double tol) {
  std::vector<EigenResult> modes;
  for (const auto& v : extract_nullspace(k, g, SecularForm::Reduced, null_tol)) {
    modes.push_back(reconstruct(v, k, g, SecularForm::Reduced, tol));
  }
  return modes;
}

}  // namespace dqg
