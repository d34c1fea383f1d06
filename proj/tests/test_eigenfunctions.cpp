#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <random>

#include "dqg/chain.hpp"
#include "dqg/eigenfunctions.hpp"
#include "dqg/oracle.hpp"
#include "dqg/rootfind.hpp"
#include "random_graphs.hpp"

using namespace dqg;

TEST_CASE("Dirichlet chain modes are lattice sines") {
  const ChainProblem p{1.0, 20, Boundary::Dirichlet};
  const ValidatedGraph g = validate(chain_graph(p));
  const auto ks = dirichlet_eigenvalues(p);
  for (int m = 1; m <= 4; ++m) {
    const auto modes = eigenmodes(ks[static_cast<std::size_t>(m - 1)], g);
    REQUIRE(modes.size() == 1);
    const auto& psi = modes[0].samples.values[0];
    double norm2 = 0.0;
    for (int n = 0; n <= p.points; ++n) norm2 += std::pow(std::sin(M_PI * m * n / p.points), 2);
    const double c = 1.0 / std::sqrt(norm2);
    for (int n = 0; n <= p.points; ++n) {
      CHECK(std::abs(std::abs(psi[static_cast<std::size_t>(n)].real()) - c * std::abs(std::sin(M_PI * m * n / p.points))) < 1e-12);
    }
    CHECK(modes[0].norm == Catch::Approx(1.0).epsilon(1e-13));
    CHECK(modes[0].residuals.max() < 1e-12);
  }
}

TEST_CASE("sign convention makes the first nonzero vertex value positive") {
  const ValidatedGraph g = validate(chain_spec(1.0, 12));
  const auto ks = chain_eigenvalues({1.0, 12, Boundary::Neumann});
  for (double k : ks) {
    const auto modes = eigenmodes(k, g);
    REQUIRE(modes.size() == 1);
    CHECK(modes[0].vertex_values[0] > 0.0);
  }
}

TEST_CASE("modes agree with oracle eigenvectors up to sign") {
  std::mt19937_64 rng(17);
  const ValidatedGraph g = validate(testgen::random_graph(rng, {.common_step = true}));
  const AssembledOperator op = assemble_operator(g);
  const OracleSpectrum spec = oracle_spectrum(op, 1e-6, true);
  int checked = 0;
  for (std::size_t i = 0; i < spec.lambda.size(); ++i) {
    if (spec.lambda[i] <= spec.zero_threshold) continue;
    const bool simple = (i == 0 || spec.lambda[i] - spec.lambda[i - 1] > 1e-6 * spec.lambda[i]) &&
                        (i + 1 == spec.lambda.size() || spec.lambda[i + 1] - spec.lambda[i] > 1e-6 * spec.lambda[i]);
    if (!simple) continue;
    const double k = std::sqrt(spec.lambda[i]);
    const auto modes = eigenmodes(k, g, 1e-6);
    REQUIRE(modes.size() == 1);
    LatticeFunction ref = lift(op, g, spec.eigenvectors.col(static_cast<Eigen::Index>(i)));
    const double rn = std::sqrt(inner_product(ref, ref, g).real());
    const double overlap = std::abs(inner_product(modes[0].samples, ref, g)) / rn;
    CHECK(overlap == Catch::Approx(1.0).epsilon(1e-8));
    ++checked;
  }
  CHECK(checked > 5);
}

TEST_CASE("hyperbolic edges reconstruct without loss") {
  GraphSpec s;
  s.vertices = 3;
  s.edges = {{1, 2, 1.0, 40}, {2, 3, 1.0, 10}};
  const ValidatedGraph g = validate(s);
  ScanConfig cfg = default_scan_config(g);
  const RootSet roots = find_roots(g, cfg, SecularForm::Reduced);
  int above = 0;
  for (const Root& r : roots.roots) {
    if (r.k <= 20.0) continue;
    ++above;
    for (const auto& mode : eigenmodes(r.k, g)) CHECK(mode.residuals.max() < 1e-10);
  }
  CHECK(above > 0);
}

TEST_CASE("equilateral star has two-dimensional nullspaces") {
  const std::vector<double> lengths{1.0, 1.0, 1.0};
  const ValidatedGraph g = validate(star_spec(lengths, 0.1));
  const RootSet roots = find_roots(g, default_scan_config(g), SecularForm::Reduced);
  auto it = std::find_if(roots.roots.begin(), roots.roots.end(), [](const Root& r) { return r.multiplicity_hint == 2; });
  REQUIRE(it != roots.roots.end());
  const double k = it->k;
  const auto basis = extract_nullspace(k, g);
  REQUIRE(basis.size() == 2);
  CHECK(std::abs(basis[0].dot(basis[1])) < 1e-12);
  for (const auto& v : basis) CHECK(reconstruct(v, k, g).residuals.max() < 1e-12);
}

TEST_CASE("no nullspace away from eigenvalues") {
  const ValidatedGraph g = validate(chain_spec(1.0, 10, true));
  CHECK_THROWS_AS(extract_nullspace(1.0, g), EmptyNullspace);
  CHECK_THROWS_AS(reconstruct(Eigen::VectorXd::Zero(3), 1.0, g), ShapeMismatch);
}

TEST_CASE("residual check rejects a non-eigenvector") {
  const ValidatedGraph g = validate(chain_spec(1.0, 10, true));
  const SecularLayout L = layout_of(g);
  Eigen::VectorXd v = Eigen::VectorXd::Zero(L.size());
  v(L.b(0)) = 1.0;
  CHECK_THROWS_AS(reconstruct(v, 1.0, g), ResidualExceeded);
}
