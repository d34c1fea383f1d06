#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "dqg/chain.hpp"
#include "dqg/oracle.hpp"
#include "oracles.hpp"
#include "random_graphs.hpp"

using namespace dqg;

namespace {

LatticeFunction random_function(const ValidatedGraph& g, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  LatticeFunction f = zero_function(g);
  for (auto& edge : f.values) {
    for (auto& v : edge) v = {nd(rng), nd(rng)};
  }
  return f;
}

}  // namespace

TEST_CASE("chain operators reproduce Sturm eigenvalues") {
  for (Boundary b : {Boundary::Dirichlet, Boundary::Neumann}) {
    const ChainProblem p{1.0, 40, b};
    const ValidatedGraph g = validate(chain_graph(p));
    const OracleSpectrum spec = oracle_spectrum(assemble_operator(g), 1e-6);
    CHECK(spec.symmetric);
    const auto ref = oracle::chain_k_sturm(p.points, p.step(), b == Boundary::Neumann);
    REQUIRE(spec.k.size() == ref.size());
    for (std::size_t m = 0; m < ref.size(); ++m) CHECK(spec.k[m] == Catch::Approx(ref[m]).epsilon(1e-11));
  }
}

TEST_CASE("Kirchhoff chain keeps one zero mode") {
  const ValidatedGraph g = validate(chain_spec(1.0, 10));
  const OracleSpectrum spec = oracle_spectrum(assemble_operator(g), 1e-6);
  CHECK(spec.lambda.size() == 9);
  CHECK(spec.k.size() == 8);
  CHECK(std::abs(spec.lambda.front()) <= spec.zero_threshold);
}

TEST_CASE("mixed steps give a non-symmetric operator with real spectrum") {
  GraphSpec s;
  s.vertices = 3;
  s.edges = {{1, 2, 1.0, 10}, {2, 3, 1.0, 7}};
  const ValidatedGraph g = validate(s);
  const OracleSpectrum spec = oracle_spectrum(assemble_operator(g), 1e-6, true);
  CHECK_FALSE(spec.symmetric);
  CHECK(spec.eigenvectors.cols() == static_cast<Eigen::Index>(spec.lambda.size()));
  CHECK(std::is_sorted(spec.lambda.begin(), spec.lambda.end()));
}

TEST_CASE("eigenvectors satisfy H v = lambda v") {
  std::mt19937_64 rng(3);
  const ValidatedGraph g = validate(testgen::random_graph(rng, {.common_step = true}));
  const AssembledOperator op = assemble_operator(g);
  const OracleSpectrum spec = oracle_spectrum(op, 1e-6, true);
  for (std::size_t i = 0; i < spec.lambda.size(); ++i) {
    const Eigen::VectorXd v = spec.eigenvectors.col(static_cast<Eigen::Index>(i));
    CHECK((op.matrix * v - spec.lambda[i] * v).norm() <= 1e-9 * std::max(1.0, std::abs(spec.lambda[i])));
  }
}

TEST_CASE("lifted functions satisfy the vertex conditions") {
  std::mt19937_64 rng(5);
  GraphSpec s = testgen::random_graph(rng, {.common_step = true});
  s.dirichlet = {1};
  const ValidatedGraph g = validate(s);
  const AssembledOperator op = assemble_operator(g);
  const Eigen::VectorXd x = Eigen::VectorXd::Random(op.dim);
  const LatticeFunction f = lift(op, g, x);
  std::vector<std::complex<double>> flux(static_cast<std::size_t>(g.vertex_count()));
  std::vector<std::complex<double>> value(static_cast<std::size_t>(g.vertex_count()));
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& p = f.values[static_cast<std::size_t>(e)];
    const EdgeSpec& edge = g.edge(e);
    flux[static_cast<std::size_t>(edge.i - 1)] += p[1] - p[0];
    flux[static_cast<std::size_t>(edge.j - 1)] += p[p.size() - 2] - p.back();
    value[static_cast<std::size_t>(edge.i - 1)] = p[0];
    value[static_cast<std::size_t>(edge.j - 1)] = p.back();
  }
  for (int v = 1; v <= g.vertex_count(); ++v) {
    const auto u = static_cast<std::size_t>(v - 1);
    if (g.fixed_zero(v)) {
      CHECK(std::abs(value[u]) == 0.0);
    } else {
      CHECK(std::abs(flux[u] - g.lambda(v) * value[u]) < 1e-13);
    }
  }
  CHECK_THROWS_AS(lift(op, g, Eigen::VectorXd::Zero(op.dim + 1)), ShapeMismatch);
}

TEST_CASE("boundary form equals the commutator of H_d") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const ValidatedGraph g = validate(testgen::random_graph(rng));
    const LatticeFunction psi = random_function(g, rng), phi = random_function(g, rng);
    const auto lhs = inner_product(apply_hd(psi, g), phi, g) - inner_product(psi, apply_hd(phi, g), g);
    const auto rhs = boundary_form(psi, phi, g);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(lhs)));
  }
}

TEST_CASE("boundary form vanishes on functions obeying the vertex conditions") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const ValidatedGraph g = validate(testgen::random_graph(rng, {.common_step = true}));
    const AssembledOperator op = assemble_operator(g);
    const LatticeFunction psi = lift(op, g, Eigen::VectorXd::Random(op.dim));
    const LatticeFunction phi = lift(op, g, Eigen::VectorXd::Random(op.dim));
    const double scale = std::abs(inner_product(apply_hd(psi, g), phi, g));
    CHECK(std::abs(boundary_form(psi, phi, g)) <= 1e-12 * std::max(1.0, scale));
  }
}

TEST_CASE("a vertex with degree + lambda = 0 cannot be eliminated") {
  GraphSpec s = chain_spec(1.0, 5);
  s.lambda[1] = -1.0;
  CHECK_THROWS_AS(assemble_operator(validate(s)), SingularConstraint);
}
