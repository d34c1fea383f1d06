#include <catch_amalgamated.hpp>

#include <cmath>
#include <cstring>
#include <random>
#include <stdexcept>
#include <vector>

#include <omp.h>

#include "dqg/rootfind.hpp"
#include "dqg/secular.hpp"
#include "random_graphs.hpp"

using namespace dqg;

namespace {

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof(double)) == 0; }

bool identical(const RootSet& x, const RootSet& y) {
  if (x.roots.size() != y.roots.size() || !same_bits(x.tol_det, y.tol_det)) return false;
  for (std::size_t i = 0; i < x.roots.size(); ++i) {
    const Root& a = x.roots[i];
    const Root& b = y.roots[i];
    if (!same_bits(a.k, b.k) || !same_bits(a.det_residual, b.det_residual) ||
        a.multiplicity_hint != b.multiplicity_hint || a.sign_change != b.sign_change || a.kind != b.kind) {
      return false;
    }
  }
  return true;
}

ScanConfig config(double lo, double hi, int grid = 2000) {
  ScanConfig cfg;
  cfg.k_min = lo;
  cfg.k_max = hi;
  cfg.grid_points = grid;
  return cfg;
}

}  // namespace

TEST_CASE("config validation") {
  CHECK_THROWS_AS(check_config(config(0.0, 1.0)), InvalidConfig);
  CHECK_THROWS_AS(check_config(config(2.0, 1.0)), InvalidConfig);
  CHECK_THROWS_AS(check_config(config(0.1, 1.0, 1)), InvalidConfig);
  ScanConfig bad = config(0.1, 1.0);
  bad.tol_k = 0.0;
  CHECK_THROWS_AS(check_config(bad), InvalidConfig);
  CHECK_NOTHROW(check_config(config(0.1, 1.0)));
}

TEST_CASE("simple roots of sin are found to machine precision") {
  ScanTarget t;
  t.value = [](double k) { return std::sin(k); };
  const RootSet r = find_roots(t, config(0.5, 20.0));
  REQUIRE(r.roots.size() == 6);
  for (std::size_t m = 0; m < r.roots.size(); ++m) {
    CHECK(r.roots[m].k == Catch::Approx(M_PI * static_cast<double>(m + 1)).epsilon(1e-14));
    CHECK(r.roots[m].sign_change);
    CHECK(r.roots[m].bracket_lo <= r.roots[m].k);
    CHECK(r.roots[m].bracket_hi >= r.roots[m].k);
  }
}

TEST_CASE("double roots are found through the singular-value fallback") {
  ScanTarget t;
  t.value = [](double k) { return (k - 1.7) * (k - 1.7) * (k + 1.0); };
  t.singularity = [](double k) { return std::abs(k - 1.7) / 3.0; };
  t.nullity = [](double k) { return std::abs(k - 1.7) < 1e-8 ? 2 : 0; };
  ScanConfig cfg = config(0.5, 3.0);
  cfg.tol_det = 1e-12;
  const RootSet r = find_roots(t, cfg);
  REQUIRE(r.roots.size() == 1);
  CHECK(r.roots[0].k == Catch::Approx(1.7).epsilon(1e-12));
  CHECK_FALSE(r.roots[0].sign_change);
  CHECK(r.roots[0].multiplicity_hint == 2);
}

TEST_CASE("breakpoints are never evaluated") {
  ScanTarget t;
  t.breakpoints = {1.0, 2.0};
  t.value = [](double k) {
    if (k == 1.0 || k == 2.0) throw std::logic_error("evaluated at a breakpoint");
    return std::cos(3.0 * k);
  };
  const auto segments = scan_segments(t, config(0.1, 3.0, 300));
  CHECK(segments.size() == 3);
  CHECK_NOTHROW(find_roots(t, config(0.1, 3.0, 300)));
}

TEST_CASE("serial and parallel evaluation are bit-identical") {
  std::vector<double> ks(5000);
  for (std::size_t i = 0; i < ks.size(); ++i) ks[i] = 0.001 + 0.01 * static_cast<double>(i);
  const ScalarFn f = [](double k) { return std::sin(k) * std::exp(-0.01 * k) + std::cos(3.0 * k); };
  const auto a = evaluate_serial(f, ks);
  const auto b = evaluate_parallel(f, ks);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) REQUIRE(same_bits(a[i], b[i]));
}

TEST_CASE("parallel evaluation rethrows the first exception") {
  std::vector<double> ks{1.0, 2.0, 3.0, 4.0};
  const ScalarFn f = [](double k) -> double {
    if (k == 3.0) throw DegenerateBasis("boom");
    return k;
  };
  CHECK_THROWS_AS(evaluate_parallel(f, ks), DegenerateBasis);
}

TEST_CASE("serial and parallel root finding are bit-identical on random graphs") {
  omp_set_num_threads(4);
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 8; ++trial) {
    const ValidatedGraph g = validate(testgen::random_graph(rng));
    ScanConfig cfg = default_scan_config(g);
    cfg.grid_points = 4000;
    for (SecularForm form : {SecularForm::Full, SecularForm::Reduced}) {
      cfg.parallel = false;
      const RootSet serial = find_roots(g, cfg, form);
      cfg.parallel = true;
      const RootSet parallel = find_roots(g, cfg, form);
      INFO("trial " << trial << " form " << to_string(form));
      CHECK(identical(serial, parallel));
    }
  }
}

TEST_CASE("Full-form roots of a star are classified") {
  const std::vector<double> lengths{0.8, 1.1, 1.5};
  const ValidatedGraph g = validate(star_spec(lengths, 0.1));
  const RootSet full = find_roots(g, default_scan_config(g), SecularForm::Full);
  const RootSet reduced = find_roots(g, default_scan_config(g), SecularForm::Reduced);
  const auto genuine = expand_genuine(full);
  const auto direct = expand_genuine(reduced);
  REQUIRE(genuine.size() == direct.size());
  for (std::size_t i = 0; i < genuine.size(); ++i) CHECK(genuine[i] == Catch::Approx(direct[i]).epsilon(1e-10));
  int degenerate = 0;
  for (const Root& r : full.roots) degenerate += r.kind == RootKind::BasisDegenerate;
  CHECK(degenerate > 0);
  for (const Root& r : reduced.roots) CHECK(r.kind == RootKind::Genuine);
}

TEST_CASE("count_check agrees with the oracle on a Kirchhoff chain") {
  const ValidatedGraph g = validate(chain_spec(1.0, 12));
  const ScanConfig cfg = default_scan_config(g);
  const CheckReport report = count_check(find_roots(g, cfg, SecularForm::Reduced), g, cfg);
  CHECK(report.ok());
  CHECK(report.expected == 10);
  CHECK(report.max_abs_diff < 1e-10);

  RootSet empty;
  CHECK_FALSE(count_check(empty, g, cfg).ok());
}
