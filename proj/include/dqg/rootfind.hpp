#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "dqg/graph.hpp"
#include "dqg/secular.hpp"

namespace dqg {

struct ScanConfig {
  double k_min = 0.0;
  double k_max = 0.0;
  int grid_points = 20000;
  double tol_k = 1e-10;
  double tol_det = 0.0;  // <= 0: 1e-9 times the median |det| over the grid
  double null_tol = 1e-8;
  bool parallel = true;
};

void check_config(const ScanConfig& cfg);

// k_min = 1e-6 pi / L_max, k_max = max_e 2/a_e - 1e-9.
ScanConfig default_scan_config(const ValidatedGraph& g);

enum class RootKind { Genuine, BasisDegenerate };

const char* to_string(RootKind kind);

struct Root {
  double k = 0.0;
  int multiplicity_hint = 1;
  double det_residual = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  bool sign_change = true;
  RootKind kind = RootKind::Genuine;
};

struct RootSet {
  std::vector<Root> roots;
  double tol_det = 0.0;
};

using ScalarFn = std::function<double(double)>;

// A real function of k to scan. Only value is required. singularity (sigma_min/sigma_max of
// the underlying matrix) enables the even-multiplicity fallback; nullity sets the multiplicity
// hint; warp is an increasing map whose uniform samples place the grid; the scan never
// evaluates value at a breakpoint.
struct ScanTarget {
  ScalarFn value;
  ScalarFn singularity;
  std::function<int(double)> nullity;
  ScalarFn warp;
  std::vector<double> breakpoints;
};

// Grid points per continuous segment of [k_min, k_max].
std::vector<std::vector<double>> scan_segments(const ScanTarget& target, const ScanConfig& cfg);

// Reference loop and its OpenMP counterpart; results are bit-identical.
std::vector<double> evaluate_serial(const ScalarFn& f, std::span<const double> ks);
std::vector<double> evaluate_parallel(const ScalarFn& f, std::span<const double> ks);

RootSet find_roots(const ScanTarget& target, const ScanConfig& cfg);

ScanTarget secular_target(const ValidatedGraph& g, SecularForm form, double null_tol = 1e-8);

// Full-form roots come back classified: a root is Genuine when the reduced matrix is
// singular there (multiplicity = its nullity) and BasisDegenerate otherwise.
RootSet find_roots(const ValidatedGraph& g, const ScanConfig& cfg, SecularForm form = SecularForm::Full);

// Genuine roots with each k repeated multiplicity_hint times.
std::vector<double> expand_genuine(const RootSet& roots);

struct CheckReport {
  int expected = 0;
  int found = 0;
  double max_abs_diff = 0.0;
  std::vector<std::string> discrepancies;

  bool ok() const { return discrepancies.empty(); }
};

// Compares genuine roots (with multiplicity) against the oracle k-values in [k_min, k_max].
CheckReport count_check(const RootSet& roots, const ValidatedGraph& g, const ScanConfig& cfg,
                        double tol = 1e-8);

}  // namespace dqg
