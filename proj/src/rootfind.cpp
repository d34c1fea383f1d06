#include "dqg/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <sstream>

#include "dqg/oracle.hpp"

namespace dqg {

namespace {

constexpr double kBreakpointGuard = 1e-9;
constexpr double kUniformShare = 0.1;
constexpr int kSubGrid = 64;
constexpr int kSubGridDepth = 2;

bool opposite(double a, double b) { return (a < 0.0 && b > 0.0) || (a > 0.0 && b < 0.0); }

// Invert an increasing function on [lo, hi] by bisection.
double invert(const ScalarFn& u, double target, double lo, double hi) {
  for (int it = 0; it < 80; ++it) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    if (u(mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo + 0.5 * (hi - lo);
}

struct Candidate {
  enum Type { Exact, Bracket, Minimum } type;
  double lo;
  double hi;
  double flo;
  double fhi;
};

Root bisect(const ScalarFn& f, double lo, double hi, double flo, double fhi) {
  for (int it = 0; it < 200; ++it) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if (fm == 0.0) {
      lo = hi = mid;
      flo = fhi = 0.0;
      break;
    }
    if (opposite(fm, flo)) {
      hi = mid;
      fhi = fm;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  Root r;
  r.k = std::abs(flo) <= std::abs(fhi) ? lo : hi;
  r.det_residual = std::min(std::abs(flo), std::abs(fhi));
  r.bracket_lo = lo;
  r.bracket_hi = hi;
  r.sign_change = true;
  return r;
}

double golden_section(const ScalarFn& g, double lo, double hi, double tol) {
  const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double gc = g(c), gd = g(d);
  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
    if (gc <= gd) {
      hi = d;
      d = c;
      gd = gc;
      c = hi - inv_phi * (hi - lo);
      gc = g(c);
    } else {
      lo = c;
      c = d;
      gc = gd;
      d = lo + inv_phi * (hi - lo);
      gd = g(d);
    }
  }
  return gc <= gd ? c : d;
}

class Refiner {
 public:
  Refiner(const ScanTarget& target, const ScanConfig& cfg, double tol_det)
      : t_(target), cfg_(cfg), tol_det_(tol_det) {}

  std::vector<Root> refine(const Candidate& c) const {
    switch (c.type) {
      case Candidate::Exact: {
        Root r;
        r.k = r.bracket_lo = r.bracket_hi = c.lo;
        return {r};
      }
      case Candidate::Bracket: return {bisect(t_.value, c.lo, c.hi, c.flo, c.fhi)};
      case Candidate::Minimum: return minimum(c.lo, c.hi, kSubGridDepth);
    }
    return {};
  }

 private:
  std::vector<Root> minimum(double lo, double hi, int depth) const {
    std::vector<double> ks(kSubGrid + 1), fs(kSubGrid + 1);
    for (int j = 0; j <= kSubGrid; ++j) {
      ks[j] = j == kSubGrid ? hi : lo + (hi - lo) * j / kSubGrid;
      fs[j] = t_.value(ks[j]);
    }
    std::vector<Root> found;
    for (int j = 0; j < kSubGrid; ++j) {
      if (fs[j] == 0.0) {
        Root r;
        r.k = r.bracket_lo = r.bracket_hi = ks[j];
        found.push_back(r);
      } else if (opposite(fs[j], fs[j + 1])) {
        found.push_back(bisect(t_.value, ks[j], ks[j + 1], fs[j], fs[j + 1]));
      }
    }
    if (!found.empty()) return found;

    int best = 0;
    for (int j = 1; j <= kSubGrid; ++j) {
      if (std::abs(fs[j]) < std::abs(fs[best])) best = j;
    }
    const double a = ks[std::max(best - 1, 0)];
    const double b = ks[std::min(best + 1, kSubGrid)];
    if (depth > 1) return minimum(a, b, depth - 1);

    const ScalarFn objective = t_.singularity ? t_.singularity : [this](double k) { return std::abs(t_.value(k)); };
    const double k = golden_section(objective, a, b, cfg_.tol_k * 1e-3);
    const double det = std::abs(t_.value(k));
    const bool singular = !t_.singularity || t_.singularity(k) <= cfg_.null_tol;
    if (!singular || det > tol_det_) return {};
    Root r;
    r.k = k;
    r.det_residual = det;
    r.bracket_lo = a;
    r.bracket_hi = b;
    r.sign_change = false;
    r.multiplicity_hint = 2;
    return {r};
  }

  const ScanTarget& t_;
  const ScanConfig& cfg_;
  double tol_det_;
};

double median_abs(std::vector<double> v) {
  std::vector<double> a;
  a.reserve(v.size());
  for (double x : v) {
    if (std::isfinite(x)) a.push_back(std::abs(x));
  }
  if (a.empty()) return 0.0;
  auto mid = a.begin() + static_cast<std::ptrdiff_t>(a.size() / 2);
  std::nth_element(a.begin(), mid, a.end());
  return *mid;
}

}  // namespace

const char* to_string(RootKind kind) { return kind == RootKind::Genuine ? "genuine" : "basis-degenerate"; }

void check_config(const ScanConfig& cfg) {
  if (!(cfg.k_min > 0.0) || !std::isfinite(cfg.k_max) || !(cfg.k_min < cfg.k_max)) {
    std::ostringstream os;
    os << "scan interval must satisfy 0 < k_min < k_max (got " << cfg.k_min << ", " << cfg.k_max << ")";
    throw InvalidConfig(os.str());
  }
  if (cfg.grid_points < 2) throw InvalidConfig("grid_points must be at least 2");
  if (!(cfg.tol_k > 0.0)) throw InvalidConfig("tol_k must be positive");
  if (!(cfg.null_tol > 0.0)) throw InvalidConfig("null_tol must be positive");
}

ScanConfig default_scan_config(const ValidatedGraph& g) {
  ScanConfig cfg;
  cfg.k_min = 1e-6 * M_PI / g.max_length();
  cfg.k_max = 2.0 / g.min_step() - kBreakpointGuard;
  return cfg;
}

std::vector<std::vector<double>> scan_segments(const ScanTarget& target, const ScanConfig& cfg) {
  check_config(cfg);
  std::vector<std::pair<double, double>> spans;
  double lo = cfg.k_min;
  for (double bp : target.breakpoints) {
    if (bp <= cfg.k_min || bp >= cfg.k_max) continue;
    if (bp - kBreakpointGuard > lo) spans.emplace_back(lo, bp - kBreakpointGuard);
    lo = bp + kBreakpointGuard;
  }
  if (cfg.k_max > lo) spans.emplace_back(lo, cfg.k_max);

  ScalarFn u = [](double k) { return k; };
  if (target.warp) {
    const double w0 = target.warp(cfg.k_min);
    const double share = kUniformShare * (target.warp(cfg.k_max) - w0) / (cfg.k_max - cfg.k_min);
    const ScalarFn& w = target.warp;
    u = [w, share, k0 = cfg.k_min](double k) { return w(k) + share * (k - k0); };
  }

  double total = 0.0;
  for (const auto& [a, b] : spans) total += u(b) - u(a);

  std::vector<std::vector<double>> segments;
  for (const auto& [a, b] : spans) {
    const double ua = u(a), ub = u(b);
    const int n = std::max(8, static_cast<int>(std::lround(cfg.grid_points * (ub - ua) / total)));
    std::vector<double> ks(static_cast<std::size_t>(n));
    ks.front() = a;
    ks.back() = b;
    for (int j = 1; j + 1 < n; ++j) {
      ks[static_cast<std::size_t>(j)] = invert(u, ua + (ub - ua) * j / (n - 1), a, b);
    }
    segments.push_back(std::move(ks));
  }
  return segments;
}

std::vector<double> evaluate_serial(const ScalarFn& f, std::span<const double> ks) {
  std::vector<double> out(ks.size());
  for (std::size_t i = 0; i < ks.size(); ++i) out[i] = f(ks[i]);
  return out;
}

std::vector<double> evaluate_parallel(const ScalarFn& f, std::span<const double> ks) {
  std::vector<double> out(ks.size());
  std::exception_ptr error;
  const auto n = static_cast<std::ptrdiff_t>(ks.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = f(ks[static_cast<std::size_t>(i)]);
    } catch (...) {
#pragma omp critical(dqg_eval_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

RootSet find_roots(const ScanTarget& target, const ScanConfig& cfg) {
  const auto segments = scan_segments(target, cfg);

  std::vector<double> flat;
  for (const auto& s : segments) flat.insert(flat.end(), s.begin(), s.end());
  const std::vector<double> values = cfg.parallel ? evaluate_parallel(target.value, flat) : evaluate_serial(target.value, flat);

  RootSet out;
  out.tol_det = cfg.tol_det > 0.0 ? cfg.tol_det : 1e-9 * median_abs(values);

  std::vector<Candidate> candidates;
  std::size_t offset = 0;
  for (const auto& s : segments) {
    const double* f = values.data() + offset;
    const std::size_t n = s.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (!std::isfinite(f[i])) continue;
      if (f[i] == 0.0) {
        candidates.push_back({Candidate::Exact, s[i], s[i], 0.0, 0.0});
        continue;
      }
      if (i + 1 < n && std::isfinite(f[i + 1]) && opposite(f[i], f[i + 1])) {
        candidates.push_back({Candidate::Bracket, s[i], s[i + 1], f[i], f[i + 1]});
      }
      if (i > 0 && i + 1 < n && std::isfinite(f[i - 1]) && std::isfinite(f[i + 1]) && !opposite(f[i - 1], f[i]) &&
          !opposite(f[i], f[i + 1]) && std::abs(f[i]) < std::abs(f[i - 1]) && std::abs(f[i]) <= std::abs(f[i + 1])) {
        candidates.push_back({Candidate::Minimum, s[i - 1], s[i + 1], f[i - 1], f[i + 1]});
      }
    }
    offset += n;
  }

  const Refiner refiner(target, cfg, out.tol_det);
  std::vector<std::vector<Root>> refined(candidates.size());
  const auto count = static_cast<std::ptrdiff_t>(candidates.size());
  if (cfg.parallel) {
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t c = 0; c < count; ++c) {
      try {
        refined[static_cast<std::size_t>(c)] = refiner.refine(candidates[static_cast<std::size_t>(c)]);
      } catch (...) {
#pragma omp critical(dqg_refine_error)
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
  } else {
    for (std::ptrdiff_t c = 0; c < count; ++c) {
      refined[static_cast<std::size_t>(c)] = refiner.refine(candidates[static_cast<std::size_t>(c)]);
    }
  }

  std::vector<Root> all;
  for (auto& r : refined) all.insert(all.end(), r.begin(), r.end());
  std::sort(all.begin(), all.end(), [](const Root& a, const Root& b) { return a.k < b.k; });
  for (const Root& r : all) {
    if (!out.roots.empty() && r.k - out.roots.back().k < cfg.tol_k) {
      Root& prev = out.roots.back();
      if (!prev.sign_change && r.sign_change) prev = r;
      continue;
    }
    out.roots.push_back(r);
  }

  if (target.nullity) {
    std::vector<int> hints(out.roots.size());
    const auto m = static_cast<std::ptrdiff_t>(out.roots.size());
#pragma omp parallel for schedule(dynamic) if (cfg.parallel)
    for (std::ptrdiff_t i = 0; i < m; ++i) {
      hints[static_cast<std::size_t>(i)] = target.nullity(out.roots[static_cast<std::size_t>(i)].k);
    }
    for (std::size_t i = 0; i < hints.size(); ++i) out.roots[i].multiplicity_hint = std::max(1, hints[i]);
  }
  return out;
}

ScanTarget secular_target(const ValidatedGraph& g, SecularForm form, double null_tol) {
  ScanTarget t;
  t.value = [&g, form](double k) { return secular_determinant(k, g, form); };
  if (form == SecularForm::Full) {
    t.singularity = [&g](double k) { return singularity_ratio(assemble_secular(k, g, SecularForm::Full)); };
    t.nullity = [&g, null_tol](double k) { return numerical_nullity(assemble_secular(k, g, SecularForm::Full), null_tol); };
  } else {
    t.singularity = [&g](double k) { return singularity_ratio(assemble_conditioned(k, g)); };
    t.nullity = [&g, null_tol](double k) { return numerical_nullity(assemble_conditioned(k, g), null_tol); };
  }
  t.warp = [&g](double k) { return lattice_phase(k, g); };
  if (form == SecularForm::Full) t.breakpoints = degenerate_points(g);
  return t;
}

RootSet find_roots(const ValidatedGraph& g, const ScanConfig& cfg, SecularForm form) {
  RootSet roots = find_roots(secular_target(g, form, cfg.null_tol), cfg);
  if (form == SecularForm::Full) {
    for (Root& r : roots.roots) {
      const int nullity = numerical_nullity(assemble_conditioned(r.k, g), cfg.null_tol);
      if (nullity > 0) {
        r.kind = RootKind::Genuine;
        r.multiplicity_hint = nullity;
      } else {
        r.kind = RootKind::BasisDegenerate;
      }
    }
  }
  return roots;
}

std::vector<double> expand_genuine(const RootSet& roots) {
  std::vector<double> ks;
  for (const Root& r : roots.roots) {
    if (r.kind != RootKind::Genuine) continue;
    for (int m = 0; m < r.multiplicity_hint; ++m) ks.push_back(r.k);
  }
  return ks;
}

CheckReport count_check(const RootSet& roots, const ValidatedGraph& g, const ScanConfig& cfg, double tol) {
  const OracleSpectrum spec = oracle_spectrum(assemble_operator(g), cfg.k_min);
  std::vector<double> expected;
  for (double k : spec.k) {
    if (k >= cfg.k_min && k <= cfg.k_max) expected.push_back(k);
  }
  const std::vector<double> found = expand_genuine(roots);

  CheckReport report;
  report.expected = static_cast<int>(expected.size());
  report.found = static_cast<int>(found.size());
  if (report.expected != report.found) {
    report.discrepancies.push_back("count: oracle " + std::to_string(report.expected) + ", secular " +
                                   std::to_string(report.found));
  }
  const std::size_t n = std::min(expected.size(), found.size());
  for (std::size_t i = 0; i < n; ++i) {
    const double d = std::abs(expected[i] - found[i]);
    report.max_abs_diff = std::max(report.max_abs_diff, d);
    if (d > tol) {
      std::ostringstream os;
      os.precision(12);
      os << "#" << i + 1 << ": oracle " << expected[i] << ", secular " << found[i];
      report.discrepancies.push_back(os.str());
    }
  }
  return report;
}

}  // namespace dqg
