#include "dqg/cli.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "dqg/basis.hpp"
#include "dqg/eigenfunctions.hpp"
#include "dqg/format.hpp"
#include "dqg/oracle.hpp"
#include "dqg/rootfind.hpp"
#include "dqg/spec_io.hpp"

namespace dqg {

using nlohmann::json;

namespace {

constexpr int kOracleDimLimit = 3000;

std::string cell(const std::optional<double>& v, bool precise) {
  if (!v) return "";
  return precise ? full(*v) : fixed(*v);
}

const char* to_string(ChainPath p) {
  switch (p) {
    case ChainPath::ClosedForm: return "closedform";
    case ChainPath::Secular: return "secular";
    case ChainPath::Oracle: return "oracle";
    case ChainPath::All: return "all";
  }
  return "all";
}

std::optional<double> at(const std::vector<double>& v, std::size_t i) {
  if (i < v.size()) return v[i];
  return std::nullopt;
}

}  // namespace

CommandResult run_chain(const ChainOptions& opt) {
  const ChainProblem p{opt.length, opt.points, opt.boundary};
  check_chain(p);
  if (opt.modes < 1) throw InvalidConfig("--modes must be at least 1");
  const bool all = opt.which == ChainPath::All;

  std::vector<double> closed, secular, oracle;
  if (all || opt.which == ChainPath::ClosedForm) closed = chain_eigenvalues(p);
  if (all || opt.which == ChainPath::Secular || opt.which == ChainPath::Oracle) {
    const ValidatedGraph g = validate(chain_graph(p));
    const ScanConfig cfg = default_scan_config(g);
    if (all || opt.which == ChainPath::Secular) secular = expand_genuine(find_roots(g, cfg, SecularForm::Reduced));
    if (all || opt.which == ChainPath::Oracle) oracle = oracle_spectrum(assemble_operator(g), cfg.k_min).k;
  }

  const std::size_t rows = std::min<std::size_t>(static_cast<std::size_t>(opt.modes),
                                                 std::max({closed.size(), secular.size(), oracle.size()}));
  std::string coarse = "m,k_closedform,k_secular,k_oracle,k_continuous,abs_err_vs_continuous\n";
  std::string precise = coarse;
  for (std::size_t i = 0; i < rows; ++i) {
    const int m = static_cast<int>(i) + 1;
    const double cont = M_PI * m / opt.length;
    const auto c = at(closed, i), s = at(secular, i), o = at(oracle, i);
    std::optional<double> err;
    if (const auto first = c ? c : (s ? s : o)) err = std::abs(*first - cont);
    for (bool hi : {false, true}) {
      (hi ? precise : coarse) += csv_line({std::to_string(m), cell(c, hi), cell(s, hi), cell(o, hi), cell(cont, hi), cell(err, hi)});
    }
  }

  CommandResult out;
  out.config = {{"command", "chain"},
                {"length", opt.length},
                {"points", opt.points},
                {"boundary", opt.boundary == Boundary::Dirichlet ? "dirichlet" : "neumann"},
                {"which", to_string(opt.which)},
                {"modes", opt.modes}};
  out.input_hash = hex64(fnv1a64(out.config.dump()));
  out.artifacts = {{"chain.csv", coarse}, {"chain_full.csv", precise}};
  out.table = coarse;
  return out;
}

CommandResult run_graph(const GraphOptions& opt) {
  std::ifstream in(opt.spec, std::ios::binary);
  if (!in) throw ParseError("cannot open " + opt.spec.string());
  std::ostringstream raw;
  raw << in.rdbuf();
  GraphSpec spec = parse_graph_spec(raw.str());
  if (opt.step) spec = with_step(std::move(spec), *opt.step);
  const ValidatedGraph g = validate(spec);

  ScanConfig cfg = default_scan_config(g);
  if (opt.k_min) cfg.k_min = *opt.k_min;
  if (opt.k_max) cfg.k_max = *opt.k_max;
  if (opt.grid) cfg.grid_points = *opt.grid;
  cfg.parallel = opt.parallel;
  check_config(cfg);

  CommandResult out;
  out.warnings = g.warnings();
  const RootSet roots = find_roots(g, cfg, opt.roots);

  std::vector<double> oracle_k;
  bool have_oracle = false;
  const AssembledOperator op = assemble_operator(g);
  if (op.dim <= kOracleDimLimit) {
    for (double k : oracle_spectrum(op, cfg.k_min).k) {
      if (k >= cfg.k_min && k <= cfg.k_max) oracle_k.push_back(k);
    }
    have_oracle = true;
  } else {
    out.warnings.push_back("oracle skipped: interior dimension " + std::to_string(op.dim) + " exceeds " +
                           std::to_string(kOracleDimLimit));
  }

  std::size_t rows = roots.roots.size();
  if (opt.modes) rows = std::min(rows, static_cast<std::size_t>(std::max(0, *opt.modes)));

  std::string coarse = "index,k,multiplicity,det_residual,oracle_k,abs_diff,kind\n";
  std::string precise = coarse;
  std::size_t position = 0;  // position in the genuine list expanded by multiplicity
  double worst = 0.0;
  for (std::size_t i = 0; i < roots.roots.size(); ++i) {
    const Root& r = roots.roots[i];
    std::optional<double> ok, diff;
    if (r.kind == RootKind::Genuine) {
      if (have_oracle && position < oracle_k.size()) {
        ok = oracle_k[position];
        double d = 0.0;
        for (int j = 0; j < r.multiplicity_hint; ++j) {
          if (position + static_cast<std::size_t>(j) < oracle_k.size()) {
            d = std::max(d, std::abs(oracle_k[position + static_cast<std::size_t>(j)] - r.k));
          }
        }
        diff = d;
        worst = std::max(worst, d);
      }
      position += static_cast<std::size_t>(r.multiplicity_hint);
    }
    if (i >= rows) continue;
    for (bool hi : {false, true}) {
      (hi ? precise : coarse) += csv_line({std::to_string(i + 1), hi ? full(r.k) : fixed(r.k),
                                            std::to_string(r.multiplicity_hint), full(r.det_residual), cell(ok, hi),
                                            cell(diff, hi), to_string(r.kind)});
    }
  }
  out.artifacts = {{"eigenvalues.csv", coarse}, {"eigenvalues_full.csv", precise}};
  out.table = coarse;

  if (opt.emit_eigenfunctions) {
    for (std::size_t i = 0; i < rows; ++i) {
      const Root& r = roots.roots[i];
      if (r.kind != RootKind::Genuine) continue;
      const auto modes = eigenmodes(r.k, g, cfg.null_tol);
      for (std::size_t j = 0; j < modes.size(); ++j) {
        std::string body = "edge,n,x,psi\n";
        for (int e = 0; e < g.edge_count(); ++e) {
          const EdgeSpec& edge = g.edge(e);
          const auto& p = modes[j].samples.values[static_cast<std::size_t>(e)];
          for (int n = 0; n <= edge.points; ++n) {
            body += csv_line({std::to_string(edge.i) + "-" + std::to_string(edge.j), std::to_string(n),
                              full(n * edge.step()), full(p[static_cast<std::size_t>(n)].real())});
          }
        }
        std::string name = "mode_" + std::to_string(i + 1);
        if (modes.size() > 1) name += "_" + std::to_string(j + 1);
        out.artifacts.push_back({name + ".csv", body});
      }
    }
  }

  if (opt.oracle_check) {
    const std::size_t found = expand_genuine(roots).size();
    if (!have_oracle) {
      out.exit_code = 4;
      out.error = "oracle check requested but the oracle was skipped";
    } else if (found != oracle_k.size() || worst > kOracleCheckTolerance) {
      std::ostringstream os;
      os << "oracle mismatch: " << found << " secular vs " << oracle_k.size() << " oracle eigenvalues, max |diff| = "
         << worst;
      out.exit_code = 4;
      out.error = os.str();
    }
  }

  out.config = {{"command", "graph"},
                {"spec", opt.spec.filename().string()},
                {"k_min", cfg.k_min},
                {"k_max", cfg.k_max},
                {"grid", cfg.grid_points},
                {"tol_k", cfg.tol_k},
                {"tol_det", roots.tol_det},
                {"null_tol", cfg.null_tol},
                {"roots", opt.roots == SecularForm::Full ? "full" : "genuine"},
                {"emit_eigenfunctions", opt.emit_eigenfunctions},
                {"oracle_check", opt.oracle_check}};
  if (opt.step) out.config["step"] = *opt.step;
  if (opt.modes) out.config["modes"] = *opt.modes;
  out.input_hash = hex64(fnv1a64(raw.str()));
  return out;
}

CommandResult run_fig1(const Fig1Options& opt) {
  if (opt.steps.empty()) throw InvalidConfig("fig1 needs at least one step");
  if (!(opt.xmax > 0.0)) throw InvalidConfig("xmax must be positive");
  double finest = opt.steps.front();
  for (double a : opt.steps) {
    if (!(a > 0.0) || !std::isfinite(a)) throw InvalidConfig("steps must be positive");
    finest = std::min(finest, a);
  }

  CommandResult out;
  for (double a : opt.steps) {
    std::string body = "# x psi\n";
    const int n_max = static_cast<int>(std::floor(opt.xmax / a + 1e-9));
    for (int n = 0; n <= n_max; ++n) {
      const double psi = evaluate_exact_solution(opt.k, a, opt.A, opt.B, n).real();
      body += full(n * a) + " " + full(psi) + "\n";
    }
    out.artifacts.push_back({"fig1_a" + shortest(a) + ".dat", body});
  }

  std::string body = "# x psi\n";
  const double dx = finest / 10.0;
  const int n_max = static_cast<int>(std::floor(opt.xmax / dx + 1e-9));
  for (int n = 0; n <= n_max; ++n) {
    const double x = n * dx;
    const double psi = (opt.A + opt.B) * std::cos(opt.k * x);
    body += full(x) + " " + full(psi) + "\n";
  }
  out.artifacts.push_back({"fig1_continuum.dat", body});

  std::vector<double> steps = opt.steps;
  out.config = {{"command", "fig1"}, {"k", opt.k}, {"A", opt.A}, {"B", opt.B}, {"steps", steps}, {"xmax", opt.xmax}};
  out.input_hash = hex64(fnv1a64(out.config.dump()));
  std::ostringstream table;
  for (const auto& a : out.artifacts) table << a.name << "\n";
  out.table = table.str();
  return out;
}

}  // namespace dqg
