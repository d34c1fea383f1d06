#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dqg/cli.hpp"
#include "dqg/errors.hpp"
#include "dqg/graph.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;
constexpr int kExitNumerical = 4;

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

int emit(const dqg::CommandResult& result, const std::string& out_dir, const std::string& command_line,
         std::chrono::steady_clock::time_point start) {
  for (const auto& w : result.warnings) std::cerr << "warning: " << w << "\n";
  if (out_dir.empty()) {
    std::cout << result.table;
  } else {
    const fs::path dir(out_dir);
    fs::create_directories(dir);
    nlohmann::json manifest;
    manifest["command"] = command_line;
    manifest["config"] = result.config;
    manifest["input_hash"] = "fnv1a64:" + result.input_hash;
    manifest["artifacts"] = nlohmann::json::array();
    for (const auto& a : result.artifacts) {
      write_file(dir / a.name, a.content);
      manifest["artifacts"].push_back(a.name);
    }
    const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    manifest["wall_time_s"] = elapsed;
    write_file(dir / "manifest.json", manifest.dump(2) + "\n");
    std::cout << "wrote " << result.artifacts.size() << " files to " << dir.string() << "\n";
  }
  if (result.exit_code != 0) std::cerr << "error: " << result.error << "\n";
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  const auto start = std::chrono::steady_clock::now();
  std::string command_line;
  for (int i = 0; i < argc; ++i) command_line += (i ? " " : "") + std::string(argv[i]);

  CLI::App app{"Spectra of discrete quantum graphs"};
  app.require_subcommand(1);
  std::string out_dir;
  app.add_option("--out", out_dir, "Write CSV files and manifest.json into this directory");

  dqg::ChainOptions chain;
  auto* chain_cmd = app.add_subcommand("chain", "Single chain: closed form, secular and oracle spectra");
  chain_cmd->add_option("--length", chain.length, "Chain length")->capture_default_str();
  chain_cmd->add_option("--points", chain.points, "Number of lattice intervals N")->capture_default_str();
  chain_cmd->add_option("--boundary", chain.boundary, "dirichlet or neumann")
      ->transform(CLI::CheckedTransformer(std::map<std::string, dqg::Boundary>{
          {"dirichlet", dqg::Boundary::Dirichlet}, {"neumann", dqg::Boundary::Neumann}}));
  chain_cmd->add_option("--which", chain.which, "closedform, secular, oracle or all")
      ->transform(CLI::CheckedTransformer(std::map<std::string, dqg::ChainPath>{
          {"closedform", dqg::ChainPath::ClosedForm},
          {"secular", dqg::ChainPath::Secular},
          {"oracle", dqg::ChainPath::Oracle},
          {"all", dqg::ChainPath::All}}));
  chain_cmd->add_option("--modes", chain.modes, "Number of eigenvalues to list")->capture_default_str();

  dqg::GraphOptions graph;
  std::string spec_path;
  auto* graph_cmd = app.add_subcommand("graph", "Secular roots of a graph spec, checked against the oracle");
  graph_cmd->add_option("spec", spec_path, "Graph spec file (JSON)")->required()->check(CLI::ExistingFile);
  graph_cmd->add_option("--step", graph.step, "Use this lattice step on every edge");
  graph_cmd->add_option("--kmin", graph.k_min, "Lower end of the scan");
  graph_cmd->add_option("--kmax", graph.k_max, "Upper end of the scan");
  graph_cmd->add_option("--grid", graph.grid, "Scan grid points");
  graph_cmd->add_option("--modes", graph.modes, "List only the first M roots");
  graph_cmd->add_option("--roots", graph.roots, "full (F-basis matrix, roots classified) or genuine (reduced matrix)")
      ->transform(CLI::CheckedTransformer(std::map<std::string, dqg::SecularForm>{
          {"full", dqg::SecularForm::Full}, {"genuine", dqg::SecularForm::Reduced}}));
  graph_cmd->add_flag("--emit-eigenfunctions", graph.emit_eigenfunctions, "Write one mode_<i>.csv per genuine root");
  graph_cmd->add_flag("--oracle-check", graph.oracle_check, "Exit 4 unless the roots match the oracle to 1e-6");
  bool serial = false;
  graph_cmd->add_flag("--serial", serial, "Disable OpenMP in the scan");

  dqg::Fig1Options fig1;
  auto* fig1_cmd = app.add_subcommand("fig1", "Lattice solution A g+^n + B g-^n against its continuum limit");
  fig1_cmd->add_option("--k", fig1.k, "Wavenumber")->capture_default_str();
  fig1_cmd->add_option("--A", fig1.A, "Coefficient of g+^n")->capture_default_str();
  fig1_cmd->add_option("--B", fig1.B, "Coefficient of g-^n")->capture_default_str();
  fig1_cmd->add_option("--steps", fig1.steps, "Lattice steps, comma separated")->delimiter(',')->capture_default_str();
  fig1_cmd->add_option("--xmax", fig1.xmax, "Sample x in [0, xmax]")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    dqg::CommandResult result;
    if (*chain_cmd) {
      result = dqg::run_chain(chain);
    } else if (*graph_cmd) {
      graph.spec = spec_path;
      graph.parallel = !serial;
      result = dqg::run_graph(graph);
    } else {
      result = dqg::run_fig1(fig1);
    }
    return emit(result, out_dir, command_line, start);
  } catch (const dqg::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const dqg::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
}
