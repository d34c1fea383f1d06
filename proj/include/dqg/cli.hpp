#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dqg/chain.hpp"
#include "dqg/secular.hpp"

namespace dqg {

struct Artifact {
  std::string name;
  std::string content;
};

struct CommandResult {
  std::vector<Artifact> artifacts;
  std::string table;  // human-readable output for stdout
  nlohmann::json config;
  std::string input_hash;
  std::vector<std::string> warnings;
  int exit_code = 0;
  std::string error;
};

enum class ChainPath { ClosedForm, Secular, Oracle, All };

struct ChainOptions {
  double length = 1.0;
  int points = 10;
  Boundary boundary = Boundary::Dirichlet;
  ChainPath which = ChainPath::All;
  int modes = 5;
};

struct GraphOptions {
  std::filesystem::path spec;
  std::optional<double> step;
  std::optional<double> k_min;
  std::optional<double> k_max;
  std::optional<int> grid;
  std::optional<int> modes;
  bool emit_eigenfunctions = false;
  bool oracle_check = false;
  SecularForm roots = SecularForm::Full;
  bool parallel = true;
};

struct Fig1Options {
  double k = 0.8;
  double A = 1.0;
  double B = 1.0;
  std::vector<double> steps{1.0, 0.5, 0.1};
  double xmax = 20.0;
};

CommandResult run_chain(const ChainOptions& opt);
CommandResult run_graph(const GraphOptions& opt);
CommandResult run_fig1(const Fig1Options& opt);

inline constexpr double kOracleCheckTolerance = 1e-6;

}  // namespace dqg
