#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "dqg/graph.hpp"

namespace dqg {

// Graph-spec files are JSON objects:
//
//   {
//     "format_version": 1,
//     "vertices": 4,
//     "edges": [{"i": 1, "j": 2, "length": 0.8, "points": 8}, ...],
//     "lambda": {"1": 0.5},      optional, keys are vertex ids
//     "dirichlet": [2, 3]        optional, vertices pinned to zero
//   }
//
// "points" may be replaced by "step" when the step divides the length.
inline constexpr int kSpecFormatVersion = 1;

GraphSpec parse_graph_spec(std::string_view text);
GraphSpec load_graph_spec(const std::filesystem::path& path);
std::string dump_graph_spec(const GraphSpec& spec);

// Overrides the lattice on every edge so that each uses the given step.
GraphSpec with_step(GraphSpec spec, double step);

}  // namespace dqg
