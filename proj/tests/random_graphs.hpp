#pragma once

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "dqg/graph.hpp"

namespace testgen {

struct RandomGraphOptions {
  int max_vertices = 5;
  int max_edges = 6;
  int min_points = 4;
  int max_points = 12;
  bool common_step = false;
  bool random_lambda = true;
};

// Random simple graph; lengths drawn from [0.5, 1.5) so that they look rationally independent.
inline dqg::GraphSpec random_graph(std::mt19937_64& rng, const RandomGraphOptions& opt = {}) {
  std::uniform_int_distribution<int> vdist(2, opt.max_vertices);
  const int V = vdist(rng);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= V; ++i) {
    for (int j = i + 1; j <= V; ++j) pairs.emplace_back(i, j);
  }
  std::shuffle(pairs.begin(), pairs.end(), rng);
  const int max_e = std::min<int>(opt.max_edges, static_cast<int>(pairs.size()));
  const int E = std::uniform_int_distribution<int>(1, max_e)(rng);

  std::uniform_int_distribution<int> ndist(opt.min_points, opt.max_points);
  std::uniform_real_distribution<double> ldist(0.5, 1.5);
  const double step = std::uniform_real_distribution<double>(0.05, 0.15)(rng);

  dqg::GraphSpec spec;
  spec.vertices = V;
  for (int e = 0; e < E; ++e) {
    const int N = ndist(rng);
    const double L = opt.common_step ? N * step : ldist(rng);
    spec.edges.push_back({pairs[static_cast<std::size_t>(e)].first, pairs[static_cast<std::size_t>(e)].second, L, N});
  }
  if (opt.random_lambda) {
    const double choices[] = {0.0, 0.5, 1.0};
    std::uniform_int_distribution<int> cdist(0, 2);
    for (int v = 1; v <= V; ++v) spec.lambda[v] = choices[cdist(rng)];
  }
  return spec;
}

}  // namespace testgen
