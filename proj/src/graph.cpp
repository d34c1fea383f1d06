#include "dqg/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

namespace dqg {

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::NoVertices: return "NoVertices";
    case ViolationKind::SelfLoop: return "SelfLoop";
    case ViolationKind::DuplicateEdge: return "DuplicateEdge";
    case ViolationKind::NonPositiveLength: return "NonPositiveLength";
    case ViolationKind::TooFewPoints: return "TooFewPoints";
    case ViolationKind::DanglingVertexReference: return "DanglingVertexReference";
    case ViolationKind::NonFiniteValue: return "NonFiniteValue";
  }
  return "Unknown";
}

namespace {

std::string join_violations(const std::vector<Violation>& violations) {
  std::ostringstream os;
  os << "invalid graph:";
  for (const auto& v : violations) {
    os << "\n  " << to_string(v.kind) << ": " << v.message;
  }
  return os.str();
}

std::string edge_name(const EdgeSpec& e) {
  return "(" + std::to_string(e.i) + "," + std::to_string(e.j) + ")";
}

}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : InputError(join_violations(violations)), violations_(std::move(violations)) {}

double ValidatedGraph::min_step() const {
  double s = edges_.front().step();
  for (const auto& e : edges_) s = std::min(s, e.step());
  return s;
}

double ValidatedGraph::max_step() const {
  double s = edges_.front().step();
  for (const auto& e : edges_) s = std::max(s, e.step());
  return s;
}

double ValidatedGraph::max_length() const {
  double l = edges_.front().length;
  for (const auto& e : edges_) l = std::max(l, e.length);
  return l;
}

double ValidatedGraph::min_length() const {
  double l = edges_.front().length;
  for (const auto& e : edges_) l = std::min(l, e.length);
  return l;
}

GraphSpec ValidatedGraph::spec() const {
  GraphSpec s;
  s.vertices = vertex_count_;
  s.edges = edges_;
  for (int v = 1; v <= vertex_count_; ++v) {
    if (lambda(v) != 0.0) s.lambda[v] = lambda(v);
    if (pinned(v)) s.dirichlet.push_back(v);
  }
  return s;
}

ValidatedGraph validate(const GraphSpec& spec) {
  std::vector<Violation> violations;
  const int V = spec.vertices;
  if (V < 1) {
    violations.push_back({ViolationKind::NoVertices, "vertex count must be at least 1"});
  }
  if (spec.edges.empty()) {
    violations.push_back({ViolationKind::NoVertices, "graph has no edges"});
  }

  auto in_range = [V](int v) { return v >= 1 && v <= V; };

  std::vector<EdgeSpec> edges;
  std::set<std::pair<int, int>> seen;
  for (EdgeSpec e : spec.edges) {
    if (e.i > e.j) std::swap(e.i, e.j);
    const std::string name = edge_name(e);
    bool ok = true;
    if (e.i == e.j) {
      violations.push_back({ViolationKind::SelfLoop, "edge " + name + " is a loop"});
      ok = false;
    }
    if (!in_range(e.i) || !in_range(e.j)) {
      violations.push_back({ViolationKind::DanglingVertexReference,
                            "edge " + name + " references a vertex outside 1.." + std::to_string(V)});
      ok = false;
    }
    if (!std::isfinite(e.length)) {
      violations.push_back({ViolationKind::NonFiniteValue, "edge " + name + " has a non-finite length"});
      ok = false;
    } else if (e.length <= 0.0) {
      violations.push_back({ViolationKind::NonPositiveLength, "edge " + name + " has length <= 0"});
      ok = false;
    }
    if (e.points < 2) {
      violations.push_back({ViolationKind::TooFewPoints,
                            "edge " + name + " needs at least 2 lattice intervals"});
      ok = false;
    }
    if (e.i != e.j && !seen.insert({e.i, e.j}).second) {
      violations.push_back({ViolationKind::DuplicateEdge, "edge " + name + " appears more than once"});
      ok = false;
    }
    if (ok) edges.push_back(e);
  }

  for (const auto& [v, value] : spec.lambda) {
    if (!in_range(v)) {
      violations.push_back({ViolationKind::DanglingVertexReference,
                            "lambda given for unknown vertex " + std::to_string(v)});
    } else if (!std::isfinite(value)) {
      violations.push_back({ViolationKind::NonFiniteValue,
                            "lambda for vertex " + std::to_string(v) + " is not finite"});
    }
  }
  for (int v : spec.dirichlet) {
    if (!in_range(v)) {
      violations.push_back({ViolationKind::DanglingVertexReference,
                            "dirichlet pin on unknown vertex " + std::to_string(v)});
    }
  }

  if (!violations.empty()) throw ValidationError(std::move(violations));

  std::sort(edges.begin(), edges.end(), [](const EdgeSpec& a, const EdgeSpec& b) {
    return std::pair(a.i, a.j) < std::pair(b.i, b.j);
  });

  ValidatedGraph g;
  g.vertex_count_ = V;
  g.edges_ = std::move(edges);
  g.lambda_.assign(static_cast<std::size_t>(V), 0.0);
  g.pinned_.assign(static_cast<std::size_t>(V), false);
  g.degree_.assign(static_cast<std::size_t>(V), 0);
  for (const auto& [v, value] : spec.lambda) g.lambda_[ValidatedGraph::index(v)] = value;
  for (int v : spec.dirichlet) g.pinned_[ValidatedGraph::index(v)] = true;

  // Union-find over vertices for the connectivity warning.
  std::vector<int> parent(static_cast<std::size_t>(V));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const auto& e : g.edges_) {
    ++g.degree_[ValidatedGraph::index(e.i)];
    ++g.degree_[ValidatedGraph::index(e.j)];
    parent[static_cast<std::size_t>(find(e.i - 1))] = find(e.j - 1);
  }
  std::set<int> components;
  for (int v = 0; v < V; ++v) components.insert(find(v));
  g.connected_ = components.size() == 1;
  if (!g.connected_) {
    g.warnings_.push_back("graph is disconnected (" + std::to_string(components.size()) + " components)");
  }
  for (int v = 1; v <= V; ++v) {
    if (g.degree(v) == 0) {
      g.warnings_.push_back("vertex " + std::to_string(v) + " is isolated; its value is pinned to 0");
    }
  }
  return g;
}

int intervals_for(double length, double step) {
  if (!(length > 0.0) || !(step > 0.0)) {
    throw NonIntegerN("length and step must be positive");
  }
  const double ratio = length / step;
  const double n = std::round(ratio);
  if (n < 1.0 || std::abs(ratio - n) > 1e-9 * std::max(1.0, ratio)) {
    std::ostringstream os;
    os << "step " << step << " does not divide length " << length << " into an integer count";
    throw NonIntegerN(os.str());
  }
  return static_cast<int>(n);
}

GraphSpec star_spec(std::span<const double> lengths, double step) {
  GraphSpec s;
  s.vertices = static_cast<int>(lengths.size()) + 1;
  for (std::size_t e = 0; e < lengths.size(); ++e) {
    s.edges.push_back({1, static_cast<int>(e) + 2, lengths[e], intervals_for(lengths[e], step)});
  }
  return s;
}

GraphSpec chain_spec(double length, int points, bool pinned_ends) {
  GraphSpec s;
  s.vertices = 2;
  s.edges.push_back({1, 2, length, points});
  if (pinned_ends) s.dirichlet = {1, 2};
  return s;
}

LatticeFunction zero_function(const ValidatedGraph& g) {
  LatticeFunction f;
  f.values.reserve(g.edges().size());
  for (const auto& e : g.edges()) {
    f.values.emplace_back(static_cast<std::size_t>(e.points) + 1, std::complex<double>{});
  }
  return f;
}

void check_shape(const LatticeFunction& f, const ValidatedGraph& g) {
  if (f.values.size() != g.edges().size()) {
    throw ShapeMismatch("lattice function has " + std::to_string(f.values.size()) + " edges, graph has " +
                        std::to_string(g.edges().size()));
  }
  for (std::size_t e = 0; e < f.values.size(); ++e) {
    const auto expected = static_cast<std::size_t>(g.edges()[e].points) + 1;
    if (f.values[e].size() != expected) {
      throw ShapeMismatch("edge " + std::to_string(e) + " has " + std::to_string(f.values[e].size()) +
                          " samples, expected " + std::to_string(expected));
    }
  }
}

std::complex<double> inner_product(const LatticeFunction& psi, const LatticeFunction& phi,
                                   const ValidatedGraph& g) {
  check_shape(psi, g);
  check_shape(phi, g);
  std::complex<double> sum{};
  for (std::size_t e = 0; e < psi.values.size(); ++e) {
    for (std::size_t n = 0; n < psi.values[e].size(); ++n) {
      sum += psi.values[e][n] * std::conj(phi.values[e][n]);
    }
  }
  return sum;
}

}  // namespace dqg
