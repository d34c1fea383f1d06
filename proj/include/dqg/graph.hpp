#pragma once

#include <complex>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dqg/errors.hpp"

namespace dqg {

// Edge (i, j) of a discrete graph. Vertices are 1-based; after validation i < j.
// The edge carries the lattice x_n = n * step(), n = 0..points, running from
// vertex i (n = 0) to vertex j (n = points).
struct EdgeSpec {
  int i = 0;
  int j = 0;
  double length = 0.0;
  int points = 0;

  double step() const { return length / points; }

  friend bool operator==(const EdgeSpec&, const EdgeSpec&) = default;
};

struct GraphSpec {
  int vertices = 0;
  std::vector<EdgeSpec> edges;
  std::map<int, double> lambda;  // omitted vertices use 0 (Kirchhoff rule)
  std::vector<int> dirichlet;    // vertices pinned to phi = 0
};

enum class ViolationKind {
  NoVertices,
  SelfLoop,
  DuplicateEdge,
  NonPositiveLength,
  TooFewPoints,
  DanglingVertexReference,
  NonFiniteValue,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string message;
};

class ValidationError : public InputError {
 public:
  explicit ValidationError(std::vector<Violation> violations);

  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  std::vector<Violation> violations_;
};

class ValidatedGraph {
 public:
  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  // Edges sorted lexicographically by (i, j); edge indices below are 0-based into this list.
  const std::vector<EdgeSpec>& edges() const { return edges_; }
  const EdgeSpec& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }

  // Vertex accessors take 1-based vertex ids.
  double lambda(int v) const { return lambda_[index(v)]; }
  bool pinned(int v) const { return pinned_[index(v)]; }
  int degree(int v) const { return degree_[index(v)]; }

  // Vertex rows that reduce to phi_v = 0: pinned vertices and isolated ones.
  bool fixed_zero(int v) const { return pinned(v) || degree(v) == 0; }

  double min_step() const;
  double max_step() const;
  double max_length() const;
  double min_length() const;
  bool connected() const { return connected_; }

  const std::vector<std::string>& warnings() const { return warnings_; }

  // Round-trips through validate() unchanged.
  GraphSpec spec() const;

  friend bool operator==(const ValidatedGraph&, const ValidatedGraph&) = default;

 private:
  friend ValidatedGraph validate(const GraphSpec& spec);

  static std::size_t index(int v) { return static_cast<std::size_t>(v - 1); }

  int vertex_count_ = 0;
  std::vector<EdgeSpec> edges_;
  std::vector<double> lambda_;
  std::vector<bool> pinned_;
  std::vector<int> degree_;
  bool connected_ = true;
  std::vector<std::string> warnings_;
};

// Normalizes (orders endpoints, sorts edges) and checks a graph; throws
// ValidationError listing every violation found.
ValidatedGraph validate(const GraphSpec& spec);

// Star with center 1 and leaves 2..E+1; every edge uses the common step.
GraphSpec star_spec(std::span<const double> lengths, double step);
// Single edge (1, 2); optionally both ends pinned.
GraphSpec chain_spec(double length, int points, bool pinned_ends = false);

// Number of intervals for a length at a given step; throws NonIntegerN when
// length/step is not an integer to within 1e-9 relative.
int intervals_for(double length, double step);

// Complex samples on every edge, values[e][n] for n = 0..N_e.
struct LatticeFunction {
  std::vector<std::vector<std::complex<double>>> values;
};

LatticeFunction zero_function(const ValidatedGraph& g);
void check_shape(const LatticeFunction& f, const ValidatedGraph& g);

// Unweighted Euclidean sum over every sample of every edge: sum psi * conj(phi).
std::complex<double> inner_product(const LatticeFunction& psi, const LatticeFunction& phi,
                                   const ValidatedGraph& g);

}  // namespace dqg
