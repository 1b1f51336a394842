#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace altan {

// Bad or inconsistent input (rejected by construction or validation).
class validation_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Structurally valid input for which the requested construction does not
// exist (e.g. a boundary code whose walk does not close).
class infeasible_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Unordered vertex pair. Loops (u == v) and parallel edges are permitted
// everywhere; several constructions below depend on them.
struct Edge {
  int u = 0;
  int v = 0;

  bool is_loop() const { return u == v; }
  int other(int w) const { return w == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Finite multigraph on vertex labels 0..n-1. Immutable after construction.
class Graph {
public:
  Graph() = default;
  Graph(int order, std::vector<Edge> edges);

  int order() const { return order_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_.at(static_cast<std::size_t>(e)); }

  // Loops count twice, as usual for multigraphs.
  int valence(int v) const { return valence_.at(static_cast<std::size_t>(v)); }

  // Incident edge indices; a loop appears twice in its vertex's list.
  std::span<const int> incident(int v) const;

  // Number of edges joining u and v (loops: u == v).
  int multiplicity(int u, int v) const;

  bool has_loop() const;

private:
  int order_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> valence_;
  std::vector<int> incident_flat_;
  std::vector<int> incident_start_;  // size order_+1
};

inline Graph build_graph(int order, std::vector<Edge> edges) {
  return Graph(order, std::move(edges));
}

// Proper 2-coloring. For each connected component the smallest vertex is
// black, which makes the coloring deterministic.
struct Bipartition {
  std::vector<std::uint8_t> color;  // 0 = black, 1 = white

  bool is_black(int v) const { return color.at(static_cast<std::size_t>(v)) == 0; }
};

// Empty iff the graph contains an odd closed walk (loops included).
std::optional<Bipartition> bipartition(const Graph& g);

// True iff S can be made monochromatic by swapping colors per component,
// i.e. each component's share of S is monochromatic. For connected graphs
// this is plain monochromaticity.
bool root_monochromatic(const Graph& g, const Bipartition& bip, std::span<const int> root);

bool is_connected(const Graph& g);

// No cut vertex and connected. Loops are ignored; a double edge is
// 2-connected. Order-1 graphs pass vacuously.
bool is_two_connected(const Graph& g);

// Cyclically ordered sequence of distinct vertices. The stored starting
// point and direction are preserved exactly as given.
class PeripheralRoot {
public:
  PeripheralRoot() = default;
  explicit PeripheralRoot(std::vector<int> vertices);

  int size() const { return static_cast<int>(vertices_.size()); }
  bool empty() const { return vertices_.empty(); }
  int at(int i) const { return vertices_.at(static_cast<std::size_t>(i)); }
  const std::vector<int>& vertices() const { return vertices_; }

private:
  std::vector<int> vertices_;
};

struct RootedGraph {
  Graph graph;
  PeripheralRoot root;
};

// Validates that all root vertices exist in g.
RootedGraph make_rooted(Graph g, PeripheralRoot root);

}  // namespace altan
