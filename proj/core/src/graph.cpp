#include "altan/graph.hpp"

#include <algorithm>
#include <queue>

namespace altan {

Graph::Graph(int order, std::vector<Edge> edges)
    : order_(order), edges_(std::move(edges)) {
  if (order_ < 0) throw validation_error("graph order must be nonnegative");
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u < 0 || e.u >= order_ || e.v < 0 || e.v >= order_)
      throw validation_error("edge " + std::to_string(i) + " endpoint out of range");
  }
  valence_.assign(static_cast<std::size_t>(order_), 0);
  for (const Edge& e : edges_) {
    ++valence_[static_cast<std::size_t>(e.u)];
    ++valence_[static_cast<std::size_t>(e.v)];
  }
  incident_start_.assign(static_cast<std::size_t>(order_) + 1, 0);
  for (int v = 0; v < order_; ++v)
    incident_start_[static_cast<std::size_t>(v) + 1] =
        incident_start_[static_cast<std::size_t>(v)] + valence_[static_cast<std::size_t>(v)];
  incident_flat_.resize(static_cast<std::size_t>(incident_start_.back()));
  std::vector<int> fill(incident_start_.begin(), incident_start_.end() - 1);
  for (int e = 0; e < size(); ++e) {
    incident_flat_[static_cast<std::size_t>(fill[static_cast<std::size_t>(edges_[static_cast<std::size_t>(e)].u)]++)] = e;
    incident_flat_[static_cast<std::size_t>(fill[static_cast<std::size_t>(edges_[static_cast<std::size_t>(e)].v)]++)] = e;
  }
}

std::span<const int> Graph::incident(int v) const {
  if (v < 0 || v >= order_) throw validation_error("vertex out of range");
  auto begin = incident_flat_.data() + incident_start_[static_cast<std::size_t>(v)];
  auto end = incident_flat_.data() + incident_start_[static_cast<std::size_t>(v) + 1];
  return {begin, end};
}

int Graph::multiplicity(int u, int v) const {
  int count = 0;
  for (const Edge& e : edges_)
    if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) ++count;
  return count;
}

bool Graph::has_loop() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); });
}

std::optional<Bipartition> bipartition(const Graph& g) {
  if (g.has_loop()) return std::nullopt;
  std::vector<std::uint8_t> color(static_cast<std::size_t>(g.order()), 2);
  for (int start = 0; start < g.order(); ++start) {
    if (color[static_cast<std::size_t>(start)] != 2) continue;
    color[static_cast<std::size_t>(start)] = 0;  // smallest vertex of the component
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int e : g.incident(v)) {
        int w = g.edge(e).other(v);
        if (color[static_cast<std::size_t>(w)] == 2) {
          color[static_cast<std::size_t>(w)] = static_cast<std::uint8_t>(1 - color[static_cast<std::size_t>(v)]);
          q.push(w);
        } else if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(v)]) {
          return std::nullopt;
        }
      }
    }
  }
  return Bipartition{std::move(color)};
}

bool root_monochromatic(const Graph& g, const Bipartition& bip, std::span<const int> root) {
  // Component ids via union of BFS trees.
  std::vector<int> comp(static_cast<std::size_t>(g.order()), -1);
  int ncomp = 0;
  for (int start = 0; start < g.order(); ++start) {
    if (comp[static_cast<std::size_t>(start)] != -1) continue;
    comp[static_cast<std::size_t>(start)] = ncomp;
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int e : g.incident(v)) {
        int w = g.edge(e).other(v);
        if (comp[static_cast<std::size_t>(w)] == -1) {
          comp[static_cast<std::size_t>(w)] = ncomp;
          q.push(w);
        }
      }
    }
    ++ncomp;
  }
  std::vector<int> seen(static_cast<std::size_t>(ncomp), -1);
  for (int v : root) {
    int c = comp[static_cast<std::size_t>(v)];
    int col = bip.color[static_cast<std::size_t>(v)];
    if (seen[static_cast<std::size_t>(c)] == -1)
      seen[static_cast<std::size_t>(c)] = col;
    else if (seen[static_cast<std::size_t>(c)] != col)
      return false;
  }
  return true;
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  std::vector<char> visited(static_cast<std::size_t>(g.order()), 0);
  std::queue<int> q;
  q.push(0);
  visited[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int e : g.incident(v)) {
      int w = g.edge(e).other(v);
      if (!visited[static_cast<std::size_t>(w)]) {
        visited[static_cast<std::size_t>(w)] = 1;
        ++reached;
        q.push(w);
      }
    }
  }
  return reached == g.order();
}

namespace {

// Iterative low-point DFS over edge instances. Parallel edges give back
// edges (only the tree edge instance itself is skipped); loops are ignored.
bool has_cut_vertex(const Graph& g) {
  const int n = g.order();
  std::vector<int> depth(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<int> parent_edge(static_cast<std::size_t>(n), -1);
  std::vector<int> child_count(static_cast<std::size_t>(n), 0);
  std::vector<char> articulation(static_cast<std::size_t>(n), 0);

  struct Frame {
    int v;
    std::size_t next;
  };
  std::vector<Frame> stack;
  depth[0] = 0;
  low[0] = 0;
  stack.push_back({0, 0});
  while (!stack.empty()) {
    Frame& f = stack.back();
    int v = f.v;
    auto inc = g.incident(v);
    if (f.next < inc.size()) {
      int e = inc[f.next++];
      const Edge& ed = g.edge(e);
      if (ed.is_loop()) continue;
      if (e == parent_edge[static_cast<std::size_t>(v)]) continue;
      int w = ed.other(v);
      if (depth[static_cast<std::size_t>(w)] == -1) {
        depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(v)] + 1;
        low[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(w)];
        parent_edge[static_cast<std::size_t>(w)] = e;
        ++child_count[static_cast<std::size_t>(v)];
        stack.push_back({w, 0});
      } else {
        low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], depth[static_cast<std::size_t>(w)]);
      }
    } else {
      stack.pop_back();
      if (!stack.empty()) {
        int p = stack.back().v;
        low[static_cast<std::size_t>(p)] = std::min(low[static_cast<std::size_t>(p)], low[static_cast<std::size_t>(v)]);
        if (depth[static_cast<std::size_t>(p)] > 0 && low[static_cast<std::size_t>(v)] >= depth[static_cast<std::size_t>(p)])
          articulation[static_cast<std::size_t>(p)] = 1;
      }
    }
  }
  if (child_count[0] > 1) articulation[0] = 1;
  return std::any_of(articulation.begin(), articulation.end(), [](char c) { return c != 0; });
}

}  // namespace

bool is_two_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  if (!is_connected(g)) return false;
  return !has_cut_vertex(g);
}

PeripheralRoot::PeripheralRoot(std::vector<int> vertices) : vertices_(std::move(vertices)) {
  std::vector<int> sorted(vertices_);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw validation_error("peripheral root vertices must be distinct");
}

RootedGraph make_rooted(Graph g, PeripheralRoot root) {
  for (int v : root.vertices())
    if (v < 0 || v >= g.order())
      throw validation_error("root vertex " + std::to_string(v) + " not in graph");
  return RootedGraph{std::move(g), std::move(root)};
}

}  // namespace altan
