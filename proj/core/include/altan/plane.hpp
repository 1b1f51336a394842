#pragma once

#include <vector>

#include "altan/graph.hpp"

namespace altan {

// Combinatorial-map conventions used throughout:
//
//   Dart d is an edge end: edge index d/2, side d%2. Side 0 sits at
//   edge.u, side 1 at edge.v; a loop owns both sides at its vertex.
//   A dart is read as directed away from the vertex it sits at.
//
//   rotation[v] lists the darts at v in counterclockwise order.
//
//   Faces are orbits of  d -> rotation_prev(alpha(d)),  which walks every
//   face keeping it on the LEFT of the traversal. In particular the outer
//   face's walk keeps the outer face on the left, i.e. in a standard
//   drawing it runs clockwise around the patch.
class PlaneGraph {
public:
  // rotation given as dart ids, one cyclic list per vertex. Validates that
  // every dart appears exactly once at its own vertex, that the graph is
  // connected, and that face tracing satisfies n - m + f = 2.
  PlaneGraph(Graph g, std::vector<std::vector<int>> rotation);

  const Graph& graph() const { return g_; }
  int dart_count() const { return 2 * g_.size(); }

  static int alpha(int d) { return d ^ 1; }
  int dart_vertex(int d) const;
  // Head of the dart read as a directed edge (== dart_vertex(alpha(d))).
  int dart_head(int d) const { return dart_vertex(alpha(d)); }

  int rotation_next(int d) const { return rot_next_.at(static_cast<std::size_t>(d)); }
  int rotation_prev(int d) const { return rot_prev_.at(static_cast<std::size_t>(d)); }
  const std::vector<std::vector<int>>& rotation() const { return rotation_; }

  int face_next(int d) const { return rotation_prev(alpha(d)); }

  int face_count() const { return static_cast<int>(faces_.size()); }
  // Dart orbits, in deterministic order (each orbit starts at its smallest
  // unvisited dart; orbits discovered in dart order).
  const std::vector<std::vector<int>>& faces() const { return faces_; }
  int face_of(int d) const { return face_of_.at(static_cast<std::size_t>(d)); }
  int face_length(int f) const { return static_cast<int>(faces_.at(static_cast<std::size_t>(f)).size()); }

  std::vector<int> face_vertices(int f) const;  // tails of the orbit darts
  std::vector<int> face_edge_ids(int f) const;

private:
  Graph g_;
  std::vector<std::vector<int>> rotation_;
  std::vector<int> rot_next_, rot_prev_, dart_vertex_;
  std::vector<std::vector<int>> faces_;
  std::vector<int> face_of_;
};

// Face walks as vertex sequences, in the PlaneGraph's face order.
std::vector<std::vector<int>> trace_faces(const PlaneGraph& p);

// A patch: plane multigraph with all valences 2 or 3, 2-connected, with a
// distinguished outer face. The boundary is then a simple closed walk.
class Patch {
public:
  Patch(PlaneGraph plane, int outer_face);

  const PlaneGraph& plane() const { return plane_; }
  const Graph& graph() const { return plane_.graph(); }
  int outer_face() const { return outer_face_; }

  // Boundary walk with the outer face on its left, starting at the
  // lowest-labeled boundary vertex. perimeter()[i] is the tail of
  // perimeter_darts()[i].
  const std::vector<int>& perimeter() const { return perimeter_; }
  const std::vector<int>& perimeter_darts() const { return perimeter_darts_; }
  int perimeter_length() const { return static_cast<int>(perimeter_.size()); }

  bool on_boundary(int v) const { return boundary_.at(static_cast<std::size_t>(v)) != 0; }

  std::vector<int> interior_faces() const;
  std::vector<int> interior_face_lengths() const;

private:
  PlaneGraph plane_;
  int outer_face_ = 0;
  std::vector<int> perimeter_;
  std::vector<int> perimeter_darts_;
  std::vector<char> boundary_;
};

// Valence-2 boundary vertices in perimeter order (first one reached from
// the lowest-labeled boundary vertex starts the root). Throws
// infeasible_error when the boundary has no valence-2 vertex.
PeripheralRoot degree2_root(const Patch& p);

}  // namespace altan
