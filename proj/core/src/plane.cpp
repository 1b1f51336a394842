#include "altan/plane.hpp"

#include <algorithm>

namespace altan {

PlaneGraph::PlaneGraph(Graph g, std::vector<std::vector<int>> rotation)
    : g_(std::move(g)), rotation_(std::move(rotation)) {
  const int n = g_.order();
  const int nd = dart_count();
  if (g_.size() == 0) throw validation_error("plane graph needs at least one edge");
  if (static_cast<int>(rotation_.size()) != n)
    throw validation_error("rotation must list every vertex");

  dart_vertex_.assign(static_cast<std::size_t>(nd), -1);
  for (int d = 0; d < nd; ++d) {
    const Edge& e = g_.edge(d / 2);
    dart_vertex_[static_cast<std::size_t>(d)] = (d % 2 == 0) ? e.u : e.v;
  }

  rot_next_.assign(static_cast<std::size_t>(nd), -1);
  rot_prev_.assign(static_cast<std::size_t>(nd), -1);
  std::vector<char> seen(static_cast<std::size_t>(nd), 0);
  for (int v = 0; v < n; ++v) {
    const auto& list = rotation_[static_cast<std::size_t>(v)];
    for (std::size_t i = 0; i < list.size(); ++i) {
      int d = list[i];
      if (d < 0 || d >= nd) throw validation_error("rotation dart out of range");
      if (dart_vertex_[static_cast<std::size_t>(d)] != v)
        throw validation_error("dart listed at the wrong vertex");
      if (seen[static_cast<std::size_t>(d)]) throw validation_error("dart listed twice");
      seen[static_cast<std::size_t>(d)] = 1;
      int next = list[(i + 1) % list.size()];
      rot_next_[static_cast<std::size_t>(d)] = next;
      rot_prev_[static_cast<std::size_t>(next)] = d;
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end())
    throw validation_error("rotation misses a dart");

  if (!is_connected(g_)) throw validation_error("plane graph must be connected");

  // Trace faces: orbits of d -> rotation_prev(alpha(d)).
  face_of_.assign(static_cast<std::size_t>(nd), -1);
  for (int d0 = 0; d0 < nd; ++d0) {
    if (face_of_[static_cast<std::size_t>(d0)] != -1) continue;
    int f = static_cast<int>(faces_.size());
    faces_.emplace_back();
    int d = d0;
    do {
      face_of_[static_cast<std::size_t>(d)] = f;
      faces_.back().push_back(d);
      d = face_next(d);
    } while (d != d0);
  }

  if (n - g_.size() + face_count() != 2)
    throw validation_error("rotation system is not a sphere embedding (Euler check failed)");
}

int PlaneGraph::dart_vertex(int d) const {
  if (d < 0 || d >= dart_count()) throw validation_error("dart out of range");
  return dart_vertex_[static_cast<std::size_t>(d)];
}

std::vector<int> PlaneGraph::face_vertices(int f) const {
  std::vector<int> out;
  for (int d : faces_.at(static_cast<std::size_t>(f))) out.push_back(dart_vertex(d));
  return out;
}

std::vector<int> PlaneGraph::face_edge_ids(int f) const {
  std::vector<int> out;
  for (int d : faces_.at(static_cast<std::size_t>(f))) out.push_back(d / 2);
  return out;
}

std::vector<std::vector<int>> trace_faces(const PlaneGraph& p) {
  std::vector<std::vector<int>> walks;
  for (int f = 0; f < p.face_count(); ++f) walks.push_back(p.face_vertices(f));
  return walks;
}

Patch::Patch(PlaneGraph plane, int outer_face)
    : plane_(std::move(plane)), outer_face_(outer_face) {
  const Graph& g = plane_.graph();
  if (outer_face_ < 0 || outer_face_ >= plane_.face_count())
    throw validation_error("outer face id out of range");
  for (int v = 0; v < g.order(); ++v) {
    int val = g.valence(v);
    if (val != 2 && val != 3)
      throw validation_error("patch vertex " + std::to_string(v) + " has valence " + std::to_string(val));
  }
  if (!is_two_connected(g)) throw validation_error("patch must be 2-connected");

  const auto& orbit = plane_.faces()[static_cast<std::size_t>(outer_face_)];
  boundary_.assign(static_cast<std::size_t>(g.order()), 0);
  for (int d : orbit) boundary_[static_cast<std::size_t>(plane_.dart_vertex(d))] = 1;

  // 2-connectivity makes every face boundary a simple cycle; check anyway.
  {
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    for (int d : orbit) {
      int v = plane_.dart_vertex(d);
      if (seen[static_cast<std::size_t>(v)] && g.order() > 1)
        throw validation_error("outer face walk revisits a vertex");
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }

  // Normalize the walk to start at the lowest-labeled boundary vertex.
  std::size_t best = 0;
  for (std::size_t i = 1; i < orbit.size(); ++i)
    if (plane_.dart_vertex(orbit[i]) < plane_.dart_vertex(orbit[best])) best = i;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    int d = orbit[(best + i) % orbit.size()];
    perimeter_darts_.push_back(d);
    perimeter_.push_back(plane_.dart_vertex(d));
  }
}

std::vector<int> Patch::interior_faces() const {
  std::vector<int> out;
  for (int f = 0; f < plane_.face_count(); ++f)
    if (f != outer_face_) out.push_back(f);
  return out;
}

std::vector<int> Patch::interior_face_lengths() const {
  std::vector<int> out;
  for (int f : interior_faces()) out.push_back(plane_.face_length(f));
  return out;
}

PeripheralRoot degree2_root(const Patch& p) {
  std::vector<int> root;
  for (int v : p.perimeter())
    if (p.graph().valence(v) == 2) root.push_back(v);
  if (root.empty())
    throw infeasible_error("patch has no valence-2 boundary vertex; altan needs an explicit root");
  return PeripheralRoot(std::move(root));
}

}  // namespace altan
