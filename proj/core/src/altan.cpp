#include "altan/altan.hpp"

#include <algorithm>
#include <set>

namespace altan {

namespace {

// Edge layout of one altan step; see AltanResult in the header.
struct Layout {
  int n, k, m;
  int cycle_edge1(int i) const { return m + 2 * i; }          // (n+i, n+k+i)
  int cycle_edge2(int i) const { return m + 2 * i + 1; }      // (n+k+i, n+(i+1)%k)
  int attachment_edge(int i) const { return m + 2 * k + i; }  // (s_i, n+i)
};

std::vector<Edge> extended_edges(const RootedGraph& rg, const Layout& lay) {
  std::vector<Edge> edges = rg.graph.edges();
  edges.reserve(static_cast<std::size_t>(lay.m + 3 * lay.k));
  for (int i = 0; i < lay.k; ++i) {
    edges.push_back(Edge{lay.n + i, lay.n + lay.k + i});
    edges.push_back(Edge{lay.n + lay.k + i, lay.n + (i + 1) % lay.k});
  }
  for (int i = 0; i < lay.k; ++i) edges.push_back(Edge{rg.root.at(i), lay.n + i});
  return edges;
}

AltanResult assemble(const RootedGraph& rg, const Layout& lay, Graph g1) {
  AltanResult out;
  std::vector<int> s1;
  for (int i = 0; i < lay.k; ++i) {
    out.s0.push_back(lay.n + i);
    s1.push_back(lay.n + lay.k + i);
    out.cycle_edges.push_back(lay.cycle_edge1(i));
    out.cycle_edges.push_back(lay.cycle_edge2(i));
    out.attachment_edges.push_back(lay.attachment_edge(i));
  }
  out.s1 = s1;
  out.rooted = RootedGraph{std::move(g1), PeripheralRoot(std::move(s1))};
  return out;
}

}  // namespace

AltanResult altan(const RootedGraph& rg) {
  const int k = rg.root.size();
  if (k < 1) throw validation_error("altan needs a nonempty peripheral root");
  for (int v : rg.root.vertices())
    if (v < 0 || v >= rg.graph.order()) throw validation_error("root vertex not in graph");
  Layout lay{rg.graph.order(), k, rg.graph.size()};
  Graph g1(lay.n + 2 * k, extended_edges(rg, lay));
  return assemble(rg, lay, std::move(g1));
}

AltanResult iterated_altan(const RootedGraph& rg, int n) {
  if (n < 0) throw validation_error("iteration count must be nonnegative");
  if (n == 0) return AltanResult{rg, {}, {}, {}, {}};
  AltanResult res = altan(rg);
  for (int i = 1; i < n; ++i) res = altan(res.rooted);
  return res;
}

namespace {

std::vector<int> colored_degree2_root(const Patch& p, bool black) {
  auto bip = bipartition(p.graph());
  if (!bip) throw validation_error("black/white altan requires a bipartite patch");
  std::vector<int> filtered;
  for (int v : degree2_root(p).vertices())
    if (bip->is_black(v) == black) filtered.push_back(v);
  if (filtered.empty())
    throw infeasible_error("requested color class is empty on the boundary");
  return filtered;
}

}  // namespace

AltanResult black_altan(const Patch& p) {
  return altan(RootedGraph{p.graph(), PeripheralRoot(colored_degree2_root(p, true))});
}

AltanResult white_altan(const Patch& p) {
  return altan(RootedGraph{p.graph(), PeripheralRoot(colored_degree2_root(p, false))});
}

AltanPatchResult altan_patch(const Patch& p, RootPolicy policy) {
  std::vector<int> root;
  switch (policy) {
    case RootPolicy::degree2: root = degree2_root(p).vertices(); break;
    case RootPolicy::black: root = colored_degree2_root(p, true); break;
    case RootPolicy::white: root = colored_degree2_root(p, false); break;
  }
  const int k = static_cast<int>(root.size());
  const int n = p.graph().order();
  const int m = p.graph().size();
  const int L = p.perimeter_length();

  RootedGraph rg{p.graph(), PeripheralRoot(root)};
  Layout lay{n, k, m};
  Graph g1(n + 2 * k, extended_edges(rg, lay));

  // Positions of the roots along the perimeter walk.
  std::vector<int> pos(static_cast<std::size_t>(k), -1);
  {
    std::vector<int> where(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < L; ++i) where[static_cast<std::size_t>(p.perimeter()[static_cast<std::size_t>(i)])] = i;
    for (int i = 0; i < k; ++i) pos[static_cast<std::size_t>(i)] = where[static_cast<std::size_t>(root[static_cast<std::size_t>(i)])];
  }

  // Rotations: old vertices keep theirs; each root r_i gains the
  // attachment dart between its forward and backward perimeter darts,
  // counterclockwise order (forward, attachment, backward). The new cycle
  // is laid out so that it bounds the new outer face.
  std::vector<std::vector<int>> rot = p.plane().rotation();
  rot.resize(static_cast<std::size_t>(n + 2 * k));
  auto dart_at_u = [](int e) { return 2 * e; };
  auto dart_at_v = [](int e) { return 2 * e + 1; };
  for (int i = 0; i < k; ++i) {
    int r = root[static_cast<std::size_t>(i)];
    int a = p.perimeter_darts()[static_cast<std::size_t>(pos[static_cast<std::size_t>(i)])];
    int d_prev = p.perimeter_darts()[static_cast<std::size_t>((pos[static_cast<std::size_t>(i)] - 1 + L) % L)];
    int b = PlaneGraph::alpha(d_prev);
    int t = dart_at_u(lay.attachment_edge(i));  // attachment edge is (r_i, n+i)
    auto& old_rot = rot[static_cast<std::size_t>(r)];
    if (!((old_rot[0] == a && old_rot[1] == b) || (old_rot[0] == b && old_rot[1] == a)))
      throw validation_error("internal: perimeter darts disagree with root rotation");
    rot[static_cast<std::size_t>(r)] = {a, t, b};

    // S0 vertex n+i: cycle-forward, cycle-backward, inward.
    int prev = (i - 1 + k) % k;
    rot[static_cast<std::size_t>(n + i)] = {dart_at_u(lay.cycle_edge1(i)),
                                            dart_at_v(lay.cycle_edge2(prev)),
                                            dart_at_v(lay.attachment_edge(i))};
    // S1 vertex n+k+i.
    rot[static_cast<std::size_t>(n + k + i)] = {dart_at_v(lay.cycle_edge1(i)),
                                                dart_at_u(lay.cycle_edge2(i))};
  }

  PlaneGraph plane(std::move(g1), std::move(rot));
  const int outer = plane.face_of(dart_at_u(lay.cycle_edge1(0)));

  AltanPatchResult out{Patch(std::move(plane), outer), std::move(root), {}, {}, {}, {}, {}, {}};
  for (int i = 0; i < k; ++i) {
    out.s0.push_back(n + i);
    out.s1.push_back(n + k + i);
    out.cycle_edges.push_back(lay.cycle_edge1(i));
    out.cycle_edges.push_back(lay.cycle_edge2(i));
    out.attachment_edges.push_back(lay.attachment_edge(i));
  }

  const PlaneGraph& q = out.patch.plane();
  std::set<int> distinct;
  for (int i = 0; i < k; ++i) {
    int f = q.face_of(dart_at_v(lay.attachment_edge(i)));
    out.ring_faces.push_back(f);
    out.ring_face_lengths.push_back(q.face_length(f));
    distinct.insert(f);
    int gap = (pos[static_cast<std::size_t>((i + 1) % k)] - pos[static_cast<std::size_t>(i)] + L) % L;
    if (gap == 0) gap = L;  // k == 1: the single gap is the whole perimeter
    if (q.face_length(f) != gap + 4)
      throw validation_error("internal: ring face length violates the gap law");
  }
  if (static_cast<int>(distinct.size()) != k || distinct.count(out.patch.outer_face()) != 0)
    throw validation_error("internal: ring faces not distinct from each other or the outer face");
  if (q.face_length(out.patch.outer_face()) != 2 * k)
    throw validation_error("internal: new outer face is not the 2k-cycle");
  if (q.face_count() != p.plane().face_count() + k)
    throw validation_error("internal: face count did not grow by k");
  return out;
}

AltanPatchResult iterated_altan_patch(const Patch& p, int n, RootPolicy first) {
  if (n < 0) throw validation_error("iteration count must be nonnegative");
  if (n == 0) return AltanPatchResult{p, {}, {}, {}, {}, {}, {}, {}};
  AltanPatchResult res = altan_patch(p, first);
  for (int i = 1; i < n; ++i) res = altan_patch(res.patch, RootPolicy::degree2);
  return res;
}

}  // namespace altan
