#pragma once

#include <vector>

#include "altan/graph.hpp"
#include "altan/plane.hpp"

namespace altan {

// Result of one altan application. With n = |V(G)| and k = |S|, the new
// graph keeps labels 0..n-1 for G, puts the attachment vertices at
// S0 = {n..n+k-1} and the new root at S1 = {n+k..n+2k-1}. Edge order:
// original edges, then the 2k peripheral cycle edges
// (n+i, n+k+i), (n+k+i, n+(i+1) mod k) for i = 0..k-1, then the k
// attachment edges (s_i, n+i).
struct AltanResult {
  RootedGraph rooted;                 // (G1, S1)
  std::vector<int> s0;
  std::vector<int> s1;
  std::vector<int> cycle_edges;       // edge ids in rooted.graph
  std::vector<int> attachment_edges;  // edge ids in rooted.graph
};

AltanResult altan(const RootedGraph& rg);

// n = 0 returns the input unchanged (construction fields empty); otherwise
// altan applied n times, re-rooting at the previous S1 each time.
AltanResult iterated_altan(const RootedGraph& rg, int n);

// Altan rooted at the black (resp. white) subset of the patch's valence-2
// boundary vertices, in perimeter order. Requires a bipartite patch and a
// nonempty color class on the boundary.
AltanResult black_altan(const Patch& p);
AltanResult white_altan(const Patch& p);

enum class RootPolicy { degree2, black, white };

// Embedding-aware altan of a patch: the new cycle bounds the new outer
// face and the ring of new faces tiles the annulus between the old
// perimeter and the cycle. ring_faces[i] is the face spanning the
// perimeter gap from root i to root i+1; its length is that gap plus 4.
struct AltanPatchResult {
  Patch patch;
  std::vector<int> root;              // roots used, perimeter order
  std::vector<int> s0;
  std::vector<int> s1;
  std::vector<int> cycle_edges;
  std::vector<int> attachment_edges;
  std::vector<int> ring_faces;        // face ids in patch
  std::vector<int> ring_face_lengths;
};

AltanPatchResult altan_patch(const Patch& p, RootPolicy policy = RootPolicy::degree2);

AltanPatchResult iterated_altan_patch(const Patch& p, int n, RootPolicy first = RootPolicy::degree2);

}  // namespace altan
