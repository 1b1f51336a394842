#include "altan/isomorphism.hpp"

#include <algorithm>

namespace altan {

namespace {

constexpr int kOrderGuard = 64;

struct MultiAdj {
  // mult[u][v] = number of edges between u and v; loops stored at [v][v].
  std::vector<std::vector<int>> mult;
  std::vector<int> valence;
  std::vector<int> loops;

  explicit MultiAdj(const Graph& g)
      : mult(static_cast<std::size_t>(g.order()),
             std::vector<int>(static_cast<std::size_t>(g.order()), 0)),
        valence(static_cast<std::size_t>(g.order()), 0),
        loops(static_cast<std::size_t>(g.order()), 0) {
    for (const Edge& e : g.edges()) {
      ++mult[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)];
      if (e.u != e.v) ++mult[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)];
      if (e.is_loop()) ++loops[static_cast<std::size_t>(e.u)];
    }
    for (int v = 0; v < g.order(); ++v) valence[static_cast<std::size_t>(v)] = g.valence(v);
  }
};

// Invariant used for pruning and for the candidate partition: valence,
// loop count, sorted neighbor valences (with multiplicity).
std::vector<std::vector<int>> vertex_signatures(const Graph& g, const MultiAdj& a) {
  std::vector<std::vector<int>> sig(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) {
    std::vector<int> s{a.valence[static_cast<std::size_t>(v)], a.loops[static_cast<std::size_t>(v)]};
    std::vector<int> nb;
    for (int e : g.incident(v)) {
      int w = g.edge(e).other(v);
      if (w != v) nb.push_back(a.valence[static_cast<std::size_t>(w)]);
    }
    std::sort(nb.begin(), nb.end());
    s.insert(s.end(), nb.begin(), nb.end());
    sig[static_cast<std::size_t>(v)] = std::move(s);
  }
  return sig;
}

struct Search {
  const Graph& g;
  const Graph& h;
  MultiAdj ga, ha;
  std::vector<std::vector<int>> gsig, hsig;
  std::vector<int> order;    // g vertices, most-constrained first
  std::vector<int> map;      // g -> h, -1 unassigned
  std::vector<char> used;    // h vertex taken

  Search(const Graph& g_, const Graph& h_)
      : g(g_), h(h_), ga(g_), ha(h_),
        gsig(vertex_signatures(g_, ga)), hsig(vertex_signatures(h_, ha)),
        map(static_cast<std::size_t>(g_.order()), -1),
        used(static_cast<std::size_t>(h_.order()), 0) {
    // Order g vertices by connectivity to already-ordered ones, rarest
    // signature first among ties; keeps the partial map connected.
    std::vector<char> placed(static_cast<std::size_t>(g.order()), 0);
    for (int step = 0; step < g.order(); ++step) {
      int best = -1;
      int best_links = -1;
      for (int v = 0; v < g.order(); ++v) {
        if (placed[static_cast<std::size_t>(v)]) continue;
        int links = 0;
        for (int e : g.incident(v)) {
          int w = g.edge(e).other(v);
          if (w != v && placed[static_cast<std::size_t>(w)]) ++links;
        }
        if (links > best_links) {
          best_links = links;
          best = v;
        }
      }
      placed[static_cast<std::size_t>(best)] = 1;
      order.push_back(best);
    }
  }

  bool extend(std::size_t pos) {
    if (pos == order.size()) return true;
    int v = order[pos];
    for (int w = 0; w < h.order(); ++w) {
      if (used[static_cast<std::size_t>(w)]) continue;
      if (gsig[static_cast<std::size_t>(v)] != hsig[static_cast<std::size_t>(w)]) continue;
      bool ok = ga.loops[static_cast<std::size_t>(v)] == ha.loops[static_cast<std::size_t>(w)];
      for (std::size_t j = 0; ok && j < pos; ++j) {
        int u = order[j];
        if (ga.mult[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] !=
            ha.mult[static_cast<std::size_t>(w)][static_cast<std::size_t>(map[static_cast<std::size_t>(u)])])
          ok = false;
      }
      if (!ok) continue;
      map[static_cast<std::size_t>(v)] = w;
      used[static_cast<std::size_t>(w)] = 1;
      if (extend(pos + 1)) return true;
      map[static_cast<std::size_t>(v)] = -1;
      used[static_cast<std::size_t>(w)] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.order() > kOrderGuard || h.order() > kOrderGuard)
    throw validation_error("isomorphism guard exceeded (order > 64); use external tooling");
  if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
  if (g.order() == 0) return std::vector<int>{};

  MultiAdj ga(g), ha(h);
  {
    std::vector<int> dg = ga.valence, dh = ha.valence;
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh) return std::nullopt;
  }
  Search s(g, h);
  {
    auto gs = s.gsig;
    auto hs = s.hsig;
    std::sort(gs.begin(), gs.end());
    std::sort(hs.begin(), hs.end());
    if (gs != hs) return std::nullopt;
  }
  if (s.extend(0)) return s.map;
  return std::nullopt;
}

bool is_isomorphic(const Graph& g, const Graph& h) {
  return find_isomorphism(g, h).has_value();
}

bool check_isomorphism(const Graph& g, const Graph& h, const std::vector<int>& map) {
  if (g.order() != h.order() || static_cast<int>(map.size()) != g.order()) return false;
  if (g.size() != h.size()) return false;
  std::vector<char> hit(static_cast<std::size_t>(h.order()), 0);
  for (int v = 0; v < g.order(); ++v) {
    int w = map[static_cast<std::size_t>(v)];
    if (w < 0 || w >= h.order() || hit[static_cast<std::size_t>(w)]) return false;
    hit[static_cast<std::size_t>(w)] = 1;
  }
  MultiAdj ga(g), ha(h);
  for (int u = 0; u < g.order(); ++u)
    for (int v = u; v < g.order(); ++v)
      if (ga.mult[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] !=
          ha.mult[static_cast<std::size_t>(map[static_cast<std::size_t>(u)])]
                 [static_cast<std::size_t>(map[static_cast<std::size_t>(v)])])
        return false;
  return true;
}

}  // namespace altan
