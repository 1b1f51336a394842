#include "altan/hexlattice.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace altan {

int hex_dir_index(HexPoint v) {
  for (int d = 0; d < 6; ++d)
    if (hex_dir(d) == v) return d;
  return -1;
}

CellPatchResult patch_from_cells(std::span<const HexPoint> cells_in) {
  std::vector<HexPoint> cells(cells_in.begin(), cells_in.end());
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  if (cells.empty()) throw validation_error("cell set is empty");

  auto color = [](HexPoint p) { return ((p.a - p.b) % 3 + 3) % 3; };
  for (const HexPoint& c : cells)
    if (color(c) != color(cells.front()))
      throw validation_error("cell centers must share one lattice color class");

  std::set<HexPoint> cell_set(cells.begin(), cells.end());

  // Corners and sides of all cells, deduplicated.
  std::set<HexPoint> corner_set;
  std::set<std::pair<HexPoint, HexPoint>> side_set;
  for (const HexPoint& z : cells) {
    for (int d = 0; d < 6; ++d) {
      HexPoint u = z + hex_dir(d);
      HexPoint v = z + hex_dir(d + 1);
      corner_set.insert(u);
      side_set.insert({std::min(u, v), std::max(u, v)});
    }
  }

  std::map<HexPoint, int> id;
  std::vector<HexPoint> position;
  for (const HexPoint& c : corner_set) {
    id[c] = static_cast<int>(position.size());
    position.push_back(c);
  }

  std::vector<Edge> edges;
  std::vector<std::pair<HexPoint, HexPoint>> edge_pos;
  for (const auto& [u, v] : side_set) {
    edges.push_back(Edge{id[u], id[v]});
    edge_pos.push_back({u, v});
  }
  Graph g(static_cast<int>(position.size()), edges);

  // Rotation: incident darts sorted by direction index (counterclockwise).
  std::vector<std::vector<std::pair<int, int>>> at(position.size());  // (dir, dart)
  for (int e = 0; e < g.size(); ++e) {
    auto [u, v] = edge_pos[static_cast<std::size_t>(e)];
    int du = hex_dir_index(v - u);
    if (du < 0) throw validation_error("internal: cell side is not a unit step");
    at[static_cast<std::size_t>(id[u])].push_back({du, 2 * e});
    at[static_cast<std::size_t>(id[v])].push_back({(du + 3) % 6, 2 * e + 1});
  }
  std::vector<std::vector<int>> rot(position.size());
  for (std::size_t v = 0; v < position.size(); ++v) {
    std::sort(at[v].begin(), at[v].end());
    for (auto [dir, dart] : at[v]) rot[v].push_back(dart);
  }

  PlaneGraph plane(std::move(g), std::move(rot));

  // A face whose darts all keep one common included cell on their left is
  // that cell's hexagon (an enclosed hole would surface here as a face
  // with a non-included left cell). The single remaining face is outer.
  int outer = -1;
  for (int f = 0; f < plane.face_count(); ++f) {
    bool constant = true;
    HexPoint common{};
    for (std::size_t i = 0; i < plane.faces()[static_cast<std::size_t>(f)].size(); ++i) {
      int d = plane.faces()[static_cast<std::size_t>(f)][i];
      HexPoint u = position[static_cast<std::size_t>(plane.dart_vertex(d))];
      HexPoint v = position[static_cast<std::size_t>(plane.dart_head(d))];
      HexPoint cell = hex_left_cell(u, hex_dir_index(v - u));
      if (i == 0)
        common = cell;
      else if (!(cell == common))
        constant = false;
    }
    if (constant && cell_set.count(common) == 0)
      throw validation_error("cell set encloses a hole");
    if (!constant) {
      if (outer != -1) throw validation_error("cell set is not edge-connected");
      outer = f;
    }
  }
  if (outer == -1) throw validation_error("internal: no outer face found");

  return CellPatchResult{Patch(std::move(plane), outer), std::move(position), std::move(cells)};
}

}  // namespace altan
