#pragma once

#include <compare>
#include <span>
#include <vector>

#include "altan/plane.hpp"

namespace altan {

// Exact integer geometry on the triangular lattice Z[w], w = exp(i*pi/3):
// the point (a, b) is a + b*w. Unit direction d (mod 6) is w^d, so
// direction indices increase counterclockwise in a standard drawing.
//
// Honeycomb vertices are the lattice points of two of the three color
// classes of (a - b) mod 3; points of the third class serve as hexagon
// cell centers. A cell centered at z has corners z + w^d, d = 0..5, and
// its neighbor across the side (z + w^d, z + w^{d+1}) is z + w^d + w^{d+1}.
struct HexPoint {
  int a = 0;
  int b = 0;

  friend HexPoint operator+(HexPoint p, HexPoint q) { return {p.a + q.a, p.b + q.b}; }
  friend HexPoint operator-(HexPoint p, HexPoint q) { return {p.a - q.a, p.b - q.b}; }
  friend bool operator==(const HexPoint&, const HexPoint&) = default;
  friend auto operator<=>(const HexPoint&, const HexPoint&) = default;
};

inline HexPoint hex_dir(int d) {
  static constexpr HexPoint dirs[6] = {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}};
  return dirs[((d % 6) + 6) % 6];
}

// Offset from a cell center to the adjacent cell across side d.
inline HexPoint hex_cell_step(int d) { return hex_dir(d) + hex_dir(d + 1); }

// Direction index of a unit vector; -1 if not a unit lattice vector.
int hex_dir_index(HexPoint v);

// Cells left and right of the unit step from u in direction d.
inline HexPoint hex_left_cell(HexPoint u, int d) { return u + hex_dir(d + 1); }
inline HexPoint hex_right_cell(HexPoint u, int d) { return u + hex_dir(d - 1); }

// Patch assembled from a set of hexagonal cells (all centers in one color
// class, connected through shared sides, no enclosed empty cell). Vertices
// are labeled in lexicographic (a, b) order of their lattice coordinates,
// which keeps catalog structures byte-stable.
struct CellPatchResult {
  Patch patch;
  std::vector<HexPoint> vertex_position;  // by vertex id
  std::vector<HexPoint> cells;            // as given, deduplicated, sorted
};

CellPatchResult patch_from_cells(std::span<const HexPoint> cells);

}  // namespace altan
