#pragma once

#include <optional>
#include <vector>

#include "altan/graph.hpp"

namespace altan {

// Backtracking search for an edge-multiplicity-preserving vertex bijection
// (abstract multigraphs; embeddings are ignored). Intended for small
// graphs; throws validation_error above the order guard (64).
std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h);

bool is_isomorphic(const Graph& g, const Graph& h);

// True iff map (g vertex -> h vertex) is a bijection preserving edge
// multiplicities, loops included. Used by tests to certify results.
bool check_isomorphism(const Graph& g, const Graph& h, const std::vector<int>& map);

}  // namespace altan
