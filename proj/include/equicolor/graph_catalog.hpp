#pragma once

#include <cstdint>
#include <vector>

#include "equicolor/graph.hpp"

namespace equicolor::catalog {

// Graphs up to isomorphism for n <= 11, keyed by a canonical adjacency code:
// bit p is set when the p-th vertex pair (0,1), (0,2), (1,2), (0,3), ... of
// the canonical relabeling is an edge.
std::uint64_t canonical_code(const Graph& g);
Graph from_code(int n, std::uint64_t code);

// Every isomorphism class on n vertices, sorted by code. Built by adding a
// vertex in all possible ways to every class on n - 1 vertices.
std::vector<std::uint64_t> all_graphs(int n);

}  // namespace equicolor::catalog
