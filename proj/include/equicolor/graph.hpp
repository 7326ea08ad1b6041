#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "equicolor/rational.hpp"

namespace equicolor {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

// Immutable finite simple undirected graph in compressed adjacency form.
// Neighbor lists are sorted; vertices are the dense ids 0..n-1.
class Graph {
 public:
  Graph() = default;

  int vertex_count() const noexcept { return static_cast<int>(offsets_.size()) - 1; }
  std::size_t edge_count() const noexcept { return adjacency_.size() / 2; }
  int max_degree() const noexcept { return max_degree_; }

  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const noexcept { return static_cast<int>(offsets_[v + 1] - offsets_[v]); }
  bool adjacent(Vertex u, Vertex v) const noexcept;

  // Each edge once, as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  friend Graph build_graph(int n, std::span<const Edge> edges);

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adjacency_;
  int max_degree_ = 0;
};

// Throws OutOfRange, SelfLoop or DuplicateEdge.
Graph build_graph(int n, std::span<const Edge> edges);

std::vector<std::vector<Vertex>> components(const Graph& g);
// Component index per vertex, numbered by smallest member.
std::vector<int> component_ids(const Graph& g);
bool is_connected(const Graph& g);

struct BlockDecomposition {
  std::vector<std::vector<Vertex>> blocks;       // each sorted
  std::vector<Vertex> cut_vertices;              // sorted
  std::vector<std::pair<int, Vertex>> tree_edges;  // (block index, cut vertex)
};

// Isolated vertices form singleton blocks.
BlockDecomposition block_decomposition(const Graph& g);

bool block_is_clique(const Graph& g, std::span<const Vertex> block);
bool block_is_odd_cycle(const Graph& g, std::span<const Vertex> block);

// `component` must be exactly one connected component (NotAComponent).
bool is_gallai_tree(const Graph& g, std::span<const Vertex> component);

bool contains_clique(const Graph& g, int q);

// 2|E|/|V|; EmptyGraph for n = 0.
Rational average_degree(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;  // local -> parent
  std::vector<Vertex> to_local;   // parent -> local, -1 outside
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

}  // namespace equicolor
