#pragma once

#include <cstdint>
#include <string>

#include "equicolor/graph.hpp"

namespace equicolor {

// All generators are deterministic in their seed and throw
// InfeasibleParameters for impossible requests.

// Pairing model; a pairing that would create a loop or a repeated edge is
// rejected and redrawn.
Graph random_regular(int n, int d, std::uint64_t seed);
Graph erdos_renyi(int n, double p, std::uint64_t seed);
// rows x cols grid with wraparound; both sides at least 3.
Graph torus(int rows, int cols);
Graph random_bipartite(int left, int right, double p, std::uint64_t seed);
// Connected graph built by gluing `blocks` cliques and odd cycles (each on at
// most max_block vertices) at random existing vertices.
Graph gallai_tree(int blocks, int max_block, std::uint64_t seed);
// Max degree exactly delta, average degree at most target_avg, no K_{delta+1}.
Graph sparse_hub(int n, int delta, double target_avg, std::uint64_t seed);

struct InstanceSpec {
  std::string generator;  // regular, gnp, torus, bipartite, gallai, hub
  int n = 0;
  int degree = 0;      // regular d, hub delta
  double density = 0;  // gnp / bipartite p, hub target average degree
  int rows = 0, cols = 0;
  int blocks = 0, max_block = 0;
  std::uint64_t seed = 0;
};

Graph generate(const InstanceSpec& spec);

}  // namespace equicolor
