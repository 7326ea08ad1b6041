#pragma once

#include <span>
#include <vector>

#include <json.hpp>

#include "equicolor/coloring.hpp"
#include "equicolor/graph.hpp"

namespace equicolor {

// Parent map on V \ A pointing one step closer to the anchor set A, with
// heights h(x) = length of the longest chain of descendants below x.
struct OneEndedForest {
  std::vector<char> anchor;
  std::vector<Vertex> parent;  // -1 on anchors
  std::vector<int> height;

  int vertex_count() const noexcept { return static_cast<int>(parent.size()); }
  int max_height() const;
  bool is_valid(const Graph& g) const;
};

// Multi-source BFS from the anchors. ComponentMissesAnchor.
OneEndedForest build_one_ended_subforest(const Graph& g, std::span<const Vertex> anchors);

struct ForestRecoloring {
  PartialColoring coloring;
  // witness[x] = the seed vertex whose color x carries in the end, or -1.
  // Injective, and it covers every seed-colored vertex.
  std::vector<Vertex> witness;
};

// Stage-by-stage recoloring along heights; dom(f) ⊇ V \ A and f ≽ seed.
// ImproperSeed, PaletteTooSmall.
ForestRecoloring forest_recolor(const Graph& g, const OneEndedForest& forest, const PartialColoring& seed,
                                int palette);

// Checks the witness map: injective, color-preserving, covering dom(seed).
bool witness_is_valid(const PartialColoring& seed, const ForestRecoloring& r);

// Total proper coloring with `palette` colors dominating `seed`; each
// component must have a vertex of degree < palette or not be a Gallai tree.
// RegularGallaiComponent, ImproperSeed, PaletteTooSmall.
PartialColoring dominating_delta_coloring(const Graph& g, const PartialColoring& seed, int palette);

}  // namespace equicolor
