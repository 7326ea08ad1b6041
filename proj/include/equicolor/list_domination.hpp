#pragma once

#include <optional>

#include "equicolor/coloring.hpp"
#include "equicolor/graph.hpp"

namespace equicolor {

// Every operation below returns a proper list coloring f with f ≽ seed over
// the union of the lists. Colorings use the palette
// max(lists.palette_bound(), seed.palette_size()).

// dom(f) ⊇ V \ {pivot}. NotConnected, NotDegreeList, ImproperSeed.
PartialColoring color_all_but_one(const Graph& g, const ListAssignment& lists, const PartialColoring& seed,
                                  Vertex pivot);

// Total coloring when some vertex has more colors than neighbors; nullopt
// when no such vertex exists.
std::optional<PartialColoring> large_list_shortcut(const Graph& g, const ListAssignment& lists,
                                                         const PartialColoring& seed);

// Total coloring of a connected graph that is not a Gallai tree.
// GallaiTree, NotConnected, NotDegreeList, ImproperSeed.
PartialColoring dominating_full_coloring(const Graph& g, const ListAssignment& lists, const PartialColoring& seed);

}  // namespace equicolor
