#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "equicolor/coloring.hpp"
#include "equicolor/dynamics.hpp"
#include "equicolor/graph.hpp"

namespace equicolor::oracle {

// Brute-force reference answers for tiny instances. Nothing here reuses the
// engines it is meant to check.

struct Budget {
  int max_vertices = 10;
  int max_palette = 6;
  int max_list_size = 6;
  std::optional<std::chrono::milliseconds> time_cap;
};

// Proper total colorings in lexicographic order of the assignment vector.
// With `up_to_permutation`, only colorings whose colors first appear in the
// order 0, 1, 2, ... are produced (one per color permutation class).
class ColoringStream {
 public:
  ColoringStream(const Graph& g, ListAssignment lists, const Budget& budget, bool up_to_permutation = false);

  // Next coloring, or nullopt when exhausted. BudgetExceeded past the time cap.
  std::optional<PartialColoring> next();

 private:
  bool advance();
  bool fits(Vertex v, Color c) const;

  Graph g_;
  ListAssignment lists_;
  int palette_;
  bool canonical_;
  std::vector<int> choice_;  // index into the list of each assigned vertex
  std::vector<Color> assignment_;
  std::vector<Color> max_color_prefix_;  // canonical mode: largest color among 0..v
  int depth_ = 0;
  bool started_ = false;
  bool done_ = false;
  std::chrono::steady_clock::time_point deadline_;
  bool has_deadline_ = false;
};

ColoringStream enumerate_proper_colorings(const Graph& g, int palette, const Budget& budget = {},
                                          bool up_to_permutation = false);
ColoringStream enumerate_list_colorings(const Graph& g, const ListAssignment& lists, const Budget& budget = {});

std::int64_t count_proper_colorings(const Graph& g, int palette, const Budget& budget = {});
bool equitable_exists(const Graph& g, int palette, const Budget& budget = {});
bool domination_exists(const Graph& g, const ListAssignment& lists, const PartialColoring& seed,
                       const Budget& budget = {});
// Recomputes admissibility of one move from scratch: connected domain, proper
// result, a valid witness and the movement bound. Any graph size.
bool is_admissible_move(const Graph& g, const PartialColoring& f, const RecoloringMove& move);
bool improving_move_exists(const Graph& g, const PartialColoring& f, int m, const Budget& budget = {});
// The admissible move found first (domains by size, then bitmask order).
std::optional<RecoloringMove> find_admissible_move(const Graph& g, const PartialColoring& f, int m,
                                                   const Budget& budget = {});

// Blocks as the inclusion-maximal vertex sets inducing a 2-connected graph or
// a single edge, plus isolated vertices; each sorted, list sorted.
std::vector<std::vector<Vertex>> blocks(const Graph& g);
bool is_gallai_tree(const Graph& g);  // g connected
bool is_proper_coloring(const Graph& g, const std::vector<Color>& assignment);

}  // namespace equicolor::oracle
