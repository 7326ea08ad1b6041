#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "equicolor/graph.hpp"

namespace equicolor {

using Color = std::int32_t;
inline constexpr Color kUncolored = -1;

// Map from a subset of vertices to the palette 0..k-1, with per-color class
// sizes maintained incrementally.
class PartialColoring {
 public:
  PartialColoring() = default;
  PartialColoring(int vertex_count, int palette_size);

  // Throws OutOfRange if a color is outside [-1, k).
  static PartialColoring from_assignment(int palette_size, std::vector<Color> assignment);

  int vertex_count() const noexcept { return static_cast<int>(assignment_.size()); }
  int palette_size() const noexcept { return static_cast<int>(counts_.size()); }
  int domain_size() const noexcept { return domain_size_; }
  bool is_total() const noexcept { return domain_size_ == vertex_count(); }

  Color operator[](Vertex v) const noexcept { return assignment_[v]; }
  bool colored(Vertex v) const noexcept { return assignment_[v] != kUncolored; }
  int count(Color c) const noexcept { return counts_[c]; }
  std::span<const int> counts() const noexcept { return counts_; }
  const std::vector<Color>& assignment() const noexcept { return assignment_; }

  void assign(Vertex v, Color c);
  void clear(Vertex v);

  int max_count() const;
  int min_count() const;
  // max - min over all palette colors (empty classes count as 0).
  int gap() const { return max_count() - min_count(); }

  friend bool operator==(const PartialColoring& a, const PartialColoring& b) {
    return a.assignment_ == b.assignment_ && a.counts_.size() == b.counts_.size();
  }

 private:
  std::vector<Color> assignment_;
  std::vector<int> counts_;
  int domain_size_ = 0;
};

// Per-vertex finite color sets, kept sorted and duplicate-free.
class ListAssignment {
 public:
  ListAssignment() = default;
  explicit ListAssignment(std::vector<std::vector<Color>> lists);
  static ListAssignment full(int vertex_count, int palette_size);

  int vertex_count() const noexcept { return static_cast<int>(lists_.size()); }
  std::span<const Color> list(Vertex v) const noexcept { return lists_[v]; }
  int size(Vertex v) const noexcept { return static_cast<int>(lists_[v].size()); }
  bool contains(Vertex v, Color c) const;
  void remove(Vertex v, Color c);

  bool is_degree_list(const Graph& g) const;
  std::vector<Color> color_union() const;
  // One past the largest color mentioned by any list.
  int palette_bound() const;

 private:
  std::vector<std::vector<Color>> lists_;
};

bool is_proper(const Graph& g, const PartialColoring& f);
bool is_list_coloring(const ListAssignment& lists, const PartialColoring& f);

std::vector<Vertex> identity_order(int n);
std::vector<Vertex> shuffled_order(int n, std::uint64_t seed);

// Greedy inclusion-maximal extension: visits `order` once, giving each
// uncolored vertex the smallest list color unused by its colored neighbors.
// Throws ImproperSeed if the seed is improper or leaves its lists.
PartialColoring greedy_maximal(const Graph& g, const ListAssignment& lists, const PartialColoring& seed,
                               std::span<const Vertex> order);
PartialColoring greedy_maximal(const Graph& g, const ListAssignment& lists, const PartialColoring& seed);

// Total proper k-coloring extending `seed`; requires k >= max degree + 1.
PartialColoring greedy_extend_full(const Graph& g, int palette_size, const PartialColoring& seed,
                                   std::span<const Vertex> order);
PartialColoring greedy_extend_full(const Graph& g, int palette_size, const PartialColoring& seed);

std::vector<Vertex> maximal_independent_superset(const Graph& g, std::span<const Vertex> independent);

// f dominates h when every color of `palette_union` has at least as many
// f-vertices as h-vertices.
bool dominates(const PartialColoring& f, const PartialColoring& h, std::span<const Color> palette_union);
bool dominates(const PartialColoring& f, const PartialColoring& h);

// Number of vertices colored differently (an uncolored side counts as different).
int coloring_distance(const PartialColoring& a, const PartialColoring& b);

}  // namespace equicolor
