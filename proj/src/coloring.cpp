#include "equicolor/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "equicolor/errors.hpp"

namespace equicolor {

PartialColoring::PartialColoring(int vertex_count, int palette_size)
    : assignment_(static_cast<std::size_t>(vertex_count), kUncolored),
      counts_(static_cast<std::size_t>(palette_size), 0) {
  if (palette_size < 0 || vertex_count < 0) fail(ErrorCode::InvalidArgument, "negative size");
}

PartialColoring PartialColoring::from_assignment(int palette_size, std::vector<Color> assignment) {
  PartialColoring f(static_cast<int>(assignment.size()), palette_size);
  for (Vertex v = 0; v < f.vertex_count(); ++v) {
    Color c = assignment[v];
    if (c == kUncolored) continue;
    if (c < 0 || c >= palette_size) {
      fail(ErrorCode::OutOfRange, "color outside palette", {{"vertex", v}, {"color", c}});
    }
    f.assign(v, c);
  }
  return f;
}

void PartialColoring::assign(Vertex v, Color c) {
  if (assignment_[v] != kUncolored) {
    --counts_[assignment_[v]];
  } else {
    ++domain_size_;
  }
  assignment_[v] = c;
  ++counts_[c];
}

void PartialColoring::clear(Vertex v) {
  if (assignment_[v] == kUncolored) return;
  --counts_[assignment_[v]];
  --domain_size_;
  assignment_[v] = kUncolored;
}

int PartialColoring::max_count() const {
  return counts_.empty() ? 0 : *std::max_element(counts_.begin(), counts_.end());
}

int PartialColoring::min_count() const {
  return counts_.empty() ? 0 : *std::min_element(counts_.begin(), counts_.end());
}

ListAssignment::ListAssignment(std::vector<std::vector<Color>> lists) : lists_(std::move(lists)) {
  for (auto& l : lists_) {
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
    if (!l.empty() && l.front() < 0) fail(ErrorCode::OutOfRange, "negative list color");
  }
}

ListAssignment ListAssignment::full(int vertex_count, int palette_size) {
  std::vector<Color> all(static_cast<std::size_t>(palette_size));
  std::iota(all.begin(), all.end(), 0);
  return ListAssignment(std::vector<std::vector<Color>>(static_cast<std::size_t>(vertex_count), all));
}

bool ListAssignment::contains(Vertex v, Color c) const {
  return std::binary_search(lists_[v].begin(), lists_[v].end(), c);
}

void ListAssignment::remove(Vertex v, Color c) {
  auto it = std::lower_bound(lists_[v].begin(), lists_[v].end(), c);
  if (it != lists_[v].end() && *it == c) lists_[v].erase(it);
}

bool ListAssignment::is_degree_list(const Graph& g) const {
  if (vertex_count() != g.vertex_count()) return false;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (size(v) < g.degree(v)) return false;
  }
  return true;
}

std::vector<Color> ListAssignment::color_union() const {
  std::vector<Color> all;
  for (const auto& l : lists_) all.insert(all.end(), l.begin(), l.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

int ListAssignment::palette_bound() const {
  int bound = 0;
  for (const auto& l : lists_) {
    if (!l.empty()) bound = std::max(bound, l.back() + 1);
  }
  return bound;
}

bool is_proper(const Graph& g, const PartialColoring& f) {
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    if (!f.colored(u)) continue;
    for (Vertex v : g.neighbors(u)) {
      if (v > u && f[v] == f[u]) return false;
    }
  }
  return true;
}

bool is_list_coloring(const ListAssignment& lists, const PartialColoring& f) {
  for (Vertex v = 0; v < f.vertex_count(); ++v) {
    if (f.colored(v) && !lists.contains(v, f[v])) return false;
  }
  return true;
}

std::vector<Vertex> identity_order(int n) {
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  return order;
}

std::vector<Vertex> shuffled_order(int n, std::uint64_t seed) {
  auto order = identity_order(n);
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  return order;
}

PartialColoring greedy_maximal(const Graph& g, const ListAssignment& lists, const PartialColoring& seed,
                               std::span<const Vertex> order) {
  if (lists.vertex_count() != g.vertex_count() || seed.vertex_count() != g.vertex_count()) {
    fail(ErrorCode::InvalidArgument, "list assignment or seed does not match the graph");
  }
  if (!is_proper(g, seed) || !is_list_coloring(lists, seed)) {
    fail(ErrorCode::ImproperSeed, "seed is not a proper partial list coloring");
  }
  PartialColoring f = seed;
  if (lists.palette_bound() > seed.palette_size()) {
    f = PartialColoring(g.vertex_count(), lists.palette_bound());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (seed.colored(v)) f.assign(v, seed[v]);
    }
  }
  std::vector<char> used;
  for (Vertex v : order) {
    if (f.colored(v)) continue;
    used.assign(static_cast<std::size_t>(f.palette_size()), 0);
    for (Vertex w : g.neighbors(v)) {
      if (f.colored(w)) used[f[w]] = 1;
    }
    for (Color c : lists.list(v)) {
      if (!used[c]) {
        f.assign(v, c);
        break;
      }
    }
  }
  return f;
}

PartialColoring greedy_maximal(const Graph& g, const ListAssignment& lists, const PartialColoring& seed) {
  auto order = identity_order(g.vertex_count());
  return greedy_maximal(g, lists, seed, order);
}

PartialColoring greedy_extend_full(const Graph& g, int palette_size, const PartialColoring& seed,
                                   std::span<const Vertex> order) {
  if (palette_size < g.max_degree() + 1) {
    fail(ErrorCode::PaletteTooSmall, "greedy extension needs k >= max degree + 1",
         {{"k", palette_size}, {"max_degree", g.max_degree()}});
  }
  if (seed.palette_size() > palette_size) fail(ErrorCode::PaletteMismatch, "seed palette larger than k");
  PartialColoring widened(g.vertex_count(), palette_size);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (seed.colored(v)) widened.assign(v, seed[v]);
  }
  auto f = greedy_maximal(g, ListAssignment::full(g.vertex_count(), palette_size), widened, order);
  check(f.is_total(), "greedy extension left a vertex uncolored");
  return f;
}

PartialColoring greedy_extend_full(const Graph& g, int palette_size, const PartialColoring& seed) {
  auto order = identity_order(g.vertex_count());
  return greedy_extend_full(g, palette_size, seed, order);
}

std::vector<Vertex> maximal_independent_superset(const Graph& g, std::span<const Vertex> independent) {
  std::vector<char> in(g.vertex_count(), 0), blocked(g.vertex_count(), 0);
  for (Vertex v : independent) {
    if (v < 0 || v >= g.vertex_count()) fail(ErrorCode::OutOfRange, "vertex out of range");
    in[v] = 1;
  }
  for (Vertex v : independent) {
    for (Vertex w : g.neighbors(v)) {
      if (in[w]) fail(ErrorCode::NotIndependent, "input set contains an edge", {{"edge", {v, w}}});
      blocked[w] = 1;
    }
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (in[v] || blocked[v]) continue;
    in[v] = 1;
    for (Vertex w : g.neighbors(v)) blocked[w] = 1;
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (in[v]) out.push_back(v);
  }
  return out;
}

bool dominates(const PartialColoring& f, const PartialColoring& h, std::span<const Color> palette_union) {
  for (Color c : palette_union) {
    int fc = c < f.palette_size() ? f.count(c) : 0;
    int hc = c < h.palette_size() ? h.count(c) : 0;
    if (fc < hc) return false;
  }
  return true;
}

bool dominates(const PartialColoring& f, const PartialColoring& h) {
  std::vector<Color> all(static_cast<std::size_t>(std::max(f.palette_size(), h.palette_size())));
  std::iota(all.begin(), all.end(), 0);
  return dominates(f, h, all);
}

int coloring_distance(const PartialColoring& a, const PartialColoring& b) {
  int d = 0;
  for (Vertex v = 0; v < a.vertex_count(); ++v) {
    if (a[v] != b[v]) ++d;
  }
  return d;
}

}  // namespace equicolor
