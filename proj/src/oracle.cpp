#include "equicolor/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "equicolor/errors.hpp"

namespace equicolor::oracle {

namespace {

void require_budget(const Graph& g, int palette, const Budget& budget) {
  if (g.vertex_count() > budget.max_vertices) {
    fail(ErrorCode::BudgetExceeded, "too many vertices for the oracle", {{"n", g.vertex_count()}, {"max", budget.max_vertices}});
  }
  if (palette > budget.max_palette) {
    fail(ErrorCode::BudgetExceeded, "palette too large for the oracle", {{"palette", palette}, {"max", budget.max_palette}});
  }
}

void require_lists(const ListAssignment& lists, const Budget& budget) {
  for (Vertex v = 0; v < lists.vertex_count(); ++v) {
    if (lists.size(v) > budget.max_list_size) {
      fail(ErrorCode::BudgetExceeded, "list too large for the oracle", {{"vertex", v}, {"size", lists.size(v)}});
    }
  }
}

class Clock {
 public:
  explicit Clock(const Budget& b) {
    if (b.time_cap) {
      deadline_ = std::chrono::steady_clock::now() + *b.time_cap;
      active_ = true;
    }
  }
  void tick() {
    if (!active_ || (++ticks_ & 1023) != 0) return;
    if (std::chrono::steady_clock::now() > deadline_) fail(ErrorCode::BudgetExceeded, "oracle time cap exceeded");
  }

 private:
  std::chrono::steady_clock::time_point deadline_;
  bool active_ = false;
  std::uint64_t ticks_ = 0;
};

bool adjacent_brute(const Graph& g, Vertex u, Vertex v) {
  auto nb = g.neighbors(u);
  return std::find(nb.begin(), nb.end(), v) != nb.end();
}

bool mask_connected(const Graph& g, std::uint32_t mask, std::uint32_t without = 0) {
  mask &= ~without;
  if (mask == 0) return false;
  std::uint32_t seen = mask & (~mask + 1);
  std::uint32_t frontier = seen;
  while (frontier) {
    Vertex v = std::countr_zero(frontier);
    frontier &= frontier - 1;
    for (Vertex w : g.neighbors(v)) {
      std::uint32_t bit = 1u << w;
      if ((mask & bit) && !(seen & bit)) {
        seen |= bit;
        frontier |= bit;
      }
    }
  }
  return seen == mask;
}

std::vector<int> class_sizes(const std::vector<Color>& a, int palette) {
  std::vector<int> counts(static_cast<std::size_t>(palette), 0);
  for (Color c : a) {
    if (c >= 0) ++counts[c];
  }
  return counts;
}

// Proper after the change, some gaining color is below every losing color
// before and stays at most every losing color after, and the total movement
// is at most kLedgerConstant times the smallest gain.
bool admissible_after(const Graph& g, const std::vector<int>& before, const std::vector<Color>& after_assignment,
                      int k) {
  if (!is_proper_coloring(g, after_assignment)) return false;
  const auto after = class_sizes(after_assignment, k);
  int l1 = 0, min_gain = 0;
  for (Color c = 0; c < k; ++c) {
    int d = after[c] - before[c];
    l1 += std::abs(d);
    if (d > 0 && (min_gain == 0 || d < min_gain)) min_gain = d;
  }
  if (min_gain == 0 || l1 > kLedgerConstant * min_gain) return false;
  for (Color alpha = 0; alpha < k; ++alpha) {
    if (after[alpha] <= before[alpha]) continue;
    bool ok = true;
    for (Color beta = 0; beta < k && ok; ++beta) {
      if (after[beta] >= before[beta]) continue;
      ok = before[alpha] < before[beta] && after[alpha] <= after[beta];
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace

bool is_proper_coloring(const Graph& g, const std::vector<Color>& assignment) {
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (u != v && assignment[u] >= 0 && assignment[u] == assignment[v] && adjacent_brute(g, u, v)) return false;
    }
  }
  return true;
}

ColoringStream::ColoringStream(const Graph& g, ListAssignment lists, const Budget& budget, bool up_to_permutation)
    : g_(g),
      lists_(std::move(lists)),
      palette_(lists_.palette_bound()),
      canonical_(up_to_permutation),
      choice_(static_cast<std::size_t>(g.vertex_count()), -1),
      assignment_(static_cast<std::size_t>(g.vertex_count()), kUncolored) {
  if (lists_.vertex_count() != g.vertex_count()) fail(ErrorCode::InvalidArgument, "lists do not match the graph");
  require_budget(g, palette_, budget);
  require_lists(lists_, budget);
  if (budget.time_cap) {
    deadline_ = std::chrono::steady_clock::now() + *budget.time_cap;
    has_deadline_ = true;
  }
}

bool ColoringStream::fits(Vertex v, Color c) const {
  for (Vertex w = 0; w < v; ++w) {
    if (assignment_[w] == c && adjacent_brute(g_, v, w)) return false;
  }
  return true;
}

bool ColoringStream::advance() {
  const int n = g_.vertex_count();
  Vertex v = started_ ? n - 1 : 0;
  started_ = true;
  std::uint64_t steps = 0;
  while (v >= 0) {
    if (has_deadline_ && (++steps & 4095) == 0 && std::chrono::steady_clock::now() > deadline_) {
      fail(ErrorCode::BudgetExceeded, "oracle time cap exceeded");
    }
    Color cap = palette_;
    if (canonical_) {
      Color m = -1;
      for (Vertex w = 0; w < v; ++w) m = std::max(m, assignment_[w]);
      cap = m + 2;
    }
    auto list = lists_.list(v);
    bool placed = false;
    for (int i = choice_[v] + 1; i < static_cast<int>(list.size()) && list[i] < cap; ++i) {
      if (fits(v, list[i])) {
        choice_[v] = i;
        assignment_[v] = list[i];
        placed = true;
        break;
      }
    }
    if (!placed) {
      choice_[v] = -1;
      assignment_[v] = kUncolored;
      --v;
      continue;
    }
    if (v == n - 1) return true;
    ++v;
    choice_[v] = -1;
  }
  return false;
}

std::optional<PartialColoring> ColoringStream::next() {
  if (done_) return std::nullopt;
  if (g_.vertex_count() == 0) {
    done_ = true;
    return PartialColoring(0, palette_);
  }
  if (!advance()) {
    done_ = true;
    return std::nullopt;
  }
  return PartialColoring::from_assignment(palette_, assignment_);
}

ColoringStream enumerate_proper_colorings(const Graph& g, int palette, const Budget& budget, bool up_to_permutation) {
  Budget b = budget;
  b.max_list_size = std::max(b.max_list_size, palette);
  return ColoringStream(g, ListAssignment::full(g.vertex_count(), palette), b, up_to_permutation);
}

ColoringStream enumerate_list_colorings(const Graph& g, const ListAssignment& lists, const Budget& budget) {
  return ColoringStream(g, lists, budget);
}

std::int64_t count_proper_colorings(const Graph& g, int palette, const Budget& budget) {
  auto stream = enumerate_proper_colorings(g, palette, budget);
  std::int64_t count = 0;
  while (stream.next()) ++count;
  return count;
}

bool equitable_exists(const Graph& g, int palette, const Budget& budget) {
  auto stream = enumerate_proper_colorings(g, palette, budget);
  while (auto f = stream.next()) {
    auto counts = class_sizes(f->assignment(), palette);
    if (palette == 0 || *std::max_element(counts.begin(), counts.end()) - *std::min_element(counts.begin(), counts.end()) <= 1) {
      return true;
    }
  }
  return false;
}

bool domination_exists(const Graph& g, const ListAssignment& lists, const PartialColoring& seed, const Budget& budget) {
  const int n = g.vertex_count();
  const int palette = std::max(lists.palette_bound(), seed.palette_size());
  require_budget(g, palette, budget);
  require_lists(lists, budget);
  std::vector<int> need(static_cast<std::size_t>(palette), 0);
  for (Vertex v = 0; v < n; ++v) {
    if (seed[v] >= 0) ++need[seed[v]];
  }
  std::vector<Color> a(static_cast<std::size_t>(n), kUncolored);
  std::vector<int> have(static_cast<std::size_t>(palette), 0);
  Clock clock(budget);
  // Depth-first with the early-exit test "remaining vertices can still cover
  // every deficit"; leaves are re-verified from scratch.
  auto rec = [&](auto&& self, Vertex v) -> bool {
    clock.tick();
    int deficit = 0;
    for (int c = 0; c < palette; ++c) deficit += std::max(0, need[c] - have[c]);
    if (deficit > n - v) return false;
    if (v == n) {
      if (!is_proper_coloring(g, a)) return false;
      auto counts = class_sizes(a, palette);
      for (Color c : lists.color_union()) {
        if (counts[c] < need[c]) return false;
      }
      return true;
    }
    for (Color c : lists.list(v)) {
      bool ok = true;
      for (Vertex w = 0; w < v && ok; ++w) ok = !(a[w] == c && adjacent_brute(g, v, w));
      if (!ok) continue;
      a[v] = c;
      ++have[c];
      if (self(self, v + 1)) return true;
      --have[c];
      a[v] = kUncolored;
    }
    return false;
  };
  return rec(rec, 0);
}

std::optional<RecoloringMove> find_admissible_move(const Graph& g, const PartialColoring& f, int m,
                                                   const Budget& budget) {
  const int n = g.vertex_count();
  const int k = f.palette_size();
  require_budget(g, k, budget);
  if (n > 31) fail(ErrorCode::BudgetExceeded, "oracle move search needs n <= 31");
  Clock clock(budget);
  const std::vector<Color>& base = f.assignment();
  const auto before = class_sizes(base, k);
  for (int size = 1; size <= std::min(m, n); ++size) {
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      if (std::popcount(mask) != size || !mask_connected(g, mask)) continue;
      std::vector<Vertex> dom;
      for (std::uint32_t bits = mask; bits; bits &= bits - 1) dom.push_back(std::countr_zero(bits));
      std::vector<Color> colors(dom.size(), 0);
      while (true) {
        clock.tick();
        std::vector<Color> after_assignment = base;
        for (std::size_t i = 0; i < dom.size(); ++i) after_assignment[dom[i]] = colors[i];
        if (admissible_after(g, before, after_assignment, k)) {
          std::vector<std::pair<Vertex, Color>> a;
          for (std::size_t i = 0; i < dom.size(); ++i) a.emplace_back(dom[i], colors[i]);
          return RecoloringMove(std::move(a));
        }
        std::size_t i = 0;
        while (i < colors.size() && ++colors[i] == k) colors[i++] = 0;
        if (i == colors.size()) break;
      }
    }
  }
  return std::nullopt;
}

bool is_admissible_move(const Graph& g, const PartialColoring& f, const RecoloringMove& move) {
  const int n = g.vertex_count();
  if (move.assignments.empty()) return false;
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  for (auto [v, c] : move.assignments) {
    if (v < 0 || v >= n || c < 0 || c >= f.palette_size() || in[v]) return false;
    in[v] = 1;
  }
  // The domain must induce a connected subgraph.
  std::vector<Vertex> stack{move.assignments.front().first};
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  seen[stack.back()] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w = 0; w < n; ++w) {
      if (in[w] && !seen[w] && adjacent_brute(g, v, w)) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != move.assignments.size()) return false;
  std::vector<Color> after = f.assignment();
  for (auto [v, c] : move.assignments) after[v] = c;
  return admissible_after(g, class_sizes(f.assignment(), f.palette_size()), after, f.palette_size());
}

bool improving_move_exists(const Graph& g, const PartialColoring& f, int m, const Budget& budget) {
  return find_admissible_move(g, f, m, budget).has_value();
}

std::vector<std::vector<Vertex>> blocks(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 20) fail(ErrorCode::BudgetExceeded, "oracle block search needs n <= 20");
  std::vector<std::uint32_t> candidates;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const int size = std::popcount(mask);
    if (size < 2 || !mask_connected(g, mask)) continue;
    bool two_connected = true;
    if (size >= 3) {
      for (std::uint32_t bits = mask; bits && two_connected; bits &= bits - 1) {
        two_connected = mask_connected(g, mask, bits & (~bits + 1));
      }
    }
    if (two_connected) candidates.push_back(mask);
  }
  std::vector<std::vector<Vertex>> out;
  for (std::uint32_t a : candidates) {
    bool maximal = std::none_of(candidates.begin(), candidates.end(), [&](std::uint32_t b) { return b != a && (a & b) == a; });
    if (!maximal) continue;
    std::vector<Vertex> block;
    for (std::uint32_t bits = a; bits; bits &= bits - 1) block.push_back(std::countr_zero(bits));
    out.push_back(std::move(block));
  }
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == 0) out.push_back({v});
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_gallai_tree(const Graph& g) {
  for (const auto& b : blocks(g)) {
    const int s = static_cast<int>(b.size());
    int edges = 0;
    for (Vertex u : b) {
      for (Vertex v : b) edges += u < v && adjacent_brute(g, u, v);
    }
    const bool clique = edges == s * (s - 1) / 2;
    const bool odd_cycle = s >= 3 && s % 2 == 1 && edges == s && std::all_of(b.begin(), b.end(), [&](Vertex u) {
      return std::count_if(b.begin(), b.end(), [&](Vertex v) { return adjacent_brute(g, u, v); }) == 2;
    });
    if (!clique && !odd_cycle) return false;
  }
  return true;
}

}  // namespace equicolor::oracle
