#include "equicolor/list_domination.hpp"

#include <algorithm>
#include <numeric>

#include "equicolor/debug.hpp"
#include "equicolor/errors.hpp"

namespace equicolor {

namespace {

int palette_for(const ListAssignment& lists, const PartialColoring& seed) {
  return std::max(lists.palette_bound(), seed.palette_size());
}

PartialColoring widen(const PartialColoring& f, int palette) {
  if (f.palette_size() == palette) return f;
  PartialColoring out(f.vertex_count(), palette);
  for (Vertex v = 0; v < f.vertex_count(); ++v) {
    if (f.colored(v)) out.assign(v, f[v]);
  }
  return out;
}

void require_instance(const Graph& g, const ListAssignment& lists, const PartialColoring& seed) {
  if (lists.vertex_count() != g.vertex_count() || seed.vertex_count() != g.vertex_count()) {
    fail(ErrorCode::InvalidArgument, "lists or seed do not match the graph");
  }
  if (!is_connected(g)) fail(ErrorCode::NotConnected, "graph must be connected");
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (lists.size(v) < g.degree(v)) {
      fail(ErrorCode::NotDegreeList, "list smaller than degree", {{"vertex", v}, {"list", lists.size(v)}, {"degree", g.degree(v)}});
    }
  }
  if (!is_proper(g, seed) || !is_list_coloring(lists, seed)) {
    fail(ErrorCode::ImproperSeed, "seed is not a proper partial list coloring");
  }
}

void check_result(const Graph& g, const ListAssignment& lists, const PartialColoring& seed, const PartialColoring& f) {
  check(is_proper(g, f), "list coloring is improper");
  check(is_list_coloring(lists, f), "list coloring leaves its lists");
  check(dominates(f, seed, lists.color_union()), "list coloring does not dominate the seed");
}

std::optional<Color> free_color(const Graph& g, const ListAssignment& lists, const PartialColoring& f, Vertex v) {
  for (Color c : lists.list(v)) {
    auto nb = g.neighbors(v);
    if (std::none_of(nb.begin(), nb.end(), [&](Vertex w) { return f[w] == c; })) return c;
  }
  return std::nullopt;
}

// Last leaf other than the root in the postorder of a DFS tree of the alive
// vertices rooted at `root`.
Vertex removable_leaf(const Graph& g, const std::vector<char>& alive, Vertex root) {
  std::vector<char> seen(alive.size(), 0);
  std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
  std::vector<char> has_child(alive.size(), 0);
  Vertex last_leaf = -1;
  seen[root] = 1;
  while (!stack.empty()) {
    auto& [v, i] = stack.back();
    auto nb = g.neighbors(v);
    if (i < nb.size()) {
      Vertex w = nb[i++];
      if (alive[w] && !seen[w]) {
        seen[w] = 1;
        has_child[v] = 1;
        stack.emplace_back(w, 0);
      }
      continue;
    }
    if (!has_child[v] && v != root) last_leaf = v;
    stack.pop_back();
  }
  return last_leaf;
}

PartialColoring all_but_one(const Graph& g, ListAssignment lists, const PartialColoring& seed, Vertex pivot) {
  const int n = g.vertex_count();
  PartialColoring cur = widen(seed, palette_for(lists, seed));
  std::vector<char> alive(static_cast<std::size_t>(n), 1);
  std::vector<std::pair<Vertex, Color>> removed;
  for (int remaining = n; remaining > 1; --remaining) {
    for (Vertex v = 0; v < n; ++v) {
      if (!alive[v] || cur.colored(v)) continue;
      for (Color c : lists.list(v)) {
        auto nb = g.neighbors(v);
        if (std::none_of(nb.begin(), nb.end(), [&](Vertex w) { return alive[w] && cur[w] == c; })) {
          cur.assign(v, c);
          break;
        }
      }
    }
    Vertex z = removable_leaf(g, alive, pivot);
    check(z >= 0, "no removable leaf in a connected graph");
    if (!cur.colored(z)) {
      // Every list color of z sits on exactly one neighbor: hand z the color of
      // its smallest such neighbor and uncolor that neighbor.
      Vertex y = -1;
      for (Vertex w : g.neighbors(z)) {
        if (alive[w] && cur.colored(w) && lists.contains(z, cur[w])) {
          y = w;
          break;
        }
      }
      check(y >= 0, "uncolored vertex of a degree list has no colored neighbor");
      const Color c = cur[y];
      for (Vertex w : g.neighbors(z)) {
        check(!alive[w] || w == y || cur[w] != c, "swap color appears twice around z");
      }
      cur.clear(y);
      cur.assign(z, c);
    }
    alive[z] = 0;
    removed.emplace_back(z, cur[z]);
    for (Vertex w : g.neighbors(z)) {
      if (alive[w]) lists.remove(w, cur[z]);
    }
  }
  PartialColoring f(n, cur.palette_size());
  for (auto [z, c] : removed) f.assign(z, c);
  if (cur.colored(pivot)) f.assign(pivot, cur[pivot]);
  return f;
}

std::optional<PartialColoring> shortcut(const Graph& g, const ListAssignment& lists, const PartialColoring& seed) {
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    if (lists.size(x) <= g.degree(x)) continue;
    PartialColoring f = all_but_one(g, lists, seed, x);
    if (!f.colored(x)) {
      auto c = free_color(g, lists, f, x);
      check(c.has_value(), "surplus vertex has no free color");
      f.assign(x, *c);
    }
    return f;
  }
  return std::nullopt;
}

// Branch and bound over proper list colorings meeting the seed's class sizes.
bool search_block(const Graph& g, const ListAssignment& lists, const std::vector<int>& need, std::vector<int>& have,
                  const std::vector<Vertex>& order, const PartialColoring& hint, std::size_t i, PartialColoring& f) {
  int deficit = 0;
  for (std::size_t c = 0; c < need.size(); ++c) deficit += std::max(0, need[c] - have[c]);
  if (deficit > static_cast<int>(order.size() - i)) return false;
  if (i == order.size()) return true;
  const Vertex v = order[i];
  std::vector<Color> tries(lists.list(v).begin(), lists.list(v).end());
  if (hint.colored(v)) {
    auto it = std::find(tries.begin(), tries.end(), hint[v]);
    if (it != tries.end()) std::rotate(tries.begin(), it, it + 1);
  }
  for (Color c : tries) {
    auto nb = g.neighbors(v);
    if (std::any_of(nb.begin(), nb.end(), [&](Vertex w) { return f[w] == c; })) continue;
    f.assign(v, c);
    ++have[c];
    if (search_block(g, lists, need, have, order, hint, i + 1, f)) return true;
    --have[c];
    f.clear(v);
  }
  return false;
}

// Block solver: g is 2-connected, neither a clique nor an odd cycle, and the
// seed colors everything except `u`.
PartialColoring solve_block(const Graph& g, const ListAssignment& lists, const PartialColoring& seed, Vertex u) {
  if (auto c = free_color(g, lists, seed, u)) {
    PartialColoring f = seed;
    f.assign(u, *c);
    return f;
  }
  if (auto f = shortcut(g, lists, seed)) return *f;
  // All lists have exactly degree size. Look for adjacent x, y and a color
  // beta in L(x) \ L(y).
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    for (Vertex y : g.neighbors(x)) {
      auto lx = lists.list(x);
      auto beta_it = std::find_if(lx.begin(), lx.end(), [&](Color c) { return !lists.contains(y, c); });
      if (beta_it == lx.end()) continue;
      const Color beta = *beta_it;
      PartialColoring h = all_but_one(g, lists, seed, x);
      if (h.colored(x)) return h;
      if (auto c = free_color(g, lists, h, x)) {
        h.assign(x, *c);
        return h;
      }
      Vertex z = -1;
      for (Vertex w : g.neighbors(x)) {
        if (h[w] == beta) z = w;
      }
      check(z >= 0 && z != y, "beta must sit on a unique neighbor other than y");
      std::vector<Vertex> rest;
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (v != x) rest.push_back(v);
      }
      auto sub = induced_subgraph(g, rest);
      std::vector<std::vector<Color>> sub_lists;
      PartialColoring sub_seed(sub.graph.vertex_count(), h.palette_size());
      for (Vertex lv = 0; lv < sub.graph.vertex_count(); ++lv) {
        Vertex v = sub.to_parent[lv];
        std::vector<Color> l(lists.list(v).begin(), lists.list(v).end());
        if (g.adjacent(v, x)) l.erase(std::remove(l.begin(), l.end(), beta), l.end());
        sub_lists.push_back(std::move(l));
        if (v != z && h.colored(v)) sub_seed.assign(lv, h[v]);
      }
      auto f_sub = shortcut(sub.graph, ListAssignment(sub_lists), sub_seed);
      check(f_sub.has_value(), "removing x left no surplus vertex");
      PartialColoring f(g.vertex_count(), h.palette_size());
      for (Vertex lv = 0; lv < sub.graph.vertex_count(); ++lv) f.assign(sub.to_parent[lv], (*f_sub)[lv]);
      f.assign(x, beta);
      return f;
    }
  }
  // Equal lists of size degree everywhere: the block is regular. Even
  // cycles always leave u a free color, handled above.
  std::vector<int> need(seed.counts().begin(), seed.counts().end());
  std::vector<int> have(need.size(), 0);
  std::vector<Vertex> order;
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  order.push_back(u);
  seen[u] = 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex w : g.neighbors(order[i])) {
      if (!seen[w]) {
        seen[w] = 1;
        order.push_back(w);
      }
    }
  }
  PartialColoring f(g.vertex_count(), seed.palette_size());
  bool found = search_block(g, lists, need, have, order, seed, 0, f);
  check(found, "no dominating coloring of an equal-list block");
  return f;
}

}  // namespace

PartialColoring color_all_but_one(const Graph& g, const ListAssignment& lists, const PartialColoring& seed,
                                  Vertex pivot) {
  require_instance(g, lists, seed);
  if (pivot < 0 || pivot >= g.vertex_count()) fail(ErrorCode::OutOfRange, "pivot out of range", {{"pivot", pivot}});
  PartialColoring f = all_but_one(g, lists, seed, pivot);
  check_result(g, lists, seed, f);
  check(f.domain_size() >= g.vertex_count() - 1, "more than one vertex left uncolored");
  return f;
}

std::optional<PartialColoring> large_list_shortcut(const Graph& g, const ListAssignment& lists,
                                                         const PartialColoring& seed) {
  require_instance(g, lists, seed);
  auto f = shortcut(g, lists, seed);
  if (f) {
    check_result(g, lists, seed, *f);
    check(f->is_total(), "shortcut result is not total");
  }
  return f;
}

PartialColoring dominating_full_coloring(const Graph& g, const ListAssignment& lists, const PartialColoring& seed) {
  require_instance(g, lists, seed);
  auto all = identity_order(g.vertex_count());
  if (g.vertex_count() == 0 || is_gallai_tree(g, all)) fail(ErrorCode::GallaiTree, "graph is a Gallai tree");
  auto blocks = block_decomposition(g);
  const std::vector<Vertex>* chosen = nullptr;
  for (const auto& b : blocks.blocks) {
    if (block_is_clique(g, b) || block_is_odd_cycle(g, b)) continue;
    if (!chosen || b.front() < chosen->front()) chosen = &b;
  }
  check(chosen != nullptr, "non-Gallai graph without a witness block");
  const Vertex u = chosen->front();
  PartialColoring h = all_but_one(g, lists, seed, u);
  if (!h.colored(u)) {
    auto block = induced_subgraph(g, *chosen);
    std::vector<std::vector<Color>> residual;
    PartialColoring block_seed(block.graph.vertex_count(), h.palette_size());
    for (Vertex lv = 0; lv < block.graph.vertex_count(); ++lv) {
      Vertex x = block.to_parent[lv];
      std::vector<Color> l(lists.list(x).begin(), lists.list(x).end());
      for (Vertex w : g.neighbors(x)) {
        if (block.to_local[w] < 0 && h.colored(w)) l.erase(std::remove(l.begin(), l.end(), h[w]), l.end());
      }
      residual.push_back(std::move(l));
      if (h.colored(x)) block_seed.assign(lv, h[x]);
    }
    ListAssignment block_lists(residual);
    check(block_lists.is_degree_list(block.graph), "residual lists are not degree lists");
    auto fb = solve_block(block.graph, block_lists, block_seed, block.to_local[u]);
    check(dominates(fb, block_seed), "block solution does not dominate");
    for (Vertex lv = 0; lv < block.graph.vertex_count(); ++lv) h.assign(block.to_parent[lv], fb[lv]);
  }
  check(h.is_total(), "dominating coloring is not total");
  check_result(g, lists, seed, h);
  return h;
}

}  // namespace equicolor
