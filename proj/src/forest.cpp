#include "equicolor/forest.hpp"

#include <algorithm>
#include <queue>

#include "equicolor/debug.hpp"
#include "equicolor/errors.hpp"
#include "equicolor/list_domination.hpp"

namespace equicolor {

int OneEndedForest::max_height() const {
  return height.empty() ? 0 : *std::max_element(height.begin(), height.end());
}

bool OneEndedForest::is_valid(const Graph& g) const {
  const int n = g.vertex_count();
  if (vertex_count() != n || static_cast<int>(anchor.size()) != n || static_cast<int>(height.size()) != n) return false;
  for (Vertex x = 0; x < n; ++x) {
    if (anchor[x]) {
      if (parent[x] != -1) return false;
      continue;
    }
    if (parent[x] < 0 || !g.adjacent(x, parent[x]) || height[parent[x]] <= height[x]) return false;
  }
  return true;
}

OneEndedForest build_one_ended_subforest(const Graph& g, std::span<const Vertex> anchors) {
  const int n = g.vertex_count();
  OneEndedForest forest;
  forest.anchor.assign(static_cast<std::size_t>(n), 0);
  forest.parent.assign(static_cast<std::size_t>(n), -1);
  forest.height.assign(static_cast<std::size_t>(n), 0);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> order;
  for (Vertex a : anchors) {
    if (a < 0 || a >= n) fail(ErrorCode::OutOfRange, "anchor out of range", {{"anchor", a}});
    forest.anchor[a] = 1;
  }
  for (Vertex a = 0; a < n; ++a) {
    if (forest.anchor[a]) {
      seen[a] = 1;
      order.push_back(a);
    }
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex w : g.neighbors(order[i])) {
      if (seen[w]) continue;
      seen[w] = 1;
      forest.parent[w] = order[i];
      order.push_back(w);
    }
  }
  if (static_cast<int>(order.size()) != n) {
    Vertex missed = static_cast<Vertex>(std::find(seen.begin(), seen.end(), 0) - seen.begin());
    fail(ErrorCode::ComponentMissesAnchor, "a component contains no anchor", {{"vertex", missed}});
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Vertex p = forest.parent[*it];
    if (p >= 0) forest.height[p] = std::max(forest.height[p], forest.height[*it] + 1);
  }
  return forest;
}

ForestRecoloring forest_recolor(const Graph& g, const OneEndedForest& forest, const PartialColoring& seed,
                                int palette) {
  const int n = g.vertex_count();
  if (forest.vertex_count() != n || seed.vertex_count() != n) fail(ErrorCode::InvalidArgument, "size mismatch");
  if (palette < g.max_degree()) {
    fail(ErrorCode::PaletteTooSmall, "palette smaller than max degree", {{"palette", palette}, {"max_degree", g.max_degree()}});
  }
  if (seed.palette_size() > palette) {
    for (Vertex v = 0; v < n; ++v) {
      if (seed.colored(v) && seed[v] >= palette) fail(ErrorCode::ImproperSeed, "seed color outside palette", {{"vertex", v}});
    }
  }
  if (!is_proper(g, seed)) fail(ErrorCode::ImproperSeed, "seed is not proper");
  const auto lists = ListAssignment::full(n, palette);
  PartialColoring f(n, palette);
  std::vector<Vertex> token(static_cast<std::size_t>(n), -1);  // seed vertex whose color v carries
  for (Vertex v = 0; v < n; ++v) {
    if (seed.colored(v)) {
      f.assign(v, seed[v]);
      token[v] = v;
    }
  }
  std::vector<std::vector<Vertex>> strata(static_cast<std::size_t>(forest.max_height()) + 1);
  for (Vertex v = 0; v < n; ++v) strata[forest.height[v]].push_back(v);
  for (std::size_t stage = 0; stage < strata.size(); ++stage) {
    f = greedy_maximal(g, lists, f);
    const PartialColoring before = f;
    std::vector<Vertex> movers;
    for (Vertex x : strata[stage]) {
      if (f.colored(x)) continue;
      if (forest.anchor[x]) continue;
      std::vector<int> seen(static_cast<std::size_t>(palette), 0);
      for (Vertex w : g.neighbors(x)) {
        if (f.colored(w)) ++seen[f[w]];
      }
      check(std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; }),
            "uncolored vertex does not see every color exactly once");
      // Several movers may share a parent; the first one inherits its token.
      movers.push_back(x);
    }
    for (Vertex x : movers) {
      const Vertex y = forest.parent[x];
      check(before.colored(y), "parent of an uncolored vertex is uncolored");
      f.assign(x, before[y]);
      if (token[y] >= 0) {
        token[x] = token[y];
        token[y] = -1;
      }
    }
    for (Vertex x : movers) f.clear(forest.parent[x]);
    if (debug_asserts_enabled()) {
      check(is_proper(g, f), "forest stage produced an improper coloring");
      for (std::size_t s = 0; s <= stage; ++s) {
        for (Vertex x : strata[s]) check(forest.anchor[x] || f.colored(x), "lower stratum left uncolored");
      }
      for (Vertex y = 0; y < n; ++y) {
        if (!before.colored(y) || f[y] == before[y]) continue;
        bool replaced = std::any_of(movers.begin(), movers.end(), [&](Vertex x) {
          return forest.parent[x] == y && f[x] == before[y];
        });
        check(replaced, "a vertex left its class without a replacement child");
      }
    }
  }
  ForestRecoloring out{std::move(f), std::vector<Vertex>(static_cast<std::size_t>(n), -1)};
  for (Vertex v = 0; v < n; ++v) {
    check(forest.anchor[v] || out.coloring.colored(v), "non-anchor vertex left uncolored");
    if (token[v] >= 0) out.witness[v] = token[v];
  }
  check(is_proper(g, out.coloring), "forest recoloring is improper");
  check(witness_is_valid(seed, out), "forest recoloring witness is invalid");
  check(dominates(out.coloring, seed), "forest recoloring does not dominate the seed");
  return out;
}

bool witness_is_valid(const PartialColoring& seed, const ForestRecoloring& r) {
  const int n = seed.vertex_count();
  if (static_cast<int>(r.witness.size()) != n) return false;
  std::vector<char> hit(static_cast<std::size_t>(n), 0);
  for (Vertex x = 0; x < n; ++x) {
    Vertex y = r.witness[x];
    if (y < 0) continue;
    if (y >= n || hit[y] || !seed.colored(y) || r.coloring[x] != seed[y]) return false;
    hit[y] = 1;
  }
  for (Vertex y = 0; y < n; ++y) {
    if (seed.colored(y) && !hit[y]) return false;
  }
  return true;
}

PartialColoring dominating_delta_coloring(const Graph& g, const PartialColoring& seed, int palette) {
  const int n = g.vertex_count();
  if (seed.vertex_count() != n) fail(ErrorCode::InvalidArgument, "seed does not match the graph");
  if (palette < g.max_degree()) {
    fail(ErrorCode::PaletteTooSmall, "palette smaller than max degree", {{"palette", palette}, {"max_degree", g.max_degree()}});
  }
  std::vector<Vertex> anchors;
  std::vector<std::vector<Vertex>> witness_blocks;
  for (const auto& comp : components(g)) {
    std::vector<Vertex> low;
    for (Vertex v : comp) {
      if (g.degree(v) < palette) low.push_back(v);
    }
    if (!low.empty()) {
      anchors.insert(anchors.end(), low.begin(), low.end());
      continue;
    }
    if (is_gallai_tree(g, comp)) {
      fail(ErrorCode::RegularGallaiComponent, "component is a regular Gallai tree", {{"component", comp}});
    }
    auto sub = induced_subgraph(g, comp);
    auto blocks = block_decomposition(sub.graph);
    std::vector<Vertex> best;
    for (const auto& b : blocks.blocks) {
      if (block_is_clique(sub.graph, b) || block_is_odd_cycle(sub.graph, b)) continue;
      std::vector<Vertex> mapped;
      for (Vertex lv : b) mapped.push_back(sub.to_parent[lv]);
      std::sort(mapped.begin(), mapped.end());
      if (best.empty() || mapped.front() < best.front()) best = std::move(mapped);
    }
    check(!best.empty(), "non-Gallai component without a witness block");
    anchors.insert(anchors.end(), best.begin(), best.end());
    witness_blocks.push_back(std::move(best));
  }
  auto forest = build_one_ended_subforest(g, anchors);
  auto r = forest_recolor(g, forest, seed, palette);
  PartialColoring f = greedy_maximal(g, ListAssignment::full(n, palette), r.coloring);
  for (const auto& block : witness_blocks) {
    auto sub = induced_subgraph(g, block);
    std::vector<std::vector<Color>> lists;
    PartialColoring sub_seed(sub.graph.vertex_count(), palette);
    for (Vertex lv = 0; lv < sub.graph.vertex_count(); ++lv) {
      Vertex x = sub.to_parent[lv];
      std::vector<char> blocked(static_cast<std::size_t>(palette), 0);
      for (Vertex w : g.neighbors(x)) {
        if (sub.to_local[w] < 0 && f.colored(w)) blocked[f[w]] = 1;
      }
      std::vector<Color> l;
      for (Color c = 0; c < palette; ++c) {
        if (!blocked[c]) l.push_back(c);
      }
      lists.push_back(std::move(l));
      if (f.colored(x)) sub_seed.assign(lv, f[x]);
    }
    auto fb = dominating_full_coloring(sub.graph, ListAssignment(lists), sub_seed);
    for (Vertex lv = 0; lv < sub.graph.vertex_count(); ++lv) f.assign(sub.to_parent[lv], fb[lv]);
  }
  check(f.is_total(), "dominating coloring is not total");
  check(is_proper(g, f), "dominating coloring is improper");
  check(dominates(f, seed), "coloring does not dominate the seed");
  return f;
}

}  // namespace equicolor
