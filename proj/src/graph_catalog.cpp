// Canonical form by individualization-refinement: refine an ordered vertex
// partition until equitable, branch on the first non-singleton cell, and
// keep the largest adjacency code over all discrete leaves. Vertices of a
// cell with the same neighborhood are interchangeable, so only one of them
// is branched on.
#include "equicolor/graph_catalog.hpp"

#include <algorithm>
#include <unordered_set>

#include "equicolor/errors.hpp"

namespace equicolor::catalog {

namespace {

using Cell = std::vector<Vertex>;
using Partition = std::vector<Cell>;

int pair_index(int i, int j) {
  if (i > j) std::swap(i, j);
  return j * (j - 1) / 2 + i;
}

struct Canonizer {
  const Graph& g;
  int n;
  std::vector<std::uint32_t> adj;  // bitsets
  std::uint64_t best = 0;
  bool have = false;

  explicit Canonizer(const Graph& graph) : g(graph), n(graph.vertex_count()), adj(static_cast<std::size_t>(n), 0) {
    for (Vertex v = 0; v < n; ++v) {
      for (Vertex w : g.neighbors(v)) adj[v] |= 1u << w;
    }
  }

  void refine(Partition& p) const {
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<std::uint32_t> masks;
      for (const auto& c : p) {
        std::uint32_t m = 0;
        for (Vertex v : c) m |= 1u << v;
        masks.push_back(m);
      }
      Partition next;
      for (const auto& cell : p) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<std::vector<int>, Vertex>> keyed;
        for (Vertex v : cell) {
          std::vector<int> sig;
          for (auto m : masks) sig.push_back(__builtin_popcount(adj[v] & m));
          keyed.emplace_back(std::move(sig), v);
        }
        std::sort(keyed.begin(), keyed.end());
        Cell cur{keyed[0].second};
        for (std::size_t i = 1; i < keyed.size(); ++i) {
          if (keyed[i].first != keyed[i - 1].first) {
            next.push_back(std::move(cur));
            cur.clear();
            changed = true;
          }
          cur.push_back(keyed[i].second);
        }
        next.push_back(std::move(cur));
      }
      p = std::move(next);
    }
  }

  void search(Partition p) {
    refine(p);
    auto target = std::find_if(p.begin(), p.end(), [](const Cell& c) { return c.size() > 1; });
    if (target == p.end()) {
      std::vector<int> label(static_cast<std::size_t>(n));
      for (std::size_t i = 0; i < p.size(); ++i) label[p[i][0]] = static_cast<int>(i);
      std::uint64_t code = 0;
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v : g.neighbors(u)) {
          if (u < v) code |= std::uint64_t{1} << pair_index(label[u], label[v]);
        }
      }
      if (!have || code > best) best = code;
      have = true;
      return;
    }
    const std::size_t idx = static_cast<std::size_t>(target - p.begin());
    std::vector<Vertex> tried;
    for (Vertex v : p[idx]) {
      bool twin = std::any_of(tried.begin(), tried.end(), [&](Vertex u) {
        std::uint32_t mask = ~((1u << u) | (1u << v));
        return (adj[u] & mask) == (adj[v] & mask);
      });
      if (twin) continue;
      tried.push_back(v);
      Partition q;
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (i != idx) {
          q.push_back(p[i]);
          continue;
        }
        q.push_back({v});
        Cell rest;
        for (Vertex w : p[i]) {
          if (w != v) rest.push_back(w);
        }
        q.push_back(std::move(rest));
      }
      search(std::move(q));
    }
  }
};

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 11) fail(ErrorCode::BudgetExceeded, "canonical codes support n <= 11", {{"n", n}});
  if (n == 0) return 0;
  Canonizer c(g);
  Cell all(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) all[v] = v;
  c.search({all});
  return c.best;
}

Graph from_code(int n, std::uint64_t code) {
  std::vector<Edge> edges;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      if (code >> pair_index(i, j) & 1u) edges.emplace_back(i, j);
    }
  }
  return build_graph(n, edges);
}

std::vector<std::uint64_t> all_graphs(int n) {
  if (n < 0 || n > 11) fail(ErrorCode::InvalidArgument, "catalog supports 0 <= n <= 11", {{"n", n}});
  std::vector<std::uint64_t> level{0};
  for (int m = 1; m <= n; ++m) {
    std::unordered_set<std::uint64_t> seen;
    for (std::uint64_t code : level) {
      Graph base = from_code(m - 1, code);
      auto edges = base.edges();
      const std::size_t base_size = edges.size();
      for (std::uint32_t s = 0; s < (1u << (m - 1)); ++s) {
        edges.resize(base_size);
        for (Vertex v = 0; v < m - 1; ++v) {
          if (s >> v & 1u) edges.emplace_back(v, m - 1);
        }
        seen.insert(canonical_code(build_graph(m, edges)));
      }
    }
    level.assign(seen.begin(), seen.end());
    std::sort(level.begin(), level.end());
  }
  return level;
}

}  // namespace equicolor::catalog
