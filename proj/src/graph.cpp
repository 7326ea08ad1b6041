#include "equicolor/graph.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "equicolor/errors.hpp"

namespace equicolor {

bool Graph::adjacent(Vertex u, Vertex v) const noexcept {
  auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph build_graph(int n, std::span<const Edge> edges) {
  if (n < 0) fail(ErrorCode::OutOfRange, "negative vertex count");
  std::vector<std::vector<Vertex>> lists(static_cast<std::size_t>(n));
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      fail(ErrorCode::OutOfRange, "edge endpoint outside [0, n)", {{"edge", {u, v}}, {"n", n}});
    }
    if (u == v) fail(ErrorCode::SelfLoop, "self-loop", {{"vertex", u}});
    lists[u].push_back(v);
    lists[v].push_back(u);
  }
  Graph g;
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex v = 0; v < n; ++v) {
    auto& nbrs = lists[v];
    std::sort(nbrs.begin(), nbrs.end());
    auto dup = std::adjacent_find(nbrs.begin(), nbrs.end());
    if (dup != nbrs.end()) {
      fail(ErrorCode::DuplicateEdge, "duplicate edge", {{"edge", {std::min(v, *dup), std::max(v, *dup)}}});
    }
    g.offsets_[v + 1] = g.offsets_[v] + nbrs.size();
    g.max_degree_ = std::max(g.max_degree_, static_cast<int>(nbrs.size()));
  }
  g.adjacency_.reserve(g.offsets_.back());
  for (const auto& nbrs : lists) g.adjacency_.insert(g.adjacency_.end(), nbrs.begin(), nbrs.end());
  return g;
}

std::vector<int> component_ids(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> id(n, -1);
  std::vector<Vertex> stack;
  int next = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (id[s] != -1) continue;
    id[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (id[w] == -1) {
          id[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return id;
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  auto id = component_ids(g);
  int count = id.empty() ? 0 : *std::max_element(id.begin(), id.end()) + 1;
  std::vector<std::vector<Vertex>> parts(count);
  for (Vertex v = 0; v < g.vertex_count(); ++v) parts[id[v]].push_back(v);
  return parts;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

// Iterative Hopcroft-Tarjan with an edge stack.
BlockDecomposition block_decomposition(const Graph& g) {
  const int n = g.vertex_count();
  BlockDecomposition out;
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<std::size_t> next_edge(n, 0);
  std::vector<Vertex> parent(n, -1);
  std::vector<Edge> edge_stack;
  std::vector<int> block_count(n, 0);
  int timer = 0;

  auto pop_block = [&](Vertex u, Vertex v) {
    std::vector<Vertex> block;
    while (true) {
      Edge e = edge_stack.back();
      edge_stack.pop_back();
      block.push_back(e.first);
      block.push_back(e.second);
      if (e == Edge{u, v}) break;
    }
    std::sort(block.begin(), block.end());
    block.erase(std::unique(block.begin(), block.end()), block.end());
    for (Vertex x : block) ++block_count[x];
    out.blocks.push_back(std::move(block));
  };

  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    if (g.degree(root) == 0) {
      disc[root] = timer++;
      out.blocks.push_back({root});
      block_count[root] = 1;
      continue;
    }
    std::vector<Vertex> stack{root};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Vertex u = stack.back();
      auto nbrs = g.neighbors(u);
      if (next_edge[u] < nbrs.size()) {
        Vertex w = nbrs[next_edge[u]++];
        if (disc[w] == -1) {
          parent[w] = u;
          disc[w] = low[w] = timer++;
          edge_stack.emplace_back(u, w);
          stack.push_back(w);
        } else if (w != parent[u] && disc[w] < disc[u]) {
          low[u] = std::min(low[u], disc[w]);
          edge_stack.emplace_back(u, w);
        }
      } else {
        stack.pop_back();
        if (!stack.empty()) {
          Vertex p = stack.back();
          low[p] = std::min(low[p], low[u]);
          if (low[u] >= disc[p]) pop_block(p, u);
        }
      }
    }
  }

  for (Vertex v = 0; v < n; ++v) {
    if (block_count[v] >= 2) out.cut_vertices.push_back(v);
  }
  for (int b = 0; b < static_cast<int>(out.blocks.size()); ++b) {
    for (Vertex v : out.blocks[b]) {
      if (block_count[v] >= 2) out.tree_edges.emplace_back(b, v);
    }
  }
  return out;
}

bool block_is_clique(const Graph& g, std::span<const Vertex> block) {
  for (std::size_t i = 0; i < block.size(); ++i) {
    for (std::size_t j = i + 1; j < block.size(); ++j) {
      if (!g.adjacent(block[i], block[j])) return false;
    }
  }
  return true;
}

bool block_is_odd_cycle(const Graph& g, std::span<const Vertex> block) {
  if (block.size() < 3 || block.size() % 2 == 0) return false;
  std::vector<Vertex> sorted(block.begin(), block.end());
  std::sort(sorted.begin(), sorted.end());
  for (Vertex v : sorted) {
    int inside = 0;
    for (Vertex w : g.neighbors(v)) {
      if (std::binary_search(sorted.begin(), sorted.end(), w)) ++inside;
    }
    if (inside != 2) return false;
  }
  // 2-regular inside a block (connected) means a single cycle.
  return true;
}

bool is_gallai_tree(const Graph& g, std::span<const Vertex> component) {
  std::vector<Vertex> members(component.begin(), component.end());
  std::sort(members.begin(), members.end());
  auto ids = component_ids(g);
  if (members.empty()) fail(ErrorCode::NotAComponent, "empty vertex set");
  const int cid = ids[members.front()];
  std::size_t size = std::count(ids.begin(), ids.end(), cid);
  for (Vertex v : members) {
    if (v < 0 || v >= g.vertex_count() || ids[v] != cid) {
      fail(ErrorCode::NotAComponent, "vertex set spans several components");
    }
  }
  if (size != members.size() || std::adjacent_find(members.begin(), members.end()) != members.end()) {
    fail(ErrorCode::NotAComponent, "vertex set is not a whole component");
  }
  auto sub = induced_subgraph(g, members);
  auto blocks = block_decomposition(sub.graph);
  for (const auto& block : blocks.blocks) {
    if (!block_is_clique(sub.graph, block) && !block_is_odd_cycle(sub.graph, block)) return false;
  }
  return true;
}

bool contains_clique(const Graph& g, int q) {
  if (q < 1) fail(ErrorCode::InvalidArgument, "clique size must be >= 1");
  if (q == 1) return g.vertex_count() >= 1;
  if (q > g.max_degree() + 1) return false;
  // Grow cliques whose vertices increase; candidates are later common neighbors.
  std::function<bool(std::vector<Vertex>&, int)> extend = [&](std::vector<Vertex>& cand, int need) {
    if (need == 0) return true;
    if (static_cast<int>(cand.size()) < need) return false;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      if (static_cast<int>(cand.size() - i) < need) return false;
      std::vector<Vertex> next;
      for (std::size_t j = i + 1; j < cand.size(); ++j) {
        if (g.adjacent(cand[i], cand[j])) next.push_back(cand[j]);
      }
      if (extend(next, need - 1)) return true;
    }
    return false;
  };
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) < q - 1) continue;
    std::vector<Vertex> cand;
    for (Vertex w : g.neighbors(v)) {
      if (w > v && g.degree(w) >= q - 1) cand.push_back(w);
    }
    if (extend(cand, q - 1)) return true;
  }
  return false;
}

Rational average_degree(const Graph& g) {
  if (g.vertex_count() == 0) fail(ErrorCode::EmptyGraph, "average degree of the empty graph");
  return Rational(static_cast<std::int64_t>(2 * g.edge_count()), g.vertex_count());
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  InducedSubgraph sub;
  sub.to_parent.assign(vertices.begin(), vertices.end());
  sub.to_local.assign(g.vertex_count(), -1);
  for (std::size_t i = 0; i < sub.to_parent.size(); ++i) sub.to_local[sub.to_parent[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < sub.to_parent.size(); ++i) {
    for (Vertex w : g.neighbors(sub.to_parent[i])) {
      Vertex j = sub.to_local[w];
      if (j > static_cast<Vertex>(i)) edges.emplace_back(static_cast<Vertex>(i), j);
    }
  }
  sub.graph = build_graph(static_cast<int>(sub.to_parent.size()), edges);
  return sub;
}

}  // namespace equicolor
