#include "equicolor/generators.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "equicolor/errors.hpp"

namespace equicolor {

namespace {

using Rng = std::mt19937_64;

void require(bool ok, const std::string& what, nlohmann::json detail = nlohmann::json::object()) {
  if (!ok) fail(ErrorCode::InfeasibleParameters, what, std::move(detail));
}

std::vector<Edge> to_vector(const std::set<Edge>& edges) { return {edges.begin(), edges.end()}; }

Edge ordered(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

}  // namespace

Graph random_regular(int n, int d, std::uint64_t seed) {
  require(n >= 0 && d >= 0, "negative parameters");
  require(d < n || (n == 0 && d == 0), "regular degree must be below n", {{"n", n}, {"d", d}});
  require((static_cast<std::int64_t>(n) * d) % 2 == 0, "n*d must be even", {{"n", n}, {"d", d}});
  Rng rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Vertex> points;
    for (Vertex v = 0; v < n; ++v) points.insert(points.end(), static_cast<std::size_t>(d), v);
    std::set<Edge> edges;
    bool stuck = false;
    while (!points.empty() && !stuck) {
      bool paired = false;
      for (int tries = 0; tries < 100 && !paired; ++tries) {
        std::uniform_int_distribution<std::size_t> pick(0, points.size() - 1);
        std::size_t i = pick(rng), j = pick(rng);
        if (i == j || points[i] == points[j]) continue;
        Edge e = ordered(points[i], points[j]);
        if (edges.count(e)) continue;
        edges.insert(e);
        if (i < j) std::swap(i, j);
        points.erase(points.begin() + static_cast<std::ptrdiff_t>(i));
        points.erase(points.begin() + static_cast<std::ptrdiff_t>(j));
        paired = true;
      }
      stuck = !paired;
    }
    if (!stuck) return build_graph(n, to_vector(edges));
  }
  fail(ErrorCode::InfeasibleParameters, "pairing model kept rejecting", {{"n", n}, {"d", d}});
}

Graph erdos_renyi(int n, double p, std::uint64_t seed) {
  require(n >= 0 && p >= 0 && p <= 1, "need n >= 0 and 0 <= p <= 1");
  Rng rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return build_graph(n, edges);
}

Graph torus(int rows, int cols) {
  require(rows >= 3 && cols >= 3, "torus sides must be at least 3", {{"rows", rows}, {"cols", cols}});
  std::set<Edge> edges;
  auto id = [&](int r, int c) { return static_cast<Vertex>(r * cols + c); };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      edges.insert(ordered(id(r, c), id(r, (c + 1) % cols)));
      edges.insert(ordered(id(r, c), id((r + 1) % rows, c)));
    }
  }
  return build_graph(rows * cols, to_vector(edges));
}

Graph random_bipartite(int left, int right, double p, std::uint64_t seed) {
  require(left >= 0 && right >= 0 && p >= 0 && p <= 1, "need nonnegative sides and 0 <= p <= 1");
  Rng rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < left; ++u) {
    for (Vertex v = left; v < left + right; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return build_graph(left + right, edges);
}

Graph gallai_tree(int blocks, int max_block, std::uint64_t seed) {
  require(blocks >= 1 && max_block >= 2, "need at least one block of size at least 2");
  Rng rng(seed);
  std::vector<Edge> edges;
  int n = 1;
  for (int b = 0; b < blocks; ++b) {
    std::uniform_int_distribution<Vertex> attach_at(0, n - 1);
    Vertex root = attach_at(rng);
    std::uniform_int_distribution<int> size_of(2, max_block);
    int size = size_of(rng);
    bool cycle = size >= 3 && size % 2 == 1 && std::bernoulli_distribution(0.5)(rng);
    std::vector<Vertex> members{root};
    for (int i = 1; i < size; ++i) members.push_back(n++);
    if (cycle) {
      for (int i = 0; i < size; ++i) edges.push_back(ordered(members[i], members[(i + 1) % size]));
    } else {
      for (int i = 0; i < size; ++i) {
        for (int j = i + 1; j < size; ++j) edges.push_back(ordered(members[i], members[j]));
      }
    }
  }
  return build_graph(n, edges);
}

Graph sparse_hub(int n, int delta, double target_avg, std::uint64_t seed) {
  require(delta >= 1 && n > delta, "need n > delta >= 1", {{"n", n}, {"delta", delta}});
  const auto budget = static_cast<std::int64_t>(target_avg * n / 2);
  require(budget >= delta, "average-degree target too small for one hub", {{"target_avg", target_avg}});
  Rng rng(seed);
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::set<Edge> edges;
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    auto add = [&](Vertex u, Vertex v) {
      if (u == v || edges.count(ordered(u, v))) return false;
      edges.insert(ordered(u, v));
      ++deg[u];
      ++deg[v];
      return true;
    };
    const auto hubs = std::max<std::int64_t>(1, budget / (2 * delta));
    auto order = std::vector<Vertex>(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) order[v] = v;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<char> is_hub(static_cast<std::size_t>(n), 0);
    for (std::int64_t h = 0; h < hubs; ++h) is_hub[order[h]] = 1;
    std::uniform_int_distribution<Vertex> any(0, n - 1);
    for (std::int64_t h = 0; h < hubs; ++h) {
      Vertex hub = order[h];
      int guard = 0;
      while (deg[hub] < delta && ++guard < 100 * n) {
        Vertex v = any(rng);
        if (!is_hub[v] && deg[v] < 2) add(hub, v);
      }
    }
    int guard = 0;
    while (static_cast<std::int64_t>(edges.size()) < budget && ++guard < 100 * n) {
      Vertex u = any(rng), v = any(rng);
      if (is_hub[u] || is_hub[v] || deg[u] >= 3 || deg[v] >= 3) continue;
      add(u, v);
    }
    Graph g = build_graph(n, to_vector(edges));
    if (g.max_degree() == delta && average_degree(g) <= Rational(target_avg) && !contains_clique(g, delta + 1)) {
      return g;
    }
  }
  fail(ErrorCode::InfeasibleParameters, "could not build a hub graph", {{"n", n}, {"delta", delta}});
}

Graph generate(const InstanceSpec& s) {
  if (s.generator == "regular") return random_regular(s.n, s.degree, s.seed);
  if (s.generator == "gnp") return erdos_renyi(s.n, s.density, s.seed);
  if (s.generator == "torus") return torus(s.rows, s.cols);
  if (s.generator == "bipartite") return random_bipartite(s.rows, s.cols, s.density, s.seed);
  if (s.generator == "gallai") return gallai_tree(s.blocks, s.max_block, s.seed);
  if (s.generator == "hub") return sparse_hub(s.n, s.degree, s.density, s.seed);
  fail(ErrorCode::InvalidArgument, "unknown generator", {{"generator", s.generator}});
}

}  // namespace equicolor
