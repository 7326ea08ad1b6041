// Candidate-move scanning. Every scan is a loop over root vertices whose
// per-root work only reads the graph and the coloring; the parallel kernel
// fans the roots out over OpenMP threads and keeps the smallest successful
// root, so it returns exactly what the serial loop returns.
#include <algorithm>
#include <atomic>
#include <functional>

#include "equicolor/dynamics.hpp"
#include "equicolor/errors.hpp"

namespace equicolor {

namespace {

using RootVisitor = std::function<bool(const RecoloringMove&)>;  // return false to stop

struct ScanContext {
  const Graph& g;
  const PartialColoring& f;
  std::vector<char> in_a;  // color has minimum count
  std::vector<Color> a_colors;

  ScanContext(const Graph& graph, const PartialColoring& coloring) : g(graph), f(coloring) {
    const int lo = f.min_count();
    in_a.assign(static_cast<std::size_t>(f.palette_size()), 0);
    for (Color c = 0; c < f.palette_size(); ++c) {
      if (f.count(c) == lo) {
        in_a[c] = 1;
        a_colors.push_back(c);
      }
    }
  }

  bool in_b(Vertex v) const { return !in_a[f[v]]; }

  void neighbor_counts(Vertex v, std::vector<int>& cnt) const {
    cnt.assign(static_cast<std::size_t>(f.palette_size()), 0);
    for (Vertex w : g.neighbors(v)) ++cnt[f[w]];
  }

  bool has_neighbor_colored(Vertex v, Color c) const {
    auto nb = g.neighbors(v);
    return std::any_of(nb.begin(), nb.end(), [&](Vertex w) { return f[w] == c; });
  }

  // Offers each admissible move rooted at `root` until the visitor stops.
  void pattern1(Vertex x, const RootVisitor& visit) const {
    if (!in_b(x)) return;
    std::vector<int> cnt;
    neighbor_counts(x, cnt);
    for (Color alpha : a_colors) {
      if (cnt[alpha] != 0) continue;
      RecoloringMove m({{x, alpha}});
      if (admissible_witness(g, f, m) && !visit(m)) return;
    }
  }

  void pattern2(Vertex x, const RootVisitor& visit) const {
    if (!in_b(x)) return;
    std::vector<int> cnt;
    neighbor_counts(x, cnt);
    for (Color alpha : a_colors) {
      if (cnt[alpha] != 1) continue;
      Vertex y = -1;
      for (Vertex w : g.neighbors(x)) {
        if (f[w] == alpha) y = w;
      }
      for (Color alpha2 : a_colors) {
        if (alpha2 == alpha || has_neighbor_colored(y, alpha2)) continue;
        RecoloringMove m({{x, alpha}, {y, alpha2}});
        if (admissible_witness(g, f, m) && !visit(m)) return;
      }
    }
  }

  void pattern3(Vertex y, const RootVisitor& visit) const {
    const Color alpha = f[y];
    if (!in_a[alpha]) return;
    std::vector<Vertex> solo;  // S(y)
    for (Vertex x : g.neighbors(y)) {
      if (!in_b(x)) continue;
      int hits = 0;
      for (Vertex w : g.neighbors(x)) hits += f[w] == alpha;
      if (hits == 1) solo.push_back(x);
    }
    std::vector<int> cnt;
    for (std::size_t i = 0; i < solo.size(); ++i) {
      for (std::size_t j = i + 1; j < solo.size(); ++j) {
        Vertex x = solo[i], x2 = solo[j];
        if (g.adjacent(x, x2)) continue;
        neighbor_counts(y, cnt);
        --cnt[f[x]];
        --cnt[f[x2]];
        bool found = false;
        for (Color gamma = 0; gamma < f.palette_size(); ++gamma) {
          if (gamma == alpha || cnt[gamma] != 0) continue;
          found = true;
          RecoloringMove m({{x, alpha}, {x2, alpha}, {y, gamma}});
          if (admissible_witness(g, f, m) && !visit(m)) return;
        }
        if (!found) check(g.degree(y) >= f.palette_size() + 1, "no extra color although deg(y) <= k");
      }
    }
  }

  void pattern(int which, Vertex root, const RootVisitor& visit) const {
    switch (which) {
      case 1: pattern1(root, visit); break;
      case 2: pattern2(root, visit); break;
      case 3: pattern3(root, visit); break;
      default: fail(ErrorCode::InvalidArgument, "pattern must be 1, 2 or 3", {{"pattern", which}});
    }
  }

  // Connected domains of `size` vertices whose smallest vertex is `root`,
  // by the ESU extension scheme, each with all proper recolorings.
  void connected(Vertex root, int size, const RootVisitor& visit) const {
    std::vector<Vertex> sub{root};
    std::vector<char> in_sub(static_cast<std::size_t>(g.vertex_count()), 0);
    in_sub[root] = 1;
    std::vector<Vertex> ext;
    for (Vertex w : g.neighbors(root)) {
      if (w > root) ext.push_back(w);
    }
    bool stop = false;
    extend(root, size, sub, in_sub, ext, visit, stop);
  }

  void extend(Vertex root, int size, std::vector<Vertex>& sub, std::vector<char>& in_sub, std::vector<Vertex> ext,
              const RootVisitor& visit, bool& stop) const {
    if (stop) return;
    if (static_cast<int>(sub.size()) == size) {
      recolorings(sub, in_sub, visit, stop);
      return;
    }
    while (!ext.empty() && !stop) {
      Vertex w = ext.back();
      ext.pop_back();
      std::vector<Vertex> next = ext;
      for (Vertex u : g.neighbors(w)) {
        if (u <= root || in_sub[u]) continue;
        if (std::find(next.begin(), next.end(), u) != next.end()) continue;
        bool near_sub = false;
        for (Vertex s : sub) near_sub = near_sub || g.adjacent(u, s);
        if (!near_sub) next.push_back(u);
      }
      sub.push_back(w);
      in_sub[w] = 1;
      extend(root, size, sub, in_sub, std::move(next), visit, stop);
      in_sub[w] = 0;
      sub.pop_back();
    }
  }

  void recolorings(const std::vector<Vertex>& sub, const std::vector<char>& in_sub, const RootVisitor& visit,
                   bool& stop) const {
    std::vector<Vertex> dom = sub;
    std::sort(dom.begin(), dom.end());
    std::vector<Color> colors(dom.size(), kUncolored);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (stop) return;
      if (i == dom.size()) {
        std::vector<std::pair<Vertex, Color>> a;
        bool changes = false;
        for (std::size_t j = 0; j < dom.size(); ++j) {
          a.emplace_back(dom[j], colors[j]);
          changes = changes || colors[j] != f[dom[j]];
        }
        if (!changes) return;
        RecoloringMove m(std::move(a));
        if (admissible_witness(g, f, m) && !visit(m)) stop = true;
        return;
      }
      for (Color c = 0; c < f.palette_size() && !stop; ++c) {
        bool ok = true;
        for (Vertex w : g.neighbors(dom[i])) {
          if (in_sub[w]) {
            auto pos = std::lower_bound(dom.begin(), dom.end(), w) - dom.begin();
            if (static_cast<std::size_t>(pos) < i && colors[pos] == c) ok = false;
          } else if (f[w] == c) {
            ok = false;
          }
          if (!ok) break;
        }
        if (!ok) continue;
        colors[i] = c;
        rec(i + 1);
      }
    };
    rec(0);
  }
};

template <class AtRoot>
std::optional<RecoloringMove> first_over_roots(int n, ScanMode mode, AtRoot&& at_root) {
  if (mode == ScanMode::Serial) {
    for (Vertex r = 0; r < n; ++r) {
      if (auto m = at_root(r)) return m;
    }
    return std::nullopt;
  }
  std::atomic<int> best{n};
  std::vector<std::optional<RecoloringMove>> found(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 8)
  for (Vertex r = 0; r < n; ++r) {
    if (r > best.load(std::memory_order_relaxed)) continue;
    auto m = at_root(r);
    if (!m) continue;
    found[r] = std::move(m);
    int cur = best.load();
    while (r < cur && !best.compare_exchange_weak(cur, r)) {
    }
  }
  const int b = best.load();
  if (b == n) return std::nullopt;
  return found[b];
}

}  // namespace

std::optional<RecoloringMove> scan_pattern(const Graph& g, const PartialColoring& f, int pattern, ScanMode mode) {
  ScanContext ctx(g, f);
  if (pattern < 1 || pattern > 3) fail(ErrorCode::InvalidArgument, "pattern must be 1, 2 or 3", {{"pattern", pattern}});
  return first_over_roots(g.vertex_count(), mode, [&](Vertex r) {
    std::optional<RecoloringMove> out;
    ctx.pattern(pattern, r, [&](const RecoloringMove& m) {
      out = m;
      return false;
    });
    return out;
  });
}

std::optional<RecoloringMove> find_improving_move(const Graph& g, const PartialColoring& f, ScanMode mode) {
  for (int p = 1; p <= 3; ++p) {
    if (auto m = scan_pattern(g, f, p, mode)) return m;
  }
  return std::nullopt;
}

std::optional<RecoloringMove> scan_connected_moves(const Graph& g, const PartialColoring& f, int size,
                                                   ScanMode mode) {
  if (size < 1) fail(ErrorCode::InvalidArgument, "move size must be positive");
  ScanContext ctx(g, f);
  return first_over_roots(g.vertex_count(), mode, [&](Vertex r) {
    std::optional<RecoloringMove> out;
    ctx.connected(r, size, [&](const RecoloringMove& m) {
      out = m;
      return false;
    });
    return out;
  });
}

std::vector<RecoloringMove> collect_pattern_candidates(const Graph& g, const PartialColoring& f, ScanMode mode) {
  ScanContext ctx(g, f);
  const int n = g.vertex_count();
  std::vector<RecoloringMove> out;
  for (int p = 1; p <= 3; ++p) {
    std::vector<std::vector<RecoloringMove>> per_root(static_cast<std::size_t>(n));
    auto body = [&](Vertex r) {
      ctx.pattern(p, r, [&](const RecoloringMove& m) {
        per_root[r].push_back(m);
        return true;
      });
    };
    if (mode == ScanMode::Parallel) {
#pragma omp parallel for schedule(dynamic, 8)
      for (Vertex r = 0; r < n; ++r) body(r);
    } else {
      for (Vertex r = 0; r < n; ++r) body(r);
    }
    for (auto& v : per_root) out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

}  // namespace equicolor
