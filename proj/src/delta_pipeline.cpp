#include "equicolor/delta_pipeline.hpp"

#include <algorithm>
#include <random>

#include "equicolor/debug.hpp"
#include "equicolor/dynamics.hpp"
#include "equicolor/errors.hpp"
#include "equicolor/forest.hpp"

namespace equicolor {

namespace {

std::vector<char> membership(int n, std::span<const Vertex> subset) {
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  for (Vertex v : subset) {
    if (v < 0 || v >= n) fail(ErrorCode::OutOfRange, "vertex out of range", {{"vertex", v}});
    in[v] = 1;
  }
  return in;
}

std::int64_t potential(const PartialColoring& f) {
  std::int64_t s = 0;
  for (Color a = 0; a < f.palette_size(); ++a) {
    for (Color b = a + 1; b < f.palette_size(); ++b) s += std::abs(f.count(a) - f.count(b));
  }
  return s;
}

}  // namespace

CostReport cost(const Graph& g, std::span<const Vertex> subset) {
  const int n = g.vertex_count();
  auto in = membership(n, subset);
  CostReport r{{subset.begin(), subset.end()}, 0, 0, 0};
  for (auto [u, v] : g.edges()) {
    if (in[u] && in[v]) {
      ++r.internal;
    } else if (in[u] || in[v]) {
      ++r.boundary;
    }
  }
  r.value = n == 0 ? Rational(0) : Rational(r.boundary + r.internal, n);
  return r;
}

bool dense_subset_condition(const Graph& g, std::span<const Vertex> subset, const Rational& t) {
  auto c = cost(g, subset);
  return Rational(c.boundary + c.internal) >= t * static_cast<std::int64_t>(subset.size());
}

std::vector<Vertex> extract_dense_set(const Graph& g, const Rational& t, std::uint64_t sample_seed) {
  if (t < 0) fail(ErrorCode::InvalidArgument, "t must be nonnegative");
  const int n = g.vertex_count();
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) {
    if (Rational(g.degree(v)) >= 2 * t) in[v] = 1;
  }
  const int k = g.max_degree() + 1;
  auto c = greedy_extend_full(g, k, PartialColoring(n, k));
  auto outside_degree = [&](Vertex y) {
    int d = 0;
    for (Vertex w : g.neighbors(y)) d += !in[w];
    return d;
  };
  for (Color r = 0; r < k; ++r) {
    std::vector<Vertex> joining;
    for (Vertex y = 0; y < n; ++y) {
      if (!in[y] && c[y] == r && Rational(outside_degree(y)) >= t) joining.push_back(y);
    }
    for (Vertex y : joining) in[y] = 1;
  }
  std::vector<Vertex> x;
  for (Vertex v = 0; v < n; ++v) {
    if (in[v]) {
      x.push_back(v);
    } else {
      check(Rational(g.degree(v)) < 2 * t, "(X1) fails outside the dense set");
      check(Rational(outside_degree(v)) < t, "(X2) fails outside the dense set");
    }
  }
  check(dense_subset_condition(g, x, t), "(X3) fails for the dense set");
  if (n <= 9) {
    for (std::uint32_t mask = 0; mask < (1u << x.size()); ++mask) {
      std::vector<Vertex> sub;
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (mask >> i & 1u) sub.push_back(x[i]);
      }
      check(dense_subset_condition(g, sub, t), "(X3) fails for a subset");
    }
  } else {
    std::mt19937_64 rng(sample_seed);
    std::bernoulli_distribution coin(0.5);
    for (int s = 0; s < 100; ++s) {
      std::vector<Vertex> sub;
      for (Vertex v : x) {
        if (coin(rng)) sub.push_back(v);
      }
      check(dense_subset_condition(g, sub, t), "(X3) fails for a sampled subset");
    }
  }
  return x;
}

PartialColoring quick_balance(const Graph& g, const PartialColoring& f, std::span<const Vertex> frozen,
                              const PartialColoring& aux, BalanceStats* stats) {
  const int n = g.vertex_count();
  if (f.vertex_count() != n || !f.is_total() || !is_proper(g, f)) fail(ErrorCode::ImproperInput, "input must be total and proper");
  if (aux.vertex_count() != n || !aux.is_total() || !is_proper(g, aux)) fail(ErrorCode::ImproperAux, "auxiliary coloring must be total and proper");
  auto in_x = membership(n, frozen);
  PartialColoring cur = f;
  BalanceStats local;
  local.initial_potential = potential(cur);
  const int k = cur.palette_size();
  bool moved_any = true;
  while (moved_any) {
    moved_any = false;
    ++local.passes;
    const std::int64_t pass_start = potential(cur);
    int pass_moved = 0;
    for (Color r = 0; r < aux.palette_size(); ++r) {
      for (Color alpha = 0; alpha < k; ++alpha) {
        for (Color beta = 0; beta < k; ++beta) {
          if (alpha == beta) continue;
          const int quota = (cur.count(beta) - cur.count(alpha)) / 2;
          if (quota <= 0) continue;
          std::vector<Vertex> movable;
          for (Vertex y = 0; y < n && static_cast<int>(movable.size()) < quota; ++y) {
            if (cur[y] != beta || in_x[y] || aux[y] != r) continue;
            auto nb = g.neighbors(y);
            if (std::none_of(nb.begin(), nb.end(), [&](Vertex w) { return cur[w] == alpha; })) movable.push_back(y);
          }
          if (movable.empty()) continue;
          const std::int64_t before = potential(cur);
          for (Vertex y : movable) cur.assign(y, alpha);
          check(before - potential(cur) >= 2 * static_cast<std::int64_t>(movable.size()),
                "potential dropped by less than twice the moved vertices");
          pass_moved += static_cast<int>(movable.size());
          moved_any = true;
        }
      }
    }
    check(pass_start - potential(cur) >= 2 * static_cast<std::int64_t>(pass_moved), "pass potential drop too small");
    local.moved += pass_moved;
  }
  local.final_potential = potential(cur);
  check(is_proper(g, cur), "quick balance produced an improper coloring");
  for (Vertex v : frozen) check(cur[v] == f[v], "quick balance touched a frozen vertex");
  check(balance_fixpoint_holds(g, cur, frozen), "quick balance stopped before its fixpoint");
  if (stats) *stats = local;
  return cur;
}

bool balance_fixpoint_holds(const Graph& g, const PartialColoring& f, std::span<const Vertex> frozen) {
  auto in_x = membership(g.vertex_count(), frozen);
  for (Vertex y = 0; y < g.vertex_count(); ++y) {
    if (in_x[y] || !f.colored(y)) continue;
    std::vector<char> seen(static_cast<std::size_t>(f.palette_size()), 0);
    for (Vertex w : g.neighbors(y)) {
      if (f.colored(w)) seen[f[w]] = 1;
    }
    for (Color alpha = 0; alpha < f.palette_size(); ++alpha) {
      if (!seen[alpha] && f.count(f[y]) - f.count(alpha) >= 2) return false;
    }
  }
  return true;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::HoldsWithSlack: return "holds-with-slack";
    case Verdict::Vacuous: return "vacuous";
    case Verdict::Fails: return "fails";
  }
  return "?";
}

namespace {

ClaimResult claim(std::string id, std::string statement, Rational lhs, Rational rhs, bool strict, const Rational& slack) {
  ClaimResult c{std::move(id), std::move(statement), std::move(lhs), std::move(rhs), strict, Verdict::Fails};
  if (strict ? c.lhs < c.rhs : c.lhs <= c.rhs) {
    c.verdict = Verdict::Holds;
  } else if (c.lhs <= c.rhs + slack) {
    c.verdict = Verdict::HoldsWithSlack;
  }
  return c;
}

ClaimResult vacuous(std::string id, std::string statement) {
  return {std::move(id), std::move(statement), 0, 0, false, Verdict::Vacuous};
}

[[noreturn]] void precondition(const std::string& which, nlohmann::json detail) {
  detail["condition"] = which;
  fail(ErrorCode::PreconditionViolated, "precondition violated: " + which, std::move(detail));
}

}  // namespace

nlohmann::json PipelineReport::to_json() const {
  nlohmann::json claims_json = nlohmann::json::array();
  for (const auto& c : claims) {
    claims_json.push_back({{"id", c.id},
                           {"statement", c.statement},
                           {"lhs", to_string(c.lhs)},
                           {"rhs", to_string(c.rhs)},
                           {"strict", c.strict},
                           {"verdict", std::string(equicolor::to_string(c.verdict))}});
  }
  return {{"delta", delta},
          {"t", to_string(t)},
          {"dense_set_size", dense_set.size()},
          {"h_counts", h_counts},
          {"h_star_counts", h_star_counts},
          {"g_counts", g_counts},
          {"f_counts", f_counts},
          {"balance", {{"passes", balance.passes}, {"moved", balance.moved},
                       {"initial_potential", balance.initial_potential}, {"final_potential", balance.final_potential}}},
          {"fixpoint", fixpoint},
          {"xi", to_string(xi)},
          {"claims", claims_json},
          {"finale_lower_bound", to_string(finale)},
          {"gap", gap}};
}

DeltaColoringResult equitable_delta_coloring(const Graph& g, std::uint64_t seed) {
  const int n = g.vertex_count();
  const int delta = g.max_degree();
  if (delta < 3) precondition("max_degree>=3", {{"max_degree", delta}});
  if (contains_clique(g, delta + 1)) precondition("no_clique_on_delta_plus_one", {{"max_degree", delta}});
  const Rational avg = average_degree(g);
  if (avg > Rational(delta, 5)) {
    precondition("average_degree<=delta/5", {{"average_degree", to_string(avg)}, {"bound", to_string(Rational(delta, 5))}});
  }
  DeltaColoringResult out;
  auto& rep = out.report;
  rep.delta = delta;
  rep.t = Rational(2 * delta, 5);
  const Rational slack(delta + 1, n);

  // (1) dense set
  rep.dense_set = extract_dense_set(g, rep.t, seed);
  const auto& x = rep.dense_set;
  const int nx = static_cast<int>(x.size());
  const Rational mu_x(nx, n);
  rep.claims.push_back(claim("I", "mu(X) <= 1/4", mu_x, Rational(1, 4), false, 0));
  if (mu_x > Rational(1, 4)) fail(ErrorCode::BoundViolation, "dense set exceeds a quarter of the vertices", {{"size", nx}});

  // (2)-(3) equitable (delta+1)-coloring of G[X], then a dominating delta-coloring
  auto sub = induced_subgraph(g, x);
  PartialColoring h_star(nx, delta);
  if (nx > 0) {
    DriverConfig config;
    config.seed = seed;
    auto h = equitable_k_coloring(sub.graph, delta + 1, std::nullopt, config).coloring;
    rep.h_counts.assign(h.counts().begin(), h.counts().end());
    Color largest = 0;
    for (Color c = 1; c <= delta; ++c) {
      if (h.count(c) > h.count(largest)) largest = c;
    }
    PartialColoring seed_coloring(nx, delta);
    for (Vertex v = 0; v < nx; ++v) {
      Color c = h[v];
      if (c == largest) continue;
      seed_coloring.assign(v, c == delta ? largest : c);
    }
    try {
      h_star = dominating_delta_coloring(sub.graph, seed_coloring, delta);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::RegularGallaiComponent) {
        fail(ErrorCode::InvariantViolation, "dense set has a regular Gallai component", e.detail());
      }
      throw;
    }
  }
  rep.h_star_counts.assign(h_star.counts().begin(), h_star.counts().end());
  {
    std::vector<int> sorted = rep.h_star_counts;
    std::sort(sorted.begin(), sorted.end());
    Rational worst_low = 0, worst_high = 0;
    bool first = true;
    int low_sum = 0, high_sum = 0;
    Rational low_lhs, low_rhs, high_lhs, high_rhs;
    for (int s = 1; s <= delta; ++s) {
      low_sum += sorted[s - 1];
      high_sum += sorted[delta - s];
      Rational lo_gap = Rational(s * nx, (delta + 1) * static_cast<std::int64_t>(n)) - Rational(low_sum, n);
      Rational hi_gap = Rational(high_sum, n) - Rational((s + 1) * nx, (delta + 1) * static_cast<std::int64_t>(n));
      if (first || lo_gap > worst_low) {
        worst_low = lo_gap;
        low_lhs = Rational(s * nx, (delta + 1) * static_cast<std::int64_t>(n));
        low_rhs = Rational(low_sum, n);
      }
      if (first || hi_gap > worst_high) {
        worst_high = hi_gap;
        high_lhs = Rational(high_sum, n);
        high_rhs = Rational((s + 1) * nx, (delta + 1) * static_cast<std::int64_t>(n));
      }
      first = false;
    }
    rep.claims.push_back(claim("II.lower", "s mu(X)/(delta+1) <= mu(S) for every union S of s classes", low_lhs, low_rhs, false, slack));
    rep.claims.push_back(claim("II.upper", "mu(S) <= (s+1) mu(X)/(delta+1) for every union S of s classes", high_lhs, high_rhs, false, slack));
    const int floor_share = nx / (delta + 1);
    for (int c : rep.h_star_counts) check(c >= floor_share, "dominating coloring lost a class below the floor share");
  }

  // (4) greedy extension to G
  PartialColoring seeded(n, delta);
  for (Vertex v = 0; v < nx; ++v) seeded.assign(sub.to_parent[v], h_star[v]);
  auto gcol = greedy_maximal(g, ListAssignment::full(n, delta), seeded);
  check(gcol.is_total(), "greedy extension outside the dense set left a vertex uncolored");
  rep.g_counts.assign(gcol.counts().begin(), gcol.counts().end());

  // (5) quick balance with X frozen
  auto aux = greedy_extend_full(g, delta + 1, PartialColoring(n, delta + 1));
  auto f = quick_balance(g, gcol, x, aux, &rep.balance);
  rep.fixpoint = balance_fixpoint_holds(g, f, x);
  rep.f_counts.assign(f.counts().begin(), f.counts().end());
  rep.gap = f.gap();

  // Claims III-VIII on the final coloring.
  std::vector<char> in_x(static_cast<std::size_t>(n), 0);
  for (Vertex v : x) in_x[v] = 1;
  const int share = n / delta;
  std::vector<char> small(static_cast<std::size_t>(delta), 0);
  int a_colors = 0;
  for (Color c = 0; c < delta; ++c) {
    if (f.count(c) < share) {
      small[c] = 1;
      ++a_colors;
    }
  }
  rep.xi = Rational(a_colors, delta);
  const Rational& xi = rep.xi;
  if (a_colors == 0 || a_colors == delta) {
    for (auto [id, st] : std::vector<std::pair<std::string, std::string>>{
             {"III", "xi < 4/5"}, {"IV", "1 - xi <= mu(B)"}, {"V", "mu(V+) < 7/10"}, {"VI", "mu(V-) < (1 - xi)/2"},
             {"VII", "(4 - 10 xi) mu(V-) + 10 xi (1 - xi) <= 1"}, {"VIII", "xi < 2/5"}}) {
      rep.claims.push_back(vacuous(id, st));
    }
    rep.finale = 0;
  } else {
    int b = 0, v_plus = 0, v_minus = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (small[f[v]]) continue;
      ++b;
      (in_x[v] ? v_minus : v_plus) += 1;
    }
    const Rational mu_plus(v_plus, n), mu_minus(v_minus, n);
    rep.claims.push_back(claim("III", "xi < 4/5", xi, Rational(4, 5), true, slack));
    rep.claims.push_back(claim("IV", "1 - xi <= mu(B)", 1 - xi, Rational(b, n), false, slack));
    rep.claims.push_back(claim("V", "mu(V+) < 7/10", mu_plus, Rational(7, 10), true, slack));
    rep.claims.push_back(claim("VI", "mu(V-) < (1 - xi)/2", mu_minus, (1 - xi) / 2, true, slack));
    rep.claims.push_back(claim("VII", "(4 - 10 xi) mu(V-) + 10 xi (1 - xi) <= 1",
                               (4 - 10 * xi) * mu_minus + 10 * xi * (1 - xi), 1, false, slack));
    rep.claims.push_back(claim("VIII", "xi < 2/5", xi, Rational(2, 5), true, slack));
    rep.finale = xi < Rational(2, 5) ? (3 - 4 * xi) / (4 - 10 * xi) : Rational(0);
  }
  check(is_proper(g, f) && f.is_total(), "pipeline output is not a proper total coloring");
  out.coloring = std::move(f);
  return out;
}

}  // namespace equicolor
