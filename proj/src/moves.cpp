#include <algorithm>
#include <numeric>
#include <queue>

#include "equicolor/debug.hpp"
#include "equicolor/dynamics.hpp"
#include "equicolor/errors.hpp"

namespace equicolor {

RecoloringMove::RecoloringMove(std::vector<std::pair<Vertex, Color>> a) : assignments(std::move(a)) {
  std::sort(assignments.begin(), assignments.end());
}

nlohmann::json RecoloringMove::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (auto [v, c] : assignments) out.push_back({v, c});
  return out;
}

std::vector<int> move_deltas(const PartialColoring& f, const RecoloringMove& move) {
  std::vector<int> d(static_cast<std::size_t>(f.palette_size()), 0);
  for (auto [v, c] : move.assignments) {
    ++d[c];
    if (f.colored(v)) --d[f[v]];
  }
  return d;
}

int delta_alpha(const PartialColoring& f, const RecoloringMove& move, Color alpha) {
  int d = 0;
  for (auto [v, c] : move.assignments) {
    if (c == alpha) ++d;
    if (f[v] == alpha) --d;
  }
  return d;
}

MoveSignature move_signature(const PartialColoring& f, const RecoloringMove& move) {
  MoveSignature s;
  auto d = move_deltas(f, move);
  for (Color c = 0; c < f.palette_size(); ++c) {
    if (d[c] > 0) s.gaining.push_back(c);
    if (d[c] < 0) s.losing.push_back(c);
  }
  return s;
}

bool is_valid_move(const Graph& g, const RecoloringMove& move) {
  if (move.assignments.empty()) return false;
  for (std::size_t i = 0; i < move.assignments.size(); ++i) {
    Vertex v = move.assignments[i].first;
    if (v < 0 || v >= g.vertex_count() || move.assignments[i].second < 0) return false;
    if (i > 0 && move.assignments[i - 1].first == v) return false;
  }
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  std::queue<Vertex> q;
  q.push(move.assignments.front().first);
  seen[move.assignments.front().first] = 1;
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        q.push(w);
      }
    }
  }
  return std::all_of(move.assignments.begin(), move.assignments.end(), [&](auto a) { return seen[a.first]; });
}

namespace {

Color color_after(const PartialColoring& f, const RecoloringMove& move, Vertex v) {
  for (auto [u, c] : move.assignments) {
    if (u == v) return c;
  }
  return f[v];
}

}  // namespace

bool is_acceptable(const Graph& g, const PartialColoring& f, const RecoloringMove& move) {
  for (auto [v, c] : move.assignments) {
    if (c < 0 || c >= f.palette_size()) return false;
    for (Vertex w : g.neighbors(v)) {
      if (color_after(f, move, w) == c) return false;
    }
  }
  return true;
}

std::optional<Color> improves(const Graph& g, const PartialColoring& f, const RecoloringMove& move) {
  if (!is_acceptable(g, f, move)) return std::nullopt;
  auto d = move_deltas(f, move);
  std::optional<Color> best;
  for (Color a = 0; a < f.palette_size(); ++a) {
    if (d[a] <= 0) continue;
    bool ok = true;
    for (Color b = 0; b < f.palette_size() && ok; ++b) {
      if (d[b] < 0 && f.count(a) >= f.count(b)) ok = false;
    }
    if (ok && (!best || f.count(a) < f.count(*best))) best = a;
  }
  return best;
}

std::optional<Color> admissible_witness(const Graph& g, const PartialColoring& f, const RecoloringMove& move,
                                        int a) {
  if (!is_acceptable(g, f, move)) return std::nullopt;
  auto d = move_deltas(f, move);
  int l1 = 0, min_gain = 0;
  for (Color c = 0; c < f.palette_size(); ++c) {
    l1 += std::abs(d[c]);
    if (d[c] > 0 && (min_gain == 0 || d[c] < min_gain)) min_gain = d[c];
  }
  if (min_gain == 0 || l1 > a * min_gain) return std::nullopt;
  std::optional<Color> best;
  for (Color al = 0; al < f.palette_size(); ++al) {
    if (d[al] <= 0) continue;
    bool ok = true;
    for (Color b = 0; b < f.palette_size() && ok; ++b) {
      if (d[b] >= 0) continue;
      if (f.count(al) >= f.count(b) || f.count(al) + d[al] > f.count(b) + d[b]) ok = false;
    }
    if (ok && (!best || f.count(al) < f.count(*best))) best = al;
  }
  return best;
}

PartialColoring apply_move(const PartialColoring& f, const RecoloringMove& move) {
  PartialColoring out = f;
  for (auto [v, c] : move.assignments) out.assign(v, c);
  return out;
}

namespace {

bool separated(const Graph& g, const RecoloringMove& a, const RecoloringMove& b) {
  for (auto [u, cu] : a.assignments) {
    for (auto [v, cv] : b.assignments) {
      if (u == v || g.adjacent(u, v)) return false;
    }
  }
  return true;
}

}  // namespace

Batch select_separated_batch(const Graph& g, const PartialColoring& f, const std::vector<RecoloringMove>& candidates) {
  Batch batch;
  if (candidates.empty()) return batch;
  batch.signature = move_signature(f, candidates.front());
  for (const auto& m : candidates) {
    if (move_signature(f, m) != batch.signature) {
      fail(ErrorCode::SignatureMismatch, "batch candidates disagree on (D+, D-)", {{"move", m.to_json()}});
    }
    batch.size_bound = std::max(batch.size_bound, m.size());
    bool ok = std::all_of(batch.moves.begin(), batch.moves.end(), [&](const auto& kept) { return separated(g, kept, m); });
    if (ok) batch.moves.push_back(m);
  }
  return batch;
}

PrefixResult apply_monotone_prefix(const Graph& g, const PartialColoring& f, const Batch& batch) {
  for (std::size_t i = 0; i < batch.moves.size(); ++i) {
    if (!is_acceptable(g, f, batch.moves[i])) {
      fail(ErrorCode::UnacceptableMove, "batch move is not acceptable", {{"index", i}});
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (!separated(g, batch.moves[i], batch.moves[j])) {
        fail(ErrorCode::NotSeparated, "batch moves are not separated", {{"first", j}, {"second", i}});
      }
    }
  }
  const auto base = ColorDistribution::of(f);
  PartialColoring current = f;
  PrefixResult best{f, 0};
  for (std::size_t t = 0; t < batch.moves.size(); ++t) {
    for (auto [v, c] : batch.moves[t].assignments) current.assign(v, c);
    if (is_more_equitable(base, ColorDistribution::of(current), false)) best = {current, static_cast<int>(t) + 1};
  }
  if (best.applied > 0) {
    const auto after = ColorDistribution::of(best.coloring);
    std::int64_t l1_counts = 0;
    for (Color c = 0; c < f.palette_size(); ++c) l1_counts += std::abs(after.count(c) - base.count(c));
    const int m = batch.size_bound;
    check(coloring_distance(f, best.coloring) <= m * l1_counts, "batch distance exceeds m times the l1 step");
    if (auto alpha = more_equitable_witness(base, after)) {
      check(l1_counts <= 2 * m * (after.count(*alpha) - base.count(*alpha)), "batch l1 step exceeds 2m times the gain");
    }
    if (debug_asserts_enabled()) check(is_proper(g, best.coloring), "batch result is improper");
  }
  return best;
}

}  // namespace equicolor
