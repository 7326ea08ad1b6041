#include <algorithm>
#include <map>
#include <ostream>
#include <random>

#include "equicolor/debug.hpp"
#include "equicolor/dynamics.hpp"
#include "equicolor/errors.hpp"

namespace equicolor {

void DynamicsTrace::start_segment(const PartialColoring& f) {
  auto d = ColorDistribution::of(f);
  if (segments_.empty()) initial_counts_ = d.counts();
  segments_.emplace_back(Rational(kLedgerConstant), d);
}

void DynamicsTrace::record(const std::string& kind, nlohmann::json summary, const PartialColoring& before,
                           const PartialColoring& after, Color witness) {
  const auto from = ColorDistribution::of(before);
  const auto to = ColorDistribution::of(after);
  if (kind != "restart") segments_.back().record(from, to, witness);
  steps_.push_back({kind, std::move(summary), to.counts(), l1_distance(from, to), discrepancy(to),
                    segments_.back().cumulative()});
}

int DynamicsTrace::moves() const {
  return static_cast<int>(std::count_if(steps_.begin(), steps_.end(), [](const Step& s) { return s.kind != "restart"; }));
}

void DynamicsTrace::write_jsonl(std::ostream& out) const {
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    const auto& s = steps_[i];
    nlohmann::json line = {{"step", i},
                           {"kind", s.kind},
                           {"summary", s.summary},
                           {"counts", s.counts},
                           {"l1", to_string(s.l1)},
                           {"disc", to_string(s.disc)},
                           {"cumulative", to_string(s.cumulative)}};
    out << line.dump() << '\n';
  }
}

void DynamicsTrace::write_csv(std::ostream& out) const {
  out << "step,kind,disc,l1,cumulative\n";
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    const auto& s = steps_[i];
    out << i << ',' << s.kind << ',' << to_string(s.disc) << ',' << to_string(s.l1) << ',' << to_string(s.cumulative)
        << '\n';
  }
}

nlohmann::json DynamicsTrace::summary_json() const {
  nlohmann::json out = {{"initial_counts", initial_counts_},
                        {"steps", steps_.size()},
                        {"moves", moves()},
                        {"restarts", segments_.empty() ? 0 : segments_.size() - 1}};
  if (!segments_.empty()) {
    auto ledger = segments_.back().to_json();
    ledger.erase("steps");
    out["ledger"] = ledger;
  }
  return out;
}

namespace {

std::optional<RecoloringMove> escalate(const Graph& g, const PartialColoring& f, const DriverConfig& config) {
  for (int size = 1; size <= config.m_max; ++size) {
    if (auto m = scan_connected_moves(g, f, size, config.scan)) return m;
  }
  return std::nullopt;
}

// Applies one separated batch from the smallest signature group, if any.
bool batch_step(const Graph& g, PartialColoring& f, DynamicsTrace& trace, const DriverConfig& config) {
  auto candidates = collect_pattern_candidates(g, f, config.scan);
  if (candidates.empty()) return false;
  std::map<MoveSignature, std::vector<RecoloringMove>> groups;
  for (auto& m : candidates) groups[move_signature(f, m)].push_back(std::move(m));
  const auto& group = groups.begin()->second;
  auto batch = select_separated_batch(g, f, group);
  auto prefix = apply_monotone_prefix(g, f, batch);
  if (prefix.applied == 0) return false;
  auto witness = more_equitable_witness(ColorDistribution::of(f), ColorDistribution::of(prefix.coloring));
  check(witness.has_value(), "batch step is not more equitable");
  trace.record("batch", {{"moves", prefix.applied}, {"offered", batch.moves.size()}}, f, prefix.coloring, *witness);
  f = std::move(prefix.coloring);
  return true;
}

Rational step_cap(int n, int k, const Rational& disc0) {
  return Rational(n) * rational_pow(Rational(1 + kLedgerConstant), k + 1) / (2 * kLedgerConstant) * disc0 + 1;
}

void check_stability(const PartialColoring& start, const PartialColoring& f, int k) {
  const int n = f.vertex_count();
  if (n == 0) return;
  const Rational dist(coloring_distance(start, f), n);
  const Rational bound = rational_pow(Rational(1 + kLedgerConstant), k + 1) / 2 * discrepancy(ColorDistribution::of(start));
  if (dist > bound) {
    fail(ErrorCode::BoundViolation, "distance from the starting coloring exceeds its bound",
         {{"distance", to_string(dist)}, {"bound", to_string(bound)}});
  }
}

}  // namespace

DynamicsResult equitable_k_coloring(const Graph& g, int k, const std::optional<PartialColoring>& f0,
                                    const DriverConfig& config) {
  const int n = g.vertex_count();
  if (k < g.max_degree() + 1 || k < 1) {
    fail(ErrorCode::PaletteTooSmall, "equitable coloring needs k >= max degree + 1",
         {{"k", k}, {"max_degree", g.max_degree()}});
  }
  PartialColoring f;
  if (f0) {
    if (f0->vertex_count() != n || f0->palette_size() != k) {
      fail(ErrorCode::PaletteMismatch, "initial coloring does not match the graph and palette");
    }
    if (!f0->is_total() || !is_proper(g, *f0)) fail(ErrorCode::ImproperSeed, "initial coloring must be total and proper");
    f = *f0;
  } else {
    f = greedy_extend_full(g, k, PartialColoring(n, k));
  }

  DynamicsResult result;
  auto& trace = result.trace;
  trace.start_segment(f);
  PartialColoring start = f;
  Rational cap = step_cap(n, k, trace.ledger().initial_discrepancy());
  std::int64_t segment_steps = 0;
  int retries = 0;
  std::mt19937_64 retry_rng(config.seed);

  while (f.gap() >= 2) {
    if (config.batch_mode && batch_step(g, f, trace, config)) {
      if (++segment_steps > cap) fail(ErrorCode::BoundViolation, "iteration cap exceeded", {{"steps", segment_steps}});
      continue;
    }
    auto move = find_improving_move(g, f, config.scan);
    if (!move) move = escalate(g, f, config);
    if (move) {
      auto witness = admissible_witness(g, f, *move);
      check(witness.has_value(), "selected move is not admissible");
      auto next = apply_move(f, *move);
      if (debug_asserts_enabled()) check(is_proper(g, next), "move produced an improper coloring");
      trace.record("move", {{"move", move->to_json()}, {"witness", *witness}}, f, next, *witness);
      check(trace.steps().back().l1 * n >= 2, "step moved less than 2/n");
      f = std::move(next);
      if (++segment_steps > cap) fail(ErrorCode::BoundViolation, "iteration cap exceeded", {{"steps", segment_steps}});
      continue;
    }
    if (retries >= config.retries) {
      std::vector<int> counts(f.counts().begin(), f.counts().end());
      fail(ErrorCode::Stalled, "no admissible move found",
           {{"gap", f.gap()}, {"counts", counts}, {"assignment", f.assignment()}, {"m_max", config.m_max},
            {"retries", retries}});
    }
    ++retries;
    check_stability(start, f, k);
    auto restart = greedy_extend_full(g, k, PartialColoring(n, k), shuffled_order(n, retry_rng()));
    trace.record("restart", {{"retry", retries}}, f, restart, kUncolored);
    f = std::move(restart);
    trace.start_segment(f);
    start = f;
    cap = step_cap(n, k, trace.ledger().initial_discrepancy());
    segment_steps = 0;
  }
  check_stability(start, f, k);
  check(is_proper(g, f) && f.is_total(), "driver result is not a total proper coloring");
  result.coloring = std::move(f);
  return result;
}

}  // namespace equicolor
