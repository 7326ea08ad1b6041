#include "equicolor/distribution.hpp"

#include <algorithm>
#include <numeric>

#include "equicolor/debug.hpp"
#include "equicolor/errors.hpp"

namespace equicolor {

ColorDistribution::ColorDistribution(std::vector<std::int64_t> counts, std::int64_t total)
    : counts_(std::move(counts)), total_(total) {
  if (total_ <= 0) fail(ErrorCode::InvalidArgument, "distribution total must be positive");
  std::int64_t sum = 0;
  for (auto c : counts_) {
    if (c < 0) fail(ErrorCode::InvalidArgument, "negative count");
    sum += c;
  }
  if (sum != total_) fail(ErrorCode::InvalidArgument, "counts do not sum to total");
}

ColorDistribution::ColorDistribution(std::vector<std::int64_t> counts)
    : ColorDistribution(counts, std::accumulate(counts.begin(), counts.end(), std::int64_t{0})) {}

ColorDistribution ColorDistribution::of(const PartialColoring& f) {
  std::vector<std::int64_t> counts(f.counts().begin(), f.counts().end());
  return ColorDistribution(std::move(counts), f.domain_size());
}

bool operator==(const ColorDistribution& a, const ColorDistribution& b) {
  if (a.palette_size() != b.palette_size()) return false;
  if (a.total_ == b.total_) return a.counts_ == b.counts_;
  for (Color c = 0; c < a.palette_size(); ++c) {
    if (a.value(c) != b.value(c)) return false;
  }
  return true;
}

namespace {

void require_same_palette(const ColorDistribution& a, const ColorDistribution& b) {
  if (a.palette_size() != b.palette_size()) {
    fail(ErrorCode::PaletteMismatch, "distributions over different palettes",
         {{"left", a.palette_size()}, {"right", b.palette_size()}});
  }
}

}  // namespace

Rational discrepancy(const ColorDistribution& d) {
  const Rational uniform(1, d.palette_size());
  Rational worst = 0;
  for (Color c = 0; c < d.palette_size(); ++c) worst = std::max(worst, abs_diff(d.value(c), uniform));
  return worst;
}

Rational l1_distance(const ColorDistribution& a, const ColorDistribution& b) {
  require_same_palette(a, b);
  Rational sum = 0;
  for (Color c = 0; c < a.palette_size(); ++c) sum += abs_diff(a.value(c), b.value(c));
  return sum;
}

std::vector<Rational> rearranged(const ColorDistribution& d) {
  std::vector<Rational> values;
  values.reserve(d.palette_size());
  for (Color c = 0; c < d.palette_size(); ++c) values.push_back(d.value(c));
  std::sort(values.begin(), values.end());
  return values;
}

std::vector<Color> gaining_colors(const ColorDistribution& from, const ColorDistribution& to) {
  require_same_palette(from, to);
  std::vector<Color> out;
  for (Color c = 0; c < from.palette_size(); ++c) {
    if (to.value(c) > from.value(c)) out.push_back(c);
  }
  return out;
}

std::vector<Color> losing_colors(const ColorDistribution& from, const ColorDistribution& to) {
  require_same_palette(from, to);
  std::vector<Color> out;
  for (Color c = 0; c < from.palette_size(); ++c) {
    if (to.value(c) < from.value(c)) out.push_back(c);
  }
  return out;
}

std::optional<Color> more_equitable_witness(const ColorDistribution& from, const ColorDistribution& to) {
  auto plus = gaining_colors(from, to);
  auto minus = losing_colors(from, to);
  for (Color a : plus) {
    bool ok = std::all_of(minus.begin(), minus.end(), [&](Color b) { return to.value(a) <= to.value(b); });
    if (ok) return a;
  }
  return std::nullopt;
}

bool is_more_equitable(const ColorDistribution& from, const ColorDistribution& to, bool strict) {
  require_same_palette(from, to);
  if (more_equitable_witness(from, to)) return true;
  return !strict && from == to;
}

namespace {

// Exhaustive re-check of the witness postconditions.
bool witness_valid(const ColorDistribution& from, const ColorDistribution& to, const PrefixWitness& w) {
  auto ws = rearranged(from);
  auto hs = rearranged(to);
  if (w.index < 1 || w.index > from.palette_size()) return false;
  if (!(to.value(w.color) > from.value(w.color))) return false;
  Rational gap = 0;
  for (int i = 0; i < w.index; ++i) {
    if (ws[i] > hs[i]) return false;
    gap += hs[i] - ws[i];
  }
  return gap >= to.value(w.color) - from.value(w.color);
}

}  // namespace

PrefixWitness initial_sums_witness(const ColorDistribution& from, const ColorDistribution& to) {
  require_same_palette(from, to);
  auto alpha = more_equitable_witness(from, to);
  if (!alpha) fail(ErrorCode::NotComparable, "the second distribution is not more equitable than the first");
  auto hs = rearranged(to);
  const Rational target = to.value(*alpha);
  int index = 0;
  while (hs[index] != target) ++index;
  PrefixWitness w{index + 1, *alpha};
  if (debug_asserts_enabled()) check(witness_valid(from, to, w), "prefix witness postcondition");
  return w;
}

ConvergenceLedger::ConvergenceLedger(Rational a, const ColorDistribution& initial)
    : a_(std::move(a)),
      k_(initial.palette_size()),
      disc0_(discrepancy(initial)),
      prefix_growth_(static_cast<std::size_t>(initial.palette_size()) + 1, Rational(0)) {
  if (a_ < 1) fail(ErrorCode::InvalidArgument, "ledger constant must be >= 1");
}

Rational ConvergenceLedger::bound() const { return rational_pow(1 + a_, k_ + 1) / a_ * disc0_; }

std::optional<Rational> ConvergenceLedger::observed_ratio() const {
  if (disc0_ == 0) return std::nullopt;
  return cumulative_ / disc0_;
}

void ConvergenceLedger::record(const ColorDistribution& current, const ColorDistribution& next, Color witness) {
  require_same_palette(current, next);
  if (current.palette_size() != k_) fail(ErrorCode::PaletteMismatch, "ledger palette mismatch");
  const auto step_index = steps_.size();
  if (current == next) {
    steps_.push_back({Rational(0), kUncolored, Rational(0), 0});
    return;
  }
  if (!is_more_equitable(current, next, true)) {
    fail(ErrorCode::MonotonicityViolation, "step is not more equitable", {{"step", step_index}});
  }
  const Rational l1 = l1_distance(current, next);
  if (witness < 0 || witness >= k_ || !(next.value(witness) > current.value(witness))) {
    fail(ErrorCode::HypothesisViolation, "witness color does not gain mass", {{"step", step_index}, {"witness", witness}});
  }
  for (Color c : gaining_colors(current, next)) {
    const Rational gain = next.value(c) - current.value(c);
    if (l1 > a_ * gain) {
      fail(ErrorCode::HypothesisViolation, "l1 step exceeds A times the gain",
           {{"step", step_index}, {"color", c}, {"l1", to_string(l1)}, {"gain", to_string(gain)}});
    }
  }
  cumulative_ += l1;
  int prefix_index = 0;
  if (debug_asserts_enabled()) {
    auto w = initial_sums_witness(current, next);
    prefix_index = w.index;
    auto ws = rearranged(current);
    auto hs = rearranged(next);
    Rational growth = 0;
    for (int i = 0; i < w.index; ++i) growth += hs[i] - ws[i];
    check(growth * a_ >= l1, "prefix growth below l1 / A");
    prefix_growth_[w.index] += growth;
    const Rational prefix_bound = (rational_pow(1 + a_, w.index) - 1) / a_ * disc0_;
    if (prefix_growth_[w.index] > prefix_bound) {
      fail(ErrorCode::BoundViolation, "prefix-sum growth exceeds its bound",
           {{"step", step_index}, {"prefix", w.index}, {"growth", to_string(prefix_growth_[w.index])},
            {"bound", to_string(prefix_bound)}});
    }
  }
  steps_.push_back({l1, witness, next.value(witness) - current.value(witness), prefix_index});
  if (cumulative_ > bound()) {
    fail(ErrorCode::BoundViolation, "cumulative l1 movement exceeds the ledger bound",
         {{"step", step_index}, {"cumulative", to_string(cumulative_)}, {"bound", to_string(bound())}});
  }
}

nlohmann::json ConvergenceLedger::to_json() const {
  nlohmann::json steps = nlohmann::json::array();
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    const auto& s = steps_[i];
    steps.push_back({{"step", i}, {"l1", to_string(s.l1)}, {"witness", s.witness}, {"gain", to_string(s.gain)}});
  }
  auto ratio = observed_ratio();
  return {{"A", to_string(a_)},
          {"k", k_},
          {"disc0", to_string(disc0_)},
          {"cumulative", to_string(cumulative_)},
          {"bound", to_string(bound())},
          {"observed_ratio", ratio ? nlohmann::json(to_string(*ratio)) : nlohmann::json(nullptr)},
          {"steps", steps}};
}

}  // namespace equicolor
