#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "equicolor/coloring.hpp"
#include "equicolor/rational.hpp"

namespace equicolor {

// Exact distribution over a palette: counts(c) / total.
class ColorDistribution {
 public:
  ColorDistribution(std::vector<std::int64_t> counts, std::int64_t total);
  explicit ColorDistribution(std::vector<std::int64_t> counts);  // total = sum of counts
  // Pushforward of the counting measure on the colored vertices.
  static ColorDistribution of(const PartialColoring& f);

  int palette_size() const noexcept { return static_cast<int>(counts_.size()); }
  std::int64_t total() const noexcept { return total_; }
  std::int64_t count(Color c) const noexcept { return counts_[c]; }
  const std::vector<std::int64_t>& counts() const noexcept { return counts_; }
  Rational value(Color c) const { return Rational(counts_[c], total_); }

  friend bool operator==(const ColorDistribution& a, const ColorDistribution& b);

 private:
  std::vector<std::int64_t> counts_;
  std::int64_t total_;
};

Rational discrepancy(const ColorDistribution& d);
// PaletteMismatch when palettes differ.
Rational l1_distance(const ColorDistribution& a, const ColorDistribution& b);
// Values sorted nondecreasingly.
std::vector<Rational> rearranged(const ColorDistribution& d);

// Colors whose mass grows / shrinks going from `from` to `to`.
std::vector<Color> gaining_colors(const ColorDistribution& from, const ColorDistribution& to);
std::vector<Color> losing_colors(const ColorDistribution& from, const ColorDistribution& to);

// A gaining color whose new mass is at most every losing color's new mass;
// the smallest such color, or nullopt when `to` is not more equitable.
std::optional<Color> more_equitable_witness(const ColorDistribution& from, const ColorDistribution& to);

// strict: from ◁ to. lax: from ◁ to or from == to.
bool is_more_equitable(const ColorDistribution& from, const ColorDistribution& to, bool strict);

struct PrefixWitness {
  int index;    // 1-based prefix length
  Color color;  // gaining color
};

// For from ◁ to: a prefix length on which the sorted values of `to` dominate
// those of `from` termwise, plus a gaining color whose gain is bounded by the
// prefix-sum gap. Throws NotComparable when from ◁ to fails.
PrefixWitness initial_sums_witness(const ColorDistribution& from, const ColorDistribution& to);

// Accumulates the l1 movement of a monotone sequence of distributions and
// asserts the total stays within (1+A)^(k+1)/A * disc(first).
class ConvergenceLedger {
 public:
  struct Step {
    Rational l1;
    Color witness;  // kUncolored for a null step
    Rational gain;
    int prefix_index;  // 0 when the step is null or bookkeeping is off
  };

  ConvergenceLedger(Rational a, const ColorDistribution& initial);

  // Throws MonotonicityViolation, HypothesisViolation or BoundViolation.
  void record(const ColorDistribution& current, const ColorDistribution& next, Color witness);

  const Rational& constant() const noexcept { return a_; }
  int palette_size() const noexcept { return k_; }
  const Rational& initial_discrepancy() const noexcept { return disc0_; }
  const Rational& cumulative() const noexcept { return cumulative_; }
  Rational bound() const;
  // cumulative / disc0, the quantity the bound controls; nullopt if disc0 == 0.
  std::optional<Rational> observed_ratio() const;
  const std::vector<Step>& steps() const noexcept { return steps_; }

  nlohmann::json to_json() const;

 private:
  Rational a_;
  int k_;
  Rational disc0_;
  Rational cumulative_ = 0;
  std::vector<Step> steps_;
  // Debug-mode bookkeeping: sum over steps with prefix index l of the growth of
  // the l-th prefix sum of the sorted values.
  std::vector<Rational> prefix_growth_;
};

}  // namespace equicolor
