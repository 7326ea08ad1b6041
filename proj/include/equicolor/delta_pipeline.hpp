#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "equicolor/coloring.hpp"
#include "equicolor/graph.hpp"
#include "equicolor/rational.hpp"

namespace equicolor {

struct CostReport {
  std::vector<Vertex> subset;
  Rational value;          // (boundary + internal) / n
  std::int64_t boundary;   // edges with exactly one end in X
  std::int64_t internal;   // edges inside X
};

CostReport cost(const Graph& g, std::span<const Vertex> subset);

// (X3) for one subset: cost(X') >= t |X'| / n.
bool dense_subset_condition(const Graph& g, std::span<const Vertex> subset, const Rational& t);

// Rounds over the classes of the greedy (max degree + 1)-coloring. (X1) and
// (X2) are checked for the result; (X3) for X itself, for 100 random subsets
// drawn with `sample_seed`, and for every subset when n <= 9.
std::vector<Vertex> extract_dense_set(const Graph& g, const Rational& t, std::uint64_t sample_seed = 0);

struct BalanceStats {
  int passes = 0;
  int moved = 0;
  std::int64_t initial_potential = 0;
  std::int64_t final_potential = 0;
};

// Pairwise class transfers outside the frozen set X until a full pass over
// (r, alpha, beta) moves nothing. ImproperInput, ImproperAux.
PartialColoring quick_balance(const Graph& g, const PartialColoring& f, std::span<const Vertex> frozen,
                              const PartialColoring& aux, BalanceStats* stats = nullptr);

// No class-beta vertex outside X lacks an alpha-neighbor whenever
// count(beta) - count(alpha) >= 2.
bool balance_fixpoint_holds(const Graph& g, const PartialColoring& f, std::span<const Vertex> frozen);

enum class Verdict { Holds, HoldsWithSlack, Vacuous, Fails };
std::string_view to_string(Verdict v);

struct ClaimResult {
  std::string id;
  std::string statement;
  Rational lhs;
  Rational rhs;
  bool strict = false;  // lhs < rhs rather than lhs <= rhs
  Verdict verdict = Verdict::Vacuous;
};

struct PipelineReport {
  int delta = 0;
  Rational t;
  std::vector<Vertex> dense_set;
  std::vector<int> h_counts, h_star_counts, g_counts, f_counts;
  BalanceStats balance;
  bool fixpoint = false;
  Rational xi;
  std::vector<ClaimResult> claims;
  Rational finale;  // lower bound on mu(V+) from the closing argument
  int gap = 0;

  nlohmann::json to_json() const;
};

struct DeltaColoringResult {
  PartialColoring coloring;
  PipelineReport report;
};

// Proper max-degree coloring of a sparse graph. PreconditionViolated when the
// max degree is below 3, a (max degree + 1)-clique exists, or the average
// degree exceeds max degree / 5.
DeltaColoringResult equitable_delta_coloring(const Graph& g, std::uint64_t seed = 0);

}  // namespace equicolor
