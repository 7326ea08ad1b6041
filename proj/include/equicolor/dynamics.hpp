#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "equicolor/coloring.hpp"
#include "equicolor/distribution.hpp"
#include "equicolor/graph.hpp"

namespace equicolor {

// Partial map vertex -> color, kept sorted by vertex.
struct RecoloringMove {
  std::vector<std::pair<Vertex, Color>> assignments;

  RecoloringMove() = default;
  explicit RecoloringMove(std::vector<std::pair<Vertex, Color>> a);

  int size() const noexcept { return static_cast<int>(assignments.size()); }
  nlohmann::json to_json() const;
  friend bool operator==(const RecoloringMove&, const RecoloringMove&) = default;
};

// Signed change of every class size: |phi^-1(c)| - |dom(phi) ∩ f^-1(c)|.
std::vector<int> move_deltas(const PartialColoring& f, const RecoloringMove& move);
int delta_alpha(const PartialColoring& f, const RecoloringMove& move, Color alpha);

struct MoveSignature {
  std::vector<Color> gaining;
  std::vector<Color> losing;
  friend auto operator<=>(const MoveSignature&, const MoveSignature&) = default;
};
MoveSignature move_signature(const PartialColoring& f, const RecoloringMove& move);

// The domain is nonempty and lies inside one connected component.
bool is_valid_move(const Graph& g, const RecoloringMove& move);
bool is_acceptable(const Graph& g, const PartialColoring& f, const RecoloringMove& move);

// Witness of strict improvement: the valid witness with the smallest class,
// ties to the smallest color.
std::optional<Color> improves(const Graph& g, const PartialColoring& f, const RecoloringMove& move);

inline constexpr int kLedgerConstant = 6;

// Improving, and after the move the witness class is still no larger than
// any losing class. `a` bounds sum|delta| <= a * delta(alpha) over gaining alpha.
std::optional<Color> admissible_witness(const Graph& g, const PartialColoring& f, const RecoloringMove& move,
                                        int a = kLedgerConstant);

PartialColoring apply_move(const PartialColoring& f, const RecoloringMove& move);

enum class ScanMode { Serial, Parallel };

// One of the three patterns, scanned in order of root vertex then color.
std::optional<RecoloringMove> scan_pattern(const Graph& g, const PartialColoring& f, int pattern, ScanMode mode);
// First admissible move over the patterns 1, 2, 3.
std::optional<RecoloringMove> find_improving_move(const Graph& g, const PartialColoring& f, ScanMode mode);
// Exhaustive: every connected domain of exactly `size` vertices with every
// proper recoloring of it. Ordered by smallest domain vertex.
std::optional<RecoloringMove> scan_connected_moves(const Graph& g, const PartialColoring& f, int size,
                                                   ScanMode mode);
// Every admissible pattern move, in scan order.
std::vector<RecoloringMove> collect_pattern_candidates(const Graph& g, const PartialColoring& f, ScanMode mode);

struct Batch {
  std::vector<RecoloringMove> moves;
  MoveSignature signature;
  int size_bound = 0;
};

// Greedy pairwise-separated sub-collection. SignatureMismatch if candidates
// disagree on (D+, D-).
Batch select_separated_batch(const Graph& g, const PartialColoring& f, const std::vector<RecoloringMove>& candidates);

struct PrefixResult {
  PartialColoring coloring;
  int applied = 0;
};
// NotSeparated, UnacceptableMove.
PrefixResult apply_monotone_prefix(const Graph& g, const PartialColoring& f, const Batch& batch);

struct DriverConfig {
  int m_max = 6;
  int retries = 8;
  std::uint64_t seed = 0;
  bool batch_mode = false;
  ScanMode scan = ScanMode::Serial;
};

class DynamicsTrace {
 public:
  struct Step {
    std::string kind;  // move, batch, restart
    nlohmann::json summary;
    std::vector<std::int64_t> counts;
    Rational l1;
    Rational disc;
    Rational cumulative;
  };

  DynamicsTrace() = default;
  void start_segment(const PartialColoring& f);
  void record(const std::string& kind, nlohmann::json summary, const PartialColoring& before,
              const PartialColoring& after, Color witness);

  const std::vector<std::int64_t>& initial_counts() const noexcept { return initial_counts_; }
  const std::vector<Step>& steps() const noexcept { return steps_; }
  // One ledger per segment; a restart opens a new segment.
  const std::vector<ConvergenceLedger>& segments() const noexcept { return segments_; }
  const ConvergenceLedger& ledger() const { return segments_.back(); }
  int moves() const;

  void write_jsonl(std::ostream& out) const;
  void write_csv(std::ostream& out) const;
  nlohmann::json summary_json() const;

 private:
  std::vector<std::int64_t> initial_counts_;
  std::vector<Step> steps_;
  std::vector<ConvergenceLedger> segments_;
};

struct DynamicsResult {
  PartialColoring coloring;
  DynamicsTrace trace;
};

// Total proper k-coloring with class sizes within one of each other.
// PaletteTooSmall, ImproperSeed, Stalled.
DynamicsResult equitable_k_coloring(const Graph& g, int k, const std::optional<PartialColoring>& f0,
                                    const DriverConfig& config = {});

}  // namespace equicolor
