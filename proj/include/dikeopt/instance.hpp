#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dikeopt/rational.hpp"

namespace dikeopt {

// Heights are indices into the instance's ordered physical height lists;
// index 0 is always the initial height.

// Multi-period heightening problem data: a time horizon, the dike segments,
// the two height sets, and the four cost/damage tables. Table entries are
// optional so that loaders can build a partially specified instance and
// validate_instance can name exactly what is missing.
class Instance {
 public:
  Instance() = default;
  Instance(int horizon, std::vector<std::string> segments, std::vector<Rational> dikeHeights,
           std::vector<Rational> barrierHeights);

  int horizon() const { return horizon_; }
  int numPeriods() const { return horizon_ + 1; }
  int numSegments() const { return static_cast<int>(segments_.size()); }
  int numDikeLevels() const { return static_cast<int>(dikeHeights_.size()); }
  int numBarrierLevels() const { return static_cast<int>(barrierHeights_.size()); }
  const std::vector<std::string>& segments() const { return segments_; }
  const std::vector<Rational>& dikeHeights() const { return dikeHeights_; }
  const std::vector<Rational>& barrierHeights() const { return barrierHeights_; }

  int segmentIndex(const std::string& id) const;  // -1 if unknown

  // Checked accessors; they require the entry to be present (throw
  // Error(InvalidInstance) otherwise) and the indices to be in range.
  const Money& dikeCost(int t, int d, int h1, int h2) const;
  const Money& dikeExpDam(int t, int d, int h2, int hb) const;
  const Money& barrierCost(int t, int hb1, int hb2) const;
  const Money& barrierExpDam(int t, int hb) const;

  bool hasDikeCost(int t, int d, int h1, int h2) const;
  bool hasDikeExpDam(int t, int d, int h2, int hb) const;
  bool hasBarrierCost(int t, int hb1, int hb2) const;
  bool hasBarrierExpDam(int t, int hb) const;

  void setDikeCost(int t, int d, int h1, int h2, Money value);
  void setDikeExpDam(int t, int d, int h2, int hb, Money value);
  void setBarrierCost(int t, int hb1, int hb2, Money value);
  void setBarrierExpDam(int t, int hb, Money value);

  // Fills every entry of every table with the given constant.
  void fillAllTables(const Money& value);

 private:
  int dikeCostIndex(int t, int d, int h1, int h2) const;
  int dikeExpDamIndex(int t, int d, int h2, int hb) const;
  int barrierCostIndex(int t, int hb1, int hb2) const;
  int barrierExpDamIndex(int t, int hb) const;

  int horizon_ = 0;
  std::vector<std::string> segments_;
  std::vector<Rational> dikeHeights_;
  std::vector<Rational> barrierHeights_;
  std::vector<std::optional<Money>> dikeCost_;
  std::vector<std::optional<Money>> dikeExpDam_;
  std::vector<std::optional<Money>> barrierCost_;
  std::vector<std::optional<Money>> barrierExpDam_;

  friend struct InstanceTables;
};

// Number of (h1, h2) pairs with h1 <= h2 over `levels` heights.
inline int orderedPairCount(int levels) { return levels * (levels + 1) / 2; }

// Index of (h1, h2), h1 <= h2, in the row-major upper-triangle layout.
inline int orderedPairIndex(int h1, int h2, int levels) {
  return h1 * levels - h1 * (h1 - 1) / 2 + (h2 - h1);
}

struct ValidationFinding {
  enum class Kind { MissingEntry, NegativeValue, BadHeightList, BadHorizon, BadSegment };
  Kind kind;
  std::string what;
};

struct ValidationReport {
  std::vector<ValidationFinding> findings;
  bool valid() const { return findings.empty(); }
  std::string summary() const;
};

ValidationReport validate_instance(const Instance& inst);

// Throws Error(InvalidInstance) with the report summary if invalid.
void require_valid(const Instance& inst);

// One monotone non-decreasing height profile per segment plus one for the
// barrier, all pinned to height 0 in period 0.
struct HeightPlan {
  std::vector<int> barrier;               // size T+1
  std::vector<std::vector<int>> segment;  // [segment][t]

  bool operator==(const HeightPlan&) const = default;
};

// All-zero plan with the right shape for `inst`.
HeightPlan zero_plan(const Instance& inst);

bool is_monotone_from_zero(std::span<const int> profile, int levels);

// Plan ordering used for deterministic tie-breaks: barrier profile first,
// then the segment profiles in segment order.
bool plan_less(const HeightPlan& a, const HeightPlan& b);

// Total cost of a plan in the transition reformulation, including the
// period-0 maintenance/damage terms that the initial conditions force.
Money evaluate_plan(const Instance& inst, const HeightPlan& plan);

// --- monotone profile enumeration (shared by the solvers) ---

// Number of monotone profiles {0..periods-1} -> {0..levels-1} with value 0
// at position 0: C(periods-1 + levels-1, levels-1).
std::uint64_t monotone_profile_count(int periods, int levels);

// Lexicographic enumeration of those profiles.
class MonotoneProfileEnumerator {
 public:
  MonotoneProfileEnumerator(int periods, int levels);

  // Fills `profile` with the next profile; returns false when exhausted.
  bool next(std::vector<int>& profile);

  void reset() { started_ = false; }

 private:
  int periods_;
  int levels_;
  bool started_ = false;
  std::vector<int> current_;
};

}  // namespace dikeopt
