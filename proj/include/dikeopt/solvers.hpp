#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dikeopt/instance.hpp"
#include "dikeopt/parallel.hpp"

namespace dikeopt {

struct SolveResult {
  Money optimum;
  HeightPlan plan;
};

// --- dynamic program over joint (barrier, segment-vector) height states ---

struct DpStats {
  std::int64_t states = 0;       // |H_B| * |H_D|^|D| * (T+1)
  std::int64_t transitions = 0;  // predecessor pairs evaluated
};

// Exact optimum in O((|H_B| |H_D|^|D|)^2 T). The returned plan is the
// deterministic tie-break choice (lexicographically smallest successor state
// at each period). Layer fills parallelize across states.
SolveResult solve_dp(const Instance& inst, ExecutionMode mode = ExecutionMode::serial,
                     DpStats* stats = nullptr);

// --- barrier-profile enumeration + per-segment shortest paths ---

std::uint64_t barrier_profile_count(int horizon, int barrierLevels);

// Lexicographic enumeration of monotone barrier profiles pinned to 0 at t=0.
class BarrierProfileEnumerator {
 public:
  explicit BarrierProfileEnumerator(const Instance& inst);
  bool next(std::vector<int>& profile);

 private:
  MonotoneProfileEnumerator inner_;
};

struct SegmentResult {
  Money cost;  // dike cost + dike expected damage along the best profile
  std::vector<int> profile;
};

// Layered-DAG shortest path for one segment under a fixed barrier profile;
// the DAG is relaxed in layer order (exact, the graph has no other edges).
// Ties resolve to the lexicographically smallest profile.
SegmentResult solve_segment(const Instance& inst, int segment,
                            std::span<const int> barrierProfile);

struct SpOptions {
  ExecutionMode mode = ExecutionMode::serial;
  // Profiling aid: stop after this many profiles. Capped runs are not exact.
  std::optional<std::uint64_t> profileCap;
};

struct SpResult {
  Money optimum;
  HeightPlan plan;
  bool exact = true;
  std::uint64_t profilesEnumerated = 0;
};

SpResult solve_sp(const Instance& inst, const SpOptions& options = {});

// --- exhaustive oracle ---

struct BfOptions {
  ExecutionMode mode = ExecutionMode::serial;
  std::uint64_t planCap = 10'000'000;  // hard cap; the oracle never truncates
};

// Number of monotone plans of the instance (product over objects).
std::uint64_t plan_count(const Instance& inst);

// Full enumeration; throws Error(SearchSpaceTooLarge) beyond the cap.
// First strict improvement in lexicographic plan order, so the returned
// plan is the lexicographically smallest optimum.
SolveResult solve_bf(const Instance& inst, const BfOptions& options = {});

}  // namespace dikeopt
