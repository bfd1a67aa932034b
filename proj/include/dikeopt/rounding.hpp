#pragma once

#include <span>
#include <vector>

#include "dikeopt/conditions.hpp"
#include "dikeopt/ip_builder.hpp"

namespace dikeopt {

// How a dike's coupling variables pair with the barrier's extreme flow
// paths: straight pairs U_d with U_B and L_d with L_B; flipped crosses
// them, for dikes whose damage satisfies the <= direction of the exchange
// inequality.
enum class PairingDirection { straight, flipped };

// straight for >=-direction (or both-direction) segments, flipped for
// <=-only segments. Segments satisfying neither direction get straight and
// will trip the exact non-increase assertions during rounding.
std::vector<PairingDirection> pairing_directions(const ConditionReport& iPrime);

// One unit-flow path of an object's height graph: heights per period
// (pinned to 0 at t=0) and the amount of flow it carries.
struct FlowPath {
  std::vector<int> heights;
  Rational flow;
};

// Pairwise comparable paths, ordered from the top path U to the bottom
// path L; flows sum to 1.
struct PathSet {
  std::vector<FlowPath> paths;

  const FlowPath& upper() const { return paths.front(); }
  const FlowPath& lower() const { return paths.back(); }
};

struct LayeredDecomposition {
  std::vector<PathSet> dikes;
  PathSet barrier;
  // Minimal distance of the fractional DY values to {0,1}; 0 when none.
  Rational dyMin;
  // Minimal paired corner mass over blocks where the extreme paths
  // differ; 0 when the point is integral.
  Rational fMin;
  // The re-layered point: CY/B rebuilt from the uncrossed paths, DY kept.
  IpPoint point;
};

// Path-decomposes the CY flow of every dike and the B flow of the barrier,
// then removes strict crossings with min/max exchanges. Each exchange keeps
// every node occupancy (so DY stays feasible) and must not increase the
// objective; Error(ExchangeIncreasedObjective) otherwise, which signals a
// violated condition (ii)/(iii). Throws Error(PointInfeasible) on
// infeasible input.
LayeredDecomposition decompose(const ConstraintSystem& sys, const IpPoint& p);

// Rearranges every DY block (t,d) into the coupling of its own marginals
// that concentrates mass on the paired extreme corners: comonotone for
// straight segments, antitone for flipped ones. Each extreme corner then
// holds min(row marginal, column marginal) exactly. Per-block objective
// non-increase is asserted; Error(ReassignmentIncreasedObjective) signals
// a violated (i)/(i').
IpPoint untangle_dy(const ConstraintSystem& sys, const IpPoint& p,
                    const LayeredDecomposition& dec,
                    std::span<const PairingDirection> directions = {});

struct RoundingStep {
  Rational epsilon;
  bool towardUpper;  // flow moved from the lower toward the upper barrier path
  int fractionalBefore = 0;
  int fractionalAfter = 0;
  Rational objective;  // after the step
};

struct RoundingResult {
  IpPoint point;
  Rational objectiveBefore;
  Rational objectiveAfter;
  std::vector<RoundingStep> steps;
};

// Decompose, untangle, then repeatedly redirect flow along the paired
// top/bottom paths until the point is integral. Every step preserves
// feasibility exactly, never increases the objective, and strictly lowers
// the fractional-coordinate count, so at most (initial fractional count)
// redirections run. Throws Error(ConditionsViolated) with the witness step
// when an exchange or reassignment would increase the objective.
RoundingResult round_to_integral(const ConstraintSystem& sys, const IpPoint& p,
                                 std::span<const PairingDirection> directions = {});

}  // namespace dikeopt
