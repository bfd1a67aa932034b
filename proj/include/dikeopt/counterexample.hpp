#pragma once

#include <optional>
#include <vector>

#include "dikeopt/ip_builder.hpp"
#include "dikeopt/linalg.hpp"

namespace dikeopt {

// The relaxation polytope of this instance (horizon 2, one segment, two
// heights each for dike and barrier, all tables zero) has a fractional
// vertex: build_point_P below. Costs are irrelevant to vertexhood.
Instance counterexample_instance();

// The fractional point: the period-0 variables at 1 and, for each of CY, B
// and DY, four coordinates at 1/2 tracing two half-flows "stay at 0" and
// "jump to 1 in period 1"; everything else 0 (including the period-2
// 0->1 moves, which stay at 0).
IpPoint build_point_P(const ConstraintSystem& sys);
IpPoint build_point_P();

struct VertexCertificate {
  bool isVertex = false;
  int rank = 0;
  int numVariables = 0;
  int tightRows = 0;
  // Present when not a vertex: a direction v != 0 with p +- eps*v feasible.
  std::optional<std::vector<Rational>> nullDirection;
};

// The tight-at-p system: every equality row plus the bound rows v=0 / v=1
// active at p, as a matrix over all variables.
RationalMatrix tight_matrix(const ConstraintSystem& sys, const IpPoint& p);

// Rank certificate: p is a vertex iff the tight rows have full column rank.
// Verifies feasibility first (throws Error(PointInfeasible)).
VertexCertificate certify_vertex(const ConstraintSystem& sys, const IpPoint& p);

// Largest step eps such that p +- eps*v keeps all non-tight constraints
// slack: smallest slack / (2 * max |v_i|). Used to exhibit the two distinct
// polytope points around a non-vertex (equality rows are annihilated by any
// tight-matrix nullspace direction, so only bounds constrain the step).
Rational wiggle_epsilon(const IpPoint& p, const std::vector<Rational>& direction);

}  // namespace dikeopt
