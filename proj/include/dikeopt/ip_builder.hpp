#pragma once

#include <string>
#include <vector>

#include "dikeopt/instance.hpp"
#include "dikeopt/rational.hpp"

namespace dikeopt {

// The explicit 0/1 program over CY / DY / B variables:
//   CY(t,d,h1,h2)  dike segment d moves h1 -> h2 in period t (h1 <= h2)
//   DY(t,d,h2,hb)  at the end of period t, segment d sits at h2 and the
//                  barrier at hb (links investments to expected damages)
//   B(t,hb1,hb2)   barrier moves hb1 -> hb2 in period t (hb1 <= hb2)

enum class VarKind { CY, DY, B };

struct VarId {
  VarKind kind;
  int t;
  int d;  // segment index; unused for B
  int a;  // CY: h1, DY: h2, B: hb1
  int b;  // CY: h2, DY: hb, B: hb2

  bool operator==(const VarId&) const = default;
};

// Dense, deterministic numbering of all variables of an instance:
// the CY block, then DY, then B, each ordered by (t, d, a, b).
class VarIndex {
 public:
  VarIndex() = default;
  explicit VarIndex(const Instance& inst);

  int size() const { return total_; }
  int periods() const { return periods_; }
  int numSegments() const { return numSegments_; }
  int dikeLevels() const { return dikeLevels_; }
  int barrierLevels() const { return barrierLevels_; }

  int index(const VarId& id) const;  // throws Error(IndexOutOfRange)
  VarId id(int index) const;

  int cy(int t, int d, int h1, int h2) const { return index({VarKind::CY, t, d, h1, h2}); }
  int dy(int t, int d, int h2, int hb) const { return index({VarKind::DY, t, d, h2, hb}); }
  int b(int t, int hb1, int hb2) const { return index({VarKind::B, t, 0, hb1, hb2}); }

  bool operator==(const VarIndex&) const = default;

 private:
  int periods_ = 0;
  int numSegments_ = 0;
  int dikeLevels_ = 0;
  int barrierLevels_ = 0;
  int cyCount_ = 0;
  int dyCount_ = 0;
  int bCount_ = 0;
  int total_ = 0;
};

// An assignment of exact rationals in [0,1] to every variable.
class IpPoint {
 public:
  IpPoint() = default;
  explicit IpPoint(const VarIndex& vars) : vars_(vars), values_(vars.size(), Rational(0)) {}

  const VarIndex& vars() const { return vars_; }
  int size() const { return static_cast<int>(values_.size()); }

  Rational& operator[](int i) { return values_[static_cast<size_t>(i)]; }
  const Rational& operator[](int i) const { return values_[static_cast<size_t>(i)]; }
  Rational& at(const VarId& id) { return values_[static_cast<size_t>(vars_.index(id))]; }
  const Rational& at(const VarId& id) const { return values_[static_cast<size_t>(vars_.index(id))]; }

  bool isIntegral() const;
  int fractionalCount() const;  // coordinates strictly inside (0,1)

  bool operator==(const IpPoint&) const = default;

 private:
  VarIndex vars_;
  std::vector<Rational> values_;
};

enum class RowKind {
  FixDike,      // period-0 CY(0,d,h1,h2) fixings
  FixBarrier,   // period-0 B(0,hb1,hb2) fixings
  FlowDike,     // dike flow conservation, per (t>0, d, h2)
  FlowBarrier,  // barrier flow conservation, per (t>0, hb2)
  LinkDike,     // CY occupancy = DY row sums, per (t, d, h2)
  LinkBarrier,  // B occupancy = DY column sums, per (t, d, hb2)
};

struct Row {
  RowKind kind;
  int t = 0;
  int d = 0;  // unused for FixBarrier / FlowBarrier
  int a = 0;  // fixings: h1; flow/link rows: h2 or hb2
  int b = 0;  // fixings: h2; otherwise unused
  std::vector<std::pair<int, int>> coeffs;  // (variable index, +-1), left side positive
  Rational rhs;

  std::string label(const Instance& inst) const;
};

struct ConstraintSystem {
  VarIndex vars;
  std::vector<Row> rows;
  std::vector<Rational> objective;  // per variable; bounds are [0,1] for all
  // Enough of the instance to name things and re-derive index domains.
  int horizon = 0;
  std::vector<std::string> segments;

  std::string varName(int index) const;
  int varByName(const std::string& name) const;  // -1 if unknown
};

// Materializes the initial conditions, flow conservation and linking rows
// plus the [0,1] bounds and the cost/damage objective, with deterministic
// row order: fixings, then the dike and barrier flow rows, then the two
// linking families, each lexicographic.
ConstraintSystem build_system(const Instance& inst);  // throws Error(InvalidInstance)

// The integral point of a plan: one CY, DY and B set to 1 per period.
IpPoint plan_to_point(const Instance& inst, const HeightPlan& plan);
IpPoint plan_to_point(const ConstraintSystem& sys, const HeightPlan& plan);

// Inverse of plan_to_point on integral feasible points. Throws
// Error(PointInfeasible) if the point is not 0/1 or not plan-shaped.
HeightPlan plan_from_point(const ConstraintSystem& sys, const IpPoint& p);

struct RowViolation {
  int row;
  Rational residual;  // lhs - rhs, nonzero
};

struct BoundViolation {
  int var;
  Rational value;
};

struct FeasibilityReport {
  std::vector<RowViolation> rowViolations;
  std::vector<BoundViolation> boundViolations;
  bool feasible() const { return rowViolations.empty() && boundViolations.empty(); }
};

FeasibilityReport check_feasible(const ConstraintSystem& sys, const IpPoint& p);

Rational objective_value(const ConstraintSystem& sys, const IpPoint& p);

}  // namespace dikeopt
