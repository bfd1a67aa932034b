#include "dikeopt/ip_builder.hpp"

#include "dikeopt/error.hpp"

namespace dikeopt {

VarIndex::VarIndex(const Instance& inst)
    : periods_(inst.numPeriods()),
      numSegments_(inst.numSegments()),
      dikeLevels_(inst.numDikeLevels()),
      barrierLevels_(inst.numBarrierLevels()) {
  cyCount_ = periods_ * numSegments_ * orderedPairCount(dikeLevels_);
  dyCount_ = periods_ * numSegments_ * dikeLevels_ * barrierLevels_;
  bCount_ = periods_ * orderedPairCount(barrierLevels_);
  total_ = cyCount_ + dyCount_ + bCount_;
}

int VarIndex::index(const VarId& id) const {
  auto check = [&](bool ok) {
    if (!ok) fail(ErrorCode::IndexOutOfRange, "variable id outside instance ranges");
  };
  check(id.t >= 0 && id.t < periods_);
  switch (id.kind) {
    case VarKind::CY: {
      check(id.d >= 0 && id.d < numSegments_);
      check(0 <= id.a && id.a <= id.b && id.b < dikeLevels_);
      const int pairs = orderedPairCount(dikeLevels_);
      return (id.t * numSegments_ + id.d) * pairs + orderedPairIndex(id.a, id.b, dikeLevels_);
    }
    case VarKind::DY: {
      check(id.d >= 0 && id.d < numSegments_);
      check(0 <= id.a && id.a < dikeLevels_ && 0 <= id.b && id.b < barrierLevels_);
      return cyCount_ + ((id.t * numSegments_ + id.d) * dikeLevels_ + id.a) * barrierLevels_ + id.b;
    }
    case VarKind::B: {
      check(0 <= id.a && id.a <= id.b && id.b < barrierLevels_);
      const int pairs = orderedPairCount(barrierLevels_);
      return cyCount_ + dyCount_ + id.t * pairs + orderedPairIndex(id.a, id.b, barrierLevels_);
    }
  }
  fail(ErrorCode::IndexOutOfRange, "bad variable kind");
}

VarId VarIndex::id(int index) const {
  if (index < 0 || index >= total_) fail(ErrorCode::IndexOutOfRange, "variable index out of range");
  if (index < cyCount_) {
    const int pairs = orderedPairCount(dikeLevels_);
    int td = index / pairs;
    int rest = index % pairs;
    int h1 = 0;
    while (h1 + 1 < dikeLevels_ && orderedPairIndex(h1 + 1, h1 + 1, dikeLevels_) <= rest) ++h1;
    int h2 = h1 + (rest - orderedPairIndex(h1, h1, dikeLevels_));
    return {VarKind::CY, td / numSegments_, td % numSegments_, h1, h2};
  }
  index -= cyCount_;
  if (index < dyCount_) {
    int hb = index % barrierLevels_;
    int rest = index / barrierLevels_;
    int h2 = rest % dikeLevels_;
    int td = rest / dikeLevels_;
    return {VarKind::DY, td / numSegments_, td % numSegments_, h2, hb};
  }
  index -= dyCount_;
  const int pairs = orderedPairCount(barrierLevels_);
  int t = index / pairs;
  int rest = index % pairs;
  int hb1 = 0;
  while (hb1 + 1 < barrierLevels_ && orderedPairIndex(hb1 + 1, hb1 + 1, barrierLevels_) <= rest)
    ++hb1;
  int hb2 = hb1 + (rest - orderedPairIndex(hb1, hb1, barrierLevels_));
  return {VarKind::B, t, 0, hb1, hb2};
}

bool IpPoint::isIntegral() const {
  for (const auto& v : values_) {
    if (v != 0 && v != 1) return false;
  }
  return true;
}

int IpPoint::fractionalCount() const {
  int n = 0;
  for (const auto& v : values_) {
    if (v > 0 && v < 1) ++n;
  }
  return n;
}

std::string Row::label(const Instance& inst) const {
  auto seg = [&](int d) { return inst.segments()[d]; };
  switch (kind) {
    case RowKind::FixDike:
      return "init_cy_" + seg(d) + "_" + std::to_string(a) + "_" + std::to_string(b);
    case RowKind::FixBarrier:
      return "init_b_" + std::to_string(a) + "_" + std::to_string(b);
    case RowKind::FlowDike:
      return "flow_d_" + std::to_string(t) + "_" + seg(d) + "_" + std::to_string(a);
    case RowKind::FlowBarrier:
      return "flow_b_" + std::to_string(t) + "_" + std::to_string(a);
    case RowKind::LinkDike:
      return "link_d_" + std::to_string(t) + "_" + seg(d) + "_" + std::to_string(a);
    case RowKind::LinkBarrier:
      return "link_b_" + std::to_string(t) + "_" + seg(d) + "_" + std::to_string(a);
  }
  return "row";
}

std::string ConstraintSystem::varName(int index) const {
  VarId v = vars.id(index);
  switch (v.kind) {
    case VarKind::CY:
      return "CY_" + std::to_string(v.t) + "_" + segments[v.d] + "_" + std::to_string(v.a) + "_" +
             std::to_string(v.b);
    case VarKind::DY:
      return "DY_" + std::to_string(v.t) + "_" + segments[v.d] + "_" + std::to_string(v.a) + "_" +
             std::to_string(v.b);
    case VarKind::B:
      return "B_" + std::to_string(v.t) + "_" + std::to_string(v.a) + "_" + std::to_string(v.b);
  }
  return "?";
}

int ConstraintSystem::varByName(const std::string& name) const {
  for (int i = 0; i < vars.size(); ++i) {
    if (varName(i) == name) return i;
  }
  return -1;
}

ConstraintSystem build_system(const Instance& inst) {
  require_valid(inst);

  ConstraintSystem sys;
  sys.vars = VarIndex(inst);
  sys.horizon = inst.horizon();
  sys.segments = inst.segments();

  const int T = inst.horizon();
  const int mD = inst.numDikeLevels();
  const int mB = inst.numBarrierLevels();
  const int nSeg = inst.numSegments();
  const VarIndex& V = sys.vars;

  // Objective (1)-(3). The B coefficient carries both the barrier cost and
  // the barrier expected damage of its target height.
  sys.objective.assign(V.size(), Rational(0));
  for (int t = 0; t <= T; ++t) {
    for (int d = 0; d < nSeg; ++d) {
      for (int h1 = 0; h1 < mD; ++h1)
        for (int h2 = h1; h2 < mD; ++h2)
          sys.objective[V.cy(t, d, h1, h2)] = inst.dikeCost(t, d, h1, h2);
      for (int h2 = 0; h2 < mD; ++h2)
        for (int hb = 0; hb < mB; ++hb)
          sys.objective[V.dy(t, d, h2, hb)] = inst.dikeExpDam(t, d, h2, hb);
    }
    for (int hb1 = 0; hb1 < mB; ++hb1)
      for (int hb2 = hb1; hb2 < mB; ++hb2)
        sys.objective[V.b(t, hb1, hb2)] = inst.barrierCost(t, hb1, hb2) + inst.barrierExpDam(t, hb2);
  }

  // Initial conditions: CY(0,d,0,0) = 1, every other CY(0,d,.,.) = 0.
  for (int d = 0; d < nSeg; ++d) {
    for (int h1 = 0; h1 < mD; ++h1) {
      for (int h2 = h1; h2 < mD; ++h2) {
        Row row;
        row.kind = RowKind::FixDike;
        row.t = 0;
        row.d = d;
        row.a = h1;
        row.b = h2;
        row.coeffs = {{V.cy(0, d, h1, h2), 1}};
        row.rhs = (h1 == 0 && h2 == 0) ? 1 : 0;
        sys.rows.push_back(std::move(row));
      }
    }
  }
  // Initial conditions: B(0,0,0) = 1, every other B(0,.,.) = 0.
  for (int hb1 = 0; hb1 < mB; ++hb1) {
    for (int hb2 = hb1; hb2 < mB; ++hb2) {
      Row row;
      row.kind = RowKind::FixBarrier;
      row.t = 0;
      row.a = hb1;
      row.b = hb2;
      row.coeffs = {{V.b(0, hb1, hb2), 1}};
      row.rhs = (hb1 == 0 && hb2 == 0) ? 1 : 0;
      sys.rows.push_back(std::move(row));
    }
  }
  // Dike flow: inflow into (t-1, h2) equals outflow through period-t arcs.
  for (int t = 1; t <= T; ++t) {
    for (int d = 0; d < nSeg; ++d) {
      for (int h2 = 0; h2 < mD; ++h2) {
        Row row;
        row.kind = RowKind::FlowDike;
        row.t = t;
        row.d = d;
        row.a = h2;
        for (int h1 = 0; h1 <= h2; ++h1) row.coeffs.emplace_back(V.cy(t - 1, d, h1, h2), 1);
        for (int h3 = h2; h3 < mD; ++h3) row.coeffs.emplace_back(V.cy(t, d, h2, h3), -1);
        row.rhs = 0;
        sys.rows.push_back(std::move(row));
      }
    }
  }
  // Barrier flow conservation, one row per (t, hb2); a per-segment copy would
  // be redundant since the row does not involve d.
  for (int t = 1; t <= T; ++t) {
    for (int hb2 = 0; hb2 < mB; ++hb2) {
      Row row;
      row.kind = RowKind::FlowBarrier;
      row.t = t;
      row.a = hb2;
      for (int hb1 = 0; hb1 <= hb2; ++hb1) row.coeffs.emplace_back(V.b(t - 1, hb1, hb2), 1);
      for (int hb3 = hb2; hb3 < mB; ++hb3) row.coeffs.emplace_back(V.b(t, hb2, hb3), -1);
      row.rhs = 0;
      sys.rows.push_back(std::move(row));
    }
  }
  // Dike linking: occupancy ties to DY row sums.
  for (int t = 0; t <= T; ++t) {
    for (int d = 0; d < nSeg; ++d) {
      for (int h2 = 0; h2 < mD; ++h2) {
        Row row;
        row.kind = RowKind::LinkDike;
        row.t = t;
        row.d = d;
        row.a = h2;
        for (int h1 = 0; h1 <= h2; ++h1) row.coeffs.emplace_back(V.cy(t, d, h1, h2), 1);
        for (int hb = 0; hb < mB; ++hb) row.coeffs.emplace_back(V.dy(t, d, h2, hb), -1);
        row.rhs = 0;
        sys.rows.push_back(std::move(row));
      }
    }
  }
  // Barrier linking: occupancy ties to DY column sums, per segment.
  for (int t = 0; t <= T; ++t) {
    for (int d = 0; d < nSeg; ++d) {
      for (int hb2 = 0; hb2 < mB; ++hb2) {
        Row row;
        row.kind = RowKind::LinkBarrier;
        row.t = t;
        row.d = d;
        row.a = hb2;
        for (int hb1 = 0; hb1 <= hb2; ++hb1) row.coeffs.emplace_back(V.b(t, hb1, hb2), 1);
        for (int h2 = 0; h2 < mD; ++h2) row.coeffs.emplace_back(V.dy(t, d, h2, hb2), -1);
        row.rhs = 0;
        sys.rows.push_back(std::move(row));
      }
    }
  }
  return sys;
}

IpPoint plan_to_point(const Instance& inst, const HeightPlan& plan) {
  ConstraintSystem sys;
  sys.vars = VarIndex(inst);
  sys.horizon = inst.horizon();
  sys.segments = inst.segments();
  return plan_to_point(sys, plan);
}

IpPoint plan_to_point(const ConstraintSystem& sys, const HeightPlan& plan) {
  const VarIndex& V = sys.vars;
  const int periods = V.periods();
  if (static_cast<int>(plan.barrier.size()) != periods ||
      static_cast<int>(plan.segment.size()) != V.numSegments())
    fail(ErrorCode::IndexOutOfRange, "plan shape does not match system");
  if (!is_monotone_from_zero(plan.barrier, V.barrierLevels()))
    fail(ErrorCode::NonMonotonePlan, "barrier profile is not monotone from height 0");
  for (const auto& prof : plan.segment) {
    if (!is_monotone_from_zero(prof, V.dikeLevels()))
      fail(ErrorCode::NonMonotonePlan, "segment profile is not monotone from height 0");
  }

  IpPoint p(V);
  for (int t = 0; t < periods; ++t) {
    const int hbPrev = t == 0 ? 0 : plan.barrier[t - 1];
    const int hb = plan.barrier[t];
    p[V.b(t, hbPrev, hb)] = 1;
    for (int d = 0; d < V.numSegments(); ++d) {
      const int hPrev = t == 0 ? 0 : plan.segment[d][t - 1];
      const int h = plan.segment[d][t];
      p[V.cy(t, d, hPrev, h)] = 1;
      p[V.dy(t, d, h, hb)] = 1;
    }
  }
  return p;
}

HeightPlan plan_from_point(const ConstraintSystem& sys, const IpPoint& p) {
  const VarIndex& V = sys.vars;
  if (p.vars() != V) fail(ErrorCode::DimensionMismatch, "point does not match system");
  if (!p.isIntegral()) fail(ErrorCode::PointInfeasible, "point is not integral");

  HeightPlan plan;
  plan.barrier.assign(V.periods(), -1);
  plan.segment.assign(V.numSegments(), std::vector<int>(V.periods(), -1));

  auto set_once = [](int& slot, int value, const char* what) {
    if (slot != -1) fail(ErrorCode::PointInfeasible, std::string("two active ") + what + " in one period");
    slot = value;
  };

  for (int t = 0; t < V.periods(); ++t) {
    for (int hb1 = 0; hb1 < V.barrierLevels(); ++hb1)
      for (int hb2 = hb1; hb2 < V.barrierLevels(); ++hb2)
        if (p[V.b(t, hb1, hb2)] == 1) set_once(plan.barrier[t], hb2, "barrier moves");
    if (plan.barrier[t] == -1) fail(ErrorCode::PointInfeasible, "no active barrier move in a period");
    for (int d = 0; d < V.numSegments(); ++d) {
      for (int h1 = 0; h1 < V.dikeLevels(); ++h1)
        for (int h2 = h1; h2 < V.dikeLevels(); ++h2)
          if (p[V.cy(t, d, h1, h2)] == 1) set_once(plan.segment[d][t], h2, "segment moves");
      if (plan.segment[d][t] == -1)
        fail(ErrorCode::PointInfeasible, "no active segment move in a period");
    }
  }
  // The decoded plan must reproduce the point exactly (this checks the moves
  // chain correctly and that DY matches the CY/B pattern).
  if (!(plan_to_point(sys, plan) == p))
    fail(ErrorCode::PointInfeasible, "integral point is not the image of a plan");
  return plan;
}

FeasibilityReport check_feasible(const ConstraintSystem& sys, const IpPoint& p) {
  if (p.vars() != sys.vars) fail(ErrorCode::DimensionMismatch, "point does not match system");
  FeasibilityReport report;
  for (int r = 0; r < static_cast<int>(sys.rows.size()); ++r) {
    Rational lhs = 0;
    for (const auto& [var, coeff] : sys.rows[r].coeffs) {
      if (coeff == 1)
        lhs += p[var];
      else
        lhs -= p[var];
    }
    if (lhs != sys.rows[r].rhs) report.rowViolations.push_back({r, lhs - sys.rows[r].rhs});
  }
  for (int i = 0; i < p.size(); ++i) {
    if (p[i] < 0 || p[i] > 1) report.boundViolations.push_back({i, p[i]});
  }
  return report;
}

Rational objective_value(const ConstraintSystem& sys, const IpPoint& p) {
  if (p.vars() != sys.vars) fail(ErrorCode::DimensionMismatch, "point does not match system");
  Rational total = 0;
  for (int i = 0; i < p.size(); ++i) {
    if (p[i] != 0) total += sys.objective[i] * p[i];
  }
  return total;
}

}  // namespace dikeopt
