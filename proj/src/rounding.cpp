#include "dikeopt/rounding.hpp"

#include <algorithm>

#include "dikeopt/error.hpp"

namespace dikeopt {

std::vector<PairingDirection> pairing_directions(const ConditionReport& iPrime) {
  std::vector<PairingDirection> dirs;
  for (const auto& v : iPrime.segmentVerdicts) {
    if (v.geqAll)
      dirs.push_back(PairingDirection::straight);
    else if (v.leqAll)
      dirs.push_back(PairingDirection::flipped);
    else
      dirs.push_back(PairingDirection::straight);
  }
  return dirs;
}

namespace {

// One flow object: a dike segment's CY graph or the barrier's B graph.
struct ObjectView {
  bool barrier;
  int d;       // segment index, ignored for the barrier
  int levels;  // height count

  int arcVar(const VarIndex& V, int t, int h1, int h2) const {
    return barrier ? V.b(t, h1, h2) : V.cy(t, d, h1, h2);
  }
};

bool strictly_cross(const std::vector<int>& a, const std::vector<int>& b) {
  bool above = false, below = false;
  for (size_t t = 0; t < a.size(); ++t) {
    if (a[t] > b[t]) above = true;
    if (a[t] < b[t]) below = true;
  }
  return above && below;
}

// Objective carried by a path's arcs (periods 1..T); the shared period-0
// coefficient cancels in every comparison this feeds.
Rational path_arc_cost(const ConstraintSystem& sys, const ObjectView& obj,
                       const std::vector<int>& heights) {
  Rational cost = 0;
  for (size_t t = 1; t < heights.size(); ++t)
    cost += sys.objective[obj.arcVar(sys.vars, static_cast<int>(t), heights[t - 1], heights[t])];
  return cost;
}

// Extracts a path decomposition of the object's arc flows in p, always
// following the highest arc with remaining flow (peels the top path first
// when the flow is already layered).
std::vector<FlowPath> extract_paths(const ConstraintSystem& sys, const ObjectView& obj,
                                    const IpPoint& p) {
  const VarIndex& V = sys.vars;
  const int periods = V.periods();
  std::vector<std::vector<Rational>> arcs(static_cast<size_t>(periods));
  for (int t = 1; t < periods; ++t) {
    arcs[static_cast<size_t>(t)].resize(static_cast<size_t>(orderedPairCount(obj.levels)));
    for (int h1 = 0; h1 < obj.levels; ++h1)
      for (int h2 = h1; h2 < obj.levels; ++h2)
        arcs[static_cast<size_t>(t)][static_cast<size_t>(orderedPairIndex(h1, h2, obj.levels))] =
            p[obj.arcVar(V, t, h1, h2)];
  }

  std::vector<FlowPath> paths;
  Rational remaining = 1;
  while (remaining > 0) {
    FlowPath path;
    path.heights.assign(static_cast<size_t>(periods), 0);
    Rational flow = remaining;
    int cur = 0;
    for (int t = 1; t < periods; ++t) {
      int next = -1;
      for (int h2 = obj.levels - 1; h2 >= cur; --h2) {
        if (arcs[static_cast<size_t>(t)][static_cast<size_t>(orderedPairIndex(cur, h2, obj.levels))] > 0) {
          next = h2;
          break;
        }
      }
      if (next < 0)
        fail(ErrorCode::PointInfeasible, "flow conservation broke during path extraction");
      const Rational& f =
          arcs[static_cast<size_t>(t)][static_cast<size_t>(orderedPairIndex(cur, next, obj.levels))];
      if (f < flow) flow = f;
      path.heights[static_cast<size_t>(t)] = next;
      cur = next;
    }
    for (int t = 1; t < periods; ++t)
      arcs[static_cast<size_t>(t)][static_cast<size_t>(orderedPairIndex(
          path.heights[static_cast<size_t>(t) - 1], path.heights[static_cast<size_t>(t)],
          obj.levels))] -= flow;
    path.flow = flow;
    remaining -= flow;
    paths.push_back(std::move(path));
  }
  return paths;
}

void merge_equal_paths(std::vector<FlowPath>& paths) {
  std::vector<FlowPath> merged;
  for (auto& path : paths) {
    bool found = false;
    for (auto& m : merged) {
      if (m.heights == path.heights) {
        m.flow += path.flow;
        found = true;
        break;
      }
    }
    if (!found) merged.push_back(std::move(path));
  }
  paths = std::move(merged);
}

// Removes strict crossings by exchanging a crossing pair against its
// pointwise max/min, which preserves every per-period occupancy. The arc
// cost may not increase; a strict increase certifies that the underlying
// cost table violates its exchange inequality.
void uncross(const ConstraintSystem& sys, const ObjectView& obj, std::vector<FlowPath>& paths) {
  while (true) {
    size_t i = 0, j = 0;
    bool found = false;
    for (i = 0; i < paths.size() && !found; ++i) {
      for (j = i + 1; j < paths.size(); ++j) {
        if (strictly_cross(paths[i].heights, paths[j].heights)) {
          found = true;
          break;
        }
      }
    }
    if (!found) return;
    --i;  // the loop increment overshoots on break-out

    FlowPath& a = paths[i];
    FlowPath& b = paths[j];
    const size_t periods = a.heights.size();
    std::vector<int> hi(periods), lo(periods);
    for (size_t t = 0; t < periods; ++t) {
      hi[t] = std::max(a.heights[t], b.heights[t]);
      lo[t] = std::min(a.heights[t], b.heights[t]);
    }
    Rational delta = path_arc_cost(sys, obj, hi) + path_arc_cost(sys, obj, lo) -
                     path_arc_cost(sys, obj, a.heights) - path_arc_cost(sys, obj, b.heights);
    if (delta > 0)
      fail(ErrorCode::ExchangeIncreasedObjective,
           std::string("uncrossing exchange on ") +
               (obj.barrier ? "the barrier" : "segment " + sys.segments[obj.d]) +
               " would increase the objective by " + to_fraction_string(delta) +
               " per unit flow (condition (ii)/(iii) violated)");

    const Rational f = std::min(a.flow, b.flow);
    a.flow -= f;
    b.flow -= f;
    std::vector<FlowPath> next;
    for (auto& path : paths) {
      if (path.flow > 0) next.push_back(std::move(path));
    }
    next.push_back({hi, f});
    next.push_back({lo, f});
    merge_equal_paths(next);
    paths = std::move(next);
  }
}

// Layered paths are pairwise comparable, so lexicographic descending order
// is the pointwise order U ... L.
void sort_descending(std::vector<FlowPath>& paths) {
  std::sort(paths.begin(), paths.end(),
            [](const FlowPath& a, const FlowPath& b) { return a.heights > b.heights; });
}

void write_arcs(const ConstraintSystem& sys, const ObjectView& obj,
                const std::vector<FlowPath>& paths, IpPoint& p) {
  const VarIndex& V = sys.vars;
  for (int t = 1; t < V.periods(); ++t)
    for (int h1 = 0; h1 < obj.levels; ++h1)
      for (int h2 = h1; h2 < obj.levels; ++h2) p[obj.arcVar(V, t, h1, h2)] = 0;
  for (const auto& path : paths)
    for (int t = 1; t < V.periods(); ++t)
      p[obj.arcVar(V, t, path.heights[static_cast<size_t>(t) - 1],
                   path.heights[static_cast<size_t>(t)])] += path.flow;
}

std::vector<ObjectView> object_views(const ConstraintSystem& sys) {
  std::vector<ObjectView> views;
  for (int d = 0; d < sys.vars.numSegments(); ++d)
    views.push_back({false, d, sys.vars.dikeLevels()});
  views.push_back({true, 0, sys.vars.barrierLevels()});
  return views;
}

void require_feasible(const ConstraintSystem& sys, const IpPoint& p, const char* when) {
  FeasibilityReport report = check_feasible(sys, p);
  if (!report.feasible())
    fail(ErrorCode::PointInfeasible,
         std::string(when) + ": " + std::to_string(report.rowViolations.size()) +
             " row and " + std::to_string(report.boundViolations.size()) + " bound violations");
}

Rational block_corner(const IpPoint& p, const VarIndex& V, int t, int d, int hRow, int hbCol) {
  return p[V.dy(t, d, hRow, hbCol)];
}

}  // namespace

LayeredDecomposition decompose(const ConstraintSystem& sys, const IpPoint& p) {
  require_feasible(sys, p, "decompose requires a feasible point");

  LayeredDecomposition dec;
  dec.point = p;
  const Rational objectiveIn = objective_value(sys, p);

  for (const ObjectView& obj : object_views(sys)) {
    std::vector<FlowPath> paths = extract_paths(sys, obj, dec.point);
    merge_equal_paths(paths);
    uncross(sys, obj, paths);
    sort_descending(paths);
    write_arcs(sys, obj, paths, dec.point);
    require_feasible(sys, dec.point, "uncrossing broke feasibility");
    if (obj.barrier)
      dec.barrier.paths = std::move(paths);
    else
      dec.dikes.push_back({std::move(paths)});
  }

  if (objective_value(sys, dec.point) > objectiveIn)
    fail(ErrorCode::ExchangeIncreasedObjective, "relayering increased the objective");

  // dyMin: distance of the fractional DY coordinates to {0,1}.
  dec.dyMin = 0;
  const VarIndex& V = sys.vars;
  bool anyFractional = false;
  for (int t = 0; t < V.periods(); ++t)
    for (int d = 0; d < V.numSegments(); ++d)
      for (int h = 0; h < V.dikeLevels(); ++h)
        for (int hb = 0; hb < V.barrierLevels(); ++hb) {
          const Rational& v = dec.point[V.dy(t, d, h, hb)];
          if (v > 0 && v < 1) {
            Rational dist = v < 1 - v ? v : Rational(1 - v);
            if (!anyFractional || dist < dec.dyMin) dec.dyMin = dist;
            anyFractional = true;
          }
        }

  // fMin: the minimal paired corner mass min(row sum, column sum) over
  // blocks whose extreme paths differ. Marginal sums, so untangling does
  // not change it.
  dec.fMin = 0;
  bool anyChanging = false;
  auto track = [&](const Rational& value) {
    if (!anyChanging || value < dec.fMin) dec.fMin = value;
    anyChanging = true;
  };
  auto row_sum = [&](int t, int d, int h) {
    Rational s = 0;
    for (int hb = 0; hb < V.barrierLevels(); ++hb) s += dec.point[V.dy(t, d, h, hb)];
    return s;
  };
  auto col_sum = [&](int t, int d, int hb) {
    Rational s = 0;
    for (int h = 0; h < V.dikeLevels(); ++h) s += dec.point[V.dy(t, d, h, hb)];
    return s;
  };
  for (int t = 0; t < V.periods(); ++t) {
    const int hbU = dec.barrier.upper().heights[static_cast<size_t>(t)];
    const int hbL = dec.barrier.lower().heights[static_cast<size_t>(t)];
    for (int d = 0; d < V.numSegments(); ++d) {
      const int hU = dec.dikes[static_cast<size_t>(d)].upper().heights[static_cast<size_t>(t)];
      const int hL = dec.dikes[static_cast<size_t>(d)].lower().heights[static_cast<size_t>(t)];
      if (hU == hL && hbU == hbL) continue;
      Rational upperCorner = std::min(row_sum(t, d, hU), col_sum(t, d, hbU));
      Rational lowerCorner = std::min(row_sum(t, d, hL), col_sum(t, d, hbL));
      track(upperCorner);
      track(lowerCorner);
    }
    if (V.numSegments() == 0 && hbU != hbL) {
      // Barrier-only instances have no DY; the occupancy masses play the
      // corner role.
      Rational occU = 0, occL = 0;
      for (int hb1 = 0; hb1 <= hbU; ++hb1) occU += dec.point[V.b(t, hb1, hbU)];
      for (int hb1 = 0; hb1 <= hbL; ++hb1) occL += dec.point[V.b(t, hb1, hbL)];
      track(occU);
      track(occL);
    }
  }
  return dec;
}

namespace {

// Northwest-corner coupling of the block's own marginals. Rows ascend;
// columns ascend for comonotone (straight) and descend for antitone
// (flipped).
std::vector<std::vector<Rational>> target_coupling(const std::vector<Rational>& rows,
                                                   const std::vector<Rational>& cols,
                                                   bool flipped) {
  const int nRows = static_cast<int>(rows.size());
  const int nCols = static_cast<int>(cols.size());
  std::vector<std::vector<Rational>> target(
      static_cast<size_t>(nRows), std::vector<Rational>(static_cast<size_t>(nCols), Rational(0)));

  int i = 0;
  int j = flipped ? nCols - 1 : 0;
  Rational rowRem = nRows > 0 ? rows[0] : Rational(0);
  Rational colRem = nCols > 0 ? cols[static_cast<size_t>(j)] : Rational(0);
  while (i < nRows && j >= 0 && j < nCols) {
    Rational m = std::min(rowRem, colRem);
    target[static_cast<size_t>(i)][static_cast<size_t>(j)] += m;
    rowRem -= m;
    colRem -= m;
    bool advanceRow = rowRem == 0;
    bool advanceCol = colRem == 0;
    if (advanceRow && advanceCol) {
      ++i;
      j += flipped ? -1 : 1;
      if (i < nRows) rowRem = rows[static_cast<size_t>(i)];
      if (j >= 0 && j < nCols) colRem = cols[static_cast<size_t>(j)];
    } else if (advanceRow) {
      ++i;
      if (i < nRows) rowRem = rows[static_cast<size_t>(i)];
    } else if (advanceCol) {
      j += flipped ? -1 : 1;
      if (j >= 0 && j < nCols) colRem = cols[static_cast<size_t>(j)];
    } else {
      break;  // both remainders positive is impossible after taking the min
    }
  }
  return target;
}

}  // namespace

IpPoint untangle_dy(const ConstraintSystem& sys, const IpPoint& p, const LayeredDecomposition& dec,
                    std::span<const PairingDirection> directions) {
  const VarIndex& V = sys.vars;
  if (!directions.empty() && static_cast<int>(directions.size()) != V.numSegments())
    fail(ErrorCode::DimensionMismatch, "one pairing direction per segment expected");
  (void)dec;  // the decomposition fixes the extremes; the rearrangement only needs marginals

  IpPoint out = p;
  for (int t = 0; t < V.periods(); ++t) {
    for (int d = 0; d < V.numSegments(); ++d) {
      const bool flipped =
          !directions.empty() && directions[static_cast<size_t>(d)] == PairingDirection::flipped;

      std::vector<Rational> rows(static_cast<size_t>(V.dikeLevels()), Rational(0));
      std::vector<Rational> cols(static_cast<size_t>(V.barrierLevels()), Rational(0));
      for (int h = 0; h < V.dikeLevels(); ++h)
        for (int hb = 0; hb < V.barrierLevels(); ++hb) {
          const Rational& v = out[V.dy(t, d, h, hb)];
          rows[static_cast<size_t>(h)] += v;
          cols[static_cast<size_t>(hb)] += v;
        }

      auto target = target_coupling(rows, cols, flipped);

      Rational delta = 0;
      for (int h = 0; h < V.dikeLevels(); ++h)
        for (int hb = 0; hb < V.barrierLevels(); ++hb)
          delta += sys.objective[V.dy(t, d, h, hb)] *
                   (target[static_cast<size_t>(h)][static_cast<size_t>(hb)] - out[V.dy(t, d, h, hb)]);
      if (delta > 0)
        fail(ErrorCode::ReassignmentIncreasedObjective,
             "untangling DY(t=" + std::to_string(t) + ", " + sys.segments[d] +
                 ") would increase the objective by " + to_fraction_string(delta) +
                 " (condition (i)/(i') violated)");

      for (int h = 0; h < V.dikeLevels(); ++h)
        for (int hb = 0; hb < V.barrierLevels(); ++hb)
          out[V.dy(t, d, h, hb)] = target[static_cast<size_t>(h)][static_cast<size_t>(hb)];
    }
  }
  require_feasible(sys, out, "untangling broke feasibility");
  return out;
}

namespace {

struct Redirection {
  bool valid = false;
  Rational bound;      // min decreasing-corner mass: the usable epsilon
  Rational unitDelta;  // exact objective change per unit of redirected flow
};

// Computes the epsilon budget and objective slope of moving flow in the
// given barrier direction (towardUpper: L_B loses, U_B gains; straight
// dikes move with the barrier, flipped dikes against it).
Redirection plan_redirection(const ConstraintSystem& sys, const IpPoint& p,
                             const std::vector<PathSet>& dikes, const PathSet& barrier,
                             std::span<const PairingDirection> directions, bool towardUpper) {
  const VarIndex& V = sys.vars;
  Redirection plan;
  plan.unitDelta = 0;

  const ObjectView barrierView{true, 0, V.barrierLevels()};
  if (barrier.paths.size() > 1) {
    Rational barrierDelta = path_arc_cost(sys, barrierView, barrier.upper().heights) -
                            path_arc_cost(sys, barrierView, barrier.lower().heights);
    plan.unitDelta += towardUpper ? barrierDelta : Rational(-barrierDelta);
  }

  for (int d = 0; d < V.numSegments(); ++d) {
    const bool flipped =
        !directions.empty() && directions[static_cast<size_t>(d)] == PairingDirection::flipped;
    const PathSet& set = dikes[static_cast<size_t>(d)];
    if (set.paths.size() > 1) {
      const ObjectView view{false, d, V.dikeLevels()};
      Rational dikeDelta =
          path_arc_cost(sys, view, set.upper().heights) - path_arc_cost(sys, view, set.lower().heights);
      // A flipped dike's upper path is paired with the barrier's lower path,
      // so it moves against the barrier direction.
      bool dikeTowardUpper = flipped ? !towardUpper : towardUpper;
      plan.unitDelta += dikeTowardUpper ? dikeDelta : Rational(-dikeDelta);
    }
  }

  bool haveBound = false;
  auto track_bound = [&](const Rational& value) {
    if (!haveBound || value < plan.bound) plan.bound = value;
    haveBound = true;
  };

  for (int t = 0; t < V.periods(); ++t) {
    const int hbU = barrier.upper().heights[static_cast<size_t>(t)];
    const int hbL = barrier.lower().heights[static_cast<size_t>(t)];
    for (int d = 0; d < V.numSegments(); ++d) {
      const bool flipped =
          !directions.empty() && directions[static_cast<size_t>(d)] == PairingDirection::flipped;
      const PathSet& set = dikes[static_cast<size_t>(d)];
      const int hU = set.upper().heights[static_cast<size_t>(t)];
      const int hL = set.lower().heights[static_cast<size_t>(t)];

      // Cells paired with (U_B, L_B) for this dike.
      const int rowWithU = flipped ? hL : hU;
      const int rowWithL = flipped ? hU : hL;
      const int decRow = towardUpper ? rowWithL : rowWithU;
      const int decCol = towardUpper ? hbL : hbU;
      const int incRow = towardUpper ? rowWithU : rowWithL;
      const int incCol = towardUpper ? hbU : hbL;
      if (decRow == incRow && decCol == incCol) continue;

      track_bound(block_corner(p, V, t, d, decRow, decCol));
      plan.unitDelta += sys.objective[V.dy(t, d, incRow, incCol)];
      plan.unitDelta -= sys.objective[V.dy(t, d, decRow, decCol)];
    }
    if (V.numSegments() == 0 && hbU != hbL) {
      // No DY cells: the losing barrier path's own flow is the budget.
      track_bound(towardUpper ? barrier.lower().flow : barrier.upper().flow);
    }
  }

  plan.valid = haveBound && plan.bound > 0;
  return plan;
}

void apply_flow_move(const ConstraintSystem& sys, const ObjectView& obj, PathSet& set,
                     bool towardUpper, const Rational& eps, IpPoint& p) {
  if (set.paths.size() < 2) return;
  FlowPath& gain = towardUpper ? set.paths.front() : set.paths.back();
  FlowPath& lose = towardUpper ? set.paths.back() : set.paths.front();
  if (lose.flow < eps)
    fail(ErrorCode::PointInfeasible, "internal: redirection exceeds the losing path's flow");
  const VarIndex& V = sys.vars;
  for (int t = 1; t < V.periods(); ++t) {
    p[obj.arcVar(V, t, lose.heights[static_cast<size_t>(t) - 1],
                 lose.heights[static_cast<size_t>(t)])] -= eps;
    p[obj.arcVar(V, t, gain.heights[static_cast<size_t>(t) - 1],
                 gain.heights[static_cast<size_t>(t)])] += eps;
  }
  lose.flow -= eps;
  gain.flow += eps;
  if (lose.flow == 0) {
    if (towardUpper)
      set.paths.pop_back();
    else
      set.paths.erase(set.paths.begin());
  }
}

}  // namespace

RoundingResult round_to_integral(const ConstraintSystem& sys, const IpPoint& p,
                                 std::span<const PairingDirection> directions) {
  const VarIndex& V = sys.vars;
  if (!directions.empty() && static_cast<int>(directions.size()) != V.numSegments())
    fail(ErrorCode::DimensionMismatch, "one pairing direction per segment expected");

  RoundingResult result;
  result.objectiveBefore = objective_value(sys, p);

  LayeredDecomposition dec;
  IpPoint work;
  try {
    dec = decompose(sys, p);
    work = untangle_dy(sys, dec.point, dec, directions);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ExchangeIncreasedObjective ||
        e.code() == ErrorCode::ReassignmentIncreasedObjective)
      fail(ErrorCode::ConditionsViolated, e.what());
    throw;
  }

  std::vector<PathSet> dikes = std::move(dec.dikes);
  PathSet barrier = std::move(dec.barrier);
  Rational objective = objective_value(sys, work);
  const int initialFractional = work.fractionalCount();

  int guard = 0;
  while (!work.isIntegral()) {
    if (++guard > initialFractional + 1)
      fail(ErrorCode::PointInfeasible, "internal: rounding failed to terminate");

    Redirection up = plan_redirection(sys, work, dikes, barrier, directions, true);
    Redirection down = plan_redirection(sys, work, dikes, barrier, directions, false);
    if (!up.valid || !down.valid)
      fail(ErrorCode::PointInfeasible, "internal: fractional point admits no redirection");

    bool towardUpper;
    if (up.unitDelta < 0)
      towardUpper = true;
    else if (up.unitDelta > 0)
      towardUpper = false;
    else
      // Degenerate slope: integralize the nearest coordinate; full tie goes
      // toward the lower path.
      towardUpper = up.bound < down.bound;

    const Redirection& chosen = towardUpper ? up : down;
    const Rational eps = chosen.bound;
    const int fractionalBefore = work.fractionalCount();

    // DY corner moves per changing block.
    for (int t = 0; t < V.periods(); ++t) {
      const int hbU = barrier.upper().heights[static_cast<size_t>(t)];
      const int hbL = barrier.lower().heights[static_cast<size_t>(t)];
      for (int d = 0; d < V.numSegments(); ++d) {
        const bool flipped =
            !directions.empty() && directions[static_cast<size_t>(d)] == PairingDirection::flipped;
        const PathSet& set = dikes[static_cast<size_t>(d)];
        const int hU = set.upper().heights[static_cast<size_t>(t)];
        const int hL = set.lower().heights[static_cast<size_t>(t)];
        const int rowWithU = flipped ? hL : hU;
        const int rowWithL = flipped ? hU : hL;
        const int decRow = towardUpper ? rowWithL : rowWithU;
        const int decCol = towardUpper ? hbL : hbU;
        const int incRow = towardUpper ? rowWithU : rowWithL;
        const int incCol = towardUpper ? hbU : hbL;
        if (decRow == incRow && decCol == incCol) continue;
        work[V.dy(t, d, decRow, decCol)] -= eps;
        work[V.dy(t, d, incRow, incCol)] += eps;
      }
    }

    // Arc flow moves.
    apply_flow_move(sys, {true, 0, V.barrierLevels()}, barrier, towardUpper, eps, work);
    for (int d = 0; d < V.numSegments(); ++d) {
      const bool flipped =
          !directions.empty() && directions[static_cast<size_t>(d)] == PairingDirection::flipped;
      const bool dikeTowardUpper = flipped ? !towardUpper : towardUpper;
      apply_flow_move(sys, {false, d, V.dikeLevels()}, dikes[static_cast<size_t>(d)],
                      dikeTowardUpper, eps, work);
    }

    require_feasible(sys, work, "redirection broke feasibility");
    Rational newObjective = objective_value(sys, work);
    if (newObjective != objective + eps * chosen.unitDelta)
      fail(ErrorCode::PointInfeasible, "internal: objective bookkeeping mismatch");
    if (newObjective > objective)
      fail(ErrorCode::ConditionsViolated, "redirection increased the objective");
    objective = std::move(newObjective);

    const int fractionalAfter = work.fractionalCount();
    if (fractionalAfter >= fractionalBefore)
      fail(ErrorCode::PointInfeasible, "internal: fractional count did not decrease");
    result.steps.push_back({eps, towardUpper, fractionalBefore, fractionalAfter, objective});
  }

  result.objectiveAfter = objective;
  if (result.objectiveAfter > result.objectiveBefore)
    fail(ErrorCode::ConditionsViolated, "rounding increased the objective");
  result.point = std::move(work);
  return result;
}

}  // namespace dikeopt
