#include "dikeopt/solvers.hpp"

#include <algorithm>

#include "dikeopt/error.hpp"

namespace dikeopt {

namespace {

// Joint (barrier, segment heights) state encoding. Index order is the
// (hb, h_0, h_1, ...) lexicographic order, so ascending index sweeps match
// the documented tie-break.
struct StateSpace {
  int nSeg;
  int mD;
  int mB;
  std::int64_t dikeStates;  // mD^nSeg
  std::int64_t count;       // mB * dikeStates

  explicit StateSpace(const Instance& inst)
      : nSeg(inst.numSegments()), mD(inst.numDikeLevels()), mB(inst.numBarrierLevels()) {
    dikeStates = 1;
    for (int d = 0; d < nSeg; ++d) {
      dikeStates *= mD;
      if (dikeStates > (1LL << 40))
        fail(ErrorCode::SearchSpaceTooLarge, "joint dike state space too large for the DP");
    }
    count = dikeStates * mB;
    if (count > 50'000'000)
      fail(ErrorCode::SearchSpaceTooLarge, "joint state space too large for the DP");
  }

  void decode(std::int64_t s, int& hb, std::vector<int>& heights) const {
    hb = static_cast<int>(s / dikeStates);
    std::int64_t rest = s % dikeStates;
    for (int d = 0; d < nSeg; ++d) {
      std::int64_t weight = 1;
      for (int e = d + 1; e < nSeg; ++e) weight *= mD;
      heights[d] = static_cast<int>(rest / weight);
      rest %= weight;
    }
  }
};

// Cost of moving from `from` to `to` in period t (to >= from componentwise),
// including the expected damages at the target heights.
Money transition_cost(const Instance& inst, int t, int hbFrom, std::span<const int> from,
                      int hbTo, std::span<const int> to) {
  Money cost = inst.barrierCost(t, hbFrom, hbTo) + inst.barrierExpDam(t, hbTo);
  for (int d = 0; d < inst.numSegments(); ++d) {
    cost += inst.dikeCost(t, d, from[d], to[d]);
    cost += inst.dikeExpDam(t, d, to[d], hbTo);
  }
  return cost;
}

Money period0_base(const Instance& inst) {
  Money base = inst.barrierCost(0, 0, 0) + inst.barrierExpDam(0, 0);
  for (int d = 0; d < inst.numSegments(); ++d) {
    base += inst.dikeCost(0, d, 0, 0);
    base += inst.dikeExpDam(0, d, 0, 0);
  }
  return base;
}

// Ascending-index sweep over all successors (componentwise >=) of a state.
template <typename Fn>
void for_successors(const StateSpace& space, int hb, std::span<const int> heights, Fn&& fn) {
  std::vector<int> to(space.nSeg);
  for (int hbTo = hb; hbTo < space.mB; ++hbTo) {
    for (int d = 0; d < space.nSeg; ++d) to[d] = heights[d];
    while (true) {
      fn(hbTo, std::span<const int>(to));
      int d = space.nSeg - 1;
      while (d >= 0 && to[d] == space.mD - 1) --d;
      if (d < 0) break;
      ++to[d];
      for (int e = d + 1; e < space.nSeg; ++e) to[e] = heights[e];
    }
  }
}

}  // namespace

SolveResult solve_dp(const Instance& inst, ExecutionMode mode, DpStats* stats) {
  require_valid(inst);
  const StateSpace space(inst);
  const int T = inst.horizon();

  // costToGo[t][s]: cheapest completion of periods t+1..T starting at s.
  std::vector<std::vector<Money>> costToGo(static_cast<size_t>(T) + 1);
  costToGo[static_cast<size_t>(T)].assign(static_cast<size_t>(space.count), Money(0));

  for (int t = T - 1; t >= 0; --t) {
    auto& layer = costToGo[static_cast<size_t>(t)];
    const auto& next = costToGo[static_cast<size_t>(t) + 1];
    layer.assign(static_cast<size_t>(space.count), Money(0));
    const std::int64_t n = space.count;
    auto fill = [&](std::int64_t s) {
      int hb;
      std::vector<int> heights(space.nSeg);
      space.decode(s, hb, heights);
      bool first = true;
      Money best(0);
      Money candidate(0);  // reused across successors to curb allocation churn
      for_successors(space, hb, heights, [&](int hbTo, std::span<const int> to) {
        std::int64_t sTo = hbTo;
        for (int d = 0; d < space.nSeg; ++d) sTo = sTo * space.mD + to[d];
        candidate = next[static_cast<size_t>(sTo)];
        candidate += inst.barrierCost(t + 1, hb, hbTo);
        candidate += inst.barrierExpDam(t + 1, hbTo);
        for (int d = 0; d < space.nSeg; ++d) {
          candidate += inst.dikeCost(t + 1, d, heights[d], to[d]);
          candidate += inst.dikeExpDam(t + 1, d, to[d], hbTo);
        }
        if (first || candidate < best) {
          best = candidate;
          first = false;
        }
      });
      layer[static_cast<size_t>(s)] = std::move(best);
    };
    if (mode == ExecutionMode::parallel) {
#pragma omp parallel for schedule(dynamic, 16) if (n > 64)
      for (std::int64_t s = 0; s < n; ++s) fill(s);
    } else {
      for (std::int64_t s = 0; s < n; ++s) fill(s);
    }
  }

  if (stats) {
    stats->states = space.count * (T + 1);
    std::int64_t perPeriod = static_cast<std::int64_t>(orderedPairCount(space.mB));
    for (int d = 0; d < space.nSeg; ++d) perPeriod *= orderedPairCount(space.mD);
    stats->transitions = perPeriod * T;
  }

  // Forward walk: at each period pick the lexicographically smallest
  // successor that attains the optimum.
  SolveResult result;
  result.plan = zero_plan(inst);
  result.optimum = period0_base(inst) + costToGo[0][0];

  int hb = 0;
  std::vector<int> heights(space.nSeg, 0);
  for (int t = 0; t < T; ++t) {
    const auto& next = costToGo[static_cast<size_t>(t) + 1];
    const Money target = costToGo[static_cast<size_t>(t)][static_cast<size_t>(
        [&] {
          std::int64_t s = hb;
          for (int d = 0; d < space.nSeg; ++d) s = s * space.mD + heights[d];
          return s;
        }())];
    int bestHb = -1;
    std::vector<int> bestHeights;
    for_successors(space, hb, heights, [&](int hbTo, std::span<const int> to) {
      if (bestHb >= 0) return;
      std::int64_t sTo = hbTo;
      for (int d = 0; d < space.nSeg; ++d) sTo = sTo * space.mD + to[d];
      Money candidate = transition_cost(inst, t + 1, hb, heights, hbTo, to) +
                        next[static_cast<size_t>(sTo)];
      if (candidate == target) {
        bestHb = hbTo;
        bestHeights.assign(to.begin(), to.end());
      }
    });
    hb = bestHb;
    heights = bestHeights;
    result.plan.barrier[t + 1] = hb;
    for (int d = 0; d < space.nSeg; ++d) result.plan.segment[d][t + 1] = heights[d];
  }
  return result;
}

std::uint64_t barrier_profile_count(int horizon, int barrierLevels) {
  return monotone_profile_count(horizon + 1, barrierLevels);
}

BarrierProfileEnumerator::BarrierProfileEnumerator(const Instance& inst)
    : inner_(inst.numPeriods(), inst.numBarrierLevels()) {}

bool BarrierProfileEnumerator::next(std::vector<int>& profile) { return inner_.next(profile); }

SegmentResult solve_segment(const Instance& inst, int segment,
                            std::span<const int> barrierProfile) {
  const int T = inst.horizon();
  const int mD = inst.numDikeLevels();

  // costToGo[h] at time t: cheapest completion of periods t+1..T from height h.
  std::vector<Money> costToGo(static_cast<size_t>(mD), Money(0));
  std::vector<std::vector<Money>> layers(static_cast<size_t>(T) + 1);
  layers[static_cast<size_t>(T)] = costToGo;
  for (int t = T - 1; t >= 0; --t) {
    std::vector<Money> prev(static_cast<size_t>(mD));
    for (int h = 0; h < mD; ++h) {
      bool first = true;
      Money best(0);
      for (int h2 = h; h2 < mD; ++h2) {
        Money candidate = inst.dikeCost(t + 1, segment, h, h2) +
                          inst.dikeExpDam(t + 1, segment, h2, barrierProfile[t + 1]) +
                          costToGo[static_cast<size_t>(h2)];
        if (first || candidate < best) {
          best = std::move(candidate);
          first = false;
        }
      }
      prev[static_cast<size_t>(h)] = std::move(best);
    }
    costToGo = std::move(prev);
    layers[static_cast<size_t>(t)] = costToGo;
  }

  SegmentResult result;
  result.profile.assign(static_cast<size_t>(T) + 1, 0);
  result.cost = inst.dikeCost(0, segment, 0, 0) +
                inst.dikeExpDam(0, segment, 0, barrierProfile[0]) + layers[0][0];

  int h = 0;
  for (int t = 0; t < T; ++t) {
    const Money& target = layers[static_cast<size_t>(t)][static_cast<size_t>(h)];
    for (int h2 = h; h2 < mD; ++h2) {
      Money candidate = inst.dikeCost(t + 1, segment, h, h2) +
                        inst.dikeExpDam(t + 1, segment, h2, barrierProfile[t + 1]) +
                        layers[static_cast<size_t>(t) + 1][static_cast<size_t>(h2)];
      if (candidate == target) {
        h = h2;
        break;
      }
    }
    result.profile[static_cast<size_t>(t) + 1] = h;
  }
  return result;
}

namespace {

Money barrier_profile_cost(const Instance& inst, std::span<const int> profile) {
  Money cost = inst.barrierCost(0, 0, 0) + inst.barrierExpDam(0, 0);
  for (int t = 1; t <= inst.horizon(); ++t) {
    cost += inst.barrierCost(t, profile[t - 1], profile[t]);
    cost += inst.barrierExpDam(t, profile[t]);
  }
  return cost;
}

Money evaluate_profile(const Instance& inst, std::span<const int> profile) {
  Money total = barrier_profile_cost(inst, profile);
  for (int d = 0; d < inst.numSegments(); ++d) total += solve_segment(inst, d, profile).cost;
  return total;
}

}  // namespace

SpResult solve_sp(const Instance& inst, const SpOptions& options) {
  require_valid(inst);
  const std::uint64_t totalProfiles = barrier_profile_count(inst.horizon(), inst.numBarrierLevels());
  std::uint64_t budget = options.profileCap ? std::min(*options.profileCap, totalProfiles)
                                            : totalProfiles;

  std::vector<std::vector<int>> profiles;
  profiles.reserve(static_cast<size_t>(std::min<std::uint64_t>(budget, 1u << 20)));
  {
    BarrierProfileEnumerator en(inst);
    std::vector<int> profile;
    while (profiles.size() < budget && en.next(profile)) profiles.push_back(profile);
  }

  SpResult result;
  result.profilesEnumerated = profiles.size();
  result.exact = profiles.size() == totalProfiles;
  if (profiles.empty()) fail(ErrorCode::InvalidInstance, "no barrier profiles to enumerate");

  std::vector<Money> costs(profiles.size());
  const std::int64_t n = static_cast<std::int64_t>(profiles.size());
  if (options.mode == ExecutionMode::parallel) {
#pragma omp parallel for schedule(dynamic) if (n > 4)
    for (std::int64_t i = 0; i < n; ++i) costs[static_cast<size_t>(i)] = evaluate_profile(inst, profiles[static_cast<size_t>(i)]);
  } else {
    for (std::int64_t i = 0; i < n; ++i) costs[static_cast<size_t>(i)] = evaluate_profile(inst, profiles[static_cast<size_t>(i)]);
  }

  size_t best = 0;
  for (size_t i = 1; i < costs.size(); ++i) {
    if (costs[i] < costs[best]) best = i;
  }

  result.optimum = costs[best];
  result.plan.barrier = profiles[best];
  result.plan.segment.resize(static_cast<size_t>(inst.numSegments()));
  for (int d = 0; d < inst.numSegments(); ++d)
    result.plan.segment[static_cast<size_t>(d)] = solve_segment(inst, d, profiles[best]).profile;
  return result;
}

std::uint64_t plan_count(const Instance& inst) {
  mpz_class count = 1;
  count *= mpz_class(std::to_string(monotone_profile_count(inst.numPeriods(), inst.numBarrierLevels())));
  const std::uint64_t perSegment = monotone_profile_count(inst.numPeriods(), inst.numDikeLevels());
  for (int d = 0; d < inst.numSegments(); ++d) count *= mpz_class(std::to_string(perSegment));
  if (!count.fits_ulong_p()) return UINT64_MAX;
  return static_cast<std::uint64_t>(count.get_ui());
}

namespace {

// Best plan for a fixed barrier profile by exhaustive sweep of the segment
// profiles in lexicographic order (first strict improvement wins).
SolveResult best_for_barrier(const Instance& inst, const std::vector<int>& barrier) {
  const int nSeg = inst.numSegments();
  HeightPlan plan;
  plan.barrier = barrier;
  plan.segment.assign(static_cast<size_t>(nSeg), {});

  std::vector<MonotoneProfileEnumerator> ens(
      static_cast<size_t>(nSeg), MonotoneProfileEnumerator(inst.numPeriods(), inst.numDikeLevels()));
  for (int d = 0; d < nSeg; ++d) ens[static_cast<size_t>(d)].next(plan.segment[static_cast<size_t>(d)]);

  SolveResult best{evaluate_plan(inst, plan), plan};
  if (nSeg == 0) return best;

  while (true) {
    // Odometer over segment profiles, last segment fastest.
    int d = nSeg - 1;
    while (d >= 0) {
      if (ens[static_cast<size_t>(d)].next(plan.segment[static_cast<size_t>(d)])) break;
      ens[static_cast<size_t>(d)].reset();
      ens[static_cast<size_t>(d)].next(plan.segment[static_cast<size_t>(d)]);
      --d;
    }
    if (d < 0) break;
    Money value = evaluate_plan(inst, plan);
    if (value < best.optimum) best = {std::move(value), plan};
  }
  return best;
}

}  // namespace

SolveResult solve_bf(const Instance& inst, const BfOptions& options) {
  require_valid(inst);
  const std::uint64_t total = plan_count(inst);
  if (total > options.planCap)
    fail(ErrorCode::SearchSpaceTooLarge,
         "instance has " + std::to_string(total) + " plans, cap is " +
             std::to_string(options.planCap));

  std::vector<std::vector<int>> barriers;
  {
    BarrierProfileEnumerator en(inst);
    std::vector<int> profile;
    while (en.next(profile)) barriers.push_back(profile);
  }

  std::vector<SolveResult> perBarrier(barriers.size());
  const std::int64_t n = static_cast<std::int64_t>(barriers.size());
  if (options.mode == ExecutionMode::parallel) {
#pragma omp parallel for schedule(dynamic) if (n > 4)
    for (std::int64_t i = 0; i < n; ++i)
      perBarrier[static_cast<size_t>(i)] = best_for_barrier(inst, barriers[static_cast<size_t>(i)]);
  } else {
    for (std::int64_t i = 0; i < n; ++i)
      perBarrier[static_cast<size_t>(i)] = best_for_barrier(inst, barriers[static_cast<size_t>(i)]);
  }

  size_t best = 0;
  for (size_t i = 1; i < perBarrier.size(); ++i) {
    if (perBarrier[i].optimum < perBarrier[best].optimum) best = i;
  }
  return perBarrier[best];
}

}  // namespace dikeopt
