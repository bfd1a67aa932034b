#include <doctest.h>

#include <algorithm>

#include "dikeopt/error.hpp"
#include "dikeopt/gen_instance.hpp"
#include "test_support.hpp"

using namespace dikeopt;
using dikeopt::testing::all_plans;
using dikeopt::testing::tiny1;

TEST_SUITE_BEGIN("solvers");

namespace {

// Reference optimum by scanning the exhaustive plan list.
SolveResult scan_optimum(const Instance& inst) {
  SolveResult best;
  bool first = true;
  for (const HeightPlan& plan : all_plans(inst)) {
    Money value = evaluate_plan(inst, plan);
    if (first || value < best.optimum) {
      best = {std::move(value), plan};
      first = false;
    }
  }
  return best;
}

Instance random_small(std::uint64_t seed) {
  GenDims dims;
  dims.horizon = 1 + static_cast<int>(seed % 3);
  dims.segments = static_cast<int>(seed % 3);
  dims.dikeLevels = 1 + static_cast<int>((seed / 3) % 3);
  dims.barrierLevels = 1 + static_cast<int>((seed / 7) % 3);
  return gen_instance(seed, dims, seed % 2 ? InstanceFamily::random : InstanceFamily::monge);
}

}  // namespace

TEST_CASE("tiny1: all three solvers find 6 with the dike-raising plan") {
  Instance inst = tiny1();
  HeightPlan expected = zero_plan(inst);
  expected.segment[0][1] = 1;

  SolveResult dp = solve_dp(inst);
  CHECK(dp.optimum == Money(6));
  CHECK(dp.plan == expected);

  SpResult sp = solve_sp(inst);
  CHECK(sp.optimum == Money(6));
  CHECK(sp.plan == expected);
  CHECK(sp.exact);

  SolveResult bf = solve_bf(inst);
  CHECK(bf.optimum == Money(6));
  CHECK(bf.plan == expected);
}

TEST_CASE("all-zero tables: optimum 0 with the all-zero plan") {
  Instance inst(2, {"d0"}, {Rational(0), Rational(1)}, {Rational(0), Rational(1)});
  inst.fillAllTables(Money(0));
  HeightPlan zero = zero_plan(inst);
  CHECK(solve_dp(inst).optimum == Money(0));
  CHECK(solve_dp(inst).plan == zero);
  CHECK(solve_sp(inst).plan == zero);  // lexicographically first optimum
  CHECK(solve_bf(inst).plan == zero);
}

TEST_CASE("solver oracle equivalence on 100 random small instances") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    Instance inst = random_small(seed);
    SolveResult reference = scan_optimum(inst);
    SolveResult dp = solve_dp(inst);
    SpResult sp = solve_sp(inst);
    SolveResult bf = solve_bf(inst);
    CHECK(dp.optimum == reference.optimum);
    CHECK(sp.optimum == reference.optimum);
    CHECK(bf.optimum == reference.optimum);
    // Plans re-evaluate to the optimum exactly.
    CHECK(evaluate_plan(inst, dp.plan) == reference.optimum);
    CHECK(evaluate_plan(inst, sp.plan) == reference.optimum);
    CHECK(evaluate_plan(inst, bf.plan) == reference.optimum);
    // bf scans in lexicographic order, so it returns the scan's plan.
    CHECK(bf.plan == reference.plan);
    CHECK(sp.plan == reference.plan);
  }
}

TEST_CASE("barrier-only instances reduce to a single shortest path") {
  Instance inst(3, {}, {Rational(0)}, {Rational(0), Rational(1), Rational(2)});
  inst.fillAllTables(Money(1));
  inst.setBarrierExpDam(2, 0, Money(50));
  inst.setBarrierExpDam(3, 0, Money(50));
  SolveResult dp = solve_dp(inst);
  SpResult sp = solve_sp(inst);
  SolveResult bf = solve_bf(inst);
  CHECK(dp.optimum == sp.optimum);
  CHECK(dp.optimum == bf.optimum);
  CHECK(sp.plan.segment.empty());
}

TEST_CASE("counterexample-sized instance with unit costs: all solvers agree") {
  Instance inst(2, {"d0"}, {Rational(0), Rational(1)}, {Rational(0), Rational(1)});
  inst.fillAllTables(Money(1));
  SolveResult dp = solve_dp(inst);
  SpResult sp = solve_sp(inst);
  SolveResult bf = solve_bf(inst);
  CHECK(dp.optimum == bf.optimum);
  CHECK(sp.optimum == bf.optimum);
  // Every entry is 1, so every plan costs the same count of table lookups:
  // per period 1 (bCost) + 1 (bExpDam) + 1 (dCost) + 1 (dExpDam) = 4, over 3 periods.
  CHECK(bf.optimum == Money(12));
}

TEST_CASE("optimum is invariant under permuting segment identifiers") {
  Instance inst = gen_instance(77, {2, 2, 3, 2}, InstanceFamily::random);
  // Swap the two segments' tables.
  Instance swapped(inst.horizon(), {"d0", "d1"}, inst.dikeHeights(), inst.barrierHeights());
  for (int t = 0; t <= inst.horizon(); ++t) {
    for (int d = 0; d < 2; ++d) {
      for (int h1 = 0; h1 < inst.numDikeLevels(); ++h1)
        for (int h2 = h1; h2 < inst.numDikeLevels(); ++h2)
          swapped.setDikeCost(t, 1 - d, h1, h2, inst.dikeCost(t, d, h1, h2));
      for (int h2 = 0; h2 < inst.numDikeLevels(); ++h2)
        for (int hb = 0; hb < inst.numBarrierLevels(); ++hb)
          swapped.setDikeExpDam(t, 1 - d, h2, hb, inst.dikeExpDam(t, d, h2, hb));
    }
    for (int hb1 = 0; hb1 < inst.numBarrierLevels(); ++hb1)
      for (int hb2 = hb1; hb2 < inst.numBarrierLevels(); ++hb2)
        swapped.setBarrierCost(t, hb1, hb2, inst.barrierCost(t, hb1, hb2));
    for (int hb = 0; hb < inst.numBarrierLevels(); ++hb)
      swapped.setBarrierExpDam(t, hb, inst.barrierExpDam(t, hb));
  }
  CHECK(solve_dp(inst).optimum == solve_dp(swapped).optimum);
}

TEST_CASE("dp cost prefixes along the optimal plan are monotone") {
  Instance inst = gen_instance(13, {3, 2, 3, 2}, InstanceFamily::random);
  SolveResult dp = solve_dp(inst);
  Money prefix = 0;
  Money previous = 0;
  for (int t = 0; t <= inst.horizon(); ++t) {
    const int hbPrev = t == 0 ? 0 : dp.plan.barrier[t - 1];
    prefix += inst.barrierCost(t, hbPrev, dp.plan.barrier[t]);
    prefix += inst.barrierExpDam(t, dp.plan.barrier[t]);
    for (int d = 0; d < inst.numSegments(); ++d) {
      const int hPrev = t == 0 ? 0 : dp.plan.segment[d][t - 1];
      prefix += inst.dikeCost(t, d, hPrev, dp.plan.segment[d][t]);
      prefix += inst.dikeExpDam(t, d, dp.plan.segment[d][t], dp.plan.barrier[t]);
    }
    CHECK(prefix >= previous);
    previous = prefix;
  }
  CHECK(prefix == dp.optimum);
}

TEST_CASE("dp state counts follow the closed form") {
  for (int T = 1; T <= 4; ++T) {
    for (int mB = 1; mB <= 3; ++mB) {
      for (int nSeg = 0; nSeg <= 2; ++nSeg) {
        GenDims dims{T, nSeg, 2, mB};
        Instance inst = gen_instance(99, dims, InstanceFamily::random);
        DpStats stats;
        solve_dp(inst, ExecutionMode::serial, &stats);
        std::int64_t dikeStates = 1;
        for (int d = 0; d < nSeg; ++d) dikeStates *= 2;
        CHECK(stats.states == mB * dikeStates * (T + 1));
      }
    }
  }
}

TEST_CASE("barrier profile counts match stars and bars up to T=6, heights=4") {
  for (int T = 1; T <= 6; ++T) {
    for (int mB = 1; mB <= 4; ++mB) {
      GenDims dims{T, 0, 1, mB};
      Instance inst = gen_instance(3, dims, InstanceFamily::random);
      BarrierProfileEnumerator en(inst);
      std::vector<int> profile;
      std::uint64_t n = 0;
      while (en.next(profile)) ++n;
      CHECK(n == barrier_profile_count(T, mB));

      // Spot check the closed form against a direct binomial.
      std::uint64_t binom = 1;
      for (int i = 1; i <= mB - 1; ++i) binom = binom * (T + mB - 1 - (mB - 1) + i) / i;
      CHECK(barrier_profile_count(T, mB) == binom);
    }
  }
}

TEST_CASE("solve_segment answers the two-arc comparison on tiny1") {
  Instance inst = tiny1();
  std::vector<int> flat{0, 0};
  SegmentResult r = solve_segment(inst, 0, flat);
  CHECK(r.cost == Money(6));
  CHECK(r.profile == std::vector<int>{0, 1});

  // Random three-height instances: segment DP equals the per-segment scan.
  for (std::uint64_t seed = 200; seed < 215; ++seed) {
    Instance rnd = gen_instance(seed, {3, 1, 3, 2}, InstanceFamily::random);
    BarrierProfileEnumerator en(rnd);
    std::vector<int> profile;
    while (en.next(profile)) {
      SegmentResult best = solve_segment(rnd, 0, profile);
      MonotoneProfileEnumerator segs(rnd.numPeriods(), rnd.numDikeLevels());
      std::vector<int> seg;
      bool first = true;
      Money reference(0);
      while (segs.next(seg)) {
        Money cost = 0;
        for (int t = 0; t <= rnd.horizon(); ++t) {
          const int prev = t == 0 ? 0 : seg[t - 1];
          cost += rnd.dikeCost(t, 0, prev, seg[t]);
          cost += rnd.dikeExpDam(t, 0, seg[t], profile[t]);
        }
        if (first || cost < reference) {
          reference = cost;
          first = false;
        }
      }
      CHECK(best.cost == reference);
    }
  }
}

TEST_CASE("profile caps mark results non-exact") {
  Instance inst = gen_instance(55, {3, 1, 2, 3}, InstanceFamily::random);
  SpOptions options;
  options.profileCap = 2;
  SpResult capped = solve_sp(inst, options);
  CHECK(!capped.exact);
  CHECK(capped.profilesEnumerated == 2);
  SpResult full = solve_sp(inst);
  CHECK(full.exact);
  CHECK(full.optimum <= capped.optimum);
}

TEST_CASE("brute force enforces its plan cap") {
  Instance inst = gen_instance(56, {3, 2, 3, 3}, InstanceFamily::random);
  BfOptions options;
  options.planCap = 10;
  CHECK(plan_count(inst) > 10);
  CHECK_THROWS_AS(solve_bf(inst, options), Error);
}

TEST_CASE("plan_count matches the enumerated plan list") {
  for (std::uint64_t seed = 60; seed < 70; ++seed) {
    Instance inst = random_small(seed);
    CHECK(plan_count(inst) == all_plans(inst).size());
  }
}

TEST_CASE("serial and parallel solver paths agree exactly") {
  for (std::uint64_t seed = 300; seed < 310; ++seed) {
    Instance inst = random_small(seed);
    SolveResult dpS = solve_dp(inst, ExecutionMode::serial);
    SolveResult dpP = solve_dp(inst, ExecutionMode::parallel);
    CHECK(dpS.optimum == dpP.optimum);
    CHECK(dpS.plan == dpP.plan);

    SpResult spS = solve_sp(inst, {ExecutionMode::serial, {}});
    SpResult spP = solve_sp(inst, {ExecutionMode::parallel, {}});
    CHECK(spS.optimum == spP.optimum);
    CHECK(spS.plan == spP.plan);

    SolveResult bfS = solve_bf(inst, {ExecutionMode::serial, 10'000'000});
    SolveResult bfP = solve_bf(inst, {ExecutionMode::parallel, 10'000'000});
    CHECK(bfS.optimum == bfP.optimum);
    CHECK(bfS.plan == bfP.plan);
  }
}

TEST_SUITE_END();
