// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "dikeopt/conditions.hpp"
#include "dikeopt/counterexample.hpp"
#include "dikeopt/gen_instance.hpp"
#include "dikeopt/lp_format.hpp"
#include "dikeopt/micp.hpp"
#include "dikeopt/rounding.hpp"
#include "dikeopt/solvers.hpp"
#include "test_support.hpp"

using namespace dikeopt;
using dikeopt::testing::all_plans;
using dikeopt::testing::tiny1;

namespace {

struct Criterion {
  int number;
  const char* title;
  std::function<void(std::ostringstream&)> run;  // throws / asserts via require()
};

struct AcceptanceFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw AcceptanceFailure(what);
}

Rational quarter(std::uint64_t n) {
  Rational q(static_cast<long>(n), 4);
  q.canonicalize();
  return q;
}

Rational cents_of(std::uint64_t n) {
  Rational q(static_cast<long>(n), 100);
  q.canonicalize();
  return q;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// ---- criterion bodies ----

void non_integrality(std::ostringstream& note) {
  auto start = std::chrono::steady_clock::now();
  ConstraintSystem sys = build_system(counterexample_instance());
  IpPoint p = build_point_P(sys);
  require(check_feasible(sys, p).feasible(), "point P must be feasible");
  require(!p.isIntegral(), "point P must have a coordinate in (0,1)");
  VertexCertificate cert = certify_vertex(sys, p);
  require(cert.isVertex, "point P must be certified a vertex");
  require(cert.rank == 30 && cert.numVariables == 30, "rank must be 30 of 30");
  double elapsed = seconds_since(start);
  require(elapsed < 1.0, "certification must finish in under 1 s");
  note << "rank 30/30 in " << elapsed << " s";
}

Instance seeded_small(std::uint64_t seed, InstanceFamily family) {
  GenDims dims;
  dims.horizon = 1 + static_cast<int>(seed % 3);          // T <= 3
  dims.segments = static_cast<int>(seed % 3);             // |D| <= 2
  dims.dikeLevels = 1 + static_cast<int>((seed / 3) % 3); // <= 3
  dims.barrierLevels = 1 + static_cast<int>((seed / 7) % 3);
  return gen_instance(seed, dims, family);
}

void solver_equivalence(std::ostringstream& note) {
  auto start = std::chrono::steady_clock::now();
  int n = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed, ++n) {
    Instance inst = seeded_small(seed, seed % 2 ? InstanceFamily::random : InstanceFamily::monge);
    SolveResult dp = solve_dp(inst);
    SpResult sp = solve_sp(inst);
    SolveResult bf = solve_bf(inst);
    require(dp.optimum == sp.optimum && dp.optimum == bf.optimum,
            "solver optima must agree exactly (seed " + std::to_string(seed) + ")");
    require(evaluate_plan(inst, dp.plan) == dp.optimum &&
                evaluate_plan(inst, sp.plan) == sp.optimum &&
                evaluate_plan(inst, bf.plan) == bf.optimum,
            "plans must re-evaluate to the optimum (seed " + std::to_string(seed) + ")");
  }
  double elapsed = seconds_since(start);
  require(elapsed < 60.0, "the 200-instance sweep must finish in under 60 s");
  note << n << " instances in " << elapsed << " s";
}

IpPoint random_mix(const ConstraintSystem& sys, const std::vector<HeightPlan>& plans,
                   SplitMix64& rng) {
  const int parts = 2 + static_cast<int>(rng.below(3));
  std::vector<IpPoint> points;
  std::vector<Rational> weights;
  Rational total = 0;
  for (int k = 0; k < parts; ++k) {
    points.push_back(plan_to_point(sys, plans[rng.below(plans.size())]));
    Rational w(static_cast<long>(1 + rng.below(9)));
    weights.push_back(w);
    total += w;
  }
  IpPoint mix(sys.vars);
  for (int k = 0; k < parts; ++k)
    for (int i = 0; i < mix.size(); ++i) mix[i] += (weights[static_cast<size_t>(k)] / total) * points[static_cast<size_t>(k)][i];
  return mix;
}

void rounding_guarantee(std::ostringstream& note) {
  SplitMix64 rng(515);
  int instances = 0, mixes = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed, ++instances) {
    GenDims dims{1 + static_cast<int>(seed % 3), 1 + static_cast<int>(seed % 2),
                 2 + static_cast<int>((seed / 3) % 2), 2 + static_cast<int>((seed / 7) % 2)};
    Instance inst = gen_instance(seed, dims, InstanceFamily::monge);
    ConstraintSystem sys = build_system(inst);
    const std::vector<HeightPlan> plans = all_plans(inst);
    for (int trial = 0; trial < 10; ++trial, ++mixes) {
      IpPoint mix = random_mix(sys, plans, rng);
      Rational before = objective_value(sys, mix);
      RoundingResult result = round_to_integral(sys, mix);  // must not throw
      require(result.point.isIntegral(), "rounded point must be integral");
      require(check_feasible(sys, result.point).feasible(), "rounded point must be feasible");
      require(result.objectiveAfter <= before, "objective must not increase");
      for (const RoundingStep& step : result.steps)
        require(step.fractionalAfter < step.fractionalBefore,
                "fractional count must strictly decrease each iteration");
    }
  }
  note << instances << " instances, " << mixes << " mixtures";
}

void flipped_pairings(std::ostringstream& note) {
  SplitMix64 rng(626);
  int mixes = 0;
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    Instance inst = gen_instance(seed, {2, 2, 3, 3}, InstanceFamily::mixed);
    ConditionReport iPrime = check_condition_i_prime(inst);
    require(iPrime.satisfied && check_condition_ii(inst).satisfied &&
                check_condition_iii(inst).satisfied,
            "mixed family must satisfy (i'), (ii), (iii)");
    require(iPrime.segmentVerdicts[0].geqAll && !iPrime.segmentVerdicts[0].leqAll &&
                iPrime.segmentVerdicts[1].leqAll && !iPrime.segmentVerdicts[1].geqAll,
            "each segment must satisfy exactly one direction, mixed across segments");
    ConstraintSystem sys = build_system(inst);
    std::vector<PairingDirection> dirs = pairing_directions(iPrime);
    const std::vector<HeightPlan> plans = all_plans(inst);
    for (int trial = 0; trial < 10; ++trial, ++mixes) {
      IpPoint mix = random_mix(sys, plans, rng);
      Rational before = objective_value(sys, mix);
      RoundingResult result = round_to_integral(sys, mix, dirs);
      require(result.point.isIntegral() && check_feasible(sys, result.point).feasible(),
              "flipped-pairing rounding must yield an integral feasible point");
      require(result.objectiveAfter <= before, "objective must not increase (flipped)");
      for (const RoundingStep& step : result.steps)
        require(step.fractionalAfter < step.fractionalBefore,
                "fractional count must strictly decrease (flipped)");
    }
  }
  note << mixes << " mixtures over mixed-direction instances";
}

void survey_structure(std::ostringstream& note) {
  // 14 levels: totals must be 11025 and 2380, the period-0 row full.
  std::vector<Rational> levels14;
  for (int i = 0; i < 14; ++i) levels14.push_back(Rational(i));
  Instance big(1, {"d0", "d1"}, levels14, levels14);
  big.fillAllTables(Money(1));
  ConditionReport i = check_condition_i(big);
  ConditionReport ii = check_condition_ii(big);
  ConditionReport iii = check_condition_iii(big);
  for (const auto& row : i.cells)
    for (const auto& cell : row)
      require(cell.total == 11025, "condition (i) must test 11025 quadruples per cell");
  for (const auto& row : ii.cells)
    require(row[0].total == 2380, "condition (ii) must test 2380 quadruples per cell");
  for (const auto& row : iii.cells)
    for (const auto& cell : row)
      require(cell.total == 2380, "condition (iii) must test 2380 quadruples per cell");
  std::vector<SurveyTable> tables = survey(big);
  for (const auto& table : tables)
    for (const auto& cell : table.rows[0])
      require(cell.satisfied == cell.total, "the period-0 survey row must be fully satisfied");

  // Checker counts equal an independent nested-loop oracle on <= 4 levels.
  int cells = 0;
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    GenDims dims{2, 2, 1 + static_cast<int>(seed % 4), 1 + static_cast<int>((seed / 2) % 4)};
    Instance inst = gen_instance(seed, dims, InstanceFamily::random);
    ConditionReport ci = check_condition_i(inst);
    ConditionReport cii = check_condition_ii(inst);
    ConditionReport ciii = check_condition_iii(inst);
    for (int t = 0; t <= inst.horizon(); ++t) {
      std::int64_t total = 0, geq = 0;
      for (int a = 0; a < inst.numBarrierLevels(); ++a)
        for (int b = a; b < inst.numBarrierLevels(); ++b)
          for (int c = b; c < inst.numBarrierLevels(); ++c)
            for (int d = c; d < inst.numBarrierLevels(); ++d) {
              ++total;
              if (inst.barrierCost(t, a, d) + inst.barrierCost(t, b, c) >=
                  inst.barrierCost(t, a, c) + inst.barrierCost(t, b, d))
                ++geq;
            }
      require(cii.cells[t][0].total == total && cii.cells[t][0].satisfied == geq,
              "condition (ii) counts must equal the oracle");
      ++cells;
      for (int d = 0; d < inst.numSegments(); ++d) {
        std::int64_t dtotal = 0, dgeq = 0;
        for (int h2 = 0; h2 < inst.numDikeLevels(); ++h2)
          for (int h2p = h2; h2p < inst.numDikeLevels(); ++h2p)
            for (int hb = 0; hb < inst.numBarrierLevels(); ++hb)
              for (int hbp = hb; hbp < inst.numBarrierLevels(); ++hbp) {
                ++dtotal;
                if (inst.dikeExpDam(t, d, h2p, hb) + inst.dikeExpDam(t, d, h2, hbp) >=
                    inst.dikeExpDam(t, d, h2, hb) + inst.dikeExpDam(t, d, h2p, hbp))
                  ++dgeq;
              }
        require(ci.cells[t][d].total == dtotal && ci.cells[t][d].satisfied == dgeq,
                "condition (i) counts must equal the oracle");
        std::int64_t mtotal = 0, mgeq = 0;
        for (int a = 0; a < inst.numDikeLevels(); ++a)
          for (int b = a; b < inst.numDikeLevels(); ++b)
            for (int c = b; c < inst.numDikeLevels(); ++c)
              for (int e = c; e < inst.numDikeLevels(); ++e) {
                ++mtotal;
                if (inst.dikeCost(t, d, a, e) + inst.dikeCost(t, d, b, c) >=
                    inst.dikeCost(t, d, a, c) + inst.dikeCost(t, d, b, e))
                  ++mgeq;
              }
        require(ciii.cells[t][d].total == mtotal && ciii.cells[t][d].satisfied == mgeq,
                "condition (iii) counts must equal the oracle");
        cells += 2;
      }
    }
  }
  note << "11025/2380 structure plus oracle agreement on " << cells << " cells";
}

void separable_equality(std::ostringstream& note) {
  SplitMix64 rng(737);
  int quads = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const int levels = 2 + static_cast<int>(rng.below(5));
    std::vector<Money> f;
    Money acc = 0;
    for (int i = 0; i < levels; ++i) {
      f.push_back(acc);
      acc += cents_of(rng.below(500));
    }
    const Money c0 = cents_of(rng.below(300));
    auto cost = [&](int x, int y) -> Money { return f[static_cast<size_t>(y)] - f[static_cast<size_t>(x)] + c0; };
    for (int a = 0; a < levels; ++a)
      for (int b = a; b < levels; ++b)
        for (int c = b; c < levels; ++c)
          for (int d = c; d < levels; ++d) {
            require(cost(a, d) + cost(b, c) == cost(a, c) + cost(b, d),
                    "separable costs must satisfy the exchange inequality with equality");
            ++quads;
          }
  }
  note << quads << " quadruples, all exact equalities";
}

void micp_embedding(std::ostringstream& note) {
  int planChecks = 0;
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    GenDims dims{1 + static_cast<int>(seed % 3), static_cast<int>(seed % 3),
                 1 + static_cast<int>((seed / 2) % 3), 1 + static_cast<int>((seed / 5) % 3)};
    Instance inst = gen_instance(seed, dims, InstanceFamily::random);
    MicpInstance micp = dike_to_micp(inst);
    for (const HeightPlan& plan : all_plans(inst)) {
      std::vector<MicpPath> paths;
      paths.push_back(profile_to_path(plan.barrier));
      for (const auto& seg : plan.segment) paths.push_back(profile_to_path(seg));
      require(micp_cost(micp, paths) == evaluate_plan(inst, plan),
              "embedded path cost must equal evaluate_plan");
      ++planChecks;
    }
  }
  int solved = 0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed, ++solved) {
    Instance inst = seeded_small(seed, InstanceFamily::random);
    MicpSolveResult viaMicp = solve_micp_bf(dike_to_micp(inst));
    require(viaMicp.cost == solve_bf(inst).optimum,
            "MICP brute force must match the plan brute force (seed " + std::to_string(seed) + ")");
  }
  note << planChecks << " embedded plans, " << solved << " solved instances";
}

void knapsack_reduction(std::ostringstream& note) {
  SplitMix64 rng(848);
  int solved = 0;
  for (int trial = 0; trial < 60; ++trial, ++solved) {
    const int n = 1 + static_cast<int>(rng.below(8));          // <= 8 items
    const std::int64_t capacity = 1 + static_cast<std::int64_t>(rng.below(12));  // <= 12
    const int copies = 1 + static_cast<int>(rng.below(2));
    std::vector<KnapsackItem> items;
    for (int i = 0; i < n; ++i)
      items.push_back({1 + static_cast<std::int64_t>(rng.below(6)),
                       quarter(rng.below(60))});

    KnapsackReduction red = knapsack_to_dike(items, capacity, copies);
    SolveResult opt = solve_dp(red.instance);

    // Independent subset/multiset brute force.
    std::vector<int> counts(static_cast<size_t>(n), 0);
    Rational best = 0;
    while (true) {
      std::int64_t weight = 0;
      Rational profit = 0;
      for (int i = 0; i < n; ++i) {
        weight += counts[static_cast<size_t>(i)] * items[static_cast<size_t>(i)].weight;
        profit += counts[static_cast<size_t>(i)] * items[static_cast<size_t>(i)].profit;
      }
      if (weight <= capacity && profit > best) best = profit;
      int i = 0;
      while (i < n && counts[static_cast<size_t>(i)] == copies) counts[static_cast<size_t>(i++)] = 0;
      if (i == n) break;
      ++counts[static_cast<size_t>(i)];
    }
    require(red.offset - opt.optimum == best,
            "offset minus dike optimum must equal the knapsack maximum");
  }
  note << solved << " reductions match the subset brute force";
}

void complexity_sanity(std::ostringstream& note) {
  int checks = 0;
  for (int T = 1; T <= 6; ++T) {
    for (int mB = 1; mB <= 4; ++mB) {
      GenDims dims{T, 1, 2, mB};
      Instance inst = gen_instance(11, dims, InstanceFamily::random);
      BarrierProfileEnumerator en(inst);
      std::vector<int> profile;
      std::uint64_t count = 0;
      while (en.next(profile)) ++count;
      // Stars and bars: C(T + mB - 1, mB - 1).
      std::uint64_t closed = 1;
      for (int i = 1; i <= mB - 1; ++i) closed = closed * (T + i) / i;
      require(count == closed, "profile count must match the closed form");
      require(barrier_profile_count(T, mB) == closed, "profile count helper must agree");

      DpStats stats;
      solve_dp(inst, ExecutionMode::serial, &stats);
      require(stats.states == static_cast<std::int64_t>(mB) * 2 * (T + 1),
              "dp state count must equal |H_B|*|H_D|^|D|*(T+1)");
      checks += 2;
    }
  }
  note << checks << " closed-form checks";
}

void lp_round_trip(std::ostringstream& note) {
  std::vector<Instance> family;
  family.push_back(tiny1());
  family.push_back(counterexample_instance());
  family.push_back(gen_instance(31, {3, 2, 3, 2}, InstanceFamily::random));
  int rows = 0;
  for (const Instance& inst : family) {
    ConstraintSystem sys = build_system(inst);
    LpModel model = to_lp_model(sys, inst);
    std::ostringstream out;
    write_lp(model, out);
    std::istringstream in(out.str());
    LpModel parsed = parse_lp(in);
    require(parsed.varNames == model.varNames, "variable names must round trip");
    require(parsed.objective == model.objective, "objective must round trip");
    require(parsed.bounds == model.bounds, "bounds must round trip");
    require(parsed.rows.size() == model.rows.size(), "row count must round trip");
    for (size_t r = 0; r < model.rows.size(); ++r) {
      require(parsed.rows[r] == model.rows[r],
              "row " + std::to_string(r) + " must round trip exactly");
      ++rows;
    }
  }
  note << rows << " rows round-tripped exactly";
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "non-integrality: point P is a fractional vertex (rank 30/30)", non_integrality},
      {2, "solver oracle equivalence on 200 seeded instances", solver_equivalence},
      {3, "rounding: integral, feasible, objective never increases", rounding_guarantee},
      {4, "flipped pairings on mixed-direction instances", flipped_pairings},
      {5, "condition survey structure (11025 / 2380, oracle agreement)", survey_structure},
      {6, "separable costs satisfy (ii)/(iii) with equality", separable_equality},
      {7, "MICP embedding equals plan evaluation and brute force", micp_embedding},
      {8, "knapsack reduction: offset - optimum = knapsack maximum", knapsack_reduction},
      {9, "complexity sanity: profile and state counts", complexity_sanity},
      {10, "LP export round trip is row-for-row exact", lp_round_trip},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    std::ostringstream detail;
    try {
      criterion.run(detail);
      std::printf("[PASS] criterion %2d: %s (%s)\n", criterion.number, criterion.title,
                  detail.str().c_str());
    } catch (const std::exception& e) {
      ++failures;
      std::printf("[FAIL] criterion %2d: %s -- %s\n", criterion.number, criterion.title, e.what());
    }
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
