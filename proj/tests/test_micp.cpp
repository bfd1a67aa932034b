#include <doctest.h>

#include <sstream>

#include "dikeopt/error.hpp"
#include "dikeopt/gen_instance.hpp"
#include "dikeopt/micp.hpp"
#include "dikeopt/solvers.hpp"
#include "test_support.hpp"

using namespace dikeopt;
using dikeopt::testing::all_plans;
using dikeopt::testing::tiny1;

TEST_SUITE_BEGIN("micp");

namespace {

Rational quarter(std::uint64_t n) {
  Rational q(static_cast<long>(n), 4);
  q.canonicalize();
  return q;
}

std::vector<MicpPath> embed_plan(const HeightPlan& plan) {
  std::vector<MicpPath> paths;
  paths.push_back(profile_to_path(plan.barrier));
  for (const auto& seg : plan.segment) paths.push_back(profile_to_path(seg));
  return paths;
}

// Maximum profit over all bounded selections, by enumeration.
Rational knapsack_oracle(std::span<const KnapsackItem> items, std::int64_t capacity,
                         int copies) {
  std::vector<int> counts(items.size(), 0);
  Rational best = 0;
  while (true) {
    std::int64_t weight = 0;
    Rational profit = 0;
    for (size_t i = 0; i < items.size(); ++i) {
      weight += counts[i] * items[i].weight;
      profit += counts[i] * items[i].profit;
    }
    if (weight <= capacity && profit > best) best = profit;
    size_t i = 0;
    while (i < items.size() && counts[i] == copies) counts[i++] = 0;
    if (i == items.size()) break;
    ++counts[i];
  }
  return best;
}

}  // namespace

TEST_CASE("zero couplings make the tuple cost the sum of path costs") {
  // Two graphs, k=1, two mid vertices each.
  MicpInstance inst;
  for (int j = 0; j < 2; ++j) {
    LayeredGraph g;
    g.k = 1;
    g.partitionSize = 2;
    g.arcs.resize(2);
    g.arcs[0] = {{0, 0, Rational(j + 1)}, {0, 1, Rational(j + 3)}};
    g.arcs[1] = {{0, 0, Rational(0)}, {1, 0, Rational(1)}};
    inst.graphs.push_back(g);
  }
  inst.couplings.resize(1);
  inst.couplings[0].m = {{{Rational(0), Rational(0)}, {Rational(0), Rational(0)}}};
  inst.validate();

  std::vector<MicpPath> paths{{{0}}, {{1}}};
  CHECK(micp_cost(inst, paths) == Rational(1) + Rational(3 + 1 + 1));
}

TEST_CASE("hand-enumerated coupling case: the best follower flips with the leader") {
  // One follower, k=1, two mid vertices per graph. The coupling makes
  // follower vertex 0 cheap under leader arc (0,0) and vertex 1 cheap under
  // leader arc (0,1).
  MicpInstance inst;
  LayeredGraph lead;
  lead.k = 1;
  lead.partitionSize = 2;
  lead.arcs.resize(2);
  lead.arcs[0] = {{0, 0, Rational(0)}, {0, 1, Rational(1)}};
  lead.arcs[1] = {{0, 0, Rational(0)}, {1, 0, Rational(0)}};
  LayeredGraph follow = lead;
  follow.arcs[0] = {{0, 0, Rational(1)}, {0, 1, Rational(1)}};
  inst.graphs = {lead, follow};
  inst.couplings.resize(1);
  // m[layer 0][vertex][leader arc index]: arcs[0] of the leader are
  // (0,0) -> index 0 and (0,1) -> index 1.
  inst.couplings[0].m = {{{Rational(0), Rational(10)}, {Rational(10), Rational(0)}}};
  inst.validate();

  // All four tuples by hand: (P1=0,P2=0): 0+1+0=1; (0,1): 0+1+10=11;
  // (1,0): 1+1+10=12; (1,1): 1+1+0=2. Minimum is (0,0).
  std::vector<MicpPath> t00{{{0}}, {{0}}};
  std::vector<MicpPath> t01{{{0}}, {{1}}};
  std::vector<MicpPath> t10{{{1}}, {{0}}};
  std::vector<MicpPath> t11{{{1}}, {{1}}};
  CHECK(micp_cost(inst, t00) == 1);
  CHECK(micp_cost(inst, t01) == 11);
  CHECK(micp_cost(inst, t10) == 12);
  CHECK(micp_cost(inst, t11) == 2);

  MicpSolveResult best = solve_micp_bf(inst);
  CHECK(best.cost == 1);
  CHECK(best.paths == t00);

  // Making the leader's lower arc expensive flips the best follower.
  inst.graphs[0].arcs[0][0].cost = Rational(5);
  MicpSolveResult flipped = solve_micp_bf(inst);
  CHECK(flipped.cost == 2);
  CHECK(flipped.paths == t11);
}

TEST_CASE("missing arcs raise NOT_A_PATH") {
  MicpInstance inst;
  LayeredGraph g;
  g.k = 1;
  g.partitionSize = 2;
  g.arcs.resize(2);
  g.arcs[0] = {{0, 0, Rational(0)}};
  g.arcs[1] = {{0, 0, Rational(0)}, {1, 0, Rational(0)}};
  inst.graphs = {g};
  inst.validate();
  std::vector<MicpPath> missing{{{1}}};
  CHECK_THROWS_AS(micp_cost(inst, missing), Error);
}

TEST_CASE("dike_to_micp embeds tiny1 with k = 1 and cost 6 on the optimal paths") {
  Instance inst = tiny1();
  MicpInstance micp = dike_to_micp(inst);
  micp.validate();
  REQUIRE(micp.graphs.size() == 2);
  CHECK(micp.graphs[0].k == 1);
  CHECK(micp.graphs[0].partitionSize == 2);
  CHECK(micp.graphs[1].partitionSize == 2);

  HeightPlan plan = zero_plan(inst);
  plan.segment[0][1] = 1;
  CHECK(micp_cost(micp, embed_plan(plan)) == Rational(6));

  // All-zero instance: every embedded cost is 0.
  Instance zeros(2, {"d0"}, {Rational(0), Rational(1)}, {Rational(0), Rational(1)});
  zeros.fillAllTables(Money(0));
  MicpInstance zeroMicp = dike_to_micp(zeros);
  for (const HeightPlan& p : all_plans(zeros)) CHECK(micp_cost(zeroMicp, embed_plan(p)) == 0);
}

TEST_CASE("embedding matches evaluate_plan exhaustively on the small family") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    GenDims dims{1 + static_cast<int>(seed % 3), static_cast<int>(seed % 3),
                 1 + static_cast<int>((seed / 2) % 3), 1 + static_cast<int>((seed / 5) % 3)};
    Instance inst = gen_instance(seed, dims, InstanceFamily::random);
    MicpInstance micp = dike_to_micp(inst);
    micp.validate();
    for (const HeightPlan& plan : all_plans(inst))
      CHECK(micp_cost(micp, embed_plan(plan)) == evaluate_plan(inst, plan));
  }
}

TEST_CASE("solve_micp_bf equals solve_bf through the embedding") {
  for (std::uint64_t seed = 100; seed < 120; ++seed) {
    GenDims dims{2, 1 + static_cast<int>(seed % 2), 2 + static_cast<int>(seed % 2), 2};
    Instance inst = gen_instance(seed, dims, InstanceFamily::random);
    MicpInstance micp = dike_to_micp(inst);
    MicpSolveResult viaMicp = solve_micp_bf(micp);
    SolveResult direct = solve_bf(inst);
    CHECK(viaMicp.cost == direct.optimum);
    // Serial and parallel sweeps agree.
    MicpSolveResult parallel = solve_micp_bf(micp, {ExecutionMode::parallel, 10'000'000});
    CHECK(parallel.cost == viaMicp.cost);
    CHECK(parallel.paths == viaMicp.paths);
  }
}

TEST_CASE("micp_cost scales linearly when all costs double") {
  Instance inst = gen_instance(7, {2, 1, 2, 2}, InstanceFamily::random);
  MicpInstance micp = dike_to_micp(inst);
  MicpInstance doubled = micp;
  for (auto& g : doubled.graphs)
    for (auto& layer : g.arcs)
      for (auto& arc : layer) arc.cost *= 2;
  for (auto& coupling : doubled.couplings)
    for (auto& layer : coupling.m)
      for (auto& row : layer)
        for (auto& v : row) v *= 2;
  for (const HeightPlan& plan : all_plans(inst)) {
    auto paths = embed_plan(plan);
    CHECK(micp_cost(doubled, paths) == 2 * micp_cost(micp, paths));
  }
}

TEST_CASE("knapsack reduction on hand-checkable examples") {
  SUBCASE("both items fit: profit 7") {
    std::vector<KnapsackItem> items{{2, Rational(3)}, {3, Rational(4)}};
    KnapsackReduction red = knapsack_to_dike(items, 5, 1);
    REQUIRE(validate_instance(red.instance).valid());
    SolveResult opt = solve_dp(red.instance);
    CHECK(red.offset - opt.optimum == Rational(7));
  }
  SUBCASE("zero-profit single item: profit 0") {
    std::vector<KnapsackItem> items{{1, Rational(0)}};
    KnapsackReduction red = knapsack_to_dike(items, 1, 1);
    SolveResult opt = solve_dp(red.instance);
    CHECK(red.offset - opt.optimum == Rational(0));
  }
  SUBCASE("only one of two heavy items fits: profit 5") {
    std::vector<KnapsackItem> items{{3, Rational(5)}, {3, Rational(5)}};
    KnapsackReduction red = knapsack_to_dike(items, 3, 1);
    SolveResult opt = solve_dp(red.instance);
    CHECK(red.offset - opt.optimum == Rational(5));
  }
}

TEST_CASE("knapsack reduction is sound on random bounded instances") {
  SplitMix64 rng(4242);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(5));
    const int copies = 1 + static_cast<int>(rng.below(2));
    const std::int64_t capacity = 1 + static_cast<std::int64_t>(rng.below(12));
    std::vector<KnapsackItem> items;
    for (int i = 0; i < n; ++i)
      items.push_back({1 + static_cast<std::int64_t>(rng.below(6)),
                       quarter(rng.below(40))});
    KnapsackReduction red = knapsack_to_dike(items, capacity, copies);
    REQUIRE(validate_instance(red.instance).valid());
    SolveResult opt = solve_dp(red.instance);
    CHECK(red.offset - opt.optimum == knapsack_oracle(items, capacity, copies));
  }
}

TEST_CASE("knapsack reduction rejects oversized height sets") {
  std::vector<KnapsackItem> items{{1000, Rational(1)}};
  CHECK_THROWS_AS(knapsack_to_dike(items, 5000, 1, 64), Error);
}

TEST_CASE("MICP files round trip") {
  Instance inst = gen_instance(9, {2, 2, 2, 2}, InstanceFamily::random);
  MicpInstance micp = dike_to_micp(inst);
  std::string json = micp_to_json(micp);
  std::istringstream in(json);
  MicpInstance back = read_micp(in);
  CHECK(back == micp);
  CHECK(micp_to_json(back) == json);
}

TEST_SUITE_END();
