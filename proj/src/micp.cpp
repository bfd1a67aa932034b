#include "dikeopt/micp.hpp"

#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "dikeopt/error.hpp"

namespace dikeopt {

int LayeredGraph::arcIndex(int layer, int from, int to) const {
  const auto& list = arcs[static_cast<size_t>(layer)];
  auto it = std::lower_bound(list.begin(), list.end(), std::pair<int, int>{from, to},
                             [](const LayeredArc& a, const std::pair<int, int>& key) {
                               return std::pair<int, int>{a.from, a.to} < key;
                             });
  if (it == list.end() || it->from != from || it->to != to) return -1;
  return static_cast<int>(it - list.begin());
}

void LayeredGraph::validate() const {
  if (k < 1) fail(ErrorCode::InvalidInstance, "layered graph needs at least one internal layer");
  if (partitionSize < 1) fail(ErrorCode::InvalidInstance, "partition size must be positive");
  if (static_cast<int>(arcs.size()) != k + 1)
    fail(ErrorCode::InvalidInstance, "layered graph needs k+1 arc layers");
  for (int layer = 0; layer <= k; ++layer) {
    const auto& list = arcs[static_cast<size_t>(layer)];
    for (size_t a = 0; a < list.size(); ++a) {
      const LayeredArc& arc = list[a];
      if (arc.from < 0 || arc.from >= layerSize(layer) || arc.to < 0 ||
          arc.to >= layerSize(layer + 1))
        fail(ErrorCode::InvalidInstance, "arc endpoint outside its layer");
      if (arc.cost < 0) fail(ErrorCode::InvalidInstance, "arc costs must be non-negative");
      if (a > 0 && !(std::pair{list[a - 1].from, list[a - 1].to} < std::pair{arc.from, arc.to}))
        fail(ErrorCode::InvalidInstance, "arcs must be sorted and duplicate-free");
    }
  }
}

void MicpInstance::validate() const {
  if (graphs.empty()) fail(ErrorCode::InvalidInstance, "at least the first graph is required");
  const int k = graphs[0].k;
  for (const auto& g : graphs) {
    g.validate();
    if (g.k != k) fail(ErrorCode::InvalidInstance, "all graphs must share the same layer count");
  }
  if (couplings.size() != graphs.size() - 1)
    fail(ErrorCode::InvalidInstance, "one coupling block per follower graph expected");
  for (size_t j = 0; j < couplings.size(); ++j) {
    const auto& m = couplings[j].m;
    if (static_cast<int>(m.size()) != k)
      fail(ErrorCode::InvalidInstance, "coupling needs one layer entry per internal layer");
    for (int i = 1; i <= k; ++i) {
      const auto& byVertex = m[static_cast<size_t>(i - 1)];
      if (static_cast<int>(byVertex.size()) != graphs[j + 1].partitionSize)
        fail(ErrorCode::InvalidInstance, "coupling vertex dimension mismatch");
      for (const auto& byArc : byVertex) {
        if (byArc.size() != graphs[0].arcs[static_cast<size_t>(i - 1)].size())
          fail(ErrorCode::InvalidInstance, "coupling arc dimension mismatch");
        for (const auto& v : byArc)
          if (v < 0) fail(ErrorCode::InvalidInstance, "coupling values must be non-negative");
      }
    }
  }
}

namespace {

// Arc sequence of a path: (v_{i-1} -> v_i) for i = 1..k+1 with v_0 = 0 and
// v_{k+1} = 0. Returns arc indices per layer; throws NotAPath on a miss.
std::vector<int> path_arcs(const LayeredGraph& g, const MicpPath& path) {
  if (static_cast<int>(path.vertices.size()) != g.k)
    fail(ErrorCode::NotAPath, "path must list one vertex per internal layer");
  std::vector<int> arcs(static_cast<size_t>(g.k) + 1);
  int prev = 0;
  for (int i = 0; i <= g.k; ++i) {
    const int next = i == g.k ? 0 : path.vertices[static_cast<size_t>(i)];
    const int idx = g.arcIndex(i, prev, next);
    if (idx < 0)
      fail(ErrorCode::NotAPath, "missing arc in layer " + std::to_string(i) + " from vertex " +
                                    std::to_string(prev) + " to " + std::to_string(next));
    arcs[static_cast<size_t>(i)] = idx;
    prev = next;
  }
  return arcs;
}

}  // namespace

Rational micp_cost(const MicpInstance& inst, std::span<const MicpPath> paths) {
  if (paths.size() != inst.graphs.size())
    fail(ErrorCode::NotAPath, "one path per graph expected");
  const int k = inst.graphs[0].k;

  Rational total = 0;
  std::vector<int> firstArcs = path_arcs(inst.graphs[0], paths[0]);
  for (size_t j = 0; j < inst.graphs.size(); ++j) {
    std::vector<int> arcs = j == 0 ? firstArcs : path_arcs(inst.graphs[j], paths[j]);
    for (int i = 0; i <= k; ++i)
      total += inst.graphs[j].arcs[static_cast<size_t>(i)][static_cast<size_t>(arcs[static_cast<size_t>(i)])].cost;
    if (j > 0) {
      const MicpCoupling& coupling = inst.couplings[j - 1];
      for (int i = 1; i <= k; ++i) {
        const int v = paths[j].vertices[static_cast<size_t>(i - 1)];
        total += coupling.m[static_cast<size_t>(i - 1)][static_cast<size_t>(v)]
                           [static_cast<size_t>(firstArcs[static_cast<size_t>(i - 1)])];
      }
    }
  }
  return total;
}

namespace {

void enumerate_paths(const LayeredGraph& g, int layer, int vertex, MicpPath& current,
                     std::vector<MicpPath>& out) {
  if (layer == g.k) {
    if (g.arcIndex(layer, vertex, 0) >= 0) out.push_back(current);
    return;
  }
  for (const LayeredArc& arc : g.arcs[static_cast<size_t>(layer)]) {
    if (arc.from != vertex) continue;
    current.vertices[static_cast<size_t>(layer)] = arc.to;
    enumerate_paths(g, layer + 1, arc.to, current, out);
  }
}

std::vector<MicpPath> all_paths(const LayeredGraph& g) {
  std::vector<MicpPath> out;
  MicpPath current;
  current.vertices.assign(static_cast<size_t>(g.k), 0);
  enumerate_paths(g, 0, 0, current, out);
  return out;
}

}  // namespace

MicpSolveResult solve_micp_bf(const MicpInstance& inst, const MicpBfOptions& options) {
  inst.validate();

  std::vector<std::vector<MicpPath>> paths;
  mpz_class tuples = 1;
  for (const auto& g : inst.graphs) {
    paths.push_back(all_paths(g));
    if (paths.back().empty())
      fail(ErrorCode::InvalidInstance, "a graph has no source-to-sink path");
    tuples *= mpz_class(static_cast<unsigned long>(paths.back().size()));
  }
  if (tuples > mpz_class(static_cast<unsigned long>(options.tupleCap)))
    fail(ErrorCode::SearchSpaceTooLarge,
         "path tuple count " + tuples.get_str(10) + " exceeds the cap");

  const size_t nGraphs = inst.graphs.size();

  // Best follower combination for a fixed first path, sweeping follower
  // tuples in lexicographic order (first strict improvement wins).
  auto best_for_first = [&](size_t firstIdx) {
    std::vector<MicpPath> tuple(nGraphs);
    tuple[0] = paths[0][firstIdx];
    std::vector<size_t> idx(nGraphs, 0);
    for (size_t j = 1; j < nGraphs; ++j) tuple[j] = paths[j][0];
    MicpSolveResult best{micp_cost(inst, tuple), tuple};
    if (nGraphs == 1) return best;
    while (true) {
      size_t j = nGraphs - 1;
      while (j >= 1) {
        if (++idx[j] < paths[j].size()) break;
        idx[j] = 0;
        --j;
      }
      if (j < 1) break;
      for (size_t l = 1; l < nGraphs; ++l) tuple[l] = paths[l][idx[l]];
      Rational cost = micp_cost(inst, tuple);
      if (cost < best.cost) best = {std::move(cost), tuple};
    }
    return best;
  };

  std::vector<MicpSolveResult> perFirst(paths[0].size());
  const std::int64_t n = static_cast<std::int64_t>(paths[0].size());
  if (options.mode == ExecutionMode::parallel) {
#pragma omp parallel for schedule(dynamic) if (n > 4)
    for (std::int64_t i = 0; i < n; ++i) perFirst[static_cast<size_t>(i)] = best_for_first(static_cast<size_t>(i));
  } else {
    for (std::int64_t i = 0; i < n; ++i) perFirst[static_cast<size_t>(i)] = best_for_first(static_cast<size_t>(i));
  }

  size_t best = 0;
  for (size_t i = 1; i < perFirst.size(); ++i)
    if (perFirst[i].cost < perFirst[best].cost) best = i;
  return perFirst[best];
}

MicpInstance dike_to_micp(const Instance& inst) {
  require_valid(inst);
  const int k = inst.horizon();
  MicpInstance out;

  auto build_graph = [k](int levels, auto&& arcCost) {
    LayeredGraph g;
    g.k = k;
    g.partitionSize = levels;
    g.arcs.resize(static_cast<size_t>(k) + 1);
    for (int h = 0; h < levels; ++h) g.arcs[0].push_back({0, h, arcCost(1, 0, h)});
    for (int layer = 1; layer < k; ++layer)
      for (int h1 = 0; h1 < levels; ++h1)
        for (int h2 = h1; h2 < levels; ++h2)
          g.arcs[static_cast<size_t>(layer)].push_back({h1, h2, arcCost(layer + 1, h1, h2)});
    for (int h = 0; h < levels; ++h) g.arcs[static_cast<size_t>(k)].push_back({h, 0, Rational(0)});
    return g;
  };

  const Money barrierBase = inst.barrierCost(0, 0, 0) + inst.barrierExpDam(0, 0);
  out.graphs.push_back(build_graph(inst.numBarrierLevels(), [&](int t, int h1, int h2) {
    Rational cost = inst.barrierCost(t, h1, h2) + inst.barrierExpDam(t, h2);
    if (t == 1) cost += barrierBase;
    return cost;
  }));

  for (int d = 0; d < inst.numSegments(); ++d) {
    const Money segmentBase = inst.dikeCost(0, d, 0, 0) + inst.dikeExpDam(0, d, 0, 0);
    out.graphs.push_back(build_graph(inst.numDikeLevels(), [&](int t, int h1, int h2) {
      Rational cost = inst.dikeCost(t, d, h1, h2);
      if (t == 1) cost += segmentBase;
      return cost;
    }));

    MicpCoupling coupling;
    coupling.m.resize(static_cast<size_t>(k));
    for (int i = 1; i <= k; ++i) {
      const auto& firstArcs = out.graphs[0].arcs[static_cast<size_t>(i - 1)];
      auto& byVertex = coupling.m[static_cast<size_t>(i - 1)];
      byVertex.assign(static_cast<size_t>(inst.numDikeLevels()),
                      std::vector<Rational>(firstArcs.size(), Rational(0)));
      for (int v = 0; v < inst.numDikeLevels(); ++v)
        for (size_t a = 0; a < firstArcs.size(); ++a)
          byVertex[static_cast<size_t>(v)][a] = inst.dikeExpDam(i, d, v, firstArcs[a].to);
    }
    out.couplings.push_back(std::move(coupling));
  }
  return out;
}

MicpPath profile_to_path(std::span<const int> profile) {
  MicpPath path;
  path.vertices.assign(profile.begin() + 1, profile.end());
  return path;
}

KnapsackReduction knapsack_to_dike(std::span<const KnapsackItem> items, std::int64_t capacity,
                                   int copiesAllowed, int maxLevels) {
  if (items.empty()) fail(ErrorCode::InvalidInstance, "at least one item required");
  if (capacity < 1) fail(ErrorCode::InvalidInstance, "capacity must be >= 1");
  if (copiesAllowed < 1) fail(ErrorCode::InvalidInstance, "copiesAllowed must be >= 1");
  std::int64_t weightSum = 0;
  std::int64_t maxWeight = 0;
  Rational profitSum = 0;
  for (const auto& item : items) {
    if (item.weight < 1) fail(ErrorCode::InvalidInstance, "item weights must be >= 1");
    if (item.profit < 0) fail(ErrorCode::InvalidInstance, "item profits must be >= 0");
    weightSum += item.weight;
    maxWeight = std::max(maxWeight, item.weight);
    profitSum += item.profit;
  }

  const std::int64_t reachable = static_cast<std::int64_t>(copiesAllowed) * weightSum;
  const std::int64_t top = std::min(reachable, capacity + copiesAllowed * maxWeight);
  if (top + 1 > maxLevels)
    fail(ErrorCode::CapacityOverflowsHeightSet,
         "the reduction needs " + std::to_string(top + 1) + " heights, cap is " +
             std::to_string(maxLevels));

  const int T = static_cast<int>(items.size());
  std::vector<Rational> heights;
  for (std::int64_t h = 0; h <= top; ++h) heights.push_back(Rational(static_cast<long>(h)));
  Instance inst(T, {"d0"}, std::move(heights), {Rational(0)});

  Rational offset = 0;
  for (const auto& item : items) offset += copiesAllowed * item.profit;
  const Rational big = 1 + profitSum + offset;

  // Period 0: the pinned stay-at-zero row, everything free.
  const int levels = static_cast<int>(top) + 1;
  for (int h1 = 0; h1 < levels; ++h1)
    for (int h2 = h1; h2 < levels; ++h2) inst.setDikeCost(0, 0, h1, h2, Money(0));
  for (int h = 0; h < levels; ++h) inst.setDikeExpDam(0, 0, h, 0, Money(0));
  inst.setBarrierCost(0, 0, 0, Money(0));
  inst.setBarrierExpDam(0, 0, Money(0));

  for (int t = 1; t <= T; ++t) {
    const KnapsackItem& item = items[static_cast<size_t>(t - 1)];
    const Rational mt = copiesAllowed * item.profit;
    for (int h1 = 0; h1 < levels; ++h1) {
      for (int h2 = h1; h2 < levels; ++h2) {
        const std::int64_t jump = h2 - h1;
        Money cost = big;
        if (h2 <= capacity && jump % item.weight == 0) {
          const std::int64_t copies = jump / item.weight;
          if (copies <= copiesAllowed) cost = mt - copies * item.profit;
        }
        inst.setDikeCost(t, 0, h1, h2, std::move(cost));
      }
    }
    for (int h = 0; h < levels; ++h) inst.setDikeExpDam(t, 0, h, 0, Money(0));
    inst.setBarrierCost(t, 0, 0, Money(0));
    inst.setBarrierExpDam(t, 0, Money(0));
  }

  return {std::move(inst), offset};
}

// --- file format ---

namespace {

using nlohmann::json;

}  // namespace

MicpInstance read_micp(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    fail(ErrorCode::IoError, std::string("MICP JSON parse error: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("k") || !doc.contains("graphs"))
    fail(ErrorCode::IoError, "MICP document needs 'k' and 'graphs'");

  MicpInstance inst;
  const int k = doc["k"].get<int>();
  for (const auto& gdoc : doc["graphs"]) {
    LayeredGraph g;
    g.k = k;
    g.partitionSize = gdoc.at("partition_size").get<int>();
    g.arcs.resize(static_cast<size_t>(k) + 1);
    for (const auto& adoc : gdoc.at("arcs")) {
      const int layer = adoc.at("layer").get<int>();
      if (layer < 0 || layer > k) fail(ErrorCode::IoError, "arc layer out of range");
      g.arcs[static_cast<size_t>(layer)].push_back(
          {adoc.at("from").get<int>(), adoc.at("to").get<int>(),
           parse_rational(adoc.at("cost").get<std::string>())});
    }
    for (auto& list : g.arcs)
      std::sort(list.begin(), list.end(), [](const LayeredArc& a, const LayeredArc& b) {
        return std::pair{a.from, a.to} < std::pair{b.from, b.to};
      });
    inst.graphs.push_back(std::move(g));
  }

  inst.couplings.resize(inst.graphs.size() >= 1 ? inst.graphs.size() - 1 : 0);
  for (size_t j = 1; j < inst.graphs.size(); ++j) {
    auto& m = inst.couplings[j - 1].m;
    m.resize(static_cast<size_t>(k));
    for (int i = 1; i <= k; ++i)
      m[static_cast<size_t>(i - 1)].assign(
          static_cast<size_t>(inst.graphs[j].partitionSize),
          std::vector<Rational>(inst.graphs[0].arcs[static_cast<size_t>(i - 1)].size(),
                                Rational(0)));
  }
  if (doc.contains("couplings")) {
    for (const auto& cdoc : doc["couplings"]) {
      const int graph = cdoc.at("graph").get<int>();  // follower graphs are 2..d+1
      const int layer = cdoc.at("layer").get<int>();  // i in 1..k
      if (graph < 2 || graph > static_cast<int>(inst.graphs.size()))
        fail(ErrorCode::IoError, "coupling graph index out of range");
      if (layer < 1 || layer > k) fail(ErrorCode::IoError, "coupling layer out of range");
      auto& byVertex = inst.couplings[static_cast<size_t>(graph - 2)].m[static_cast<size_t>(layer - 1)];
      for (const auto& [key, value] : cdoc.at("values").items()) {
        std::istringstream keyIn(key);
        std::string vs, fs, ts;
        if (!std::getline(keyIn, vs, ',') || !std::getline(keyIn, fs, ',') ||
            !std::getline(keyIn, ts, ','))
          fail(ErrorCode::IoError, "coupling key '" + key + "' must be v,from,to");
        const int v = std::stoi(vs);
        const int arc = inst.graphs[0].arcIndex(layer - 1, std::stoi(fs), std::stoi(ts));
        if (arc < 0) fail(ErrorCode::IoError, "coupling key '" + key + "' names a missing arc");
        if (v < 0 || v >= static_cast<int>(byVertex.size()))
          fail(ErrorCode::IoError, "coupling key '" + key + "' vertex out of range");
        byVertex[static_cast<size_t>(v)][static_cast<size_t>(arc)] =
            parse_rational(value.get<std::string>());
      }
    }
  }
  inst.validate();
  return inst;
}

MicpInstance read_micp_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::IoError, "cannot open MICP file " + path.string());
  return read_micp(in);
}

std::string micp_to_json(const MicpInstance& inst) {
  json doc;
  doc["k"] = inst.graphs.empty() ? 0 : inst.graphs[0].k;
  json graphs = json::array();
  for (const auto& g : inst.graphs) {
    json gdoc;
    gdoc["partition_size"] = g.partitionSize;
    json arcs = json::array();
    for (int layer = 0; layer <= g.k; ++layer)
      for (const auto& arc : g.arcs[static_cast<size_t>(layer)])
        arcs.push_back({{"layer", layer},
                        {"from", arc.from},
                        {"to", arc.to},
                        {"cost", to_decimal_string(arc.cost)}});
    gdoc["arcs"] = arcs;
    graphs.push_back(gdoc);
  }
  doc["graphs"] = graphs;

  json couplings = json::array();
  for (size_t j = 0; j < inst.couplings.size(); ++j) {
    const auto& m = inst.couplings[j].m;
    for (size_t i = 0; i < m.size(); ++i) {
      json values = json::object();
      for (size_t v = 0; v < m[i].size(); ++v) {
        for (size_t a = 0; a < m[i][v].size(); ++a) {
          if (m[i][v][a] == 0) continue;
          const LayeredArc& arc = inst.graphs[0].arcs[i][a];
          values[std::to_string(v) + "," + std::to_string(arc.from) + "," +
                 std::to_string(arc.to)] = to_decimal_string(m[i][v][a]);
        }
      }
      if (!values.empty())
        couplings.push_back({{"graph", static_cast<int>(j) + 2},
                             {"layer", static_cast<int>(i) + 1},
                             {"values", values}});
    }
  }
  doc["couplings"] = couplings;
  return doc.dump(2) + "\n";
}

void write_micp_file(const MicpInstance& inst, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::IoError, "cannot open " + path.string() + " for writing");
  out << micp_to_json(inst);
  if (!out) fail(ErrorCode::IoError, "write failed for " + path.string());
}

}  // namespace dikeopt
