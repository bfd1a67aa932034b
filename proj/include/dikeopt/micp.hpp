#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "dikeopt/instance.hpp"
#include "dikeopt/parallel.hpp"

namespace dikeopt {

// k-layered graph: singleton source layer V_0, k internal layers of equal
// size, singleton sink layer V_{k+1}; arcs only between consecutive layers.
struct LayeredArc {
  int from = 0;  // vertex index within the tail layer
  int to = 0;    // vertex index within the head layer
  Rational cost;

  bool operator==(const LayeredArc&) const = default;
};

struct LayeredGraph {
  int k = 0;
  int partitionSize = 0;
  // arcs[i] go from layer i to layer i+1 for i = 0..k. Kept sorted by
  // (from, to); no parallel arcs.
  std::vector<std::vector<LayeredArc>> arcs;

  int layerSize(int layer) const {
    return (layer == 0 || layer == k + 1) ? 1 : partitionSize;
  }
  // Index of the arc (from, to) within arcs[layer], or -1.
  int arcIndex(int layer, int from, int to) const;

  void validate() const;  // throws Error(InvalidInstance)

  bool operator==(const LayeredGraph&) const = default;
};

// A source-to-sink path, stored as its internal-layer vertices v_1..v_k.
struct MicpPath {
  std::vector<int> vertices;

  bool operator==(const MicpPath&) const = default;
};

// Couplings of one follower graph j >= 2 against the first graph:
// m[i-1][v][a] charges vertex v of layer i against arc a of the first
// graph's layer i-1 (the arc entering the first graph's layer i).
struct MicpCoupling {
  std::vector<std::vector<std::vector<Rational>>> m;

  bool operator==(const MicpCoupling&) const = default;
};

struct MicpInstance {
  std::vector<LayeredGraph> graphs;    // graphs[0] is the first graph
  std::vector<MicpCoupling> couplings;  // couplings[j-1] belongs to graphs[j]

  void validate() const;  // throws Error(InvalidInstance)

  bool operator==(const MicpInstance&) const = default;
};

// Exact cost of a path tuple: all arc costs plus the coupling charges of
// every follower vertex against the first path's arcs. Throws
// Error(NotAPath) when a tuple entry uses a missing arc.
Rational micp_cost(const MicpInstance& inst, std::span<const MicpPath> paths);

struct MicpBfOptions {
  ExecutionMode mode = ExecutionMode::serial;
  std::uint64_t tupleCap = 10'000'000;
};

struct MicpSolveResult {
  Rational cost;
  std::vector<MicpPath> paths;
};

// Exhaustive minimum over all path tuples, first graph's path outermost;
// ties resolve to the lexicographically smallest vertex sequences. Throws
// Error(SearchSpaceTooLarge) beyond the cap.
MicpSolveResult solve_micp_bf(const MicpInstance& inst, const MicpBfOptions& options = {});

// The heightening problem as an MICP: the barrier is the first graph, each
// segment a follower, k = T, and couplings carge the segment's height
// against the barrier arc's head height (they depend on vertices only).
// Period-0 terms ride on the layer-0 arcs. For every plan,
// micp_cost(embedded paths) equals evaluate_plan exactly.
MicpInstance dike_to_micp(const Instance& inst);

// Embeds a monotone height profile (period 0 at height 0) as a path.
MicpPath profile_to_path(std::span<const int> profile);

struct KnapsackItem {
  std::int64_t weight = 1;       // >= 1
  Rational profit;               // >= 0
};

struct KnapsackReduction {
  Instance instance;
  Rational offset;  // knapsack maximum = offset - dike optimum
};

// Bounded knapsack as a one-dike, fixed-barrier instance: period t's height
// jump k*w_t adds k copies of item t; legal jumps cost M_t - k*profit_t with
// M_t = copies*profit_t, over-capacity or off-grid jumps carry a
// prohibitive cost. Throws Error(CapacityOverflowsHeightSet) when the
// needed height set exceeds maxLevels.
KnapsackReduction knapsack_to_dike(std::span<const KnapsackItem> items, std::int64_t capacity,
                                   int copiesAllowed, int maxLevels = 4096);

// --- MICP file format (JSON, mirroring the instance format) ---

MicpInstance read_micp(std::istream& in);
MicpInstance read_micp_file(const std::filesystem::path& path);
std::string micp_to_json(const MicpInstance& inst);
void write_micp_file(const MicpInstance& inst, const std::filesystem::path& path);

}  // namespace dikeopt
