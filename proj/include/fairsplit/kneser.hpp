#pragma once

// Stable Kneser hypergraphs, exact weak chromatic numbers, and the reduction from
// colorings of path-stable Kneser hypergraphs to almost fair splittings of a path.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fairsplit/composition.hpp"
#include "fairsplit/graph.hpp"

namespace fairsplit {

enum class KneserStability { none, cycle, path };

std::string to_string(KneserStability s);
KneserStability kneser_stability_from_string(const std::string& s);

struct KneserInstance {
  int n = 0;
  int k = 0;
  int q = 2;
  KneserStability stability = KneserStability::none;
};

struct Hypergraph {
  int q = 2;
  int ground = 0;                       // n
  std::vector<VertexSet> vertices;      // k-subsets in colex order
  std::vector<std::vector<int>> edges;  // increasing vertex indices, pairwise disjoint subsets
};

struct Coloring {
  std::vector<int> color;  // colors 1..colors
  int colors = 0;
};

inline constexpr std::int64_t kDefaultColoringBudget = 200'000'000;

Hypergraph build_hypergraph(const KneserInstance& inst, std::size_t edge_budget = 20'000'000);

bool is_proper(const Hypergraph& h, const Coloring& c);

/// ⌈(n - q(k-1)) / (q-1)⌉.
int kneser_formula(int n, int k, int q);

struct ChromaticResult {
  int chi = 0;
  int lower_bound = 0;  // from a pairwise disjoint family
  Coloring witness;
  std::int64_t nodes = 0;
};

/// Exact weak chromatic number by backtracking with forward checking.
ChromaticResult chromatic_number(const Hypergraph& h, std::int64_t node_budget = kDefaultColoringBudget);

/// C(S) = min({j : |S ∩ V_j| >= k_j} ∪ {m+1}); blocks must have sizes q k_j - 1.
Coloring coloring_from_partition(const Hypergraph& h, const VertexPartition& p, const std::vector<int>& ks);

struct RebalanceResult {
  Splitting splitting;  // S̃_1, S_2 in the original set order
  int ell1 = 0, ell2 = 0;
  int removals = 0;
  std::vector<std::string> anomalies;
};

/// The q = 2 successor-vertex rebalancing. `padded` holds S'_1, S'_2 on the path
/// 1..padded_n whose labels beyond `original_n` form the blocks B_j; `pad_block[v]`
/// gives the block index j of padded label v (v > original_n).
RebalanceResult rebalance_q2(int original_n, int padded_n, const VertexPartition& p, const Splitting& padded,
                             const std::vector<int>& pad_block);

struct KneserSplitOptions {
  bool verify_chromatic = false;  // compute χ at the padded size before trusting it
  bool strict = false;            // also demand balance when every |V_j| is q k_j - 1 or q k_j
  std::int64_t node_budget = kDefaultColoringBudget;
  int edge_rank = 0;  // use the r-th top-color hyperedge in index order
};

struct KneserSplitResult {
  int q = 0;
  int padded_n = 0;
  int k = 0;
  std::vector<int> ks, ts;
  std::optional<int> chromatic;  // when verified
  int formula = 0;               // formula value at the padded size, expected m + 2
  bool falsification = false;    // no monochromatic hyperedge in the top color
  Splitting padded;              // S'_i on the padded path
  Splitting splitting;           // final sets on the original path
  std::optional<RebalanceResult> rebalance;
  QuotaCertificate certificate;
  std::vector<std::string> anomalies;
  bool ok() const { return !falsification && anomalies.empty(); }
};

/// Pads, colors, finds a monochromatic hyperedge in color m+1, strips (and rebalances for q = 2).
KneserSplitResult splitting_from_coloring(int path_n, const VertexPartition& p, int q,
                                          const KneserSplitOptions& opt = {});

/// Runs the reduction once per top-color hyperedge, ranks first..first+limit-1.
std::vector<KneserSplitResult> splittings_from_top_edges(int path_n, const VertexPartition& p, int q,
                                                         const KneserSplitOptions& opt, int first, int limit);

/// The reduction as a q = 2 base splitter for composition.
BaseSplitter kneser_base_splitter();

}  // namespace fairsplit
