#pragma once

// Exact backtracking search for splittings by q faces of a host complex.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fairsplit/complex.hpp"
#include "fairsplit/geometry.hpp"
#include "fairsplit/graph.hpp"

namespace fairsplit {

enum class SearchMode { combinatorial, geometric };
enum class SearchStatus { found, exhausted_none, budget_exceeded };

std::string to_string(SearchMode m);
std::string to_string(SearchStatus s);

inline constexpr std::int64_t kDefaultNodeBudget = 200'000'000;

struct SearchProblem {
  // Exactly one host: a graph (faces = independent sets) or a complex on labels 1..N.
  std::optional<Graph> graph;
  std::optional<SimplicialComplex> complex;
  VertexPartition partition;
  SplittingSpec spec;
  SearchMode mode = SearchMode::combinatorial;
  PointConfiguration points;  // geometric mode: point of label v is points.points[v-1]
  /// Replace the quotas by "every S_i meets every V_j" and drop the leftover cap.
  bool transversal = false;
  std::int64_t node_budget = kDefaultNodeBudget;
  int threads = 1;

  static SearchProblem on_graph(Graph g, VertexPartition p, SplittingSpec spec);
  static SearchProblem on_complex(SimplicialComplex k, VertexPartition p, SplittingSpec spec);

  int vertex_count() const { return partition.vertex_count(); }
  bool is_face(VertexSet s) const;
  void validate() const;
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::exhausted_none;
  std::optional<Splitting> splitting;
  std::optional<QuotaCertificate> certificate;
  std::int64_t nodes = 0;
  double elapsed_seconds = 0;  // informational; never serialized
};

/// Per-block (k_j, t_j) with |V_j| = q k_j - t_j, 1 <= t_j <= q, k_j >= min(2, t_j).
struct BlockShape {
  int k = 0;
  int t = 0;
};
BlockShape block_shape(int block_size, int q);

/// True iff the family meets every requirement of the problem (re-derived from scratch).
bool satisfies_problem(const SearchProblem& problem, const Splitting& sp);

SearchOutcome find_splitting(const SearchProblem& problem);
SearchOutcome find_transversal_splitting(const Graph& g, const VertexPartition& p, int q,
                                         std::int64_t node_budget = kDefaultNodeBudget, int threads = 1);
SearchOutcome find_geometric_splitting(const SearchProblem& problem);

/// Up to `limit` solutions, canonical and sorted. Throws ResourceError past the node budget.
std::vector<Splitting> enumerate_splittings(const SearchProblem& problem, std::size_t limit);

struct BruteForceResult {
  bool exists = false;
  std::vector<Splitting> solutions;  // distinct canonical families, sorted
  std::int64_t tuples = 0;
};

/// Naive oracle: loops over every q-tuple of pairwise disjoint faces of the host.
BruteForceResult brute_force_splittings(const SearchProblem& problem,
                                        std::int64_t tuple_budget = 500'000'000);

/// Sort key used for canonical solution lists.
bool splitting_less(const Splitting& a, const Splitting& b);

}  // namespace fairsplit
