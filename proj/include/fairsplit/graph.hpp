#pragma once

// Graphs on labels 1..N, vertex partitions, splitting definitions and the
// certificate that checks a candidate splitting against them.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fairsplit/vertex_set.hpp"

namespace fairsplit {

using Edge = std::pair<int, int>;

/// Simple undirected graph on labels 1..N (N <= 64). Immutable after construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);
  Graph(int vertex_count, const std::vector<Edge>& edges);

  int vertex_count() const { return n_; }
  VertexSet vertices() const { return VertexSet::range(n_); }
  bool adjacent(int u, int v) const;
  VertexSet neighbors(int v) const;
  /// Vertices at distance exactly two from v.
  VertexSet second_neighbors(int v) const;
  int degree(int v) const { return neighbors(v).size(); }
  int max_degree() const;
  int edge_count() const;
  /// Edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  Graph with_edges(const std::vector<Edge>& extra) const;
  Graph without_edges(const std::vector<Edge>& removed) const;
  Graph relabeled(const std::vector<int>& new_label_of) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_label(int v) const;

  int n_ = 0;
  std::vector<VertexSet> adj_;  // adj_[v-1]
};

/// Ordered blocks V_1..V_m that partition 1..N; blocks are nonempty.
class VertexPartition {
 public:
  VertexPartition() = default;
  VertexPartition(int vertex_count, std::vector<VertexSet> blocks);

  /// Single block holding every vertex.
  static VertexPartition whole(int vertex_count);
  /// Consecutive label intervals of the given sizes.
  static VertexPartition intervals(const std::vector<int>& sizes);
  /// Block index (0-based) per vertex given as a list indexed by label-1.
  static VertexPartition from_block_ids(const std::vector<int>& block_of);

  int vertex_count() const { return n_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const std::vector<VertexSet>& blocks() const { return blocks_; }
  VertexSet block(int j) const { return blocks_[j]; }
  int block_size(int j) const { return blocks_[j].size(); }
  /// 0-based index of the block containing v.
  int block_of(int v) const { return block_of_[v - 1]; }

  friend bool operator==(const VertexPartition&, const VertexPartition&) = default;

 private:
  int n_ = 0;
  std::vector<VertexSet> blocks_;
  std::vector<int> block_of_;
};

enum class Flavor { fair, almost_fair };

struct SplittingSpec {
  int q = 2;
  Flavor flavor = Flavor::almost_fair;
  bool balanced = false;
  /// Every S_i must be s-stable along the label order (s = 1 imposes nothing).
  int stability = 1;
  bool weak_stability = false;
  /// When |V_j| = q k_j - 1, demand |S_i ∩ V_j| = k_j - 1 exactly.
  bool strict = false;

  void validate() const;
};

struct Splitting {
  std::vector<VertexSet> sets;

  int q() const { return static_cast<int>(sets.size()); }
  VertexSet covered() const;
  /// Sets reordered by smallest label with empty sets last.
  Splitting canonical() const;
  friend bool operator==(const Splitting&, const Splitting&) = default;
};

enum class WeakStability { stable, not_stable, not_applicable };

std::string to_string(WeakStability w);

/// Recomputed (never cached) verdict of a splitting against a spec.
struct QuotaCertificate {
  int q = 0;
  std::vector<std::vector<int>> counts;  // counts[i][j] = |S_i ∩ V_j|
  std::vector<int> block_sizes;
  std::vector<int> fair_quota;    // floor(|V_j| / q)
  std::vector<int> almost_quota;  // floor((|V_j| + 1) / q) - 1, clamped at 0
  std::vector<int> leftover;      // |V_j \ ∪ S_i|
  std::vector<int> set_sizes;
  bool disjoint_ok = true;
  bool faces_ok = true;  // every S_i independent (or a face of the host complex)
  bool fair_ok = false;
  bool almost_fair_ok = false;
  bool balanced_ok = false;
  bool stability_ok = true;
  WeakStability weak = WeakStability::not_applicable;
  bool weak_stability_ok = true;
  bool strict_ok = true;

  /// True iff every flag demanded by `spec` holds.
  bool satisfies(const SplittingSpec& spec) const;
};

int fair_quota(int block_size, int q);
int almost_fair_quota(int block_size, int q);

bool is_independent(const Graph& g, VertexSet s);

/// Certificate for `sp` against `spec`, with the face test being independence in g.
QuotaCertificate check_splitting(const Graph& g, const VertexPartition& p, const Splitting& sp,
                                 const SplittingSpec& spec);

/// Certificate with a caller-provided face verdict per set (used for complex hosts).
QuotaCertificate certify(const VertexPartition& p, const Splitting& sp, const SplittingSpec& spec,
                         const std::vector<bool>& set_is_face);

/// All distinct labels at least q apart (labels must lie in 1..n).
bool is_q_stable(VertexSet labels, int q, int n);

/// Weak q-stability of a family of q disjoint sets after order-preserving relabeling.
WeakStability is_weakly_q_stable(const std::vector<VertexSet>& family, int n_host);

struct DegreeProfile {
  int neighbors = 0;
  int second_neighbors = 0;
  friend bool operator==(const DegreeProfile&, const DegreeProfile&) = default;
};

DegreeProfile degree_profile(const Graph& g, int v);

namespace family {
Graph cycle(int n);
Graph path(int n);
/// Edges between labels at distance <= r.
Graph power_path(int n, int r);
/// n cliques of size q-1 followed by one isolated vertex; (q-1)n+1 vertices.
Graph cliques_plus_isolated(int n, int q);
/// Path 1-2-...-N on N = (q-1)n+1 vertices edge-disjointly united with n cliques of size q-1.
Graph path_union_cliques(int n, int q);
/// Path 1..n plus two triangles on {1,2,3} and {n-2,n-1,n}.
Graph path_with_two_triangles(int n);
}  // namespace family

/// Dispatch by family name: cycle(n), path(n), power_path(n, r), cliques_plus_isolated(n, q),
/// path_union_cliques(n, q), path_with_two_triangles(n).
Graph generate_family(const std::string& kind, const std::vector<int>& params);

}  // namespace fairsplit
