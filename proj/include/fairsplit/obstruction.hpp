#pragma once

// Graph-theoretic hypotheses under which equivariant maps are known not to exist,
// and reduced integral homology of small complexes via Smith normal form.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fairsplit/complex.hpp"
#include "fairsplit/graph.hpp"

namespace fairsplit {

bool is_prime(int q);
bool is_prime_power(int q);

/// 2 N(v) + N²(v): neighbors plus vertices at distance exactly two.
int engstrom_value(const Graph& g, int v);

struct Verdict {
  bool holds = false;
  std::string witness;  // reason for a failure, or what made it hold
};

struct EngstromFragment {
  Verdict verdict;
  int worst_vertex = 0;  // 0 on the empty graph
  int worst_value = 0;
};

/// Every vertex has 2N(v)+N²(v) < q and |V| >= (q-1)n+1.
EngstromFragment check_engstrom(const Graph& g, int q, int n);

inline constexpr std::int64_t kDefaultPathBudget = 10'000'000;

struct PathDeletion {
  Verdict verdict;
  std::optional<std::vector<int>> path;  // vertex sequence whose edges were deleted; empty = no edges
  std::int64_t paths_tried = 0;
};

/// Prime power q, |V_j| >= q-1, |V| >= (q-1)(m+2)+1, and a simple path whose deletion
/// leaves every vertex below the degree bound. Searches paths unless one is supplied.
PathDeletion check_corollary_a(const Graph& g, const VertexPartition& p, int q,
                               const std::optional<std::vector<int>>& path = std::nullopt,
                               std::int64_t budget = kDefaultPathBudget);

/// Disjoint union of n cliques of size q-1 plus one isolated vertex, q prime, n >= 1.
Verdict check_bmz_structure(const Graph& g, int q);
/// A path on (q-1)n+1 vertices, n >= 1, q >= 4 a prime power.
Verdict check_hell_path(const Graph& g, int q);
/// q prime, |V_j| >= q-1, and a simple path whose deletion leaves the clique structure
/// on (q-1)n+1 vertices with n >= m+1.
PathDeletion check_corollary_b(const Graph& g, const VertexPartition& p, int q,
                               std::int64_t budget = kDefaultPathBudget);
/// Prime power q, 2N(v)+N²(v) < q everywhere, every |V_j| >= 2q-1.
Verdict check_transversal_bound(const Graph& g, const VertexPartition& p, int q);

struct ConditionReport {
  int q = 0;
  int n = 0;  // requested n for the Engström size gate
  int structure_n = 0;  // (|V|-1)/(q-1) when integral, else 0
  bool q_prime = false;
  bool q_prime_power = false;
  EngstromFragment engstrom;
  Verdict bmz_structure;
  Verdict hell_path;
  PathDeletion corollary_a;
  PathDeletion corollary_b;
  Verdict transversal_bound;

  /// Hypotheses that promise an almost fair splitting by q independent sets.
  bool implies_splitting() const { return corollary_a.verdict.holds || corollary_b.verdict.holds; }
};

/// n defaults to m+2.
ConditionReport check_conditions(const Graph& g, const VertexPartition& p, int q, std::optional<int> n = std::nullopt,
                                 std::int64_t path_budget = kDefaultPathBudget);

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Augmented simplicial chain complex: boundaries[d] maps d-faces to (d-1)-faces,
/// d = 0 being the augmentation onto ∅.
struct ChainComplexData {
  std::vector<std::size_t> ranks;  // ranks[d+1] = number of d-faces, d >= -1
  std::vector<IntMatrix> boundaries;  // boundaries[d] has ranks[d] rows and ranks[d+1] columns
  /// ∂_{d} ∘ ∂_{d+1} = 0 for all d.
  bool composes_to_zero() const;
};

ChainComplexData chain_complex(const SimplicialComplex& k, std::size_t face_budget = kDefaultFaceBudget);

/// Diagonal of the Smith normal form (nonzero invariant factors, ascending divisibility).
std::vector<std::int64_t> smith_diagonal(IntMatrix m);

struct HomologyGroup {
  int dim = 0;
  std::int64_t betti = 0;
  std::vector<std::int64_t> torsion;  // invariant factors > 1
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// Reduced homology H̃_d for d = -1..max_dim.
std::vector<HomologyGroup> reduced_homology(const SimplicialComplex& k, int max_dim,
                                            std::size_t face_budget = kDefaultFaceBudget);

}  // namespace fairsplit
