#pragma once

// Finite simplicial complexes stored by their facets. Vertices carry arbitrary
// JSON tags (plain labels, [copy, label] pairs, faces of a subdivided complex);
// faces are sorted lists of vertex indices into the tag table.

#include <cstddef>
#include <vector>

#include <json.hpp>

#include "fairsplit/graph.hpp"

namespace fairsplit {

using VertexTag = nlohmann::json;
using Face = std::vector<int>;

inline constexpr std::size_t kDefaultFaceBudget = 10'000'000;

class SimplicialComplex {
 public:
  /// The void complex (no faces at all).
  SimplicialComplex() = default;
  /// Facets are sorted; duplicates and non-maximal sets are dropped.
  SimplicialComplex(std::vector<VertexTag> tags, std::vector<Face> facets);

  /// Full simplex on labels 1..n (n = 0 gives {∅}).
  static SimplicialComplex simplex(int n);
  /// Complex on labels 1..n with facets given by label.
  static SimplicialComplex from_labels(int n, const std::vector<std::vector<int>>& facets);

  int vertex_count() const { return static_cast<int>(tags_.size()); }
  const std::vector<VertexTag>& tags() const { return tags_; }
  const std::vector<Face>& facets() const { return facets_; }
  bool is_void() const { return facets_.empty(); }
  /// Largest face dimension; -1 for {∅} and for the void complex.
  int dimension() const;
  bool contains(const Face& face) const;
  /// Index of a tag, or -1.
  int index_of(const VertexTag& tag) const;

  /// Every face including ∅, ordered by size then lexicographically.
  std::vector<Face> faces(std::size_t budget = kDefaultFaceBudget) const;
  /// f[s] = number of faces with s vertices (f[0] = 1 for ∅).
  std::vector<long long> f_vector(std::size_t budget = kDefaultFaceBudget) const;
  /// Sum over nonempty faces of (-1)^dim.
  long long euler_characteristic(std::size_t budget = kDefaultFaceBudget) const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::vector<VertexTag> tags_;
  std::vector<Face> facets_;
};

/// (σ_1, ..., σ_q): one face per copy; in a deleted join the σ_i are pairwise disjoint.
struct JoinedFace {
  std::vector<Face> slots;
  friend bool operator==(const JoinedFace&, const JoinedFace&) = default;
  friend auto operator<=>(const JoinedFace&, const JoinedFace&) = default;
};

/// Strictly increasing chain of nonempty faces (a face of the barycentric subdivision).
struct BarycentricChain {
  std::vector<Face> chain;
  /// Throws InputError unless the chain is strictly increasing and every element nonempty.
  void validate() const;
};

SimplicialComplex independence_complex(const Graph& g);
SimplicialComplex skeleton(const SimplicialComplex& k, int dim);
/// Vertices are re-tagged [0, tag] for K and [1, tag] for L.
SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l);
/// q-fold deleted join; vertices tagged [copy, tag] with copy in 1..q.
SimplicialComplex deleted_join(const SimplicialComplex& k, int q,
                               std::size_t budget = kDefaultFaceBudget);
/// All q-tuples of pairwise disjoint faces of k (the faces of the deleted join).
std::vector<JoinedFace> deleted_join_faces(const SimplicialComplex& k, int q,
                                           std::size_t budget = kDefaultFaceBudget);
/// Vertices are the nonempty faces of k (tagged by the list of their tags); facets are maximal chains.
SimplicialComplex barycentric_subdivision(const SimplicialComplex& k,
                                         std::size_t budget = kDefaultFaceBudget);
/// Join over j of the (k_j - 1)-skeleton of a (2 k_j)-simplex, on consecutive labels.
SimplicialComplex sarkaria_complex(const std::vector<int>& ks);
/// Faces σ of the full simplex on the partition's ground set with |σ ∩ V_j| <= caps[j].
SimplicialComplex constraint_subcomplex(const VertexPartition& p, const std::vector<int>& caps);
/// Faces common to both complexes, matching vertices by tag. Tags follow `k`.
SimplicialComplex intersection(const SimplicialComplex& k, const SimplicialComplex& l);

}  // namespace fairsplit
