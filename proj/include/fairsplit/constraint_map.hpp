#pragma once

// The equivariant constraint map Φ on the barycentric subdivision of the q-fold
// deleted join of a simplex on qk - t vertices, with exact verification of its
// zero set and of S_q-equivariance.
//
// Joined faces here carry simplex labels 1..qk-t in their slots. Internally a
// joined face is encoded as Σ_v slot(v) * (q+1)^(v-1), slot 0 meaning unused.

#include <cstdint>
#include <string>
#include <vector>

#include "fairsplit/complex.hpp"
#include "fairsplit/lp.hpp"

namespace fairsplit {

struct SigmaMembership {
  bool member = false;
  std::string witness;  // failed condition, empty when member
};

SigmaMembership sigma_member(const JoinedFace& face, int q, int k, int t);

/// Orthogonal projection along the diagonal: x - mean(x).
std::vector<Rational> project_to_wq(const std::vector<Rational>& x);

class PhiInstance {
 public:
  /// Empty vertex_order means 1..qk-t.
  static PhiInstance build(int q, int k, int t, std::vector<int> vertex_order = {});

  int q() const { return q_; }
  int k() const { return k_; }
  int t() const { return t_; }
  int vertex_count() const { return n_; }
  const std::vector<int>& vertex_order() const { return order_; }

  /// (q+1)^(qk-t): every joined face including the empty one.
  std::uint64_t code_count() const { return pow_.back(); }
  std::uint64_t encode(const JoinedFace& face) const;
  JoinedFace decode(std::uint64_t code) const;
  /// Slot sizes, or an empty vector if `code` is out of range.
  std::vector<int> slot_sizes(std::uint64_t code) const;
  bool in_sigma(std::uint64_t code) const;
  /// Bit j set when Φ gives weight to e_{j+1}; 0 on Σ. A single bit except when the
  /// lowest-dimensional slots are all empty, in which case Φ averages over them.
  std::uint32_t direction_mask(std::uint64_t code) const;
  /// Φ at the barycentric vertex of `face`, projected onto W_q.
  std::vector<Rational> assignment(const JoinedFace& face) const;
  std::vector<Rational> assignment_of_code(std::uint64_t code) const;

 private:
  int q_ = 0, k_ = 0, t_ = 0, n_ = 0;
  std::vector<int> order_;
  std::vector<int> rank_;  // rank_[v-1] = position of v in order_
  std::vector<std::uint64_t> pow_;
};

/// Value of the mask's averaged basis vector after projection.
std::vector<Rational> direction_vector(std::uint32_t mask, int q);

/// Φ at the point Σ coords[i] * (barycenter of chain[i]). Chain must increase strictly
/// slot-wise; coordinates nonnegative summing to 1.
std::vector<Rational> evaluate_phi(const PhiInstance& inst, const std::vector<JoinedFace>& chain,
                                   const std::vector<Rational>& coords);

struct ZeroSetReport {
  int q = 0, k = 0, t = 0;
  std::uint64_t faces = 0;       // nonempty joined faces (barycentric vertices)
  std::uint64_t sigma_faces = 0;  // nonempty faces in Σ
  std::uint64_t chains_checked = 0;
  bool sigma_downward_closed = true;
  bool sigma_size_bound = true;  // |∪σ_i| <= q(k-1)-t+1 on Σ
  bool every_vertex_assigned = true;
  std::vector<std::string> violations;  // sorted
  bool ok() const {
    return violations.empty() && sigma_downward_closed && sigma_size_bound && every_vertex_assigned;
  }
};

/// Mask-union dynamic program over the face poset, with an LP check of saturated
/// chains whenever the union of directions along a chain covers all of 1..q.
ZeroSetReport verify_zero_set(const PhiInstance& inst, std::uint64_t chain_budget = 10'000'000);
/// Enumerates every chain of non-Σ faces and decides 0 ∈ relint by exact LP. Tiny instances only.
ZeroSetReport verify_zero_set_literal(const PhiInstance& inst, std::uint64_t chain_budget = 2'000'000);

struct EquivarianceReport {
  int q = 0;
  bool generators_only = false;  // true when only (1 2) and (1 2 ... q) were checked
  std::uint64_t permutations = 0;
  std::uint64_t checks = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks Φ(π·v) = π·Φ(v). All of S_q when q! * faces <= work_budget, else the two generators.
EquivarianceReport verify_equivariance(const PhiInstance& inst, std::uint64_t work_budget = 20'000'000);

}  // namespace fairsplit
