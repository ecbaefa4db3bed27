#pragma once

// Composing almost fair splitters of a path: q = q1 * q2.

#include <cstdint>
#include <functional>
#include <string>

#include "fairsplit/graph.hpp"
#include "fairsplit/solver.hpp"

namespace fairsplit {

/// Given a path 1..n and a partition of it, returns q sets that should form an almost
/// fair splitting by s-stable sets (weakly w-stable when w > 0).
struct BaseSplitter {
  int q = 2;
  int s = 1;
  int w = 0;
  std::string name;
  std::function<Splitting(int path_n, const VertexPartition&)> run;
};

/// ⌊⌊a/b⌋/c⌋ == ⌊a/(bc)⌋ (b, c >= 1, a >= 0).
bool floor_identity_check(long long a, long long b, long long c);

/// Exhaustive solver on the path: almost fair, s-stable, optionally weakly q-stable.
BaseSplitter exhaustive_path_splitter(int q, int s, bool weak = false,
                                      std::int64_t node_budget = kDefaultNodeBudget, int threads = 1);
/// q = 1: the single set of all vertices.
BaseSplitter identity_splitter();

struct CompositionResult {
  Splitting splitting;
  QuotaCertificate certificate;
  int stability = 1;       // s1 * s2, verified
  int weak_stability = 0;  // (s2-1)(w1-1)+1 when the first stage is weakly w1-stable, verified
};

/// Runs splitter 1 on the path, then splitter 2 on each S'_t as a path in label order.
/// Every stage is re-verified; violations raise ContractError naming the stage.
CompositionResult compose(int path_n, const VertexPartition& p, const BaseSplitter& first,
                          const BaseSplitter& second);

/// The composite of two splitters as a splitter in its own right.
BaseSplitter compose_splitters(const BaseSplitter& first, const BaseSplitter& second);

/// 2^t sets by iterating compose with `base` (default: exhaustive q = 2, 2-stable).
CompositionResult power_of_two_splitting(int path_n, const VertexPartition& p, int t,
                                         const BaseSplitter* base = nullptr);

}  // namespace fairsplit
