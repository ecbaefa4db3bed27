#include "fairsplit/graph.hpp"

#include <algorithm>

#include "fairsplit/errors.hpp"

namespace fairsplit {

namespace {

void check_range(VertexSet s, int n, const char* what) {
  if (!s.subset_of(VertexSet::range(n))) {
    throw InputError(std::string(what) + ": label outside 1.." + std::to_string(n));
  }
}

}  // namespace

Graph::Graph(int vertex_count) : n_(vertex_count) {
  if (vertex_count < 0 || vertex_count > kMaxVertices) {
    throw InputError("graph: vertex count must lie in 0.." + std::to_string(kMaxVertices));
  }
  adj_.assign(vertex_count, VertexSet{});
}

Graph::Graph(int vertex_count, const std::vector<Edge>& edges) : Graph(vertex_count) {
  for (auto [u, v] : edges) {
    check_label(u);
    check_label(v);
    if (u == v) throw InputError("graph: self-loop at " + std::to_string(u));
    adj_[u - 1].insert(v);
    adj_[v - 1].insert(u);
  }
}

void Graph::check_label(int v) const {
  if (v < 1 || v > n_) {
    throw InputError("graph: label " + std::to_string(v) + " outside 1.." + std::to_string(n_));
  }
}

bool Graph::adjacent(int u, int v) const {
  check_label(u);
  check_label(v);
  return adj_[u - 1].contains(v);
}

VertexSet Graph::neighbors(int v) const {
  check_label(v);
  return adj_[v - 1];
}

VertexSet Graph::second_neighbors(int v) const {
  const VertexSet n1 = neighbors(v);
  VertexSet n2;
  n1.for_each([&](int w) { n2 |= adj_[w - 1]; });
  n2.erase(v);
  return n2 - n1;
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& a : adj_) best = std::max(best, a.size());
  return best;
}

int Graph::edge_count() const {
  int twice = 0;
  for (const auto& a : adj_) twice += a.size();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 1; u <= n_; ++u) {
    adj_[u - 1].for_each([&](int v) {
      if (u < v) out.emplace_back(u, v);
    });
  }
  return out;
}

Graph Graph::with_edges(const std::vector<Edge>& extra) const {
  auto all = edges();
  all.insert(all.end(), extra.begin(), extra.end());
  return Graph(n_, all);
}

Graph Graph::without_edges(const std::vector<Edge>& removed) const {
  Graph g = *this;
  for (auto [u, v] : removed) {
    check_label(u);
    check_label(v);
    g.adj_[u - 1].erase(v);
    g.adj_[v - 1].erase(u);
  }
  return g;
}

Graph Graph::relabeled(const std::vector<int>& new_label_of) const {
  if (static_cast<int>(new_label_of.size()) != n_) throw InputError("relabel: wrong permutation size");
  std::vector<Edge> out;
  for (auto [u, v] : edges()) out.emplace_back(new_label_of[u - 1], new_label_of[v - 1]);
  return Graph(n_, out);
}

// ---------------------------------------------------------------------------

VertexPartition::VertexPartition(int vertex_count, std::vector<VertexSet> blocks)
    : n_(vertex_count), blocks_(std::move(blocks)), block_of_(vertex_count, -1) {
  if (vertex_count < 0 || vertex_count > kMaxVertices) throw InputError("partition: bad vertex count");
  VertexSet seen;
  for (int j = 0; j < block_count(); ++j) {
    const VertexSet b = blocks_[j];
    if (b.empty()) throw InputError("partition: block " + std::to_string(j + 1) + " is empty");
    check_range(b, n_, "partition");
    if (!b.disjoint(seen)) throw InputError("partition: blocks overlap");
    seen |= b;
    b.for_each([&](int v) { block_of_[v - 1] = j; });
  }
  if (seen != VertexSet::range(n_)) throw InputError("partition: blocks do not cover 1..N");
}

VertexPartition VertexPartition::whole(int vertex_count) {
  return VertexPartition(vertex_count, {VertexSet::range(vertex_count)});
}

VertexPartition VertexPartition::intervals(const std::vector<int>& sizes) {
  std::vector<VertexSet> blocks;
  int next = 1;
  for (int s : sizes) {
    if (s <= 0) throw InputError("partition: interval sizes must be positive");
    VertexSet b;
    for (int i = 0; i < s; ++i) b.insert(next++);
    blocks.push_back(b);
  }
  return VertexPartition(next - 1, std::move(blocks));
}

VertexPartition VertexPartition::from_block_ids(const std::vector<int>& block_of) {
  int m = 0;
  for (int b : block_of) {
    if (b < 0) throw InputError("partition: negative block id");
    m = std::max(m, b + 1);
  }
  std::vector<VertexSet> blocks(m);
  for (std::size_t i = 0; i < block_of.size(); ++i) blocks[block_of[i]].insert(static_cast<int>(i) + 1);
  return VertexPartition(static_cast<int>(block_of.size()), std::move(blocks));
}

// ---------------------------------------------------------------------------

void SplittingSpec::validate() const {
  if (q < 1) throw InputError("spec: q must be positive");
  if (stability < 1) throw InputError("spec: stability must be at least 1");
}

VertexSet Splitting::covered() const {
  VertexSet all;
  for (auto s : sets) all |= s;
  return all;
}

Splitting Splitting::canonical() const {
  Splitting c = *this;
  std::stable_sort(c.sets.begin(), c.sets.end(), [](VertexSet a, VertexSet b) {
    if (a.empty() != b.empty()) return b.empty();
    return a.min() < b.min();
  });
  return c;
}

std::string to_string(WeakStability w) {
  switch (w) {
    case WeakStability::stable: return "stable";
    case WeakStability::not_stable: return "not_stable";
    case WeakStability::not_applicable: return "not_applicable";
  }
  return "?";
}

bool QuotaCertificate::satisfies(const SplittingSpec& spec) const {
  if (!disjoint_ok || !faces_ok || !stability_ok) return false;
  if (spec.flavor == Flavor::fair ? !fair_ok : !almost_fair_ok) return false;
  if (spec.balanced && !balanced_ok) return false;
  if (spec.weak_stability && !weak_stability_ok) return false;
  if (spec.strict && !strict_ok) return false;
  return true;
}

int fair_quota(int block_size, int q) { return block_size / q; }

int almost_fair_quota(int block_size, int q) { return std::max(0, (block_size + 1) / q - 1); }

bool is_independent(const Graph& g, VertexSet s) {
  check_range(s, g.vertex_count(), "is_independent");
  bool ok = true;
  s.for_each([&](int v) {
    if (!g.neighbors(v).disjoint(s)) ok = false;
  });
  return ok;
}

QuotaCertificate certify(const VertexPartition& p, const Splitting& sp, const SplittingSpec& spec,
                         const std::vector<bool>& set_is_face) {
  spec.validate();
  const int q = sp.q();
  if (q != spec.q) {
    throw InputError("splitting has " + std::to_string(q) + " sets but spec demands q=" + std::to_string(spec.q));
  }
  const int n = p.vertex_count();
  VertexSet seen;
  for (auto s : sp.sets) {
    check_range(s, n, "splitting");
    if (!s.disjoint(seen)) throw InputError("splitting: sets overlap");
    seen |= s;
  }

  QuotaCertificate c;
  c.q = q;
  const int m = p.block_count();
  c.counts.assign(q, std::vector<int>(m, 0));
  for (int i = 0; i < q; ++i) {
    c.set_sizes.push_back(sp.sets[i].size());
    for (int j = 0; j < m; ++j) c.counts[i][j] = (sp.sets[i] & p.block(j)).size();
  }
  c.faces_ok = std::all_of(set_is_face.begin(), set_is_face.end(), [](bool b) { return b; });

  c.fair_ok = true;
  c.almost_fair_ok = true;
  for (int j = 0; j < m; ++j) {
    const int size = p.block_size(j);
    c.block_sizes.push_back(size);
    c.fair_quota.push_back(fair_quota(size, q));
    c.almost_quota.push_back(almost_fair_quota(size, q));
    c.leftover.push_back((p.block(j) - seen).size());
    if (c.leftover[j] > q - 1) c.almost_fair_ok = false;
    const bool exact_shape = (size + 1) % q == 0;
    for (int i = 0; i < q; ++i) {
      if (c.counts[i][j] < c.fair_quota[j]) c.fair_ok = false;
      if (c.counts[i][j] < c.almost_quota[j]) c.almost_fair_ok = false;
      if (exact_shape && c.counts[i][j] != (size + 1) / q - 1) c.strict_ok = false;
    }
  }

  if (q > 0) {
    const auto [lo, hi] = std::minmax_element(c.set_sizes.begin(), c.set_sizes.end());
    c.balanced_ok = *hi - *lo <= 1;
  }
  for (auto s : sp.sets) {
    if (!is_q_stable(s, spec.stability, n)) c.stability_ok = false;
  }
  c.weak = is_weakly_q_stable(sp.sets, n);
  c.weak_stability_ok = c.weak == WeakStability::stable;
  return c;
}

QuotaCertificate check_splitting(const Graph& g, const VertexPartition& p, const Splitting& sp,
                                 const SplittingSpec& spec) {
  if (g.vertex_count() != p.vertex_count()) throw InputError("partition and graph disagree on vertex count");
  std::vector<bool> faces;
  for (auto s : sp.sets) {
    check_range(s, g.vertex_count(), "splitting");
    faces.push_back(is_independent(g, s));
  }
  return certify(p, sp, spec, faces);
}

bool is_q_stable(VertexSet labels, int q, int n) {
  check_range(labels, n, "is_q_stable");
  int prev = -1;
  bool ok = true;
  labels.for_each([&](int v) {
    if (prev > 0 && v - prev < q) ok = false;
    prev = v;
  });
  return ok;
}

WeakStability is_weakly_q_stable(const std::vector<VertexSet>& family, int n_host) {
  const int q = static_cast<int>(family.size());
  VertexSet all;
  for (auto s : family) {
    check_range(s, n_host, "is_weakly_q_stable");
    if (!s.disjoint(all)) throw InputError("is_weakly_q_stable: sets overlap");
    all |= s;
  }
  const int total = all.size();
  if (q < 2 || total < q || (total - 1) % (q - 1) != 0) return WeakStability::not_applicable;
  const int blocks = (total - 1) / (q - 1);

  // owner[p] = index of the set holding the p-th smallest covered label.
  std::vector<int> owner(total + 1, -1);
  int pos = 0;
  all.for_each([&](int v) {
    ++pos;
    for (int i = 0; i < q; ++i) {
      if (family[i].contains(v)) owner[pos] = i;
    }
  });
  for (int k = 1; k <= blocks; ++k) {
    std::vector<int> hits(q, 0);
    for (int p = (q - 1) * (k - 1) + 1; p <= (q - 1) * k + 1; ++p) ++hits[owner[p]];
    for (int h : hits) {
      if (h != 1) return WeakStability::not_stable;
    }
  }
  return WeakStability::stable;
}

DegreeProfile degree_profile(const Graph& g, int v) {
  return {g.neighbors(v).size(), g.second_neighbors(v).size()};
}

// ---------------------------------------------------------------------------

namespace family {

Graph cycle(int n) {
  if (n < 3) throw InputError("cycle: need n >= 3");
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(1, n);
  return Graph(n, e);
}

Graph path(int n) { return power_path(n, 1); }

Graph power_path(int n, int r) {
  if (n < 1) throw InputError("power_path: need n >= 1");
  if (r < 0) throw InputError("power_path: need r >= 0");
  std::vector<Edge> e;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= std::min(n, i + r); ++j) e.emplace_back(i, j);
  }
  return Graph(n, e);
}

Graph cliques_plus_isolated(int n, int q) {
  if (n < 1 || q < 2) throw InputError("cliques_plus_isolated: need n >= 1, q >= 2");
  const int size = q - 1;
  std::vector<Edge> e;
  for (int c = 0; c < n; ++c) {
    const int base = c * size;
    for (int a = 1; a <= size; ++a) {
      for (int b = a + 1; b <= size; ++b) e.emplace_back(base + a, base + b);
    }
  }
  return Graph(size * n + 1, e);
}

Graph path_union_cliques(int n, int q) {
  if (n < 1 || q < 2) throw InputError("path_union_cliques: need n >= 1, q >= 2");
  const int total = (q - 1) * n + 1;
  std::vector<std::vector<int>> cliques;
  if (n >= 2) {
    // Clique t holds t, t+n, t+2n, ...: no two members are consecutive on the path.
    for (int t = 1; t <= n; ++t) {
      std::vector<int> c;
      for (int r = 0; r < q - 1; ++r) c.push_back(t + r * n);
      cliques.push_back(c);
    }
  } else if (q - 1 <= 2) {
    cliques.push_back(q == 2 ? std::vector<int>{1} : std::vector<int>{1, 3});
  } else {
    throw InputError("path_union_cliques: no edge-disjoint layout for n=1, q>3");
  }
  std::vector<Edge> e;
  for (int i = 1; i < total; ++i) e.emplace_back(i, i + 1);
  for (const auto& c : cliques) {
    for (std::size_t a = 0; a < c.size(); ++a) {
      for (std::size_t b = a + 1; b < c.size(); ++b) e.emplace_back(c[a], c[b]);
    }
  }
  return Graph(total, e);
}

Graph path_with_two_triangles(int n) {
  if (n < 6) throw InputError("path_with_two_triangles: need n >= 6");
  return path(n).with_edges({{1, 3}, {n - 2, n}});
}

}  // namespace family

Graph generate_family(const std::string& kind, const std::vector<int>& params) {
  auto need = [&](std::size_t k) {
    if (params.size() != k) {
      throw InputError("family " + kind + " expects " + std::to_string(k) + " parameter(s)");
    }
  };
  if (kind == "cycle") { need(1); return family::cycle(params[0]); }
  if (kind == "path") { need(1); return family::path(params[0]); }
  if (kind == "power_path") { need(2); return family::power_path(params[0], params[1]); }
  if (kind == "cliques_plus_isolated") { need(2); return family::cliques_plus_isolated(params[0], params[1]); }
  if (kind == "path_union_cliques") { need(2); return family::path_union_cliques(params[0], params[1]); }
  if (kind == "path_with_two_triangles") { need(1); return family::path_with_two_triangles(params[0]); }
  throw InputError("unknown graph family: " + kind);
}

}  // namespace fairsplit
