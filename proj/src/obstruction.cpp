#include "fairsplit/obstruction.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <map>

#include "fairsplit/errors.hpp"

namespace fairsplit {

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

bool is_prime_power(int q) {
  if (q < 2) return false;
  int p = 2;
  while (q % p != 0) ++p;
  while (q % p == 0) q /= p;
  return q == 1;
}

int engstrom_value(const Graph& g, int v) { return 2 * g.degree(v) + g.second_neighbors(v).size(); }

namespace {

void need_q(int q) {
  if (q < 2) throw InputError("conditions: q must be at least 2");
}

std::string vstr(int v) { return std::to_string(v); }

// Worst vertex (largest value, smallest label on ties).
std::pair<int, int> worst(const Graph& g) {
  int wv = 0, wval = -1;
  for (int v = 1; v <= g.vertex_count(); ++v) {
    const int val = engstrom_value(g, v);
    if (val > wval) {
      wv = v;
      wval = val;
    }
  }
  return {wv, std::max(wval, 0)};
}

std::string block_gate(const VertexPartition& p, int min_size) {
  for (int j = 0; j < p.block_count(); ++j) {
    if (p.block_size(j) < min_size) {
      return "block " + std::to_string(j + 1) + " has " + std::to_string(p.block_size(j)) + " < " +
             std::to_string(min_size) + " vertices";
    }
  }
  return {};
}

std::vector<Edge> path_edges(const std::vector<int>& path) {
  std::vector<Edge> out;
  for (std::size_t i = 1; i < path.size(); ++i) {
    out.emplace_back(std::min(path[i - 1], path[i]), std::max(path[i - 1], path[i]));
  }
  return out;
}

// Empty path first, then every simple path with at least one edge, each undirected
// path once (first label < last label). Stops when visit returns true.
std::optional<std::vector<int>> search_paths(const Graph& g, std::int64_t budget, std::int64_t& tried,
                                             const std::function<bool(const Graph&)>& accept) {
  ++tried;
  if (accept(g)) return std::vector<int>{};
  std::vector<int> cur;
  std::optional<std::vector<int>> found;
  std::function<bool(int, VertexSet)> rec = [&](int v, VertexSet used) {
    bool stop = false;
    g.neighbors(v).for_each([&](int w) {
      if (stop || used.contains(w)) return;
      cur.push_back(w);
      if (cur.front() < w) {
        if (++tried > budget) throw ResourceError("path search: budget exceeded");
        if (accept(g.without_edges(path_edges(cur)))) {
          found = cur;
          stop = true;
        }
      }
      if (!stop) {
        VertexSet u = used;
        u.insert(w);
        stop = rec(w, u);
      }
      cur.pop_back();
    });
    return stop;
  };
  for (int s = 1; s <= g.vertex_count() && !found; ++s) {
    cur = {s};
    VertexSet u;
    u.insert(s);
    rec(s, u);
  }
  return found;
}

bool below_bound(const Graph& g, int q) {
  for (int v = 1; v <= g.vertex_count(); ++v) {
    if (engstrom_value(g, v) >= q) return false;
  }
  return true;
}

// Connected components as vertex sets, ordered by smallest label.
std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet seen;
  for (int v = 1; v <= g.vertex_count(); ++v) {
    if (seen.contains(v)) continue;
    VertexSet comp, frontier;
    frontier.insert(v);
    while (!frontier.empty()) {
      const int u = frontier.min();
      frontier.erase(u);
      if (comp.contains(u)) continue;
      comp.insert(u);
      frontier |= g.neighbors(u) - comp;
    }
    seen |= comp;
    out.push_back(comp);
  }
  return out;
}

// Empty string when g is n cliques of size q-1 plus one isolated vertex.
std::string clique_structure_problem(const Graph& g, int q) {
  const int nv = g.vertex_count();
  if (nv < 1 || (nv - 1) % (q - 1) != 0) return "|V| is not of the form (q-1)n+1";
  const int n = (nv - 1) / (q - 1);
  if (n < 1) return "n must be at least 1";
  int cliques = 0, singles = 0;
  for (auto c : components(g)) {
    const int s = c.size();
    bool complete = true;
    c.for_each([&](int v) { complete = complete && g.degree(v) == s - 1; });
    if (!complete) return "component at vertex " + vstr(c.min()) + " is not a clique";
    if (s == q - 1) {
      ++cliques;
    } else if (s == 1) {
      ++singles;
    } else {
      return "component at vertex " + vstr(c.min()) + " has size " + std::to_string(s);
    }
  }
  // q = 2: cliques and isolated vertices coincide.
  if (q == 2) return cliques == n + 1 ? "" : "graph is not edgeless";
  if (cliques != n || singles != 1) {
    return std::to_string(cliques) + " cliques and " + std::to_string(singles) + " isolated vertices";
  }
  return {};
}

}  // namespace

EngstromFragment check_engstrom(const Graph& g, int q, int n) {
  need_q(q);
  EngstromFragment f;
  std::tie(f.worst_vertex, f.worst_value) = worst(g);
  if (g.vertex_count() > 0 && f.worst_value >= q) {
    f.verdict.witness = "vertex " + vstr(f.worst_vertex) + " has 2N+N^2 = " + std::to_string(f.worst_value);
    return f;
  }
  const long long need = static_cast<long long>(q - 1) * n + 1;
  if (g.vertex_count() < need) {
    f.verdict.witness = "|V| = " + std::to_string(g.vertex_count()) + " < (q-1)n+1 = " + std::to_string(need);
    return f;
  }
  f.verdict.holds = true;
  f.verdict.witness = "max 2N+N^2 = " + std::to_string(f.worst_value);
  return f;
}

PathDeletion check_corollary_a(const Graph& g, const VertexPartition& p, int q,
                               const std::optional<std::vector<int>>& path, std::int64_t budget) {
  need_q(q);
  PathDeletion r;
  if (p.vertex_count() != g.vertex_count()) throw InputError("conditions: partition does not match the graph");
  if (!is_prime_power(q)) {
    r.verdict.witness = "q is not a prime power";
    return r;
  }
  if (auto why = block_gate(p, q - 1); !why.empty()) {
    r.verdict.witness = why;
    return r;
  }
  const long long need = static_cast<long long>(q - 1) * (p.block_count() + 2) + 1;
  if (g.vertex_count() < need) {
    r.verdict.witness = "|V| < (q-1)(m+2)+1 = " + std::to_string(need);
    return r;
  }
  auto accept = [q](const Graph& h) { return below_bound(h, q); };
  if (path) {
    VertexSet seen;
    for (std::size_t i = 0; i < path->size(); ++i) {
      const int v = (*path)[i];
      if (v < 1 || v > g.vertex_count() || seen.contains(v)) throw InputError("conditions: path is not simple");
      seen.insert(v);
      if (i > 0 && !g.adjacent((*path)[i - 1], v)) throw InputError("conditions: path uses a non-edge");
    }
    r.paths_tried = 1;
    if (accept(g.without_edges(path_edges(*path)))) {
      r.path = path;
      r.verdict.holds = true;
      r.verdict.witness = "supplied path";
    } else {
      r.verdict.witness = "supplied path leaves a vertex at or above q";
    }
    return r;
  }
  r.path = search_paths(g, budget, r.paths_tried, accept);
  r.verdict.holds = r.path.has_value();
  r.verdict.witness = r.verdict.holds ? "path deletion found" : "no simple path deletion meets 2N+N^2 < q";
  return r;
}

Verdict check_bmz_structure(const Graph& g, int q) {
  need_q(q);
  Verdict v;
  if (!is_prime(q)) {
    v.witness = "q is not prime";
    return v;
  }
  v.witness = clique_structure_problem(g, q);
  v.holds = v.witness.empty();
  if (v.holds) v.witness = "n = " + std::to_string((g.vertex_count() - 1) / (q - 1));
  return v;
}

Verdict check_hell_path(const Graph& g, int q) {
  need_q(q);
  Verdict v;
  const int nv = g.vertex_count();
  if (q < 4 || !is_prime_power(q)) {
    v.witness = "q must be a prime power of at least 4";
    return v;
  }
  if (nv < q || (nv - 1) % (q - 1) != 0) {
    v.witness = "|V| is not (q-1)n+1 with n >= 1";
    return v;
  }
  if (g.edge_count() != nv - 1 || g.max_degree() > 2 || components(g).size() != 1) {
    v.witness = "graph is not a path";
    return v;
  }
  v.holds = true;
  v.witness = "n = " + std::to_string((nv - 1) / (q - 1));
  return v;
}

PathDeletion check_corollary_b(const Graph& g, const VertexPartition& p, int q, std::int64_t budget) {
  need_q(q);
  PathDeletion r;
  if (p.vertex_count() != g.vertex_count()) throw InputError("conditions: partition does not match the graph");
  if (!is_prime(q)) {
    r.verdict.witness = "q is not prime";
    return r;
  }
  if (auto why = block_gate(p, q - 1); !why.empty()) {
    r.verdict.witness = why;
    return r;
  }
  const int nv = g.vertex_count();
  if (nv < 1 || (nv - 1) % (q - 1) != 0 || (nv - 1) / (q - 1) < p.block_count() + 1) {
    r.verdict.witness = "|V| is not (q-1)n+1 with n >= m+1";
    return r;
  }
  r.path = search_paths(g, budget, r.paths_tried, [q](const Graph& h) { return clique_structure_problem(h, q).empty(); });
  r.verdict.holds = r.path.has_value();
  r.verdict.witness = r.verdict.holds ? "path plus cliques decomposition found" : "no path leaves disjoint (q-1)-cliques";
  return r;
}

Verdict check_transversal_bound(const Graph& g, const VertexPartition& p, int q) {
  need_q(q);
  Verdict v;
  if (p.vertex_count() != g.vertex_count()) throw InputError("conditions: partition does not match the graph");
  if (!is_prime_power(q)) {
    v.witness = "q is not a prime power";
    return v;
  }
  const auto [wv, wval] = worst(g);
  if (g.vertex_count() > 0 && wval >= q) {
    v.witness = "vertex " + vstr(wv) + " has 2N+N^2 = " + std::to_string(wval);
    return v;
  }
  v.witness = block_gate(p, 2 * q - 1);
  v.holds = v.witness.empty();
  if (v.holds) v.witness = "every block has at least 2q-1 vertices";
  return v;
}

ConditionReport check_conditions(const Graph& g, const VertexPartition& p, int q, std::optional<int> n,
                                 std::int64_t path_budget) {
  need_q(q);
  ConditionReport r;
  r.q = q;
  r.n = n.value_or(p.block_count() + 2);
  if (r.n < 1) throw InputError("conditions: n must be at least 1");
  const int nv = g.vertex_count();
  r.structure_n = nv >= 1 && (nv - 1) % (q - 1) == 0 ? (nv - 1) / (q - 1) : 0;
  r.q_prime = is_prime(q);
  r.q_prime_power = is_prime_power(q);
  r.engstrom = check_engstrom(g, q, r.n);
  r.bmz_structure = check_bmz_structure(g, q);
  r.hell_path = check_hell_path(g, q);
  r.corollary_a = check_corollary_a(g, p, q, std::nullopt, path_budget);
  r.corollary_b = check_corollary_b(g, p, q, path_budget);
  r.transversal_bound = check_transversal_bound(g, p, q);
  return r;
}

bool ChainComplexData::composes_to_zero() const {
  for (std::size_t d = 1; d < boundaries.size(); ++d) {
    const IntMatrix& a = boundaries[d - 1];
    const IntMatrix& b = boundaries[d];
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < (b.empty() ? 0 : b[0].size()); ++j) {
        std::int64_t s = 0;
        for (std::size_t k = 0; k < b.size(); ++k) s += a[i][k] * b[k][j];
        if (s != 0) return false;
      }
    }
  }
  return true;
}

ChainComplexData chain_complex(const SimplicialComplex& k, std::size_t face_budget) {
  ChainComplexData c;
  if (k.is_void()) return c;
  const auto faces = k.faces(face_budget);
  std::vector<std::vector<Face>> by_size;
  for (const auto& f : faces) {
    if (by_size.size() <= f.size()) by_size.resize(f.size() + 1);
    by_size[f.size()].push_back(f);
  }
  for (const auto& level : by_size) c.ranks.push_back(level.size());
  for (std::size_t s = 1; s < by_size.size(); ++s) {
    const std::size_t rows = by_size[s - 1].size(), cols = by_size[s].size();
    if (rows * cols > 50'000'000) throw ResourceError("homology: boundary matrix too large");
    std::map<Face, std::size_t> index;
    for (std::size_t i = 0; i < rows; ++i) index[by_size[s - 1][i]] = i;
    IntMatrix m(rows, std::vector<std::int64_t>(cols, 0));
    for (std::size_t j = 0; j < cols; ++j) {
      const Face& f = by_size[s][j];
      for (std::size_t drop = 0; drop < f.size(); ++drop) {
        Face g = f;
        g.erase(g.begin() + static_cast<std::ptrdiff_t>(drop));
        m[index.at(g)][j] = drop % 2 == 0 ? 1 : -1;
      }
    }
    c.boundaries.push_back(std::move(m));
  }
  return c;
}

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ResourceError("smith normal form: int64 overflow");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw ResourceError("smith normal form: int64 overflow");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ResourceError("smith normal form: int64 overflow");
  return r;
}

std::int64_t iabs(std::int64_t x) {
  if (x == INT64_MIN) throw ResourceError("smith normal form: int64 overflow");
  return x < 0 ? -x : x;
}

}  // namespace

std::vector<std::int64_t> smith_diagonal(IntMatrix m) {
  const std::size_t rows = m.size(), cols = rows == 0 ? 0 : m[0].size();
  std::vector<std::int64_t> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      // smallest nonzero magnitude in the trailing block
      std::size_t pi = rows, pj = cols;
      std::int64_t best = 0;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (m[i][j] != 0 && (best == 0 || iabs(m[i][j]) < best)) {
            best = iabs(m[i][j]);
            pi = i;
            pj = j;
          }
        }
      }
      if (best == 0) return diag;
      std::swap(m[t], m[pi]);
      for (auto& row : m) std::swap(row[t], row[pj]);
      const std::int64_t piv = m[t][t];
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        const std::int64_t f = m[i][t] / piv;
        for (std::size_t j = t; j < cols; ++j) m[i][j] = checked_sub(m[i][j], checked_mul(f, m[t][j]));
        if (m[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        const std::int64_t f = m[t][j] / piv;
        for (std::size_t i = t; i < rows; ++i) m[i][j] = checked_sub(m[i][j], checked_mul(f, m[i][t]));
        if (m[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // The pivot must divide the rest; otherwise fold the offending row in and retry.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (m[i][j] % piv != 0) {
            bad = i;
            break;
          }
        }
      }
      if (bad == rows) break;
      for (std::size_t j = t; j < cols; ++j) m[t][j] = checked_add(m[t][j], m[bad][j]);
    }
    diag.push_back(iabs(m[t][t]));
  }
  return diag;
}

std::vector<HomologyGroup> reduced_homology(const SimplicialComplex& k, int max_dim, std::size_t face_budget) {
  if (max_dim < -1) throw InputError("homology: max_dim must be at least -1");
  const ChainComplexData c = chain_complex(k, face_budget);
  const int top = static_cast<int>(c.boundaries.size());  // ∂_0..∂_{top-1}
  std::vector<std::future<std::vector<std::int64_t>>> jobs;
  for (int d = 0; d < top && d <= max_dim + 1; ++d) {
    jobs.push_back(std::async(std::launch::async, [&c, d] { return smith_diagonal(c.boundaries[d]); }));
  }
  std::vector<std::vector<std::int64_t>> snf;
  for (auto& j : jobs) snf.push_back(j.get());
  auto rank_of = [&](int d) -> std::int64_t {  // rank of ∂_d, d in 0..
    return d >= 0 && d < static_cast<int>(snf.size()) ? static_cast<std::int64_t>(snf[d].size()) : 0;
  };
  std::vector<HomologyGroup> out;
  for (int d = -1; d <= max_dim; ++d) {
    HomologyGroup h;
    h.dim = d;
    const std::size_t idx = static_cast<std::size_t>(d + 1);
    const std::int64_t chains = idx < c.ranks.size() ? static_cast<std::int64_t>(c.ranks[idx]) : 0;
    h.betti = chains - rank_of(d) - rank_of(d + 1);
    if (d + 1 < static_cast<int>(snf.size())) {
      for (auto x : snf[d + 1]) {
        if (x > 1) h.torsion.push_back(x);
      }
    }
    out.push_back(h);
  }
  return out;
}

}  // namespace fairsplit
