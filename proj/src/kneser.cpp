#include "fairsplit/kneser.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "fairsplit/errors.hpp"

namespace fairsplit {

std::string to_string(KneserStability s) {
  switch (s) {
    case KneserStability::none: return "none";
    case KneserStability::cycle: return "cycle";
    case KneserStability::path: return "path";
  }
  return "none";
}

KneserStability kneser_stability_from_string(const std::string& s) {
  if (s == "none") return KneserStability::none;
  if (s == "cycle") return KneserStability::cycle;
  if (s == "path") return KneserStability::path;
  throw InputError("kneser: stability must be none, cycle or path");
}

namespace {

bool stable_subset(VertexSet s, int n, int q, KneserStability st) {
  if (st == KneserStability::none) return true;
  const auto l = s.labels();
  for (std::size_t i = 1; i < l.size(); ++i) {
    if (l[i] - l[i - 1] < q) return false;
  }
  if (st == KneserStability::cycle && l.size() >= 2 && l.front() + n - l.back() < q) return false;
  return true;
}

}  // namespace

Hypergraph build_hypergraph(const KneserInstance& inst, std::size_t edge_budget) {
  if (inst.n < 0 || inst.n > 62) throw InputError("kneser: n must lie in 0..62");
  if (inst.k < 0 || inst.k > inst.n) throw InputError("kneser: k must lie in 0..n");
  if (inst.q < 2) throw InputError("kneser: q must be at least 2");
  Hypergraph h;
  h.q = inst.q;
  h.ground = inst.n;
  if (inst.k == 0) {
    h.vertices.push_back(VertexSet{});
    return h;
  }
  // Gosper's hack walks k-subsets in increasing bitmask order, which is colex.
  const std::uint64_t limit = std::uint64_t{1} << inst.n;
  for (std::uint64_t x = (std::uint64_t{1} << inst.k) - 1; x < limit;) {
    if (stable_subset(VertexSet(x), inst.n, inst.q, inst.stability)) h.vertices.push_back(VertexSet(x));
    const std::uint64_t c = x & (~x + 1);
    const std::uint64_t r = x + c;
    x = (((r ^ x) >> 2) / c) | r;
    if (h.vertices.size() > 5'000'000) throw ResourceError("kneser: too many vertices");
  }
  const int nv = static_cast<int>(h.vertices.size());
  std::vector<int> pick;
  std::function<void(int, VertexSet)> rec = [&](int from, VertexSet used) {
    if (static_cast<int>(pick.size()) == inst.q) {
      h.edges.push_back(pick);
      if (h.edges.size() > edge_budget) throw ResourceError("kneser: hyperedge budget exceeded");
      return;
    }
    for (int i = from; i < nv; ++i) {
      if (!h.vertices[i].disjoint(used)) continue;
      pick.push_back(i);
      rec(i + 1, used | h.vertices[i]);
      pick.pop_back();
    }
  };
  rec(0, VertexSet{});
  return h;
}

bool is_proper(const Hypergraph& h, const Coloring& c) {
  if (c.color.size() != h.vertices.size()) return false;
  for (int x : c.color) {
    if (x < 1 || x > c.colors) return false;
  }
  for (const auto& e : h.edges) {
    bool mono = true;
    for (int v : e) mono = mono && c.color[v] == c.color[e.front()];
    if (mono) return false;
  }
  return true;
}

int kneser_formula(int n, int k, int q) {
  const int num = n - q * (k - 1);
  const int den = q - 1;
  return num <= 0 ? 0 : (num + den - 1) / den;
}

namespace {

class Colorer {
 public:
  Colorer(const Hypergraph& h, int colors, std::int64_t& nodes, std::int64_t budget)
      : h_(h), c_(colors), nodes_(nodes), budget_(budget) {
    const int nv = static_cast<int>(h.vertices.size());
    incident_.resize(nv);
    for (int e = 0; e < static_cast<int>(h.edges.size()); ++e) {
      for (int v : h.edges[e]) incident_[v].push_back(e);
    }
    color_.assign(nv, -1);
    domain_.assign(nv, colors >= 32 ? ~0U : ((1U << colors) - 1));
  }

  bool run() { return rec(0, -1); }
  std::vector<int> colors() const { return color_; }

 private:
  bool rec(int colored, int max_used) {
    if (++nodes_ > budget_) throw ResourceError("chromatic: node budget exceeded");
    const int nv = static_cast<int>(color_.size());
    if (colored == nv) return true;
    int best = -1, best_dom = 99, best_deg = -1;
    for (int v = 0; v < nv; ++v) {
      if (color_[v] >= 0) continue;
      const int d = std::popcount(domain_[v]);
      const int deg = static_cast<int>(incident_[v].size());
      if (d < best_dom || (d == best_dom && deg > best_deg)) {
        best = v;
        best_dom = d;
        best_deg = deg;
      }
    }
    if (best_dom == 0) return false;
    const int v = best;
    for (int x = 0; x < c_ && x <= max_used + 1; ++x) {
      if (!((domain_[v] >> x) & 1U)) continue;
      const std::size_t mark = trail_.size();
      color_[v] = x;
      if (propagate(v, x) && rec(colored + 1, std::max(max_used, x))) return true;
      color_[v] = -1;
      while (trail_.size() > mark) {
        domain_[trail_.back().first] = trail_.back().second;
        trail_.pop_back();
      }
    }
    return false;
  }

  // Removes x from any vertex that is the last uncolored member of an edge otherwise colored x.
  bool propagate(int v, int x) {
    for (int e : incident_[v]) {
      int same = 0, open = -1, open_count = 0;
      for (int u : h_.edges[e]) {
        if (color_[u] == x) {
          ++same;
        } else if (color_[u] < 0) {
          open = u;
          ++open_count;
        }
      }
      if (same == h_.q) return false;
      if (same == h_.q - 1 && open_count == 1 && ((domain_[open] >> x) & 1U)) {
        trail_.emplace_back(open, domain_[open]);
        domain_[open] &= ~(1U << x);
        if (domain_[open] == 0) return false;
      }
    }
    return true;
  }

  const Hypergraph& h_;
  int c_;
  std::int64_t& nodes_;
  std::int64_t budget_;
  std::vector<std::vector<int>> incident_;
  std::vector<int> color_;
  std::vector<std::uint32_t> domain_;
  std::vector<std::pair<int, std::uint32_t>> trail_;
};

}  // namespace

ChromaticResult chromatic_number(const Hypergraph& h, std::int64_t node_budget) {
  ChromaticResult r;
  const int nv = static_cast<int>(h.vertices.size());
  if (nv == 0) return r;
  if (h.edges.empty()) {
    r.chi = r.lower_bound = 1;
    r.witness = {std::vector<int>(nv, 1), 1};
    return r;
  }
  // Any q of a pairwise disjoint family span a hyperedge, so each color holds at most q-1 of them.
  VertexSet used;
  int family = 0;
  for (const auto& s : h.vertices) {
    if (s.disjoint(used)) {
      used |= s;
      ++family;
    }
  }
  r.lower_bound = std::max(1, (family + h.q - 2) / (h.q - 1));
  for (int c = r.lower_bound; c <= 32; ++c) {
    Colorer col(h, c, r.nodes, node_budget);
    if (col.run()) {
      r.chi = c;
      r.witness.colors = c;
      for (int x : col.colors()) r.witness.color.push_back(x + 1);
      if (!is_proper(h, r.witness)) throw ContractError("chromatic: witness coloring is not proper");
      return r;
    }
  }
  throw ResourceError("chromatic: more than 32 colors needed");
}

Coloring coloring_from_partition(const Hypergraph& h, const VertexPartition& p, const std::vector<int>& ks) {
  const int m = p.block_count();
  if (static_cast<int>(ks.size()) != m) throw InputError("coloring: one k_j per block");
  if (p.vertex_count() != h.ground) throw InputError("coloring: partition must cover 1..n");
  int k = 0;
  for (int j = 0; j < m; ++j) {
    if (ks[j] < 1 || p.block_size(j) != h.q * ks[j] - 1) throw InputError("coloring: blocks must have size q k_j - 1");
    k += ks[j] - 1;
  }
  Coloring c;
  c.colors = m + 1;
  for (const auto& s : h.vertices) {
    if (s.size() != k) throw InputError("coloring: vertices must be k-sets with k = sum (k_j - 1)");
    int col = m + 1;
    for (int j = 0; j < m; ++j) {
      if ((s & p.block(j)).size() >= ks[j]) {
        col = j + 1;
        break;
      }
    }
    c.color.push_back(col);
  }
  return c;
}

RebalanceResult rebalance_q2(int original_n, int padded_n, const VertexPartition& p, const Splitting& padded,
                             const std::vector<int>& pad_block) {
  if (padded.q() != 2) throw ContractError("rebalance: needs exactly two sets");
  if (!padded.sets[0].disjoint(padded.sets[1])) throw ContractError("rebalance: sets overlap");
  if (p.vertex_count() != original_n) throw ContractError("rebalance: partition does not match the original path");
  const VertexSet pads = VertexSet::range(padded_n) - VertexSet::range(original_n);
  RebalanceResult r;
  const int l0 = (padded.sets[0] & pads).size();
  const int l1 = (padded.sets[1] & pads).size();
  const int a = l0 <= l1 ? 0 : 1;  // the set with fewer padded vertices plays S_1
  const int b = 1 - a;
  r.ell1 = std::min(l0, l1);
  r.ell2 = std::max(l0, l1);
  std::vector<VertexSet> stripped = {padded.sets[0] - pads, padded.sets[1] - pads};
  if (r.ell2 > r.ell1 + 1) {
    const int need = r.ell2 - r.ell1 - 1;
    const VertexSet both = padded.sets[0] | padded.sets[1];
    std::vector<int> positions;
    (padded.sets[b] & pads).for_each([&](int u) {
      const int w = u + 1;
      if (static_cast<int>(positions.size()) < need && w <= padded_n && pads.contains(w) && !both.contains(w)) {
        positions.push_back(w);
      }
    });
    if (static_cast<int>(positions.size()) < need) {
      r.anomalies.push_back("rebalance found " + std::to_string(positions.size()) + " successor positions, needed " +
                            std::to_string(need));
    }
    for (int w : positions) {
      const int j = pad_block.at(w);
      const VertexSet cand = stripped[a] & p.block(j);
      if (cand.empty()) {
        r.anomalies.push_back("rebalance: S_1 has no vertex left in block " + std::to_string(j + 1));
        continue;
      }
      stripped[a].erase(cand.min());
      ++r.removals;
    }
  }
  r.splitting.sets = stripped;
  return r;
}

namespace {

struct Padding {
  int padded_n = 0;
  int k = 0;
  std::vector<int> ks, ts;
  std::vector<VertexSet> blocks;
  std::vector<int> pad_block;
};

Padding pad_path(int path_n, const VertexPartition& p, int q) {
  if (q < 2) throw InputError("kneser split: q must be at least 2");
  if (p.vertex_count() != path_n) throw InputError("kneser split: partition does not cover the path");
  Padding pd;
  pd.padded_n = path_n;
  pd.blocks = p.blocks();
  pd.pad_block.assign(path_n + 1, -1);
  for (int j = 0; j < p.block_count(); ++j) {
    const BlockShape sh = block_shape(p.block_size(j), q);
    pd.ks.push_back(sh.k);
    pd.ts.push_back(sh.t);
    pd.k += sh.k - 1;
    for (int x = 0; x < sh.t - 1; ++x) {
      ++pd.padded_n;
      if (pd.padded_n > 62) throw ResourceError("kneser split: padded path too long");
      pd.blocks[j].insert(pd.padded_n);
      pd.pad_block.push_back(j);
    }
  }
  return pd;
}

// Visits q pairwise disjoint vertices of color m+1 in index order until visit returns false.
void for_each_top_edge(const Hypergraph& h, const Coloring& col, int top,
                       const std::function<bool(const std::vector<int>&)>& visit) {
  std::vector<int> pick;
  std::function<bool(int, VertexSet)> rec = [&](int from, VertexSet used) {
    if (static_cast<int>(pick.size()) == h.q) return visit(pick);
    for (int i = from; i < static_cast<int>(h.vertices.size()); ++i) {
      if (col.color[i] != top || !h.vertices[i].disjoint(used)) continue;
      pick.push_back(i);
      if (!rec(i + 1, used | h.vertices[i])) return false;
      pick.pop_back();
    }
    return true;
  };
  rec(0, VertexSet{});
}

KneserSplitResult finish(int path_n, const VertexPartition& p, int q, const Padding& pd, const Splitting& padded,
                         const KneserSplitOptions& opt) {
  KneserSplitResult r;
  r.q = q;
  r.padded_n = pd.padded_n;
  r.k = pd.k;
  r.ks = pd.ks;
  r.ts = pd.ts;
  r.formula = p.block_count() + 2;
  r.padded = padded;
  const VertexPartition padded_p(pd.padded_n, pd.blocks);
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < p.block_count(); ++j) {
      if ((padded.sets[i] & padded_p.block(j)).size() != pd.ks[j] - 1) {
        r.anomalies.push_back("padded set misses the k_j - 1 count");
      }
    }
  }
  if (q == 2) {
    r.rebalance = rebalance_q2(path_n, pd.padded_n, p, padded, pd.pad_block);
    r.splitting = r.rebalance->splitting;
    for (const auto& a : r.rebalance->anomalies) r.anomalies.push_back(a);
  } else {
    const VertexSet keep = VertexSet::range(path_n);
    for (auto s : padded.sets) r.splitting.sets.push_back(s & keep);
  }

  SplittingSpec spec;
  spec.q = q;
  spec.stability = q;
  r.certificate = certify(p, r.splitting, spec, std::vector<bool>(q, true));
  if (!r.certificate.almost_fair_ok) r.anomalies.push_back("output is not almost fair");
  if (!r.certificate.stability_ok) r.anomalies.push_back("output is not q-stable");
  if (q == 2 && !r.certificate.balanced_ok) r.anomalies.push_back("q = 2 output is not balanced");
  if (opt.strict) {
    const bool shaped = std::all_of(pd.ts.begin(), pd.ts.end(), [&](int t) { return t == 1 || t == q; });
    if (shaped && !r.certificate.balanced_ok) r.anomalies.push_back("strict shape but output is not balanced");
  }
  return r;
}

}  // namespace

std::vector<KneserSplitResult> splittings_from_top_edges(int path_n, const VertexPartition& p, int q,
                                                         const KneserSplitOptions& opt, int first, int limit) {
  const Padding pd = pad_path(path_n, p, q);
  const int m = p.block_count();
  std::vector<KneserSplitResult> out;
  if (pd.k == 0) {
    if (first == 0 && limit > 0) {
      Splitting empty;
      empty.sets.assign(q, VertexSet{});
      out.push_back(finish(path_n, p, q, pd, empty, opt));
    }
    return out;
  }
  const Hypergraph h = build_hypergraph({pd.padded_n, pd.k, q, KneserStability::path});
  const Coloring col = coloring_from_partition(h, VertexPartition(pd.padded_n, pd.blocks), pd.ks);
  std::optional<int> chi;
  if (opt.verify_chromatic) chi = chromatic_number(h, opt.node_budget).chi;
  const int formula = kneser_formula(pd.padded_n, pd.k, q);
  int rank = 0;
  for_each_top_edge(h, col, m + 1, [&](const std::vector<int>& pick) {
    if (rank++ < first) return true;
    Splitting padded;
    for (int i : pick) padded.sets.push_back(h.vertices[i]);
    auto r = finish(path_n, p, q, pd, padded, opt);
    r.chromatic = chi;
    r.formula = formula;
    if (formula != m + 2) r.anomalies.push_back("formula value differs from m+2");
    if (chi && *chi != m + 2) r.anomalies.push_back("chromatic number differs from m+2");
    out.push_back(std::move(r));
    return static_cast<int>(out.size()) < limit;
  });
  return out;
}

KneserSplitResult splitting_from_coloring(int path_n, const VertexPartition& p, int q, const KneserSplitOptions& opt) {
  auto out = splittings_from_top_edges(path_n, p, q, opt, opt.edge_rank, 1);
  if (!out.empty()) return std::move(out.front());
  const Padding pd = pad_path(path_n, p, q);
  KneserSplitResult r;
  r.q = q;
  r.padded_n = pd.padded_n;
  r.k = pd.k;
  r.ks = pd.ks;
  r.ts = pd.ts;
  r.formula = kneser_formula(pd.padded_n, pd.k, q);
  // Only a missing first hyperedge refutes the reduction; a later rank is just out of range.
  if (opt.edge_rank == 0) r.falsification = true;
  else r.anomalies.push_back("edge_rank beyond the number of top-color hyperedges");
  return r;
}

BaseSplitter kneser_base_splitter() {
  BaseSplitter b;
  b.q = 2;
  b.s = 2;
  b.name = "kneser";
  b.run = [](int n, const VertexPartition& p) {
    const auto r = splitting_from_coloring(n, p, 2);
    if (!r.ok()) throw ContractError("kneser base splitter: reduction failed");
    return r.splitting;
  };
  return b;
}

}  // namespace fairsplit
