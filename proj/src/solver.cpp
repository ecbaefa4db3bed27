#include "fairsplit/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <functional>
#include <set>
#include <thread>

#include "fairsplit/errors.hpp"

namespace fairsplit {

std::string to_string(SearchMode m) {
  return m == SearchMode::combinatorial ? "combinatorial" : "geometric";
}

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::exhausted_none: return "exhausted_none";
    case SearchStatus::budget_exceeded: return "budget_exceeded";
  }
  return "unknown";
}

SearchProblem SearchProblem::on_graph(Graph g, VertexPartition p, SplittingSpec spec) {
  SearchProblem pb;
  pb.graph = std::move(g);
  pb.partition = std::move(p);
  pb.spec = spec;
  return pb;
}

SearchProblem SearchProblem::on_complex(SimplicialComplex k, VertexPartition p, SplittingSpec spec) {
  SearchProblem pb;
  pb.complex = std::move(k);
  pb.partition = std::move(p);
  pb.spec = spec;
  return pb;
}

namespace {

std::vector<std::uint64_t> facet_masks(const SimplicialComplex& k) {
  std::vector<std::uint64_t> out;
  for (const auto& f : k.facets()) {
    std::uint64_t m = 0;
    for (int v : f) m |= std::uint64_t{1} << v;
    out.push_back(m);
  }
  return out;
}

}  // namespace

bool SearchProblem::is_face(VertexSet s) const {
  if (graph) return is_independent(*graph, s);
  for (auto m : facet_masks(*complex)) {
    if ((s.bits() & ~m) == 0) return true;
  }
  return false;
}

void SearchProblem::validate() const {
  spec.validate();
  if (graph.has_value() == complex.has_value()) throw InputError("problem: exactly one host (graph or complex) required");
  const int n = partition.vertex_count();
  if (n < 1) throw InputError("problem: empty vertex set");
  if (graph && graph->vertex_count() != n) throw InputError("problem: graph and partition disagree on vertex count");
  if (complex) {
    if (complex->vertex_count() != n) throw InputError("problem: complex and partition disagree on vertex count");
    for (int i = 0; i < n; ++i) {
      if (complex->tags()[i] != VertexTag(i + 1)) throw InputError("problem: complex vertices must be labels 1..N in order");
    }
  }
  if (spec.weak_stability && spec.q < 2) throw InputError("problem: weak stability needs q >= 2");
  if (mode == SearchMode::geometric) {
    if (points.size() != n) throw InputError("problem: geometric mode needs one point per vertex");
    points.validate();
    if (transversal) throw InputError("problem: geometric mode does not combine with transversal search");
    for (int j = 0; j < partition.block_count(); ++j) block_shape(partition.block_size(j), spec.q);
  }
  if (node_budget < 0) throw InputError("problem: negative node budget");
}

BlockShape block_shape(int block_size, int q) {
  if (q < 1) throw InputError("shape: q must be positive");
  BlockShape s;
  s.k = (block_size + q) / q;  // ceil((size + 1) / q)
  s.t = q * s.k - block_size;
  if (s.t < 1 || s.t > q || s.k < std::min(2, s.t)) {
    throw InputError("shape: block of size " + std::to_string(block_size) + " is smaller than q-1");
  }
  return s;
}

bool satisfies_problem(const SearchProblem& problem, const Splitting& sp) {
  const auto& spec = problem.spec;
  const auto& p = problem.partition;
  if (sp.q() != spec.q) return false;
  VertexSet seen;
  for (auto s : sp.sets) {
    if (!s.subset_of(VertexSet::range(p.vertex_count())) || !s.disjoint(seen)) return false;
    seen |= s;
  }
  std::vector<bool> faces;
  for (auto s : sp.sets) faces.push_back(problem.is_face(s));
  const QuotaCertificate c = certify(p, sp, spec, faces);
  if (problem.transversal) {
    if (!c.faces_ok || !c.stability_ok) return false;
    if (spec.weak_stability && !c.weak_stability_ok) return false;
    for (const auto& row : c.counts) {
      for (int x : row) {
        if (x < 1) return false;
      }
    }
    return true;
  }
  if (!c.satisfies(spec)) return false;
  if (problem.mode == SearchMode::geometric) {
    for (int j = 0; j < p.block_count(); ++j) {
      const BlockShape sh = block_shape(p.block_size(j), spec.q);
      int small = 0;
      for (int i = 0; i < spec.q; ++i) {
        if (c.counts[i][j] > sh.k - 1) return false;
        if (c.counts[i][j] <= sh.k - 2) ++small;
      }
      if (small < sh.t - 1) return false;
    }
    if (!hulls_intersect(problem.points, sp.sets)) return false;
  }
  return true;
}

bool splitting_less(const Splitting& a, const Splitting& b) {
  const std::size_t n = std::min(a.sets.size(), b.sets.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.sets[i] == b.sets[i]) continue;
    return lex_less(a.sets[i], b.sets[i]);
  }
  return a.sets.size() < b.sets.size();
}

// ---------------------------------------------------------------------------

namespace {

struct State {
  std::vector<VertexSet> sets;
  std::vector<int> counts;  // counts[i * m + j]
  std::vector<int> deficit;
  std::vector<int> leftover;
  std::vector<int> big;  // sets with count >= k_j - 1 (geometric caps)
  std::vector<int> sizes;
  int opened = 0;
  std::vector<int> owners;  // weak stability: set index per covered position
  std::vector<std::vector<std::uint64_t>> facets;  // complex host: facets still containing S_i
};

class Engine {
 public:
  explicit Engine(const SearchProblem& pb) : pb_(pb) {
    pb.validate();
    n_ = pb.vertex_count();
    q_ = pb.spec.q;
    m_ = pb.partition.block_count();
    geo_ = pb.mode == SearchMode::geometric;
    for (int j = 0; j < m_; ++j) {
      const int size = pb.partition.block_size(j);
      int quota = 0;
      if (pb.transversal) {
        quota = 1;
      } else if (pb.spec.flavor == Flavor::fair) {
        quota = fair_quota(size, q_);
      } else {
        quota = almost_fair_quota(size, q_);
      }
      quota_.push_back(quota);
      int cap = INT_MAX;
      if (pb.spec.strict && (size + 1) % q_ == 0) cap = (size + 1) / q_ - 1;
      BlockShape sh;
      if (geo_) {
        sh = block_shape(size, q_);
        cap = std::min(cap, sh.k - 1);
      }
      shape_.push_back(sh);
      cap_.push_back(cap);
    }
    leftover_cap_ = (pb.transversal || pb.spec.flavor == Flavor::fair) ? INT_MAX : q_ - 1;
    remain_.assign(n_ + 1, 0);
    std::vector<int> seen(m_, 0);
    for (int v = n_; v >= 1; --v) {
      const int j = pb.partition.block_of(v);
      remain_[v] = seen[j];
      ++seen[j];
    }
    if (pb.complex) {
      const auto masks = facet_masks(*pb.complex);
      words_ = static_cast<int>((masks.size() + 63) / 64);
      vertex_facets_.assign(n_ + 1, std::vector<std::uint64_t>(words_, 0));
      full_facets_.assign(words_, 0);
      for (std::size_t f = 0; f < masks.size(); ++f) {
        full_facets_[f / 64] |= std::uint64_t{1} << (f % 64);
        for (int v = 1; v <= n_; ++v) {
          if ((masks[f] >> (v - 1)) & 1U) vertex_facets_[v][f / 64] |= std::uint64_t{1} << (f % 64);
        }
      }
    }
  }

  State initial() const {
    State s;
    s.sets.assign(q_, VertexSet{});
    s.counts.assign(q_ * m_, 0);
    s.deficit.assign(m_, 0);
    for (int j = 0; j < m_; ++j) s.deficit[j] = q_ * quota_[j];
    s.leftover.assign(m_, 0);
    s.big.assign(m_, 0);
    for (int j = 0; j < m_; ++j) {
      if (geo_ && shape_[j].k == 1) s.big[j] = q_;
    }
    s.sizes.assign(q_, 0);
    if (pb_.complex) s.facets.assign(q_, full_facets_);
    return s;
  }

  /// Quick rejection before the search starts.
  bool root_feasible(const State& s) const {
    for (int j = 0; j < m_; ++j) {
      if (s.deficit[j] > pb_.partition.block_size(j)) return false;
      if (quota_[j] > cap_[j]) return false;
    }
    return true;
  }

  int depth_split() const { return n_ > 10 ? 4 : 0; }

  const SearchProblem& pb_;
  int n_ = 0, q_ = 0, m_ = 0;
  bool geo_ = false;
  std::vector<int> quota_, cap_;
  std::vector<BlockShape> shape_;
  int leftover_cap_ = 0;
  std::vector<int> remain_;  // remain_[v] = labels after v in v's block
  int words_ = 0;
  std::vector<std::vector<std::uint64_t>> vertex_facets_;
  std::vector<std::uint64_t> full_facets_;
};

struct Runner {
  explicit Runner(const Engine& eng) : e(eng) {}
  const Engine& e;
  std::int64_t budget = 0;
  std::int64_t nodes = 0;
  bool over = false;
  // frontier collection
  int stop_at = 0;  // collect states when reaching this vertex (0 = never)
  std::vector<State>* frontier = nullptr;
  // enumeration
  bool enumerate = false;
  std::vector<Splitting>* all = nullptr;
  std::optional<Splitting> found;

  bool block_ok(const State& s, int j, int v) const {
    return s.deficit[j] <= e.remain_[v] && s.leftover[j] <= e.leftover_cap_;
  }

  bool balance_ok(const State& s, int v) const {
    if (!e.pb_.spec.balanced) return true;
    const int hi = *std::max_element(s.sizes.begin(), s.sizes.end());
    int need = 0;
    for (int sz : s.sizes) need += std::max(0, hi - 1 - sz);
    return need <= e.n_ - v;
  }

  bool weak_ok(const State& s, int i) const {
    const int q = e.q_;
    const int p = static_cast<int>(s.owners.size());  // position about to be filled
    // Windows start at multiples of q-1 and span q positions.
    for (int k = p / (q - 1); k >= 0 && (q - 1) * k + q - 1 >= p; --k) {
      for (int x = (q - 1) * k; x < p; ++x) {
        if (s.owners[x] == i) return false;
      }
    }
    return true;
  }

  bool leaf(const State& s) {
    const auto& spec = e.pb_.spec;
    if (spec.weak_stability) {
      const int total = static_cast<int>(s.owners.size());
      if (total < e.q_ || (total - 1) % (e.q_ - 1) != 0) return false;
    }
    if (spec.balanced) {
      const auto [lo, hi] = std::minmax_element(s.sizes.begin(), s.sizes.end());
      if (*hi - *lo > 1) return false;
    }
    for (int j = 0; j < e.m_; ++j) {
      if (s.deficit[j] != 0) return false;
    }
    if (e.geo_) {
      for (auto set : s.sets) {
        if (set.empty()) return false;
      }
      if (!hulls_intersect(e.pb_.points, s.sets)) return false;
    }
    Splitting sp{s.sets};
    if (!satisfies_problem(e.pb_, sp)) throw ContractError("solver: leaf passed search checks but failed re-verification");
    return true;
  }

  // Returns true to stop the whole search.
  bool rec(State& s, int v) {
    if (++nodes > budget) {
      over = true;
      return true;
    }
    if (v == e.n_ + 1) {
      if (!leaf(s)) return false;
      if (enumerate) {
        all->push_back(Splitting{s.sets}.canonical());
        return false;
      }
      found = Splitting{s.sets};
      return true;
    }
    if (v == stop_at) {
      frontier->push_back(s);
      return false;
    }
    const auto& spec = e.pb_.spec;
    const int j = e.pb_.partition.block_of(v);
    const int m = e.m_;
    const int limit = std::min(s.opened + 1, e.q_);
    for (int i = 0; i < limit; ++i) {
      VertexSet& set = s.sets[i];
      if (!set.empty() && v - set.max() < spec.stability) continue;
      int& cnt = s.counts[i * m + j];
      if (cnt + 1 > e.cap_[j]) continue;
      if (e.pb_.graph) {
        if (!(e.pb_.graph->neighbors(v) & set).empty()) continue;
      }
      std::vector<std::uint64_t> saved;
      if (e.pb_.complex) {
        auto& fs = s.facets[i];
        bool any = false;
        saved = fs;
        for (int w = 0; w < e.words_; ++w) {
          fs[w] &= e.vertex_facets_[v][w];
          any = any || fs[w] != 0;
        }
        if (!any) {
          fs = saved;
          continue;
        }
      }
      if (spec.weak_stability && !weak_ok(s, i)) {
        if (e.pb_.complex) s.facets[i] = saved;
        continue;
      }
      const bool gets_big = e.geo_ && cnt + 1 == e.shape_[j].k - 1;
      if (gets_big && s.big[j] + 1 > e.q_ - (e.shape_[j].t - 1)) {
        if (e.pb_.complex) s.facets[i] = saved;
        continue;
      }
      // apply
      const bool opening = i == s.opened;
      set.insert(v);
      if (cnt < e.quota_[j]) --s.deficit[j];
      ++cnt;
      ++s.sizes[i];
      if (opening) ++s.opened;
      if (gets_big) ++s.big[j];
      if (spec.weak_stability) s.owners.push_back(i);
      bool stop = false;
      if (block_ok(s, j, v) && balance_ok(s, v)) stop = rec(s, v + 1);
      // undo
      if (spec.weak_stability) s.owners.pop_back();
      if (gets_big) --s.big[j];
      if (opening) --s.opened;
      --s.sizes[i];
      --cnt;
      if (cnt < e.quota_[j]) ++s.deficit[j];
      set.erase(v);
      if (e.pb_.complex) s.facets[i] = saved;
      if (stop) return true;
    }
    // leave v unused
    ++s.leftover[j];
    bool stop = false;
    if (block_ok(s, j, v) && balance_ok(s, v)) stop = rec(s, v + 1);
    --s.leftover[j];
    return stop;
  }
};

struct SubtreeResult {
  std::int64_t nodes = 0;
  bool over = false;
  std::optional<Splitting> found;
  bool done = false;
};

}  // namespace

SearchOutcome find_splitting(const SearchProblem& problem) {
  const auto t0 = std::chrono::steady_clock::now();
  Engine e(problem);
  SearchOutcome out;
  State root = e.initial();
  auto finish = [&](SearchOutcome& o) {
    o.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.splitting) {
      o.splitting = o.splitting->canonical();
      std::vector<bool> faces;
      for (auto s : o.splitting->sets) faces.push_back(problem.is_face(s));
      o.certificate = certify(problem.partition, *o.splitting, problem.spec, faces);
    }
    return o;
  };
  if (!e.root_feasible(root)) {
    out.status = SearchStatus::exhausted_none;
    out.nodes = 1;
    return finish(out);
  }

  // Frontier at a fixed depth; subtrees are then searched in index order semantics.
  std::vector<State> frontier;
  Runner top(e);
  top.budget = problem.node_budget;
  const int split = e.depth_split();
  if (split > 0) {
    top.stop_at = split + 1;
    top.frontier = &frontier;
  }
  top.rec(root, 1);
  out.nodes = top.nodes;
  if (top.over) {
    out.status = SearchStatus::budget_exceeded;
    out.nodes = problem.node_budget;
    return finish(out);
  }
  if (split == 0) {
    out.status = top.found ? SearchStatus::found : SearchStatus::exhausted_none;
    out.splitting = top.found;
    return finish(out);
  }

  const std::int64_t left = problem.node_budget - top.nodes;
  std::vector<SubtreeResult> results(frontier.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{frontier.size()};
  auto worker = [&]() {
    for (;;) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= frontier.size()) return;
      if (idx > best.load()) continue;
      Runner r(e);
      r.budget = left;
      State s = frontier[idx];
      r.rec(s, e.depth_split() + 1);
      results[idx] = {r.nodes, r.over, r.found, true};
      if (r.found || r.over) {
        std::size_t cur = best.load();
        while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
        }
      }
    }
  };
  const int threads = std::max(1, problem.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::int64_t total = top.nodes;
  out.status = SearchStatus::exhausted_none;
  for (const auto& r : results) {
    if (!r.done) break;  // only indices past a stop point are skipped
    total += r.nodes;
    if (r.over || total > problem.node_budget) {
      out.status = SearchStatus::budget_exceeded;
      total = problem.node_budget;
      break;
    }
    if (r.found) {
      out.status = SearchStatus::found;
      out.splitting = r.found;
      break;
    }
  }
  out.nodes = total;
  return finish(out);
}

SearchOutcome find_transversal_splitting(const Graph& g, const VertexPartition& p, int q,
                                         std::int64_t node_budget, int threads) {
  SplittingSpec spec;
  spec.q = q;
  SearchProblem pb = SearchProblem::on_graph(g, p, spec);
  pb.transversal = true;
  pb.node_budget = node_budget;
  pb.threads = threads;
  return find_splitting(pb);
}

SearchOutcome find_geometric_splitting(const SearchProblem& problem) {
  if (problem.mode != SearchMode::geometric) throw InputError("geometric search needs mode=geometric");
  return find_splitting(problem);
}

std::vector<Splitting> enumerate_splittings(const SearchProblem& problem, std::size_t limit) {
  if (limit == 0) return {};
  Engine e(problem);
  State root = e.initial();
  std::vector<Splitting> all;
  if (!e.root_feasible(root)) return all;
  Runner r(e);
  r.budget = problem.node_budget;
  r.enumerate = true;
  r.all = &all;
  r.rec(root, 1);
  if (r.over) throw ResourceError("enumerate: node budget exceeded");
  std::sort(all.begin(), all.end(), splitting_less);
  all.erase(std::unique(all.begin(), all.end()), all.end());
  if (all.size() > limit) all.resize(limit);
  return all;
}

// ---------------------------------------------------------------------------

BruteForceResult brute_force_splittings(const SearchProblem& problem, std::int64_t tuple_budget) {
  problem.validate();
  const int n = problem.vertex_count();
  const int q = problem.spec.q;
  std::vector<VertexSet> faces;
  if (n > 24) throw ResourceError("brute force: too many vertices");
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    if (problem.is_face(VertexSet(bits))) faces.push_back(VertexSet(bits));
  }
  BruteForceResult r;
  std::set<std::vector<std::uint64_t>> seen;
  std::vector<VertexSet> tuple(q);
  std::function<void(int, VertexSet)> loop = [&](int i, VertexSet used) {
    if (i == q) {
      if (++r.tuples > tuple_budget) throw ResourceError("brute force: tuple budget exceeded");
      Splitting sp{tuple};
      if (!satisfies_problem(problem, sp)) return;
      const Splitting c = sp.canonical();
      std::vector<std::uint64_t> key;
      for (auto s : c.sets) key.push_back(s.bits());
      if (seen.insert(key).second) r.solutions.push_back(c);
      return;
    }
    for (auto f : faces) {
      if (!f.disjoint(used)) continue;
      tuple[i] = f;
      loop(i + 1, used | f);
    }
  };
  loop(0, VertexSet{});
  std::sort(r.solutions.begin(), r.solutions.end(), splitting_less);
  r.exists = !r.solutions.empty();
  return r;
}

}  // namespace fairsplit
