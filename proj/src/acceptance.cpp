#include "fairsplit/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "fairsplit/errors.hpp"

namespace fairsplit {

namespace {

// Portable across standard libraries: mt19937 output is specified, distributions are not.
int pick(std::mt19937& rng, int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1)); }

std::vector<int> shuffled(std::vector<int> v, std::mt19937& rng) {
  for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) std::swap(v[i], v[pick(rng, 0, i)]);
  return v;
}

std::vector<int> iota_vec(int n, int first = 1) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), first);
  return v;
}

// Restricted-growth strings with every block size satisfying ok(size).
void for_each_rgs(int n, const std::function<bool(int)>& block_ok, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> b(n, 0), sizes;
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      if (std::all_of(sizes.begin(), sizes.end(), block_ok)) f(b);
      return;
    }
    for (int c = 0; c <= static_cast<int>(sizes.size()); ++c) {
      if (c == static_cast<int>(sizes.size())) sizes.push_back(0);
      b[i] = c;
      ++sizes[c];
      rec(i + 1);
      if (--sizes[c] == 0) sizes.pop_back();
    }
  };
  if (n > 0) rec(0);
}

// Relabels blocks by first appearance.
std::vector<int> normalize_rgs(const std::vector<int>& ids) {
  std::vector<int> first(ids.size(), -1), out(ids.size());
  int next = 0;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (first[ids[i]] < 0) first[ids[i]] = next++;
    out[i] = first[ids[i]];
  }
  return out;
}

bool rotation_minimal(const std::vector<int>& rgs) {
  const int n = static_cast<int>(rgs.size());
  for (int r = 1; r < n; ++r) {
    std::vector<int> rot(n);
    for (int i = 0; i < n; ++i) rot[i] = rgs[(i + r) % n];
    if (normalize_rgs(rot) < rgs) return false;
  }
  return true;
}

Json sets_json(const std::vector<VertexSet>& s) {
  Json a = Json::array();
  for (auto x : s) a.push_back(x.labels());
  return a;
}

// ---- criterion 1 -------------------------------------------------------------

CriterionResult c1(const SuiteOptions& opt) {
  CriterionResult r;
  r.name = "six-cycle balanced almost fair splitting";
  r.limit_seconds = 1;
  SplittingSpec spec;
  spec.q = 2;
  spec.balanced = true;
  spec.strict = true;
  auto pb = SearchProblem::on_graph(family::cycle(6), VertexPartition::intervals({3, 3}), spec);
  pb.threads = opt.threads;
  const auto out = find_splitting(pb);
  bool ones = out.certificate.has_value();
  if (out.certificate) {
    for (const auto& row : out.certificate->counts) {
      for (int c : row) ones = ones && c == 1;
    }
  }
  r.correct = out.status == SearchStatus::found && ones && out.certificate->satisfies(spec) &&
              satisfies_problem(pb, *out.splitting);
  r.detail = outcome_to_json(out);
  return r;
}

// ---- criterion 2 -------------------------------------------------------------

CriterionResult c2(const SuiteOptions& opt) {
  CriterionResult r;
  r.name = "cycles up to 12 with odd blocks";
  r.limit_seconds = 300;
  Json per_n = Json::array();
  bool ok = true;
  std::int64_t total = 0, nodes = 0;
  Json failures = Json::array();
  for (int n = 3; n <= 12; ++n) {
    const Graph g = family::cycle(n);
    int count = 0;
    for_each_rgs(n, [](int s) { return s % 2 == 1; }, [&](const std::vector<int>& rgs) {
      if (!rotation_minimal(rgs)) return;
      SplittingSpec spec;
      spec.q = 2;
      spec.balanced = true;
      auto pb = SearchProblem::on_graph(g, VertexPartition::from_block_ids(rgs), spec);
      pb.threads = opt.threads;
      const auto out = find_splitting(pb);
      ++count;
      nodes += out.nodes;
      if (out.status != SearchStatus::found || !satisfies_problem(pb, *out.splitting)) {
        ok = false;
        if (failures.size() < 10) failures.push_back({{"n", n}, {"blocks", rgs}, {"status", to_string(out.status)}});
      }
    });
    total += count;
    per_n.push_back({{"n", n}, {"partitions", count}});
  }
  r.correct = ok;
  r.detail = {{"per_n", per_n}, {"instances", total}, {"nodes", nodes}, {"failures", failures}};
  return r;
}

// ---- criterion 3 -------------------------------------------------------------

CriterionResult c3(const SuiteOptions& opt) {
  CriterionResult r;
  r.name = "path plus two triangles has no splitting";
  r.limit_seconds = 10;
  SplittingSpec spec;
  spec.q = 2;
  auto pb = SearchProblem::on_graph(family::path_with_two_triangles(8),
                                    VertexPartition::from_block_ids({0, 0, 0, 1, 1, 0, 0, 0}), spec);
  pb.threads = opt.threads;
  const auto out = find_splitting(pb);
  const auto bf = brute_force_splittings(pb);
  r.correct = out.status == SearchStatus::exhausted_none && !bf.exists;
  r.detail = outcome_to_json(out);
  r.detail["brute_force_tuples"] = bf.tuples;
  return r;
}

// ---- criterion 4 -------------------------------------------------------------

CriterionResult c4(const SuiteOptions&) {
  CriterionResult r;
  r.name = "constraint map zero set and equivariance";
  r.limit_seconds = 300;
  std::mt19937 rng(4);
  Json rows = Json::array();
  bool ok = true;
  int triples = 0;
  for (int q = 2; q <= 8; ++q) {
    for (int k = 1; q * k - q <= 7; ++k) {
      for (int t = 1; t <= q; ++t) {
        const int n = q * k - t;
        if (n > 7 || k < std::min(t, 2)) continue;
        ++triples;
        for (int o = 0; o < 4; ++o) {
          // order 0 is the identity; three shuffled orders follow
          const auto order = o == 0 ? iota_vec(n) : shuffled(iota_vec(n), rng);
          const auto inst = PhiInstance::build(q, k, t, order);
          const auto z = verify_zero_set(inst);
          const auto e = verify_equivariance(inst);
          Json row = {{"q", q}, {"k", k}, {"t", t}, {"order", order}, {"zero_set", zero_set_to_json(z)},
                      {"equivariance", equivariance_to_json(e)}};
          if (n <= 3) {
            const auto lit = verify_zero_set_literal(inst);
            row["literal_ok"] = lit.ok();
            ok = ok && lit.ok();
          }
          ok = ok && z.ok() && e.ok();
          rows.push_back(row);
        }
      }
    }
  }
  r.correct = ok;
  r.detail = {{"triples", triples}, {"runs", rows}};
  return r;
}

// ---- criterion 5 -------------------------------------------------------------

CriterionResult c5(const SuiteOptions&) {
  CriterionResult r;
  r.name = "alternation agrees with hull intersection";
  r.limit_seconds = 120;
  bool ok = true;
  std::int64_t pairs = 0, intersecting = 0;
  Json mismatches = Json::array();
  for (int d = 1; d <= 2; ++d) {
    for (int n = 2 * d + 2; n <= 8; ++n) {
      for (int variant = 0; variant < 2; ++variant) {
        std::vector<Rational> params;
        for (int i = 1; i <= n; ++i) params.emplace_back(variant == 0 ? i : i * i - 3 * i);
        if (variant == 1) params.front() = -5;
        std::vector<Rational> sorted = params;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        if (static_cast<int>(sorted.size()) != n) continue;
        const auto config = moment_points(sorted, d);
        for_each_disjoint_family(n, 2, 2 * d + 2, 2 * d + 2, [&](const std::vector<VertexSet>& fam) {
          if (fam[0].size() != d + 1) return true;
          ++pairs;
          const bool alt = gale_alternating(fam[0], fam[1]);
          const bool hit = hulls_intersect(config, fam);
          intersecting += hit;
          if (alt != hit) {
            ok = false;
            if (mismatches.size() < 10) mismatches.push_back({{"d", d}, {"n", n}, {"sets", sets_json(fam)}});
          }
          return true;
        });
      }
    }
  }
  r.correct = ok && pairs > 0;
  r.detail = {{"pairs", pairs}, {"intersecting", intersecting}, {"mismatches", mismatches}};
  return r;
}

// ---- criterion 6 -------------------------------------------------------------

CriterionResult c6(const SuiteOptions&) {
  CriterionResult r;
  r.name = "Tverberg partitions and their sharpness";
  r.limit_seconds = 120;
  bool ok = true;
  Json rows = Json::array();
  for (auto [q, d] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 1}}) {
    const int n = (q - 1) * (d + 1);
    std::vector<Rational> params;
    for (int i = 1; i <= n + 1; ++i) params.emplace_back(i);
    const auto found = tverberg_search(moment_curve(params, d), q);
    params.pop_back();
    const auto small = moment_curve(params, d);
    const auto sgp = strong_general_position_check(small, q);
    const auto none = tverberg_search(small, q);
    Json row = {{"q", q}, {"d", d}, {"points", n + 1}, {"sgp_ok", sgp.ok}, {"absent", !none.has_value()}};
    if (found) row["partition"] = sets_json(*found);
    ok = ok && found.has_value() && sgp.ok && !none.has_value();
    rows.push_back(row);
  }
  r.correct = ok;
  r.detail = {{"cases", rows}};
  return r;
}

// ---- criterion 7 -------------------------------------------------------------

VertexPartition random_partition(int n, int m, int min_size, std::mt19937& rng) {
  std::vector<int> sizes(m, min_size);
  for (int extra = n - m * min_size; extra > 0; --extra) ++sizes[pick(rng, 0, m - 1)];
  const auto labels = shuffled(iota_vec(n), rng);
  std::vector<VertexSet> blocks(m);
  int at = 0;
  for (int j = 0; j < m; ++j) {
    for (int x = 0; x < sizes[j]; ++x) blocks[j].insert(labels[at++]);
  }
  return VertexPartition(n, blocks);
}

bool degree_ok(const Graph& g, int q) {
  for (int v = 1; v <= g.vertex_count(); ++v) {
    if (engstrom_value(g, v) >= q) return false;
  }
  return true;
}

Graph sparse_graph(int n, int q, int tries, std::mt19937& rng) {
  Graph g(n);
  for (int i = 0; i < tries; ++i) {
    const int u = pick(rng, 1, n), v = pick(rng, 1, n);
    if (u == v || g.adjacent(u, v)) continue;
    Graph h = g.with_edges({{std::min(u, v), std::max(u, v)}});
    if (degree_ok(h, q)) g = h;
  }
  return g;
}

Graph add_random_path(const Graph& g, int len, std::mt19937& rng) {
  const auto order = shuffled(iota_vec(g.vertex_count()), rng);
  std::vector<Edge> extra;
  for (int i = 1; i < len; ++i) {
    const int u = order[i - 1], v = order[i];
    if (!g.adjacent(u, v)) extra.emplace_back(std::min(u, v), std::max(u, v));
  }
  return g.with_edges(extra);
}

CriterionResult c7(const SuiteOptions& opt) {
  CriterionResult r;
  r.name = "hypothesis instances always split";
  r.limit_seconds = 600;
  std::mt19937 rng(7);
  Json rows = Json::array();
  int tested = 0, falsified = 0, budget = 0;
  auto record = [&](const char* kind, int q, const Graph& g, const VertexPartition& p, const SearchOutcome& out) {
    ++tested;
    if (out.status == SearchStatus::exhausted_none) ++falsified;
    if (out.status == SearchStatus::budget_exceeded) ++budget;
    rows.push_back({{"kind", kind}, {"q", q}, {"graph", graph_to_json(g)}, {"partition", partition_to_json(p)},
                    {"status", to_string(out.status)}});
  };
  auto solve = [&](const Graph& g, const VertexPartition& p, int q) {
    SplittingSpec spec;
    spec.q = q;
    auto pb = SearchProblem::on_graph(g, p, spec);
    pb.threads = opt.threads;
    return find_splitting(pb);
  };

  // Sparse graph plus a simple path, degree bound after deleting the path.
  const int qa[] = {2, 3, 4, 5};
  int made = 0;
  for (int attempt = 0; made < 32 && attempt < 2000; ++attempt) {
    const int q = qa[attempt % 4];
    const int max_m = (14 - 1) / (q - 1) - 2;
    if (max_m < 1) continue;
    const int m = pick(rng, 1, std::min(max_m, 4));
    const int n = pick(rng, (q - 1) * (m + 2) + 1, 14);
    const auto p = random_partition(n, m, q - 1, rng);
    const Graph g = add_random_path(sparse_graph(n, q, 3 * n, rng), pick(rng, 2, n), rng);
    if (!check_corollary_a(g, p, q).verdict.holds) continue;
    record("sparse_plus_path", q, g, p, solve(g, p, q));
    ++made;
  }

  // A path edge-disjointly united with (q-1)-cliques and one isolated vertex.
  made = 0;
  const int qb[] = {2, 3, 5};
  for (int attempt = 0; made < 12 && attempt < 2000; ++attempt) {
    const int q = qb[attempt % 3];
    const int max_ns = (14 - 1) / (q - 1);
    const int ns = pick(rng, 2, max_ns);
    const int n = (q - 1) * ns + 1;
    const int m = pick(rng, 1, ns - 1);
    if (n < m * (q - 1)) continue;
    const auto labels = shuffled(iota_vec(n), rng);
    std::vector<Edge> edges;
    for (int c = 0; c < ns; ++c) {
      for (int a = 0; a < q - 1; ++a) {
        for (int b = a + 1; b < q - 1; ++b) {
          const int u = labels[c * (q - 1) + a], v = labels[c * (q - 1) + b];
          edges.emplace_back(std::min(u, v), std::max(u, v));
        }
      }
    }
    Graph base(n, edges);
    Graph g = add_random_path(base, pick(rng, 2, n), rng);
    const auto p = random_partition(n, m, q - 1, rng);
    if (!check_corollary_b(g, p, q).verdict.holds) continue;
    record("path_plus_cliques", q, g, p, solve(g, p, q));
    ++made;
  }

  // Transversals: degree bound and |V_j| >= 2q-1.
  made = 0;
  for (int attempt = 0; made < 12 && attempt < 2000; ++attempt) {
    const int q = qa[attempt % 4];
    const int max_m = 14 / (2 * q - 1);
    const int m = pick(rng, 1, std::min(max_m, 3));
    const int n = pick(rng, m * (2 * q - 1), 14);
    const auto p = random_partition(n, m, 2 * q - 1, rng);
    const Graph g = sparse_graph(n, q, 3 * n, rng);
    if (!check_transversal_bound(g, p, q).holds) continue;
    record("transversal", q, g, p, find_transversal_splitting(g, p, q, kDefaultNodeBudget, opt.threads));
    ++made;
  }

  r.correct = tested >= 50 && falsified == 0 && budget == 0;
  r.detail = {{"tested", tested}, {"falsified", falsified}, {"budget_exceeded", budget}, {"instances", rows}};
  return r;
}

// ---- criterion 8 -------------------------------------------------------------

CriterionResult c8(const SuiteOptions&) {
  CriterionResult r;
  r.name = "Kneser chromatic numbers";
  r.limit_seconds = 300;
  bool ok = true;
  Json rows = Json::array();
  for (int n = 2; n <= 8; ++n) {
    for (int k = 1; 2 * k <= n; ++k) {
      const auto c = chromatic_number(build_hypergraph({n, k, 2, KneserStability::none}));
      ok = ok && c.chi == n - 2 * k + 2 && c.chi == kneser_formula(n, k, 2);
      rows.push_back({{"n", n}, {"k", k}, {"chi", c.chi}, {"expected", n - 2 * k + 2}});
    }
  }
  const auto stab = chromatic_number(build_hypergraph({6, 2, 2, KneserStability::path}));
  ok = ok && stab.chi == 4;
  r.correct = ok;
  r.detail = {{"kneser", rows}, {"path_stable_6_2", stab.chi}};
  return r;
}

// ---- criterion 9 -------------------------------------------------------------

CriterionResult c9(const SuiteOptions&) {
  CriterionResult r;
  r.name = "Kneser reduction on paths";
  r.limit_seconds = 300;
  std::int64_t instances = 0, runs = 0, rebalanced = 0, removals = 0;
  Json failures = Json::array();
  Json example;
  auto check = [&](int n, const VertexPartition& p, bool all_edges) {
    ++instances;
    const auto results = splittings_from_top_edges(n, p, 2, {}, 0, all_edges ? 1'000'000 : 1);
    if (results.empty() && failures.size() < 10) failures.push_back({{"n", n}, {"partition", partition_to_json(p)}});
    for (const auto& res : results) {
      ++runs;
      if (!res.ok() || !res.certificate.balanced_ok || !res.certificate.almost_fair_ok || !res.certificate.stability_ok) {
        if (failures.size() < 10) failures.push_back(kneser_split_to_json(res));
      }
      if (res.rebalance && res.rebalance->ell2 - res.rebalance->ell1 >= 2) {
        ++rebalanced;
        removals += res.rebalance->removals;
        if (example.is_null()) example = kneser_split_to_json(res);
      }
    }
  };
  // Interval partitions in every shape, each top-color hyperedge.
  for (int n = 1; n <= 12; ++n) {
    for (unsigned cuts = 0; cuts < (1U << (n - 1)); ++cuts) {
      std::vector<int> sizes{1};
      for (int i = 0; i < n - 1; ++i) {
        if ((cuts >> i) & 1U) {
          sizes.push_back(1);
        } else {
          ++sizes.back();
        }
      }
      check(n, VertexPartition::intervals(sizes), true);
    }
  }
  // Arbitrary set partitions on shorter paths, first hyperedge only.
  for (int n = 1; n <= 9; ++n) {
    for_each_rgs(n, [](int) { return true; }, [&](const std::vector<int>& rgs) {
      check(n, VertexPartition::from_block_ids(rgs), false);
    });
  }
  r.correct = failures.empty() && rebalanced > 0;
  r.detail = {{"instances", instances}, {"reductions", runs}, {"rebalanced_gap_2", rebalanced},
              {"removals", removals}, {"failures", failures}, {"example", example}};
  return r;
}

// ---- criterion 10 ------------------------------------------------------------

CriterionResult c10(const SuiteOptions& opt) {
  CriterionResult r;
  r.name = "power of two composition on path(31)";
  r.limit_seconds = 120;
  std::mt19937 rng(10);
  const BaseSplitter base = exhaustive_path_splitter(2, 2, false, kDefaultNodeBudget, opt.threads);
  bool ok = true;
  Json rows = Json::array();
  std::vector<VertexPartition> parts{VertexPartition::whole(31), VertexPartition::intervals({3, 4, 5, 6, 13})};
  for (int i = 0; i < 10; ++i) {
    const int m = pick(rng, 1, 7);
    parts.push_back(random_partition(31, m, 3, rng));
  }
  for (const auto& p : parts) {
    const auto res = power_of_two_splitting(31, p, 2, &base);
    SplittingSpec spec;
    spec.q = 4;
    spec.stability = 4;
    const auto cert = certify(p, res.splitting, spec, std::vector<bool>(4, true));
    bool quota = true;
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < p.block_count(); ++j) {
        quota = quota && cert.counts[i][j] >= (p.block_size(j) + 1) / 4 - 1;
      }
    }
    const bool good = res.splitting.q() == 4 && cert.disjoint_ok && cert.stability_ok && cert.almost_fair_ok && quota;
    ok = ok && good;
    rows.push_back({{"partition", partition_to_json(p)}, {"sets", sets_json(res.splitting.sets)}, {"ok", good}});
  }
  r.correct = ok;
  r.detail = {{"runs", rows}};
  return r;
}

// ---- criterion 11 ------------------------------------------------------------

CriterionResult c11(const SuiteOptions& opt) {
  CriterionResult r;
  r.name = "solver agrees with brute force on the corpus";
  r.limit_seconds = 600;
  auto corpus = builtin_corpus();
  if (!opt.corpus_dir.empty()) {
    for (auto& x : load_corpus(opt.corpus_dir)) corpus.push_back(std::move(x));
  }
  bool ok = true;
  int used = 0;
  Json rows = Json::array();
  for (auto& [name, pb] : corpus) {
    if (pb.vertex_count() > 12) continue;
    ++used;
    pb.threads = opt.threads;
    const auto out = find_splitting(pb);
    const auto bf = brute_force_splittings(pb);
    const bool found = out.status == SearchStatus::found;
    bool agree = out.status != SearchStatus::budget_exceeded && found == bf.exists;
    if (found) {
      agree = agree && satisfies_problem(pb, *out.splitting) &&
              std::binary_search(bf.solutions.begin(), bf.solutions.end(), out.splitting->canonical(), splitting_less);
    }
    ok = ok && agree;
    rows.push_back({{"name", name}, {"status", to_string(out.status)}, {"solutions", bf.solutions.size()},
                    {"agree", agree}});
  }
  r.correct = ok && used > 0;
  r.detail = {{"instances", used}, {"results", rows}};
  return r;
}

using Runner = CriterionResult (*)(const SuiteOptions&);
constexpr Runner kRunners[] = {c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11};

CriterionResult timed(int id, const SuiteOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    r = kRunners[id - 1](opt);
  } catch (const std::exception& e) {
    r.correct = false;
    r.detail = {{"error", e.what()}};
  }
  r.id = id;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace

std::vector<std::pair<std::string, SearchProblem>> builtin_corpus() {
  std::vector<std::pair<std::string, SearchProblem>> out;
  auto add = [&](std::string name, SearchProblem pb) { out.emplace_back(std::move(name), std::move(pb)); };
  auto spec_of = [](int q, Flavor f, bool balanced, int stab = 1, bool weak = false) {
    SplittingSpec s;
    s.q = q;
    s.flavor = f;
    s.balanced = balanced;
    s.stability = stab;
    s.weak_stability = weak;
    return s;
  };
  const Flavor af = Flavor::almost_fair, ff = Flavor::fair;

  add("c6-33-balanced", SearchProblem::on_graph(family::cycle(6), VertexPartition::intervals({3, 3}), spec_of(2, af, true)));
  add("two-triangles", SearchProblem::on_graph(family::path_with_two_triangles(8),
                                               VertexPartition::from_block_ids({0, 0, 0, 1, 1, 0, 0, 0}), spec_of(2, af, false)));
  for (int n = 3; n <= 9; ++n) {
    add("cycle" + std::to_string(n) + "-whole-fair", SearchProblem::on_graph(family::cycle(n), VertexPartition::whole(n), spec_of(2, ff, false)));
    add("cycle" + std::to_string(n) + "-whole-q3", SearchProblem::on_graph(family::cycle(n), VertexPartition::whole(n), spec_of(3, af, true)));
  }
  add("path7-q2-stab3", SearchProblem::on_graph(Graph(7), VertexPartition::intervals({3, 4}), spec_of(2, af, false, 3)));
  add("path9-q3-weak", SearchProblem::on_graph(family::path(9), VertexPartition::intervals({4, 5}), spec_of(3, af, false, 1, true)));
  add("path10-q2-fair", SearchProblem::on_graph(family::path(10), VertexPartition::intervals({2, 3, 5}), spec_of(2, ff, true)));
  add("cliques-isolated-3", SearchProblem::on_graph(family::cliques_plus_isolated(3, 3), VertexPartition::intervals({3, 4}), spec_of(3, af, false)));
  add("path-union-cliques-3", SearchProblem::on_graph(family::path_union_cliques(3, 3), VertexPartition::intervals({2, 5}), spec_of(3, af, false)));
  add("power-path-9-2", SearchProblem::on_graph(family::power_path(9, 2), VertexPartition::intervals({4, 5}), spec_of(3, af, false)));
  add("k4-fair", SearchProblem::on_graph(Graph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}), VertexPartition::whole(4), spec_of(2, ff, false)));

  std::mt19937 rng(11);
  for (int i = 0; i < 24; ++i) {
    const int n = pick(rng, 5, 10);
    std::vector<Edge> edges;
    const int target = pick(rng, 0, n + 2);
    for (int e = 0; e < target; ++e) {
      const int u = pick(rng, 1, n), v = pick(rng, 1, n);
      if (u != v) edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    const int q = pick(rng, 2, 3);
    const int m = pick(rng, 1, std::max(1, n / q));
    const auto p = random_partition(n, m, 1, rng);
    auto spec = spec_of(q, pick(rng, 0, 3) == 0 ? ff : af, pick(rng, 0, 1) == 1);
    add("random-" + std::to_string(i), SearchProblem::on_graph(Graph(n, edges), p, spec));
  }

  add("sarkaria-1-1", SearchProblem::on_complex(sarkaria_complex({1, 1}), VertexPartition::intervals({3, 3}), spec_of(2, af, false)));
  add("sarkaria-2", SearchProblem::on_complex(sarkaria_complex({2}), VertexPartition::whole(5), spec_of(2, af, false)));
  add("skeleton-6-1", SearchProblem::on_complex(skeleton(SimplicialComplex::simplex(6), 1), VertexPartition::intervals({2, 4}), spec_of(3, af, false)));
  add("octahedron", SearchProblem::on_complex(SimplicialComplex::from_labels(6, {{1, 2, 3}, {1, 2, 6}, {1, 5, 3}, {1, 5, 6}, {4, 2, 3}, {4, 2, 6}, {4, 5, 3}, {4, 5, 6}}),
                                              VertexPartition::intervals({3, 3}), spec_of(2, af, true)));

  auto tr = SearchProblem::on_graph(family::cycle(8), VertexPartition::intervals({4, 4}), spec_of(2, af, false));
  tr.transversal = true;
  add("cycle8-transversal", tr);
  auto star = SearchProblem::on_graph(Graph(4, {{1, 2}, {1, 3}, {1, 4}}), VertexPartition::intervals({1, 3}), spec_of(2, af, false));
  star.transversal = true;
  add("star-transversal", star);

  std::vector<Rational> ts;
  for (int i = 1; i <= 5; ++i) ts.emplace_back(i);
  auto geo = SearchProblem::on_graph(Graph(5), VertexPartition::whole(5), spec_of(2, af, false));
  geo.mode = SearchMode::geometric;
  geo.points = moment_curve(ts, 1);
  add("geometric-5-line", geo);
  ts.emplace_back(6);
  ts.emplace_back(7);
  auto geo2 = SearchProblem::on_graph(family::path(7), VertexPartition::intervals({3, 4}), spec_of(2, af, false));
  geo2.mode = SearchMode::geometric;
  geo2.points = moment_points(ts, 1);
  add("geometric-7-plane", geo2);
  return out;
}

std::vector<std::pair<std::string, SearchProblem>> load_corpus(const std::string& dir) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<std::pair<std::string, SearchProblem>> out;
  for (const auto& f : files) {
    std::ifstream in(f);
    std::stringstream ss;
    ss << in.rdbuf();
    const Json j = parse_json(ss.str());
    if (j.value("schema", "") != schema::instance) continue;
    out.emplace_back(f.filename().string(), problem_from_json(j));
  }
  return out;
}

CriterionResult run_criterion(int id, const SuiteOptions& opt) {
  if (id < 1 || id > 12) throw InputError("suite: criteria are numbered 1..12");
  if (id <= 11) return timed(id, opt);

  CriterionResult r;
  r.id = 12;
  r.name = "determinism across thread counts";
  r.limit_seconds = 1800;
  const auto t0 = std::chrono::steady_clock::now();
  SuiteOptions a = opt, b = opt;
  a.only.clear();
  b.only.clear();
  a.on_result = nullptr;
  b.on_result = nullptr;
  a.threads = 1;
  b.threads = std::max(2, opt.determinism_threads);
  std::vector<CriterionResult> ra, rb;
  for (int i = 1; i <= 11; ++i) ra.push_back(timed(i, a));
  for (int i = 1; i <= 11; ++i) rb.push_back(timed(i, b));
  const std::string ja = suite_to_json(ra).dump(), jb = suite_to_json(rb).dump();
  r.correct = ja == jb;
  r.detail = {{"threads", {a.threads, b.threads}}, {"bytes", ja.size()}, {"identical", ja == jb}};
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<CriterionResult> run_acceptance(const SuiteOptions& opt) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 12; ++id) {
    if (!opt.only.empty() && std::find(opt.only.begin(), opt.only.end(), id) == opt.only.end()) continue;
    out.push_back(run_criterion(id, opt));
    if (opt.on_result) opt.on_result(out.back());
  }
  return out;
}

Json suite_to_json(const std::vector<CriterionResult>& results) {
  Json a = Json::array();
  for (const auto& r : results) a.push_back({{"id", r.id}, {"name", r.name}, {"correct", r.correct}, {"detail", r.detail}});
  return {{"schema", schema::suite}, {"criteria", a}};
}

std::string format_line(const CriterionResult& r) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "[%s] %2d  %-48s %8.2fs (limit %.0fs)", r.pass() ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.seconds, r.limit_seconds);
  std::string s = buf;
  if (!r.correct && r.detail.contains("error")) s += "  error: " + r.detail["error"].get<std::string>();
  return s;
}

}  // namespace fairsplit
