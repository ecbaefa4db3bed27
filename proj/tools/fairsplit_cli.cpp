#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "fairsplit/acceptance.hpp"
#include "fairsplit/errors.hpp"
#include "fairsplit/json_io.hpp"

using namespace fairsplit;

namespace {

enum Exit { kOk = 0, kNegative = 1, kInput = 2, kBudget = 3, kInternal = 4 };

struct Result {
  Json out;
  int code = kOk;
};

struct Common {
  std::string input;
  int q = 2;
  std::string flavor = "almost";
  bool balanced = false;
  int stability = 1;
  bool weak = false;
  std::string mode = "combinatorial";
  int threads = 1;
  std::int64_t budget = 0;
  bool seedless = false;
};

std::string read_text(const std::string& path) {
  std::stringstream ss;
  if (path.empty() || path == "-") {
    // cached so that --seedless can run a command twice
    static const std::string stdin_text = [] {
      std::stringstream in;
      in << std::cin.rdbuf();
      return in.str();
    }();
    return stdin_text;
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    ss << in.rdbuf();
  }
  return ss.str();
}

Json read_json(const std::string& path) { return parse_json(read_text(path)); }

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      out.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw InputError("not an integer list: " + s);
    }
  }
  return out;
}

// Command-line flags override the instance's own spec only when given.
void apply_overrides(SearchProblem& pb, const Common& c, const CLI::App& app) {
  if (app.count("--q")) pb.spec.q = c.q;
  if (app.count("--flavor")) pb.spec.flavor = flavor_from_string(c.flavor);
  if (app.count("--balanced")) pb.spec.balanced = c.balanced;
  if (app.count("--stability")) pb.spec.stability = c.stability;
  if (app.count("--weak")) pb.spec.weak_stability = c.weak;
  if (app.count("--mode")) {
    if (c.mode == "geometric") {
      pb.mode = SearchMode::geometric;
    } else if (c.mode == "combinatorial") {
      pb.mode = SearchMode::combinatorial;
    } else {
      throw InputError("--mode must be combinatorial or geometric");
    }
  }
  pb.threads = c.threads;
  if (c.budget > 0) pb.node_budget = c.budget;
  pb.spec.validate();
}

int status_code(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return kOk;
    case SearchStatus::exhausted_none: return kNegative;
    case SearchStatus::budget_exceeded: return kBudget;
  }
  return kInternal;
}

VertexPartition path_partition(int n, const std::string& intervals, const std::string& input) {
  if (!input.empty()) {
    const Json j = read_json(input);
    return partition_from_json(j, n);
  }
  if (intervals.empty()) return VertexPartition::whole(n);
  const auto p = VertexPartition::intervals(parse_ints(intervals));
  if (p.vertex_count() != n) throw InputError("--intervals must sum to --n");
  return p;
}

PointConfiguration configuration(const std::string& input, int moment, int dim, bool stretched) {
  if (!input.empty()) return points_from_json(read_json(input));
  if (moment <= 0 || dim <= 0) throw InputError("give --input or --moment N with --dim D");
  if (stretched) return stretched_moment_points(moment, dim);
  std::vector<Rational> ts;
  for (int i = 1; i <= moment; ++i) ts.emplace_back(i);
  return moment_curve(ts, dim);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fair splittings of graphs and complexes by independent sets"};
  app.require_subcommand(1);
  Common c;
  std::string output;

  auto common = [&](CLI::App* s, bool spec_flags) {
    s->add_option("--input", c.input, "input JSON file, - for stdin");
    s->add_option("--threads", c.threads, "worker threads")->check(CLI::Range(1, 256));
    s->add_option("--budget", c.budget, "node budget");
    s->add_flag("--seedless", c.seedless, "run twice and require identical output");
    s->add_option("--output", output, "write JSON here instead of stdout");
    if (!spec_flags) return;
    s->add_option("--q", c.q, "number of sets");
    s->add_option("--flavor", c.flavor, "fair or almost")->check(CLI::IsMember({"fair", "almost"}));
    s->add_flag("--balanced", c.balanced, "sizes differ by at most one");
    s->add_option("--stability", c.stability, "every set s-stable along the labels");
    s->add_flag("--weak", c.weak, "weakly q-stable family");
    s->add_option("--mode", c.mode, "combinatorial or geometric")->check(CLI::IsMember({"combinatorial", "geometric"}));
  };

  std::function<Result()> run;

  // generate
  auto* gen = app.add_subcommand("generate", "emit an instance JSON");
  common(gen, true);
  std::string family_name, params, intervals, corpus_dir;
  int random_blocks = 0;
  unsigned seed = 1;
  gen->add_option("--family", family_name, "cycle, path, power_path, cliques_plus_isolated, path_union_cliques, path_with_two_triangles");
  gen->add_option("--params", params, "comma separated family parameters");
  gen->add_option("--intervals", intervals, "consecutive block sizes");
  gen->add_option("--random-blocks", random_blocks, "random partition into this many blocks");
  gen->add_option("--seed", seed, "seed for --random-blocks");
  gen->add_option("--corpus", corpus_dir, "write the built-in corpus to this directory");
  gen->callback([&] {
    run = [&]() -> Result {
      if (!corpus_dir.empty()) {
        std::filesystem::create_directories(corpus_dir);
        Json names = Json::array();
        for (const auto& [name, pb] : builtin_corpus()) {
          std::ofstream(std::filesystem::path(corpus_dir) / (name + ".json")) << problem_to_json(pb).dump(2) << "\n";
          names.push_back(name);
        }
        return {{{"written", names}}, kOk};
      }
      if (family_name.empty()) throw InputError("generate needs --family or --corpus");
      const Graph g = generate_family(family_name, parse_ints(params));
      const int n = g.vertex_count();
      VertexPartition p = VertexPartition::whole(n);
      if (!intervals.empty()) {
        p = VertexPartition::intervals(parse_ints(intervals));
        if (p.vertex_count() != n) throw InputError("--intervals must sum to the vertex count");
      } else if (random_blocks > 0) {
        if (random_blocks > n) throw InputError("--random-blocks exceeds the vertex count");
        std::mt19937 rng(seed);
        std::vector<int> ids(n);
        for (int v = 0; v < n; ++v) ids[v] = v < random_blocks ? v : static_cast<int>(rng() % random_blocks);
        for (int i = n - 1; i > 0; --i) std::swap(ids[i], ids[rng() % (i + 1)]);
        std::vector<VertexSet> blocks(random_blocks);
        for (int v = 0; v < n; ++v) blocks[ids[v]].insert(v + 1);
        p = VertexPartition(n, blocks);
      }
      auto pb = SearchProblem::on_graph(g, p, SplittingSpec{});
      apply_overrides(pb, c, *gen);
      return {problem_to_json(pb), kOk};
    };
  });

  // solve
  auto* solve = app.add_subcommand("solve", "search for a splitting");
  common(solve, true);
  bool transversal = false;
  std::size_t all = 0;
  solve->add_flag("--transversal", transversal, "every set meets every block instead of the quotas");
  solve->add_option("--all", all, "enumerate up to this many solutions");
  solve->callback([&] {
    run = [&]() -> Result {
      auto pb = problem_from_json(read_json(c.input));
      apply_overrides(pb, c, *solve);
      if (transversal) pb.transversal = true;
      if (all > 0) {
        Json sols = Json::array();
        for (const auto& sp : enumerate_splittings(pb, all)) sols.push_back(splitting_to_json(sp)["sets"]);
        return {{{"schema", schema::outcome}, {"solutions", sols}}, sols.empty() ? kNegative : kOk};
      }
      const auto out = find_splitting(pb);
      return {outcome_to_json(out), status_code(out.status)};
    };
  });

  // verify
  auto* verify = app.add_subcommand("verify", "certify a splitting against an instance");
  common(verify, true);
  std::string splitting_file;
  verify->add_option("--splitting", splitting_file, "splitting or outcome JSON")->required();
  verify->callback([&] {
    run = [&]() -> Result {
      auto pb = problem_from_json(read_json(c.input));
      apply_overrides(pb, c, *verify);
      const Splitting sp = splitting_from_json(read_json(splitting_file), pb.vertex_count());
      std::vector<bool> faces;
      for (auto s : sp.sets) faces.push_back(pb.is_face(s));
      const auto cert = certify(pb.partition, sp, pb.spec, faces);
      const bool ok = satisfies_problem(pb, sp);
      return {{{"schema", schema::verification}, {"valid", ok}, {"certificate", certificate_to_json(cert)}},
              ok ? kOk : kNegative};
    };
  });

  // check-conditions
  auto* cond = app.add_subcommand("check-conditions", "hypothesis predicates for a graph and partition");
  common(cond, true);
  int cond_n = 0;
  cond->add_option("--n", cond_n, "n for the size gate (default m+2)");
  cond->callback([&] {
    run = [&]() -> Result {
      auto pb = problem_from_json(read_json(c.input));
      apply_overrides(pb, c, *cond);
      if (!pb.graph) throw InputError("check-conditions needs a graph instance");
      const auto rep = check_conditions(*pb.graph, pb.partition, pb.spec.q,
                                        cond_n > 0 ? std::optional<int>(cond_n) : std::nullopt,
                                        c.budget > 0 ? c.budget : kDefaultPathBudget);
      return {conditions_to_json(rep), rep.implies_splitting() ? kOk : kNegative};
    };
  });

  // geometry
  auto* geo = app.add_subcommand("geometry", "exact convex-hull oracles");
  common(geo, false);
  std::string task = "sgp", sets_text;
  int moment = 0, dim = 0, geo_q = 2, geo_n = 0;
  bool stretched = false;
  geo->add_option("--task", task, "sgp, tverberg, intersect, gale, weak-equivalence")
      ->check(CLI::IsMember({"sgp", "tverberg", "intersect", "gale", "weak-equivalence"}));
  geo->add_option("--moment", moment, "use N points on the moment curve");
  geo->add_option("--dim", dim, "ambient dimension for --moment");
  geo->add_flag("--stretched", stretched, "stretched parameters base^(2^i)");
  geo->add_option("--q", geo_q, "number of sets");
  geo->add_option("--n", geo_n, "weak-equivalence: families of (q-1)n+1 points");
  geo->add_option("--sets", sets_text, "intersect and gale: JSON array of label lists");
  geo->callback([&] {
    run = [&]() -> Result {
      Json out = {{"schema", schema::geometry}, {"task", task}};
      if (task == "gale") {
        const Json s = parse_json(sets_text);
        if (!s.is_array() || s.size() != 2) throw InputError("--sets must hold two label lists");
        out["alternating"] = gale_alternating(set_from_json(s[0], 64), set_from_json(s[1], 64));
        return {out, kOk};
      }
      const auto cfg = configuration(c.input, moment, dim, stretched);
      out["points"] = points_to_json(cfg);
      if (task == "sgp") {
        const auto r = strong_general_position_check(cfg, geo_q);
        out["report"] = general_position_to_json(r);
        return {out, r.ok ? kOk : kNegative};
      }
      if (task == "tverberg") {
        const auto r = tverberg_search(cfg, geo_q);
        out["found"] = r.has_value();
        if (r) out["partition"] = splitting_to_json(Splitting{*r})["sets"];
        return {out, r ? kOk : kNegative};
      }
      if (task == "intersect") {
        const Json s = parse_json(sets_text);
        std::vector<VertexSet> sets;
        if (!s.is_array()) throw InputError("--sets must be a JSON array");
        for (const auto& x : s) sets.push_back(set_from_json(x, cfg.size()));
        out["intersect"] = hulls_intersect(cfg, sets);
        return {out, out["intersect"].get<bool>() ? kOk : kNegative};
      }
      const auto r = weak_stability_equivalence(cfg, geo_q, geo_n);
      out["report"] = weak_stability_to_json(r);
      return {out, r.holds() ? kOk : kNegative};
    };
  });

  // phi-check
  auto* phi = app.add_subcommand("phi-check", "zero set and equivariance of the constraint map");
  common(phi, false);
  int pq = 2, pk = 2, pt = 1;
  std::string order;
  bool literal = false;
  phi->add_option("--q", pq, "q")->required();
  phi->add_option("--k", pk, "k")->required();
  phi->add_option("--t", pt, "t")->required();
  phi->add_option("--order", order, "vertex order as a comma separated permutation");
  phi->add_flag("--literal", literal, "also run the all-chains check");
  phi->callback([&] {
    run = [&]() -> Result {
      const auto inst = PhiInstance::build(pq, pk, pt, parse_ints(order));
      const auto z = verify_zero_set(inst);
      const auto e = verify_equivariance(inst);
      Json out = {{"schema", schema::phi}, {"zero_set", zero_set_to_json(z)}, {"equivariance", equivariance_to_json(e)}};
      bool ok = z.ok() && e.ok();
      if (literal) {
        const auto l = verify_zero_set_literal(inst);
        out["literal"] = zero_set_to_json(l);
        ok = ok && l.ok();
      }
      return {out, ok ? kOk : kNegative};
    };
  });

  // compose
  auto* comp = app.add_subcommand("compose", "compose exhaustive path splitters");
  common(comp, false);
  int path_n = 0, power_t = 0, q1 = 2, q2 = 2, s1 = 2, s2 = 2;
  std::string comp_intervals;
  bool weak_first = false;
  comp->add_option("--n", path_n, "path length")->required();
  comp->add_option("--intervals", comp_intervals, "consecutive block sizes");
  comp->add_option("--t", power_t, "2^t sets by iterated composition");
  comp->add_option("--q1", q1, "sets of the first stage");
  comp->add_option("--q2", q2, "sets of the second stage");
  comp->add_option("--s1", s1, "stability of the first stage");
  comp->add_option("--s2", s2, "stability of the second stage");
  comp->add_flag("--weak-first", weak_first, "first stage weakly q1-stable");
  comp->callback([&] {
    run = [&]() -> Result {
      const auto p = path_partition(path_n, comp_intervals, c.input);
      const std::int64_t b = c.budget > 0 ? c.budget : kDefaultNodeBudget;
      CompositionResult r;
      if (power_t > 0) {
        const auto base = exhaustive_path_splitter(2, 2, false, b, c.threads);
        r = power_of_two_splitting(path_n, p, power_t, &base);
      } else {
        r = compose(path_n, p, exhaustive_path_splitter(q1, s1, weak_first, b, c.threads),
                    exhaustive_path_splitter(q2, s2, false, b, c.threads));
      }
      return {composition_to_json(r), kOk};
    };
  });

  // kneser-chi
  auto* kchi = app.add_subcommand("kneser-chi", "exact chromatic number of a Kneser hypergraph");
  common(kchi, false);
  KneserInstance ki;
  std::string kstab = "none";
  bool witness = false;
  kchi->add_option("--n", ki.n, "ground set size");
  kchi->add_option("--k", ki.k, "subset size");
  kchi->add_option("--q", ki.q, "edge size");
  kchi->add_option("--stability", kstab, "none, cycle or path");
  kchi->add_flag("--witness", witness, "include an optimal coloring");
  kchi->callback([&] {
    run = [&]() -> Result {
      KneserInstance inst = ki;
      if (!c.input.empty()) {
        inst = kneser_from_json(read_json(c.input));
      } else {
        inst.stability = kneser_stability_from_string(kstab);
      }
      const auto h = build_hypergraph(inst);
      const auto r = chromatic_number(h, c.budget > 0 ? c.budget : kDefaultColoringBudget);
      Json out = chromatic_to_json(r, witness);
      out["instance"] = kneser_to_json(inst);
      out["vertices"] = h.vertices.size();
      out["edges"] = h.edges.size();
      out["formula"] = kneser_formula(inst.n, inst.k, inst.q);
      return {out, kOk};
    };
  });

  // kneser-split
  auto* ksplit = app.add_subcommand("kneser-split", "splitting of a path from a Kneser coloring");
  common(ksplit, false);
  int ks_n = 0, ks_q = 2;
  std::string ks_intervals;
  KneserSplitOptions ks_opt;
  ksplit->add_option("--n", ks_n, "path length")->required();
  ksplit->add_option("--q", ks_q, "number of sets");
  ksplit->add_option("--intervals", ks_intervals, "consecutive block sizes");
  ksplit->add_flag("--verify-chromatic", ks_opt.verify_chromatic, "compute the chromatic number at the padded size");
  ksplit->add_flag("--strict", ks_opt.strict, "demand balance when every block has size qk-1 or qk");
  ksplit->add_option("--edge-rank", ks_opt.edge_rank, "use this top-color hyperedge in index order");
  ksplit->callback([&] {
    run = [&]() -> Result {
      const auto p = path_partition(ks_n, ks_intervals, c.input);
      if (c.budget > 0) ks_opt.node_budget = c.budget;
      const auto r = splitting_from_coloring(ks_n, p, ks_q, ks_opt);
      return {kneser_split_to_json(r), r.ok() ? kOk : kNegative};
    };
  });

  // homology
  auto* hom = app.add_subcommand("homology", "reduced integral homology");
  common(hom, false);
  int max_dim = 3;
  hom->add_option("--max-dim", max_dim, "highest dimension");
  hom->callback([&] {
    run = [&]() -> Result {
      const Json j = read_json(c.input);
      SimplicialComplex k;
      if (j.value("schema", "") == schema::instance) {
        const auto pb = problem_from_json(j);
        k = pb.complex ? *pb.complex : independence_complex(*pb.graph);
      } else {
        k = complex_from_json(j);
      }
      return {homology_to_json(reduced_homology(k, max_dim)), kOk};
    };
  });

  // suite
  auto* suite = app.add_subcommand("suite", "run the acceptance battery");
  common(suite, false);
  SuiteOptions sopt;
  std::string suite_json;
  suite->add_option("--only", sopt.only, "criterion ids")->delimiter(',');
  suite->add_option("--corpus", sopt.corpus_dir, "directory of extra instances");
  suite->add_option("--determinism-threads", sopt.determinism_threads, "thread count of the second run");
  suite->callback([&] {
    run = [&]() -> Result {
      sopt.threads = c.threads;
      sopt.on_result = [](const CriterionResult& r) { std::fprintf(stderr, "%s\n", format_line(r).c_str()); };
      const auto results = run_acceptance(sopt);
      bool ok = true;
      for (const auto& r : results) ok = ok && r.pass();
      return {suite_to_json(results), ok ? kOk : kNegative};
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    Result r = run();
    std::string text = r.out.dump(2) + "\n";
    if (c.seedless) {
      const Result again = run();
      if (again.out.dump(2) + "\n" != text || again.code != r.code) {
        throw ContractError("--seedless: two runs produced different output");
      }
    }
    if (output.empty()) {
      std::fputs(text.c_str(), stdout);
    } else {
      std::ofstream(output) << text;
    }
    return r.code;
  } catch (const InputError& e) {
    std::fprintf(stderr, "input error: %s\n", e.what());
    return kInput;
  } catch (const nlohmann::json::exception& e) {
    std::fprintf(stderr, "input error: %s\n", e.what());
    return kInput;
  } catch (const ResourceError& e) {
    std::fprintf(stderr, "budget exceeded: %s\n", e.what());
    return kBudget;
  } catch (const ContractError& e) {
    std::fprintf(stderr, "internal check failed: %s\n", e.what());
    return kInternal;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kInternal;
  }
}
