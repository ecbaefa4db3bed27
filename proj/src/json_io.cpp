#include "fairsplit/json_io.hpp"

#include "fairsplit/errors.hpp"

namespace fairsplit {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("json: missing field \"") + key + "\"");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw InputError(std::string("json: field \"") + key + "\" must be an integer");
  return v.get<int>();
}

int as_int(const Json& v, const char* what) {
  if (!v.is_number_integer()) throw InputError(std::string("json: ") + what + " must be an integer");
  return v.get<int>();
}

template <typename F>
void each(const Json& v, const char* what, F&& f) {
  if (!v.is_array()) throw InputError(std::string("json: ") + what + " must be an array");
  for (const auto& x : v) f(x);
}

Json sets_to_json(const std::vector<VertexSet>& sets) {
  Json a = Json::array();
  for (auto s : sets) a.push_back(set_to_json(s));
  return a;
}

Json strings(const std::vector<std::string>& v) {
  Json a = Json::array();
  for (const auto& s : v) a.push_back(s);
  return a;
}

}  // namespace

void expect_schema(const Json& j, const char* expected) {
  if (!j.is_object()) throw InputError("json: document must be an object");
  if (j.contains("schema") && j.at("schema") != expected) {
    throw InputError(std::string("json: schema must be ") + expected);
  }
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("json: ") + e.what());
  }
}

Json rational_to_json(const Rational& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p()) return r.get_num().get_si();
  return r.get_str();
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    Rational r;
    if (r.set_str(j.get<std::string>(), 10) != 0) throw InputError("json: bad rational " + j.get<std::string>());
    if (r.get_den() == 0) throw InputError("json: zero denominator");
    r.canonicalize();
    return r;
  }
  throw InputError("json: rationals are integers or \"a/b\" strings");
}

Json set_to_json(VertexSet s) { return s.labels(); }

VertexSet set_from_json(const Json& j, int n) {
  VertexSet s;
  each(j, "vertex set", [&](const Json& x) {
    const int v = as_int(x, "vertex label");
    if (v < 1 || v > n) throw InputError("json: label " + std::to_string(v) + " outside 1.." + std::to_string(n));
    if (s.contains(v)) throw InputError("json: repeated label " + std::to_string(v));
    s.insert(v);
  });
  return s;
}

std::string to_string(Flavor f) { return f == Flavor::fair ? "fair" : "almost"; }

Flavor flavor_from_string(const std::string& s) {
  if (s == "fair") return Flavor::fair;
  if (s == "almost" || s == "almost_fair") return Flavor::almost_fair;
  throw InputError("flavor must be fair or almost");
}

Json spec_to_json(const SplittingSpec& spec) {
  return {{"q", spec.q},
          {"flavor", to_string(spec.flavor)},
          {"balanced", spec.balanced},
          {"stability", spec.stability},
          {"weak", spec.weak_stability},
          {"strict", spec.strict}};
}

SplittingSpec spec_from_json(const Json& j) {
  SplittingSpec s;
  if (!j.is_object()) throw InputError("json: spec must be an object");
  if (j.contains("q")) s.q = as_int(j.at("q"), "q");
  if (j.contains("flavor")) s.flavor = flavor_from_string(j.at("flavor").get<std::string>());
  if (j.contains("balanced")) s.balanced = j.at("balanced").get<bool>();
  if (j.contains("stability")) s.stability = as_int(j.at("stability"), "stability");
  if (j.contains("weak")) s.weak_stability = j.at("weak").get<bool>();
  if (j.contains("strict")) s.strict = j.at("strict").get<bool>();
  s.validate();
  return s;
}

Json graph_to_json(const Graph& g) {
  Json e = Json::array();
  for (auto [u, v] : g.edges()) e.push_back({u, v});
  return {{"n", g.vertex_count()}, {"edges", e}};
}

Graph graph_from_json(const Json& j) {
  const int n = int_field(j, "n");
  if (n < 0 || n > 64) throw InputError("json: n must lie in 0..64");
  std::vector<Edge> edges;
  if (j.contains("edges")) {
    each(j.at("edges"), "edges", [&](const Json& e) {
      if (!e.is_array() || e.size() != 2) throw InputError("json: an edge is a pair of labels");
      edges.emplace_back(as_int(e[0], "edge end"), as_int(e[1], "edge end"));
    });
  }
  return Graph(n, edges);
}

Json partition_to_json(const VertexPartition& p) { return sets_to_json(p.blocks()); }

VertexPartition partition_from_json(const Json& j, int n) {
  if (j.contains("partition") && j.contains("intervals")) throw InputError("json: give partition or intervals, not both");
  if (j.contains("intervals")) {
    std::vector<int> sizes;
    each(j.at("intervals"), "intervals", [&](const Json& x) { sizes.push_back(as_int(x, "interval size")); });
    const auto p = VertexPartition::intervals(sizes);
    if (p.vertex_count() != n) throw InputError("json: interval sizes must sum to n");
    return p;
  }
  if (!j.contains("partition")) return VertexPartition::whole(n);
  std::vector<VertexSet> blocks;
  each(j.at("partition"), "partition", [&](const Json& b) { blocks.push_back(set_from_json(b, n)); });
  return VertexPartition(n, blocks);
}

Json splitting_to_json(const Splitting& sp) { return {{"schema", schema::splitting}, {"sets", sets_to_json(sp.sets)}}; }

Splitting splitting_from_json(const Json& j, int n) {
  Splitting sp;
  const Json& sets = j.is_array() ? j : field(j, "sets");
  if (!j.is_array() && j.contains("schema") && j.at("schema") != schema::outcome) expect_schema(j, schema::splitting);
  each(sets, "sets", [&](const Json& s) { sp.sets.push_back(set_from_json(s, n)); });
  return sp;
}

Json complex_to_json(const SimplicialComplex& k) {
  return {{"schema", schema::complex}, {"vertices", k.tags()}, {"facets", k.facets()}};
}

SimplicialComplex complex_from_json(const Json& j) {
  expect_schema(j, schema::complex);
  std::vector<std::vector<int>> facets;
  each(field(j, "facets"), "facets", [&](const Json& f) {
    std::vector<int> face;
    each(f, "facet", [&](const Json& x) { face.push_back(as_int(x, "facet entry")); });
    facets.push_back(face);
  });
  if (j.contains("vertices")) {
    const Json& tags = j.at("vertices");
    if (!tags.is_array()) throw InputError("json: vertices must be an array");
    std::vector<VertexTag> t(tags.begin(), tags.end());
    for (const auto& f : facets) {
      for (int i : f) {
        if (i < 0 || i >= static_cast<int>(t.size())) throw InputError("json: facet index out of range");
      }
    }
    return SimplicialComplex(t, facets);
  }
  return SimplicialComplex::from_labels(int_field(j, "n"), facets);
}

Json points_to_json(const PointConfiguration& c) {
  Json pts = Json::array();
  for (const auto& p : c.points) {
    Json row = Json::array();
    for (const auto& x : p) row.push_back(rational_to_json(x));
    pts.push_back(row);
  }
  Json out = {{"schema", schema::points}, {"dim", c.dim}, {"points", pts}};
  if (!c.params.empty()) {
    Json ps = Json::array();
    for (const auto& t : c.params) ps.push_back(rational_to_json(t));
    out["params"] = ps;
  }
  return out;
}

PointConfiguration points_from_json(const Json& j) {
  expect_schema(j, schema::points);
  PointConfiguration c;
  if (j.contains("moment_params")) {
    std::vector<Rational> ts;
    each(j.at("moment_params"), "moment_params", [&](const Json& x) { ts.push_back(rational_from_json(x)); });
    return moment_curve(ts, int_field(j, "dim"));
  }
  c.dim = int_field(j, "dim");
  each(field(j, "points"), "points", [&](const Json& p) {
    RationalPoint pt;
    each(p, "point", [&](const Json& x) { pt.push_back(rational_from_json(x)); });
    c.points.push_back(pt);
  });
  if (j.contains("params")) {
    each(j.at("params"), "params", [&](const Json& x) { c.params.push_back(rational_from_json(x)); });
  }
  c.validate();
  return c;
}

Json problem_to_json(const SearchProblem& pb) {
  Json j = {{"schema", schema::instance},
            {"n", pb.vertex_count()},
            {"partition", partition_to_json(pb.partition)},
            {"spec", spec_to_json(pb.spec)}};
  if (pb.graph) j["edges"] = graph_to_json(*pb.graph)["edges"];
  if (pb.complex) {
    Json facets = Json::array();
    for (const auto& f : pb.complex->facets()) {
      Json face = Json::array();
      for (int i : f) face.push_back(pb.complex->tags()[i]);
      facets.push_back(face);
    }
    j["complex"] = {{"facets", facets}};
  }
  if (pb.mode == SearchMode::geometric) {
    j["mode"] = to_string(pb.mode);
    j["points"] = points_to_json(pb.points);
  }
  if (pb.transversal) j["transversal"] = true;
  return j;
}

SearchProblem problem_from_json(const Json& j) {
  expect_schema(j, schema::instance);
  const int n = int_field(j, "n");
  if (n < 0 || n > 64) throw InputError("json: n must lie in 0..64");
  const VertexPartition p = partition_from_json(j, n);
  const SplittingSpec spec = j.contains("spec") ? spec_from_json(j.at("spec")) : SplittingSpec{};
  SearchProblem pb;
  if (j.contains("complex")) {
    if (j.contains("edges")) throw InputError("json: give edges or complex, not both");
    std::vector<std::vector<int>> facets;
    each(field(j.at("complex"), "facets"), "facets", [&](const Json& f) {
      std::vector<int> face;
      each(f, "facet", [&](const Json& x) { face.push_back(as_int(x, "facet label")); });
      facets.push_back(face);
    });
    pb = SearchProblem::on_complex(SimplicialComplex::from_labels(n, facets), p, spec);
  } else {
    pb = SearchProblem::on_graph(graph_from_json(j), p, spec);
  }
  if (j.contains("mode")) {
    if (!j.at("mode").is_string()) throw InputError("json: mode must be a string");
    const std::string m = j.at("mode").get<std::string>();
    if (m == "geometric") {
      pb.mode = SearchMode::geometric;
    } else if (m != "combinatorial") {
      throw InputError("json: mode must be combinatorial or geometric");
    }
  }
  if (j.contains("points")) pb.points = points_from_json(j.at("points"));
  if (j.contains("transversal")) {
    if (!j.at("transversal").is_boolean()) throw InputError("json: transversal must be a boolean");
    pb.transversal = j.at("transversal").get<bool>();
  }
  return pb;
}

KneserInstance kneser_from_json(const Json& j) {
  expect_schema(j, schema::kneser);
  KneserInstance k;
  k.n = int_field(j, "n");
  k.k = int_field(j, "k");
  if (j.contains("q")) k.q = int_field(j, "q");
  if (j.contains("stability")) k.stability = kneser_stability_from_string(j.at("stability").get<std::string>());
  return k;
}

Json kneser_to_json(const KneserInstance& k) {
  return {{"schema", schema::kneser}, {"n", k.n}, {"k", k.k}, {"q", k.q}, {"stability", to_string(k.stability)}};
}

Json certificate_to_json(const QuotaCertificate& c) {
  return {{"q", c.q},
          {"counts", c.counts},
          {"block_sizes", c.block_sizes},
          {"fair_quota", c.fair_quota},
          {"almost_quota", c.almost_quota},
          {"leftover", c.leftover},
          {"set_sizes", c.set_sizes},
          {"disjoint", c.disjoint_ok},
          {"faces", c.faces_ok},
          {"fair", c.fair_ok},
          {"almost_fair", c.almost_fair_ok},
          {"balanced", c.balanced_ok},
          {"stable", c.stability_ok},
          {"weak", to_string(c.weak)},
          {"weak_ok", c.weak_stability_ok},
          {"strict", c.strict_ok}};
}

Json outcome_to_json(const SearchOutcome& o) {
  Json j = {{"schema", schema::outcome}, {"status", to_string(o.status)}, {"nodes", o.nodes}};
  if (o.splitting) j["sets"] = sets_to_json(o.splitting->sets);
  if (o.certificate) j["certificate"] = certificate_to_json(*o.certificate);
  return j;
}

namespace {

Json verdict_json(const Verdict& v) { return {{"holds", v.holds}, {"witness", v.witness}}; }

Json deletion_json(const PathDeletion& d) {
  Json j = verdict_json(d.verdict);
  j["paths_tried"] = d.paths_tried;
  if (d.path) j["path"] = *d.path;
  return j;
}

}  // namespace

Json conditions_to_json(const ConditionReport& r) {
  Json eng = verdict_json(r.engstrom.verdict);
  eng["worst_vertex"] = r.engstrom.worst_vertex;
  eng["worst_value"] = r.engstrom.worst_value;
  return {{"schema", schema::conditions},
          {"q", r.q},
          {"n", r.n},
          {"structure_n", r.structure_n},
          {"q_prime", r.q_prime},
          {"q_prime_power", r.q_prime_power},
          {"engstrom", eng},
          {"bmz_structure", verdict_json(r.bmz_structure)},
          {"hell_path", verdict_json(r.hell_path)},
          {"corollary_a", deletion_json(r.corollary_a)},
          {"corollary_b", deletion_json(r.corollary_b)},
          {"transversal_bound", verdict_json(r.transversal_bound)},
          {"implies_splitting", r.implies_splitting()}};
}

Json homology_to_json(const std::vector<HomologyGroup>& groups) {
  Json a = Json::array();
  for (const auto& g : groups) a.push_back({{"dim", g.dim}, {"betti", g.betti}, {"torsion", g.torsion}});
  return {{"schema", schema::homology}, {"reduced", a}};
}

Json zero_set_to_json(const ZeroSetReport& r) {
  return {{"q", r.q},
          {"k", r.k},
          {"t", r.t},
          {"faces", r.faces},
          {"sigma_faces", r.sigma_faces},
          {"chains_checked", r.chains_checked},
          {"sigma_downward_closed", r.sigma_downward_closed},
          {"sigma_size_bound", r.sigma_size_bound},
          {"every_vertex_assigned", r.every_vertex_assigned},
          {"violations", strings(r.violations)},
          {"ok", r.ok()}};
}

Json equivariance_to_json(const EquivarianceReport& r) {
  return {{"q", r.q},
          {"generators_only", r.generators_only},
          {"permutations", r.permutations},
          {"checks", r.checks},
          {"violations", strings(r.violations)},
          {"ok", r.ok()}};
}

Json general_position_to_json(const GeneralPositionReport& r) {
  Json j = {{"ok", r.ok}, {"families_checked", r.families_checked}};
  if (!r.ok) j["witness"] = sets_to_json(r.witness);
  return j;
}

Json weak_stability_to_json(const WeakStabilityReport& r) {
  Json mm = Json::array();
  for (const auto& f : r.mismatches) mm.push_back(sets_to_json(f));
  return {{"q", r.q},
          {"n", r.n},
          {"families", r.families},
          {"intersecting", r.intersecting},
          {"weakly_stable", r.weakly_stable},
          {"mismatches", mm},
          {"holds", r.holds()}};
}

Json composition_to_json(const CompositionResult& r) {
  return {{"schema", schema::composition},
          {"sets", sets_to_json(r.splitting.sets)},
          {"stability", r.stability},
          {"weak_stability", r.weak_stability},
          {"certificate", certificate_to_json(r.certificate)}};
}

Json chromatic_to_json(const ChromaticResult& r, bool with_witness) {
  Json j = {{"schema", schema::kneser_chi}, {"chi", r.chi}, {"lower_bound", r.lower_bound}, {"nodes", r.nodes}};
  if (with_witness) j["coloring"] = r.witness.color;
  return j;
}

Json kneser_split_to_json(const KneserSplitResult& r) {
  Json j = {{"schema", schema::kneser_split},
            {"q", r.q},
            {"padded_n", r.padded_n},
            {"k", r.k},
            {"ks", r.ks},
            {"ts", r.ts},
            {"formula", r.formula},
            {"falsification", r.falsification},
            {"padded_sets", sets_to_json(r.padded.sets)},
            {"sets", sets_to_json(r.splitting.sets)},
            {"anomalies", strings(r.anomalies)},
            {"ok", r.ok()}};
  if (r.chromatic) j["chromatic"] = *r.chromatic;
  if (!r.falsification) j["certificate"] = certificate_to_json(r.certificate);
  if (r.rebalance) {
    j["rebalance"] = {{"ell1", r.rebalance->ell1}, {"ell2", r.rebalance->ell2}, {"removals", r.rebalance->removals}};
  }
  return j;
}

}  // namespace fairsplit
