#pragma once

// JSON reading and writing for every interchange object. Documents carry a
// "schema" field naming their layout; see docs/schemas.md.

#include <string>
#include <vector>

#include <json.hpp>

#include "fairsplit/complex.hpp"
#include "fairsplit/composition.hpp"
#include "fairsplit/constraint_map.hpp"
#include "fairsplit/geometry.hpp"
#include "fairsplit/graph.hpp"
#include "fairsplit/kneser.hpp"
#include "fairsplit/obstruction.hpp"
#include "fairsplit/solver.hpp"

namespace fairsplit {

using Json = nlohmann::json;

namespace schema {
inline constexpr const char* instance = "fairsplit.instance/1";
inline constexpr const char* splitting = "fairsplit.splitting/1";
inline constexpr const char* complex = "fairsplit.complex/1";
inline constexpr const char* points = "fairsplit.points/1";
inline constexpr const char* kneser = "fairsplit.kneser/1";
inline constexpr const char* outcome = "fairsplit.outcome/1";
inline constexpr const char* verification = "fairsplit.verification/1";
inline constexpr const char* conditions = "fairsplit.conditions/1";
inline constexpr const char* geometry = "fairsplit.geometry/1";
inline constexpr const char* phi = "fairsplit.phi/1";
inline constexpr const char* composition = "fairsplit.composition/1";
inline constexpr const char* kneser_chi = "fairsplit.kneser-chi/1";
inline constexpr const char* kneser_split = "fairsplit.kneser-split/1";
inline constexpr const char* homology = "fairsplit.homology/1";
inline constexpr const char* suite = "fairsplit.suite/1";
}  // namespace schema

/// Throws InputError unless j is an object whose "schema" (when present) equals `expected`.
void expect_schema(const Json& j, const char* expected);

/// Parses text, mapping parse failures to InputError.
Json parse_json(const std::string& text);

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json set_to_json(VertexSet s);
VertexSet set_from_json(const Json& j, int n);

std::string to_string(Flavor f);
Flavor flavor_from_string(const std::string& s);

Json spec_to_json(const SplittingSpec& spec);
/// Missing keys keep their defaults.
SplittingSpec spec_from_json(const Json& j);

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);
Json partition_to_json(const VertexPartition& p);
/// "partition": label lists, or "intervals": sizes; absent means one block.
VertexPartition partition_from_json(const Json& j, int n);

Json splitting_to_json(const Splitting& sp);
/// Accepts a splitting document, an outcome document, or a bare array of label lists.
Splitting splitting_from_json(const Json& j, int n);

Json complex_to_json(const SimplicialComplex& k);
/// {"vertices": tags, "facets": index lists} or {"n": N, "facets": label lists}.
SimplicialComplex complex_from_json(const Json& j);

Json points_to_json(const PointConfiguration& c);
PointConfiguration points_from_json(const Json& j);

/// An instance document: graph or complex host, partition, optional spec and points.
Json problem_to_json(const SearchProblem& pb);
SearchProblem problem_from_json(const Json& j);

KneserInstance kneser_from_json(const Json& j);
Json kneser_to_json(const KneserInstance& k);

Json certificate_to_json(const QuotaCertificate& c);
Json outcome_to_json(const SearchOutcome& o);
Json conditions_to_json(const ConditionReport& r);
Json homology_to_json(const std::vector<HomologyGroup>& groups);
Json zero_set_to_json(const ZeroSetReport& r);
Json equivariance_to_json(const EquivarianceReport& r);
Json general_position_to_json(const GeneralPositionReport& r);
Json weak_stability_to_json(const WeakStabilityReport& r);
Json composition_to_json(const CompositionResult& r);
Json chromatic_to_json(const ChromaticResult& r, bool with_witness);
Json kneser_split_to_json(const KneserSplitResult& r);

}  // namespace fairsplit
