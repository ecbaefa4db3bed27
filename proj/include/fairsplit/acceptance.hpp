#pragma once

// The acceptance battery: twelve criteria, each with a deterministic JSON detail.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "fairsplit/json_io.hpp"

namespace fairsplit {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool correct = false;   // the mathematical check
  double seconds = 0;     // wall time, printed but never serialized
  double limit_seconds = 0;
  Json detail;
  bool pass() const { return correct && seconds <= limit_seconds; }
};

struct SuiteOptions {
  int threads = 1;
  int determinism_threads = 4;  // second run of criterion 12
  std::string corpus_dir;       // extra *.json instances for criterion 11
  std::vector<int> only;        // empty = all
  std::function<void(const CriterionResult&)> on_result;
};

/// Named instances with at most 12 vertices used by the completeness oracle.
std::vector<std::pair<std::string, SearchProblem>> builtin_corpus();
/// Instances from every *.json file in dir, sorted by file name.
std::vector<std::pair<std::string, SearchProblem>> load_corpus(const std::string& dir);

CriterionResult run_criterion(int id, const SuiteOptions& opt);
std::vector<CriterionResult> run_acceptance(const SuiteOptions& opt);

/// {"schema", "criteria": [{id, name, correct, detail}]} without timings.
Json suite_to_json(const std::vector<CriterionResult>& results);
std::string format_line(const CriterionResult& r);

}  // namespace fairsplit
