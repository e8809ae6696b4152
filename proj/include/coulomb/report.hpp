#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "coulomb/quiver.hpp"

namespace coulomb {

// One verified identity or computed finding. The anchor is a stable label
// for what the check verifies, carried into reports and golden files.
struct CheckRecord {
  std::string id;
  std::string anchor;
  std::string status;  // "pass" | "fail" | "finding"
  nlohmann::json witness;
};

struct Report {
  std::string tool = "coulomb";
  std::string version = "0.1.0";
  nlohmann::json input;
  std::vector<CheckRecord> checks;
  // Excluded from the canonical JSON unless requested, so that reports are
  // byte-stable across runs.
  std::optional<double> timing_seconds;

  void add(std::string id, std::string anchor, bool pass, nlohmann::json witness = {});
  void add_finding(std::string id, std::string anchor, nlohmann::json witness);

  int failures() const;
  int exit_code() const { return failures() == 0 ? 0 : 1; }
  nlohmann::json to_json() const;
  std::string render_text() const;
};

// Quiver JSON format:
//   {"vertices":[{"id":"1","v":1,"w":0,"d":3},...],
//    "cartan":[[2,-1],[-3,2]],
//    "edges":[{"from":"2","to":"1"}]}
// "d" may be omitted on all vertices (minimal symmetrizer applies);
// "edges" may be omitted (each pair is oriented from the later vertex to
// the earlier one). Unknown keys are rejected.
ValuedQuiver quiver_from_json(const nlohmann::json& j);
ValuedQuiver load_quiver_file(const std::string& path);
nlohmann::json quiver_to_json(const ValuedQuiver& q);

// Replays every golden file (*.json) in the directory.
Report run_corpus(const std::string& dir);

// Executes one golden check description, returning the record.
CheckRecord run_corpus_check(const nlohmann::json& spec);

}  // namespace coulomb
