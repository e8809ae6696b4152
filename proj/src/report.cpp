#include "coulomb/report.hpp"

#include <fstream>
#include <sstream>

namespace coulomb {

void Report::add(std::string id, std::string anchor, bool pass, nlohmann::json witness) {
  checks.push_back({std::move(id), std::move(anchor), pass ? "pass" : "fail",
                    std::move(witness)});
}

void Report::add_finding(std::string id, std::string anchor, nlohmann::json witness) {
  checks.push_back({std::move(id), std::move(anchor), "finding", std::move(witness)});
}

int Report::failures() const {
  int n = 0;
  for (const auto& c : checks)
    if (c.status == "fail") ++n;
  return n;
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["tool"] = tool;
  j["version"] = version;
  if (!input.is_null()) j["input"] = input;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json r;
    r["id"] = c.id;
    r["anchor"] = c.anchor;
    r["status"] = c.status;
    if (!c.witness.is_null()) r["witness"] = c.witness;
    arr.push_back(r);
  }
  j["checks"] = arr;
  j["summary"] = {{"total", checks.size()}, {"failed", failures()}};
  if (timing_seconds) j["timing_seconds"] = *timing_seconds;
  return j;
}

std::string Report::render_text() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    std::string tag = c.status == "pass" ? "PASS" : c.status == "fail" ? "FAIL" : "NOTE";
    os << "[" << tag << "] " << c.id;
    if (!c.anchor.empty()) os << " (" << c.anchor << ")";
    if (c.status != "pass" && !c.witness.is_null()) os << "\n       " << c.witness.dump();
    os << "\n";
  }
  os << failures() << " failure(s), " << checks.size() << " check(s)\n";
  return os.str();
}

}  // namespace coulomb
