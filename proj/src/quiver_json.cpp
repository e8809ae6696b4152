#include <fstream>
#include <set>
#include <stdexcept>

#include "coulomb/report.hpp"

namespace coulomb {

namespace {

void reject_unknown_keys(const nlohmann::json& j, const std::set<std::string>& allowed,
                         const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key()))
      throw std::invalid_argument("unknown key '" + it.key() + "' in " + where);
}

}  // namespace

ValuedQuiver quiver_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("quiver JSON must be an object");
  reject_unknown_keys(j, {"vertices", "cartan", "edges"}, "quiver");
  if (!j.contains("vertices")) throw std::invalid_argument("missing key 'vertices'");
  if (!j.contains("cartan")) throw std::invalid_argument("missing key 'cartan'");

  ValuedQuiver q;
  int with_d = 0;
  for (const auto& v : j.at("vertices")) {
    reject_unknown_keys(v, {"id", "v", "w", "d"}, "vertex");
    if (!v.contains("id")) throw std::invalid_argument("vertex missing 'id'");
    if (!v.contains("v")) throw std::invalid_argument("vertex missing 'v'");
    q.ids.push_back(v.at("id").is_string() ? v.at("id").get<std::string>()
                                           : v.at("id").dump());
    q.dim_v.push_back(v.at("v").get<long>());
    q.dim_w.push_back(v.contains("w") ? v.at("w").get<long>() : 0);
    if (v.contains("d")) {
      q.d.push_back(v.at("d").get<long>());
      ++with_d;
    } else {
      q.d.push_back(0);
    }
  }
  const int n = static_cast<int>(q.ids.size());
  if (with_d != 0 && with_d != n)
    throw std::invalid_argument("'d' must be given on all vertices or none");

  for (const auto& row : j.at("cartan")) {
    std::vector<long> r;
    for (const auto& x : row) r.push_back(x.get<long>());
    q.cartan.push_back(r);
  }
  if (static_cast<int>(q.cartan.size()) != n)
    throw std::invalid_argument("cartan size does not match vertex count");

  if (with_d == 0) {
    auto d = minimal_symmetrizer(q.cartan);
    if (!d) throw std::invalid_argument("cartan matrix is not symmetrizable");
    q.d = *d;
  }

  if (j.contains("edges")) {
    for (const auto& e : j.at("edges")) {
      reject_unknown_keys(e, {"from", "to"}, "edge");
      auto from = q.vertex_by_id(e.at("from").is_string() ? e.at("from").get<std::string>()
                                                          : e.at("from").dump());
      auto to = q.vertex_by_id(e.at("to").is_string() ? e.at("to").get<std::string>()
                                                      : e.at("to").dump());
      if (!from || !to) throw std::invalid_argument("edge endpoint id not found");
      q.arrows.push_back({*from, *to});
    }
  } else {
    // Default orientation: arrows point from the later vertex to the earlier.
    for (int i = 0; i < n; ++i)
      for (int k = i + 1; k < n; ++k)
        if (q.cartan[i][k] < 0) q.arrows.push_back({k, i});
  }
  return q;
}

ValuedQuiver load_quiver_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open quiver file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
  }
  return quiver_from_json(j);
}

nlohmann::json quiver_to_json(const ValuedQuiver& q) {
  nlohmann::json j;
  nlohmann::json verts = nlohmann::json::array();
  for (int i = 0; i < q.rank(); ++i)
    verts.push_back({{"id", q.ids[i]}, {"v", q.dim_v[i]}, {"w", q.dim_w[i]}, {"d", q.d[i]}});
  j["vertices"] = verts;
  j["cartan"] = q.cartan;
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& a : q.arrows)
    edges.push_back({{"from", q.ids[a.tail]}, {"to", q.ids[a.head]}});
  j["edges"] = edges;
  return j;
}

}  // namespace coulomb
