#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>

#include "coulomb/gklo.hpp"
#include "coulomb/monopole.hpp"
#include "coulomb/opformat.hpp"
#include "coulomb/report.hpp"
#include "coulomb/torus.hpp"

namespace coulomb {

namespace {

using nlohmann::json;

Rank2Edge edge_from_args(const json& args) {
  if (args.contains("m")) return Rank2Edge::classical(args.at("m").get<long>());
  return Rank2Edge{args.at("g").get<long>(), args.at("f12").get<long>(),
                   args.at("f21").get<long>()};
}

DominantCoweight coweight_from_json(const json& j) {
  DominantCoweight lam;
  for (const auto& tuple : j) lam.push_back(tuple.get<std::vector<long>>());
  return lam;
}

json run_assumption(const json& args) {
  ValuedQuiver q = quiver_from_json(args.at("quiver"));
  validate_or_throw(q);
  return {{"holds", check_assumption(q)}};
}

json run_validate(const json& args) {
  ValuedQuiver q = quiver_from_json(args.at("quiver"));
  return {{"errors", validate(q)}};
}

json run_unfold(const json& args) {
  ValuedQuiver q = quiver_from_json(args.at("quiver"));
  auto part = args.contains("partition")
                  ? args.at("partition").get<std::vector<std::vector<long>>>()
                  : default_partition(q);
  UnfoldedQuiver u = unfold(q, part);
  json got;
  got["type"] = u.type ? json(*u.type) : json();
  got["source_type"] = classify_finite_type(q) ? json(*classify_finite_type(q)) : json();
  std::vector<std::string> labels;
  for (const auto& v : u.vertices) labels.push_back(v.label);
  got["vertices"] = labels;
  got["weight"] = u.weight;
  json edges = json::array();
  for (std::size_t i = 0; i < u.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < u.vertices.size(); ++j)
      if (u.adjacency[i][j])
        edges.push_back({labels[i], labels[j]});
  got["edges"] = edges;
  return got;
}

json run_pair(const json& args) {
  ValuedQuiver q = quiver_from_json(args.at("quiver"));
  PairData pd = build_pair(q);
  json groups, summands;
  for (const auto& [k, fs] : pd.groups) {
    json arr = json::array();
    for (const auto& f : fs) arr.push_back({{"vertex", q.ids[f.vertex]}, {"dim", f.dim}});
    groups[std::to_string(k)] = arr;
  }
  for (const auto& [k, ss] : pd.summands) {
    json arr = json::array();
    for (const auto& s : ss) {
      if (s.kind == PairData::Summand::kFraming)
        arr.push_back({{"framing", q.ids[s.vertex]}});
      else
        arr.push_back({{"bifundamental", {q.ids[s.tail], q.ids[s.vertex]}},
                       {"multiplicity", s.multiplicity}});
    }
    summands[std::to_string(k)] = arr;
  }
  return {{"groups", groups}, {"summands", summands},
          {"violations", pd.violations()}};
}

json run_dlambda(const json& args) {
  ValuedQuiver q = quiver_from_json(args.at("quiver"));
  DominantCoweight lam = coweight_from_json(args.at("lambda"));
  bool flavor = args.value("flavor", true);
  return {{"d", d_lambda(q, lam, flavor)},
          {"delta", to_string(delta(q, lam, flavor))}};
}

json run_monopole(const json& args) {
  ValuedQuiver q = quiver_from_json(args.at("quiver"));
  MonopoleOptions opt;
  opt.order = args.value("order", 20L);
  opt.bound = args.value("bound", 6L);
  opt.flavor_term = args.value("flavor", true);
  opt.grading = args.value("grading", std::string("delta")) == "homological"
                    ? Grading::kHomological
                    : Grading::kDelta;
  if (args.contains("cap")) opt.cap = coweight_from_json(args.at("cap"));
  MonopoleReport rep = hilbert_series(q, opt);
  json series;
  for (const auto& [deg, c] : rep.series.coefficients())
    series[std::to_string(deg)] = to_string(c);
  return {{"series", series}, {"status", status_name(rep.status)}, {"bound", rep.bound}};
}

json run_zstar(const json& args) {
  Rank2Edge e = edge_from_args(args);
  long a = args.at("a").get<long>(), b = args.at("b").get<long>();
  return {{"image", zstar(e, a, b).str()}};
}

json run_torus_product(const json& args) {
  Rank2Edge e = edge_from_args(args);
  auto side = [&e](const json& factors) {
    TorusClass t = TorusClass::one();
    for (const auto& ab : factors)
      t = t * zstar(e, ab.at(0).get<long>(), ab.at(1).get<long>());
    return t;
  };
  TorusClass lhs = side(args.at("lhs"));
  TorusClass rhs = side(args.at("rhs"));
  if (args.contains("lhs_scalar")) lhs = lhs * parse_poly(args.at("lhs_scalar").get<std::string>());
  if (args.contains("rhs_scalar")) rhs = rhs * parse_poly(args.at("rhs_scalar").get<std::string>());
  return {{"equal", lhs == rhs}, {"lhs", lhs.str()}, {"rhs", rhs.str()}};
}

json run_rank2_relations(const json& args) {
  long m = args.at("m").get<long>();
  Rank2Edge e = Rank2Edge::classical(m);
  long count = 0;
  bool all = true;
  json failed = json::array();
  for (long a = 1; a < m; ++a)
    for (long b = a; b < m; ++b) {
      std::vector<YClass> lhs{{1, a, e}, {1, b, e}};
      std::vector<YClass> rhs = a + b <= m
                                    ? std::vector<YClass>{{1, 0, e}, {1, a + b, e}}
                                    : std::vector<YClass>{{1, a + b - m, e}, {1, m, e}};
      ++count;
      if (!check_relation(lhs, rhs)) {
        all = false;
        failed.push_back({a, b});
      }
    }
  return {{"count", count}, {"all", all}, {"failed", failed}};
}

json run_ladder(const json& args) {
  LadderSides s = ladder_relation(args.at("m").get<long>(), args.at("b").get<long>());
  return {{"holds", s.equal}, {"lhs", s.lhs.str()}, {"rhs", s.rhs.str()}};
}

json run_normal_form(const json& args) {
  NormalForm nf = positive_normal_form(args.at("m").get<long>(), args.at("a").get<long>(),
                                       args.at("b").get<long>());
  return {{"factors", nf.str()}, {"verified", nf.verified}};
}

json checks_to_json(const std::vector<PresentationCheck>& checks) {
  json out;
  bool all = true;
  for (const auto& c : checks) {
    out["checks"][c.id] = c.pass;
    all = all && c.pass;
  }
  out["all"] = all;
  return out;
}

json run_presentation(const json& args) {
  if (args.contains("m") && !args.contains("g"))
    return checks_to_json(whole_algebra_presentation(args.at("m").get<long>()));
  return checks_to_json(presentation_general(edge_from_args(args)));
}

json run_zastava(const json&) { return checks_to_json(g2_zastava_dictionary()); }

json run_shiftop(const json& args) {
  ValuedQuiver q = quiver_from_json(args.at("quiver"));
  ShiftAlgebra alg(q);
  ShiftOperator lhs = parse_operator(alg, args.at("lhs").get<std::string>());
  ShiftOperator rhs = parse_operator(alg, args.at("rhs").get<std::string>());
  return {{"equal", lhs == rhs}, {"lhs", lhs.str()}, {"rhs", rhs.str()}};
}

json run_sigma(const json& args) {
  ValuedQuiver q = quiver_from_json(args.at("quiver"));
  SigmaSolution sol = solve_sigma(q);
  std::vector<std::string> sigma;
  for (const auto& s : sol.sigma) sigma.push_back(to_string(s));
  return {{"sigma", sigma}, {"integral", sol.integral}, {"solved", sol.solved}};
}

json run_compare(const json& args) {
  ValuedQuiver q = quiver_from_json(args.at("quiver"));
  ShiftAlgebra alg(q);
  SigmaSolution sol = solve_sigma(q);
  int modes = args.value("modes", 3);
  json per_vertex;
  bool all = true;
  for (int i = 0; i < q.rank(); ++i) {
    CompareOutcome o = compare_theorem(alg, i, modes, sol);
    per_vertex[q.ids[i]] = {{"pass", o.pass()}, {"f_sign", o.f_sign}};
    all = all && o.pass();
  }
  return {{"pass", all}, {"vertices", per_vertex}};
}

json run_phi(const json& args) {
  ValuedQuiver q = quiver_from_json(args.at("quiver"));
  ShiftAlgebra alg(q);
  auto gen = args.at("generator").get<std::string>();
  Generator g = gen == "A" ? Generator::kA : gen == "E" ? Generator::kE : Generator::kF;
  auto vertex = q.vertex_by_id(args.at("vertex").get<std::string>());
  if (!vertex) throw std::invalid_argument("unknown vertex");
  ShiftOperator img = phi(alg, g, *vertex, args.at("mode").get<int>());
  json got{{"image", img.str()}};
  if (args.contains("equals"))
    got["matches"] = img == parse_operator(alg, args.at("equals").get<std::string>());
  return got;
}

const std::map<std::string, std::function<json(const json&)>>& handlers() {
  static const std::map<std::string, std::function<json(const json&)>> h = {
      {"assumption", run_assumption}, {"validate", run_validate},
      {"unfold", run_unfold},         {"pair", run_pair},
      {"dlambda", run_dlambda},       {"monopole", run_monopole},
      {"zstar", run_zstar},           {"torus_product", run_torus_product},
      {"rank2_relations", run_rank2_relations},
      {"ladder", run_ladder},         {"normal_form", run_normal_form},
      {"presentation", run_presentation},
      {"zastava_g2", run_zastava},    {"shiftop", run_shiftop},
      {"sigma", run_sigma},           {"compare", run_compare},
      {"phi", run_phi},
  };
  return h;
}

// Every leaf of `expect` must appear in `got` with the same value.
bool subset_match(const json& expect, const json& got, std::string& where) {
  if (expect.is_object()) {
    if (!got.is_object()) {
      where = "expected object";
      return false;
    }
    for (auto it = expect.begin(); it != expect.end(); ++it) {
      if (!got.contains(it.key())) {
        where = "missing key " + it.key();
        return false;
      }
      if (!subset_match(it.value(), got.at(it.key()), where)) {
        where = it.key() + "." + where;
        return false;
      }
    }
    return true;
  }
  if (expect == got) return true;
  where = "expected " + expect.dump() + ", got " + got.dump();
  return false;
}

}  // namespace

CheckRecord run_corpus_check(const json& spec) {
  CheckRecord rec;
  rec.id = spec.value("id", "unnamed");
  rec.anchor = spec.value("anchor", "");
  try {
    const auto& h = handlers();
    auto it = h.find(spec.at("kind").get<std::string>());
    if (it == h.end()) throw std::invalid_argument("unknown corpus kind");
    json got = it->second(spec.value("args", json::object()));
    std::string where;
    bool ok = subset_match(spec.at("expect"), got, where);
    rec.status = ok ? "pass" : "fail";
    rec.witness = ok ? json() : json{{"mismatch", where}, {"got", got}};
  } catch (const std::exception& e) {
    rec.status = "fail";
    rec.witness = {{"error", e.what()}};
  }
  return rec;
}

Report run_corpus(const std::string& dir) {
  Report rep;
  rep.input = {{"corpus_dir", dir}};
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    std::ifstream in(f);
    json spec;
    try {
      in >> spec;
      rep.checks.push_back(run_corpus_check(spec));
    } catch (const std::exception& e) {
      rep.checks.push_back({f.filename().string(), "", "fail", {{"error", e.what()}}});
    }
  }
  return rep;
}

}  // namespace coulomb
