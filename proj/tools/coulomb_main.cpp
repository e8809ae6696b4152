// Command-line front end: quiver validation, twisted monopole Hilbert
// series, rank-2 algebra checks, difference-operator current checks,
// unfolding, and the golden corpus replay.

#include <chrono>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "coulomb/gklo.hpp"
#include "coulomb/monopole.hpp"
#include "coulomb/report.hpp"
#include "coulomb/torus.hpp"

namespace {

using coulomb::Report;
using nlohmann::json;

struct OutputOptions {
  std::string out_path;
  bool text = false;
  bool timing = false;
};

void add_output_flags(CLI::App* cmd, OutputOptions& out) {
  cmd->add_option("--out", out.out_path, "write the JSON report to a file");
  cmd->add_flag("--text", out.text, "print the human-readable rendering");
  cmd->add_flag("--timing", out.timing, "include wall time in the report");
}

int emit(Report& rep, const OutputOptions& out, double seconds) {
  if (out.timing) rep.timing_seconds = seconds;
  json j = rep.to_json();
  if (!out.out_path.empty()) {
    std::ofstream f(out.out_path);
    f << j.dump(2) << "\n";
  }
  if (out.text)
    std::cout << rep.render_text();
  else
    std::cout << j.dump(2) << "\n";
  return rep.exit_code();
}


int cmd_validate(const std::string& quiver_path, const OutputOptions& out, double seconds) {
  Report rep;
  coulomb::ValuedQuiver q = coulomb::load_quiver_file(quiver_path);
  rep.input = coulomb::quiver_to_json(q);
  auto errs = coulomb::validate(q);
  rep.add("quiver-valid", "quiver.invariants", errs.empty(), json{{"errors", errs}});
  if (errs.empty()) {
    rep.add("assumption", "quiver.one-sided-f", true,
            json{{"holds", coulomb::check_assumption(q)}});
    json edges = json::array();
    for (const auto& e : coulomb::edge_constants(q).edges)
      edges.push_back({{"from", q.ids[e.tail]},
                       {"to", q.ids[e.head]},
                       {"g", e.g},
                       {"f_tail_head", e.f_th},
                       {"f_head_tail", e.f_ht},
                       {"d_edge", e.d_edge}});
    rep.add_finding("edge-constants", "quiver.derived", edges);
    auto type = coulomb::classify_finite_type(q);
    rep.add_finding("finite-type", "quiver.classification",
                    type ? json(*type) : json("unrecognized"));
  }
  return emit(rep, out, seconds);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Coulomb-branch toolkit for valued quivers"};
  app.require_subcommand(1);

  std::string quiver_path, cap_path, partition_path, check = "all", grading = "delta";
  std::string corpus_dir = "golden";
  long order = 20, bound = 6, m = 2, g = 1, f12 = 1, f21 = 1;
  int modes = 3, threads = 0;
  bool no_flavor = false;
  OutputOptions out;

  auto* validate_cmd = app.add_subcommand("validate", "check quiver invariants");
  validate_cmd->add_option("--quiver", quiver_path, "quiver JSON file")->required();
  add_output_flags(validate_cmd, out);

  auto* monopole_cmd =
      app.add_subcommand("monopole", "twisted monopole formula Hilbert series");
  monopole_cmd->add_option("--quiver", quiver_path)->required();
  monopole_cmd->add_option("--order", order, "series truncation order")
      ->check(CLI::Range(1L, 1000L));
  monopole_cmd->add_option("--bound", bound, "coweight enumeration bound")
      ->check(CLI::Range(0L, 64L));
  monopole_cmd->add_flag("--no-flavor", no_flavor, "drop the framing term");
  monopole_cmd->add_option("--cap", cap_path, "dominance cap coweight JSON");
  monopole_cmd->add_option("--grading", grading)
      ->check(CLI::IsMember({"delta", "homological"}));
  monopole_cmd->add_option("--threads", threads, "worker threads (0 = auto)");
  add_output_flags(monopole_cmd, out);

  auto* rank2_cmd = app.add_subcommand("rank2", "rank-2 abelianized algebra checks");
  rank2_cmd->add_option("--m", m, "edge multiplicity of the (1,m) edge")
      ->check(CLI::Range(1L, 64L));
  rank2_cmd->add_option("--g", g)->check(CLI::Range(1L, 64L));
  rank2_cmd->add_option("--f12", f12)->check(CLI::Range(1L, 64L));
  rank2_cmd->add_option("--f21", f21)->check(CLI::Range(1L, 64L));
  rank2_cmd->add_option("--check", check)
      ->check(CLI::IsMember({"all", "relations", "presentation", "zastava-g2"}));
  add_output_flags(rank2_cmd, out);

  auto* gklo_cmd = app.add_subcommand("gklo", "difference-operator current checks");
  gklo_cmd->add_option("--quiver", quiver_path)->required();
  gklo_cmd->add_option("--check", check)
      ->check(CLI::IsMember({"all", "sigma", "phi", "compare", "relations"}));
  gklo_cmd->add_option("--modes", modes, "largest current mode")
      ->check(CLI::Range(1, 8));
  add_output_flags(gklo_cmd, out);

  auto* unfold_cmd = app.add_subcommand("unfold", "split vertices by symmetrizer");
  unfold_cmd->add_option("--quiver", quiver_path)->required();
  unfold_cmd->add_option("--partition", partition_path, "per-vertex dimension split JSON");
  add_output_flags(unfold_cmd, out);

  auto* pair_cmd = app.add_subcommand("pair", "group/representation pair data");
  pair_cmd->add_option("--quiver", quiver_path)->required();
  add_output_flags(pair_cmd, out);

  auto* corpus_cmd = app.add_subcommand("corpus", "replay the golden corpus");
  corpus_cmd->add_option("--dir", corpus_dir, "directory of golden files");
  add_output_flags(corpus_cmd, out);

  CLI11_PARSE(app, argc, argv);
  auto started = std::chrono::steady_clock::now();
  auto elapsed = [&started]() {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  };

  try {
    if (app.got_subcommand(validate_cmd)) return cmd_validate(quiver_path, out, elapsed());

    if (app.got_subcommand(monopole_cmd)) {
      coulomb::ValuedQuiver q = coulomb::load_quiver_file(quiver_path);
      coulomb::MonopoleOptions opt;
      opt.order = order;
      opt.bound = bound;
      opt.flavor_term = !no_flavor;
      opt.grading = grading == "homological" ? coulomb::Grading::kHomological
                                             : coulomb::Grading::kDelta;
      opt.threads = threads;
      if (!cap_path.empty()) {
        std::ifstream in(cap_path);
        if (!in) throw std::invalid_argument("cannot open cap file " + cap_path);
        json jc;
        in >> jc;
        coulomb::DominantCoweight cap;
        for (const auto& t : jc) cap.push_back(t.get<std::vector<long>>());
        opt.cap = cap;
      }
      coulomb::MonopoleReport mrep = coulomb::hilbert_series(q, opt);
      json series;
      for (const auto& [deg, c] : mrep.series.coefficients())
        series[std::to_string(deg)] = coulomb::to_string(c);
      json j{{"series", series},
             {"status", coulomb::status_name(mrep.status)},
             {"bound", mrep.bound},
             {"grading", grading},
             {"first_stable_bound", mrep.first_stable_bound},
             {"delta_nonpositive",
              {{"at_bound", mrep.delta_nonpositive_count},
               {"at_previous", mrep.delta_nonpositive_prev}}}};
      if (out.timing) j["timing_seconds"] = elapsed();
      if (!out.out_path.empty()) {
        std::ofstream f(out.out_path);
        f << j.dump(2) << "\n";
      }
      std::cout << j.dump(2) << "\n";
      // Divergence is a finding, not a failure.
      return 0;
    }

    if (app.got_subcommand(rank2_cmd)) {
      Report rep;
      rep.input = {{"m", m}, {"g", g}, {"f12", f12}, {"f21", f21}, {"check", check}};
      bool custom_edge = rank2_cmd->count("--g") || rank2_cmd->count("--f12") ||
                         rank2_cmd->count("--f21");
      if (custom_edge && check == "relations")
        throw std::invalid_argument(
            "the degree-two relation family lives on the classical (1,1,m) edge; "
            "use --m, or --check presentation for general edge data");
      if (!custom_edge && (check == "relations" || check == "all")) {
        coulomb::Rank2Edge e = coulomb::Rank2Edge::classical(m);
        long count = 0;
        bool all = true;
        json failed = json::array();
        for (long a = 1; a < m; ++a)
          for (long b = a; b < m; ++b) {
            auto lhs = coulomb::zstar(e, 1, a) * coulomb::zstar(e, 1, b);
            auto rhs = a + b <= m
                           ? coulomb::zstar(e, 1, 0) * coulomb::zstar(e, 1, a + b)
                           : coulomb::zstar(e, 1, a + b - m) * coulomb::zstar(e, 1, m);
            ++count;
            if (lhs != rhs)
              failed.push_back({{"a", a}, {"b", b}, {"lhs", lhs.str()}, {"rhs", rhs.str()}});
            all = all && lhs == rhs;
          }
        rep.add("degree-two-family", "rank2.m" + std::to_string(m) + ".family", all,
                json{{"count", count}, {"failed", failed}});
        bool ladders = true;
        json ladder_failed = json::array();
        for (long b = 0; b < m; ++b) {
          coulomb::LadderSides s = coulomb::ladder_relation(m, b);
          if (!s.equal)
            ladder_failed.push_back({{"b", b}, {"lhs", s.lhs.str()}, {"rhs", s.rhs.str()}});
          ladders = ladders && s.equal;
        }
        rep.add("ladder-family", "rank2.m" + std::to_string(m) + ".ladder", ladders,
                json{{"count", m}, {"failed", ladder_failed}});
      }
      if (check == "presentation" || check == "all") {
        auto checks = custom_edge
                          ? coulomb::presentation_general(coulomb::Rank2Edge{g, f12, f21})
                          : coulomb::whole_algebra_presentation(m);
        for (const auto& c : checks)
          rep.add(c.id, "rank2.presentation." + c.id, c.pass, json{{"detail", c.detail}});
      }
      if (check == "zastava-g2" || (check == "all" && m == 3)) {
        if (m != 3) throw std::invalid_argument("the zastava dictionary needs --m 3");
        for (const auto& c : coulomb::g2_zastava_dictionary())
          rep.add(c.id, "zastava.g2." + c.id, c.pass, json{{"detail", c.detail}});
      }
      return emit(rep, out, elapsed());
    }

    if (app.got_subcommand(gklo_cmd)) {
      Report rep;
      coulomb::ValuedQuiver q = coulomb::load_quiver_file(quiver_path);
      rep.input = coulomb::quiver_to_json(q);
      coulomb::ShiftAlgebra alg(q);
      coulomb::SigmaSolution sol = coulomb::solve_sigma(q);
      if (check == "sigma" || check == "all" || check == "compare") {
        std::vector<std::string> sigma;
        for (const auto& s : sol.sigma) sigma.push_back(coulomb::to_string(s));
        rep.add("sigma-solved", "gklo.sigma", sol.solved,
                json{{"sigma", sigma}, {"residual-issues", sol.issues}});
        if (!sol.integral)
          rep.add_finding("sigma-non-integral", "gklo.sigma.integrality", json{{"sigma", sigma}});
      }
      if (check == "phi" || check == "all") {
        bool shapes = true, homog = true;
        for (int i = 0; i < q.rank(); ++i)
          for (int r = 1; r <= modes; ++r) {
            auto a = coulomb::phi(alg, coulomb::Generator::kA, i, r);
            auto e = coulomb::phi(alg, coulomb::Generator::kE, i, r);
            auto f = coulomb::phi(alg, coulomb::Generator::kF, i, r);
            shapes = shapes && a.is_shift_free();
            for (const auto& [n, c] : e.terms())
              for (int x : n) shapes = shapes && x <= 0;
            for (const auto& [n, c] : f.terms())
              for (int x : n) shapes = shapes && x >= 0;
            homog = homog && a.grade().has_value() && e.grade().has_value() &&
                    f.grade().has_value();
          }
        rep.add("image-shapes", "gklo.phi.shapes", shapes);
        rep.add("image-homogeneous", "gklo.phi.grading", homog);
        for (int i = 0; i < q.rank(); ++i) {
          coulomb::HSeries h = coulomb::h_series(alg, i, 2 * modes);
          coulomb::TheoryData data = coulomb::TheoryData::from_quiver(q);
          rep.add("h-lead-" + q.ids[i], "gklo.h.leading", h.lead == data.mu[i],
                  json{{"lead", h.lead}, {"mu", data.mu[i]}});
        }
      }
      if (check == "compare" || check == "all") {
        if (!sol.solved) {
          rep.add("compare", "gklo.compare", false, json{{"error", "sigma unsolved"}});
        } else {
          for (int i = 0; i < q.rank(); ++i) {
            coulomb::CompareOutcome o = coulomb::compare_theorem(alg, i, modes, sol);
            rep.add("compare-" + q.ids[i], "gklo.compare", o.pass(),
                    json{{"f_sign", o.f_sign}, {"detail", o.detail}});
          }
        }
      }
      if (check == "relations" || check == "all") {
        coulomb::SuiteReport suite = coulomb::relation_suite(alg, modes);
        for (const auto& c : suite.checks)
          rep.add(c.id, "gklo.relations." + c.id, c.pass, json{{"detail", c.detail}});
        json scalars;
        for (const auto& [i, c] : suite.h_scalars)
          scalars[q.ids[i]] = coulomb::to_string(c);
        rep.add_finding("h-normalization", "gklo.relations.scalars", scalars);
      }
      return emit(rep, out, elapsed());
    }

    if (app.got_subcommand(unfold_cmd)) {
      Report rep;
      coulomb::ValuedQuiver q = coulomb::load_quiver_file(quiver_path);
      rep.input = coulomb::quiver_to_json(q);
      auto part = coulomb::default_partition(q);
      if (!partition_path.empty()) {
        std::ifstream in(partition_path);
        if (!in) throw std::invalid_argument("cannot open partition file");
        json jp;
        in >> jp;
        part = jp.get<std::vector<std::vector<long>>>();
      }
      coulomb::UnfoldedQuiver u = coulomb::unfold(q, part);
      json labels = json::array(), edges = json::array();
      for (const auto& v : u.vertices) labels.push_back(v.label);
      for (std::size_t i = 0; i < u.vertices.size(); ++i)
        for (std::size_t k = i + 1; k < u.vertices.size(); ++k)
          if (u.adjacency[i][k]) edges.push_back({labels[i], labels[k]});
      auto from = coulomb::classify_finite_type(q);
      rep.add_finding("unfolded", "unfold.split",
                      json{{"vertices", labels},
                           {"edges", edges},
                           {"weight", u.weight},
                           {"source_type", from ? json(*from) : json()},
                           {"type", u.type ? json(*u.type) : json()}});
      return emit(rep, out, elapsed());
    }

    if (app.got_subcommand(pair_cmd)) {
      Report rep;
      coulomb::ValuedQuiver q = coulomb::load_quiver_file(quiver_path);
      rep.input = coulomb::quiver_to_json(q);
      coulomb::PairData pd = coulomb::build_pair(q);
      json groups, summands;
      for (const auto& [k, fs] : pd.groups) {
        json arr = json::array();
        for (const auto& f : fs) arr.push_back({{"vertex", q.ids[f.vertex]}, {"dim", f.dim}});
        groups[std::to_string(k)] = arr;
      }
      for (const auto& [k, ss] : pd.summands) {
        json arr = json::array();
        for (const auto& s : ss) {
          if (s.kind == coulomb::PairData::Summand::kFraming)
            arr.push_back({{"framing", q.ids[s.vertex]}});
          else
            arr.push_back({{"bifundamental", {q.ids[s.tail], q.ids[s.vertex]}},
                           {"multiplicity", s.multiplicity}});
        }
        summands[std::to_string(k)] = arr;
      }
      auto viol = pd.violations();
      rep.add("pair-divisibility", "pair.action-levels", viol.empty(),
              json{{"violations", viol}});
      rep.add_finding("pair-data", "pair.builder", json{{"groups", groups}, {"summands", summands}});
      return emit(rep, out, elapsed());
    }

    if (app.got_subcommand(corpus_cmd)) {
      Report rep = coulomb::run_corpus(corpus_dir);
      return emit(rep, out, elapsed());
    }
  } catch (const std::exception& e) {
    json err{{"error", e.what()}};
    std::cout << err.dump(2) << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
