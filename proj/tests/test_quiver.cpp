#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "coulomb/report.hpp"
#include "coulomb/quiver.hpp"

using namespace coulomb;

namespace {

ValuedQuiver rank2(long c12, long c21, std::vector<long> d, std::vector<long> v = {1, 1},
                   std::vector<long> w = {0, 0}) {
  ValuedQuiver q;
  q.ids = {"1", "2"};
  q.cartan = {{2, c12}, {c21, 2}};
  q.d = std::move(d);
  q.dim_v = std::move(v);
  q.dim_w = std::move(w);
  if (c12 < 0) q.arrows = {{1, 0}};  // arrow 2 -> 1
  return q;
}

// Chain quiver of the given Cartan matrix with minimal symmetrizer and
// arrows j+1 -> j.
ValuedQuiver chain(std::vector<std::vector<long>> cartan) {
  ValuedQuiver q;
  const int n = static_cast<int>(cartan.size());
  for (int i = 0; i < n; ++i) {
    q.ids.push_back(std::to_string(i + 1));
    q.dim_v.push_back(1);
    q.dim_w.push_back(0);
  }
  q.cartan = std::move(cartan);
  q.d = minimal_symmetrizer(q.cartan).value();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (q.cartan[i][j] < 0) q.arrows.push_back({j, i});
  return q;
}

}  // namespace

TEST_CASE("validation") {
  CHECK(validate(rank2(-1, -2, {2, 1})).empty());

  auto errs = validate(rank2(-1, -2, {1, 1}));
  REQUIRE(!errs.empty());
  CHECK(errs[0].find("symmetrizer") != std::string::npos);

  ValuedQuiver bad = rank2(-1, -2, {2, 1});
  bad.cartan[1][0] = 0;  // c12 < 0 but c21 = 0
  bad.arrows.clear();
  bool sign_pattern = false;
  for (const auto& e : validate(bad))
    if (e.find("sign pattern") != std::string::npos) sign_pattern = true;
  CHECK(sign_pattern);

  ValuedQuiver loop = rank2(-1, -2, {2, 1});
  loop.arrows.push_back({0, 0});
  CHECK(!validate(loop).empty());

  ValuedQuiver dup = rank2(-1, -2, {2, 1});
  dup.arrows.push_back({0, 1});
  CHECK(!validate(dup).empty());
}

TEST_CASE("edge constants") {
  SUBCASE("(1,3) with d=(3,1)") {
    auto ec = edge_constants(rank2(-1, -3, {3, 1}));
    REQUIRE(ec.edges.size() == 1);
    const auto& e = ec.edges[0];  // arrow 2 -> 1
    CHECK(e.g == 1);
    CHECK(e.f_th == 3);  // f_{2,1} = |c_21|
    CHECK(e.f_ht == 1);  // f_{1,2}
    CHECK(e.d_edge == 1);
  }
  SUBCASE("(2,2) with d=(1,1)") {
    auto ec = edge_constants(rank2(-2, -2, {1, 1}));
    const auto& e = ec.edges[0];
    CHECK(e.g == 2);
    CHECK(e.f_th == 1);
    CHECK(e.f_ht == 1);
    CHECK(e.d_edge == 1);
  }
  SUBCASE("(4,6) with d=(3,2)") {
    auto ec = edge_constants(rank2(-4, -6, {3, 2}));
    const auto& e = ec.edges[0];
    CHECK(e.g == 2);
    CHECK(e.f_th == 3);  // |c_21|/g = 6/2
    CHECK(e.f_ht == 2);  // |c_12|/g = 4/2
    CHECK(e.d_edge == 1);
    // d_head = d_edge * f_th, d_tail = d_edge * f_ht.
    CHECK(3 == e.d_edge * e.f_th);
    CHECK(2 == e.d_edge * e.f_ht);
  }
}

TEST_CASE("gcd/lcm identities on all small rank-2 quivers") {
  for (long a = 1; a <= 4; ++a)
    for (long b = 1; b <= 4; ++b) {
      auto d = minimal_symmetrizer({{2, -a}, {-b, 2}});
      REQUIRE(d.has_value());
      ValuedQuiver q = rank2(-a, -b, *d);
      REQUIRE(validate(q).empty());
      for (const auto& e : edge_constants(q).edges) {
        long dt = q.d[e.tail], dh = q.d[e.head];
        CHECK(e.d_edge == std::gcd(dt, dh));
        CHECK(dt * e.f_th == std::lcm(dt, dh));
        CHECK(dh * e.f_ht == std::lcm(dt, dh));
        CHECK(dt == e.d_edge * e.f_ht);
        CHECK(dh == e.d_edge * e.f_th);
      }
    }
}

TEST_CASE("assumption holds exactly when f=1 on one side") {
  CHECK(check_assumption(rank2(-1, -2, {2, 1})));
  CHECK(check_assumption(rank2(-1, -3, {3, 1})));
  CHECK(check_assumption(rank2(-1, -1, {1, 1})));
  CHECK(check_assumption(rank2(-2, -2, {1, 1})));   // f = (1,1), g = 2
  CHECK(!check_assumption(rank2(-2, -3, {3, 2})));  // f = (2,3)
  // All rank-2 finite types (values up to 3 with a one-sided f).
  for (long m = 1; m <= 3; ++m)
    CHECK(check_assumption(rank2(-1, -m, minimal_symmetrizer({{2, -1}, {-m, 2}}).value())));
}

TEST_CASE("minimal symmetrizer") {
  CHECK(minimal_symmetrizer({{2, -1}, {-2, 2}}).value() == std::vector<long>{2, 1});
  CHECK(minimal_symmetrizer({{2, -1}, {-3, 2}}).value() == std::vector<long>{3, 1});
  CHECK(minimal_symmetrizer({{2, -1}, {-1, 2}}).value() == std::vector<long>{1, 1});
  // Not symmetrizable: c12 < 0 but c21 = 0.
  CHECK(!minimal_symmetrizer({{2, -1}, {0, 2}}).has_value());
  // Disconnected components are scaled independently.
  CHECK(minimal_symmetrizer({{2, 0}, {0, 2}}).value() == std::vector<long>{1, 1});
}

TEST_CASE("finite type recognition") {
  CHECK(classify_finite_type(rank2(-1, -1, {1, 1})) == "A2");
  CHECK(classify_finite_type(rank2(-1, -2, {2, 1})) == "B2");
  CHECK(classify_finite_type(rank2(-1, -3, {3, 1})) == "G2");
  CHECK(classify_finite_type(chain({{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}})) == "B3");
  CHECK(classify_finite_type(chain({{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}})) == "C3");
  CHECK(classify_finite_type(chain({{2, -1, 0, 0},
                                    {-1, 2, -2, 0},
                                    {0, -1, 2, -1},
                                    {0, 0, -1, 2}})) == "F4");
}

TEST_CASE("unfolding type table") {
  auto type_of = [](const ValuedQuiver& q) {
    return unfold(q, default_partition(q)).type.value_or("?");
  };
  SUBCASE("G2 gives the 4-vertex star") {
    ValuedQuiver g2 = rank2(-1, -3, {3, 1});
    UnfoldedQuiver u = unfold(g2, default_partition(g2));
    CHECK(u.type == "D4");
    REQUIRE(u.vertices.size() == 4);
    CHECK(u.vertices[0].label == "1_1");
    CHECK(u.vertices[3].label == "2");
    // Arms 1_1, 1_2, 1_3 all joined to vertex 2.
    for (int k = 0; k < 3; ++k) CHECK(u.adjacency[k][3] == 1);
    CHECK(u.adjacency[0][1] == 0);
  }
  SUBCASE("table entries") {
    CHECK(type_of(rank2(-1, -2, {2, 1})) == "A3");  // B2
    CHECK(type_of(chain({{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}})) == "A5");   // B3
    CHECK(type_of(chain({{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}})) == "D4");   // C3
    CHECK(type_of(chain({{2, -1, 0, 0},
                         {-1, 2, -2, 0},
                         {0, -1, 2, -1},
                         {0, 0, -1, 2}})) == "E6");                          // F4
  }
  SUBCASE("simply-laced input is unchanged") {
    ValuedQuiver a2 = rank2(-1, -1, {1, 1});
    UnfoldedQuiver u = unfold(a2, default_partition(a2));
    CHECK(u.type == "A2");
    CHECK(u.vertices.size() == 2);
    CHECK(u.vertices[0].label == "1");
  }
  SUBCASE("weight and dimension recovery") {
    ValuedQuiver g2 = rank2(-1, -3, {3, 1}, {3, 2});
    std::vector<std::vector<long>> part{{1, 1, 1}, {2}};
    UnfoldedQuiver u = unfold(g2, part);
    CHECK(u.weight == std::vector<long>{1, 1, 1, 2});
    std::vector<long> recovered(2, 0);
    for (const auto& v : u.vertices) recovered[v.orig] += v.dim;
    CHECK(recovered == g2.dim_v);
    CHECK_THROWS(unfold(g2, {{1, 1, 0}, {2}}));  // sums must match
  }
}

TEST_CASE("pair data") {
  SUBCASE("triple edge, no framing") {
    ValuedQuiver g2 = rank2(-1, -3, {3, 1});
    PairData pd = build_pair(g2);
    REQUIRE(pd.groups.count(3));
    REQUIRE(pd.groups.count(1));
    CHECK(pd.groups.at(3).size() == 1);
    CHECK(pd.groups.at(3)[0].vertex == 0);
    REQUIRE(pd.summands.count(1));
    REQUIRE(pd.summands.at(1).size() == 1);
    CHECK(pd.summands.at(1)[0].kind == PairData::Summand::kBifundamental);
    CHECK(pd.summands.at(1)[0].multiplicity == 1);
    CHECK(pd.violations().empty());
  }
  SUBCASE("single vertex with framing") {
    ValuedQuiver q;
    q.ids = {"1"};
    q.cartan = {{2}};
    q.d = {2};
    q.dim_v = {1};
    q.dim_w = {1};
    PairData pd = build_pair(q);
    REQUIRE(pd.groups.count(2));
    REQUIRE(pd.summands.count(2));
    CHECK(pd.summands.at(2)[0].kind == PairData::Summand::kFraming);
    CHECK(pd.violations().empty());
  }
  SUBCASE("double-valued edge carries multiplicity g") {
    PairData pd = build_pair(rank2(-2, -2, {1, 1}));
    REQUIRE(pd.summands.count(1));
    CHECK(pd.summands.at(1)[0].multiplicity == 2);
    CHECK(pd.violations().empty());
  }
}

TEST_CASE("quiver JSON") {
  SUBCASE("round trip") {
    ValuedQuiver q = rank2(-1, -3, {3, 1}, {1, 1}, {0, 1});
    ValuedQuiver back = quiver_from_json(quiver_to_json(q));
    CHECK(back.cartan == q.cartan);
    CHECK(back.d == q.d);
    CHECK(back.dim_v == q.dim_v);
    CHECK(back.dim_w == q.dim_w);
    CHECK(back.arrows.size() == q.arrows.size());
  }
  SUBCASE("missing cartan is named") {
    nlohmann::json j{{"vertices", {{{"id", "1"}, {"v", 1}}}}};
    CHECK_THROWS_WITH_AS(quiver_from_json(j), "missing key 'cartan'",
                         std::invalid_argument);
  }
  SUBCASE("unknown keys rejected") {
    nlohmann::json j{{"vertices", {{{"id", "1"}, {"v", 1}}}},
                     {"cartan", {{2}}},
                     {"extra", 1}};
    CHECK_THROWS(quiver_from_json(j));
  }
  SUBCASE("omitted d uses the minimal symmetrizer") {
    nlohmann::json j{{"vertices", {{{"id", "1"}, {"v", 1}}, {{"id", "2"}, {"v", 1}}}},
                     {"cartan", {{2, -1}, {-2, 2}}}};
    ValuedQuiver q = quiver_from_json(j);
    CHECK(q.d == std::vector<long>{2, 1});
    // Default orientation points from the later vertex to the earlier.
    REQUIRE(q.arrows.size() == 1);
    CHECK(q.arrows[0].tail == 1);
    CHECK(q.arrows[0].head == 0);
  }
}
