#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "coulomb/fraction.hpp"
#include "coulomb/opformat.hpp"
#include "coulomb/poly.hpp"
#include "coulomb/series.hpp"

using namespace coulomb;

namespace {

Poly random_poly(std::mt19937& rng, const std::vector<VarId>& pool, int max_terms) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> expo(0, 2);
  Poly p;
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    Monomial m;
    for (std::size_t k = 0; k < pool.size(); ++k) {
      int e = expo(rng);
      if (e) m = m * Monomial(pool[k], e);
    }
    p += Poly::term(m, coef(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("polynomial basics") {
  Poly w = Poly::var("w");
  Poly u = Poly::var("v");
  CHECK((w + u - w - u).is_zero());
  CHECK((w * u) == (u * w));
  CHECK((w + Poly::constant(1)).pow(2) == w * w + 2 * w + Poly::constant(1));
  CHECK(Poly::zero().total_degree() == -1);
  CHECK((w * u).total_degree() == 2);
  CHECK((w * u + w).is_homogeneous() == false);
  CHECK(parse_poly("(w + v)^3 - w^3 - v^3 - 3*w*v*(w+v)").is_zero());
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 rng(20240811);
  std::vector<VarId> pool{vars::intern("x"), vars::intern("y"), vars::intern("z")};
  for (int trial = 0; trial < 200; ++trial) {
    Poly a = random_poly(rng, pool, 4);
    Poly b = random_poly(rng, pool, 4);
    Poly c = random_poly(rng, pool, 4);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("shift substitution") {
  VarId w = vars::intern("w");
  VarId h = vars::intern("hbar");
  Poly pw = Poly::var(w);

  SUBCASE("single variable") {
    std::map<VarId, Poly::Shift> assign{{w, {w, 2}}};
    CHECK(pw.shift_substitute(assign, h) == parse_poly("w + 2*hbar"));
  }
  SUBCASE("binomial expansion") {
    std::map<VarId, Poly::Shift> assign{{w, {w, 1}}};
    CHECK((pw * pw).shift_substitute(assign, h) ==
          parse_poly("w^2 + 2*w*hbar + hbar^2"));
  }
  SUBCASE("two variables, one shifted") {
    VarId w1 = vars::intern("w1"), w2 = vars::intern("w2");
    std::map<VarId, Poly::Shift> assign{{w1, {w1, 3}}};
    Poly p = Poly::var(w1) * Poly::var(w2);
    // Independent expansion oracle: (w1 + 3 hbar) * w2.
    Poly expect = (Poly::var(w1) + Poly::var(h) * Rational(3)) * Poly::var(w2);
    CHECK(p.shift_substitute(assign, h) == expect);
    CHECK(expect == parse_poly("w1*w2 + 3*hbar*w2"));
  }
  SUBCASE("half-integer multiples") {
    std::map<VarId, Poly::Shift> assign{{w, {w, rat(1, 2)}}};
    CHECK((pw * pw).shift_substitute(assign, h) ==
          parse_poly("w^2 + w*hbar + hbar^2/4"));
  }
  SUBCASE("unknown variable errors") {
    CHECK_THROWS(pw.evaluate({}));
  }
}

TEST_CASE("exact division") {
  Poly a = parse_poly("w1^2 - w2^2");
  CHECK(a.divide_exact(parse_poly("w1 - w2")).value() == parse_poly("w1 + w2"));
  CHECK(!a.divide_exact(parse_poly("w1 + 1")).has_value());
  CHECK(Poly::zero().divide_exact(parse_poly("w1")).value().is_zero());
}

TEST_CASE("series arithmetic") {
  VarId t = vars::intern("t");
  SUBCASE("(1+t)(1-t) at order 5") {
    GradedSeries a = GradedSeries::constant(t, 1, 5) + GradedSeries::monomial(t, 1, 1, 5);
    GradedSeries b = GradedSeries::constant(t, 1, 5) - GradedSeries::monomial(t, 1, 1, 5);
    GradedSeries p = a * b;
    CHECK(p.coefficient(0) == 1);
    CHECK(p.coefficient(1) == 0);
    CHECK(p.coefficient(2) == -1);
    CHECK(p.coefficient(3) == 0);
  }
  SUBCASE("1/(1-t) squared to order 4") {
    GradedSeries g = GradedSeries::geometric(t, 1, 4);
    GradedSeries p = g * g;
    for (long k = 0; k < 4; ++k) CHECK(p.coefficient(k) == k + 1);
    CHECK_THROWS(p.coefficient(4));
  }
  SUBCASE("Laurent product") {
    GradedSeries a = GradedSeries::monomial(t, -1) + GradedSeries::monomial(t, 0);
    GradedSeries b = GradedSeries::monomial(t, -1) - GradedSeries::monomial(t, 0);
    GradedSeries p = a * b;
    CHECK(p.coefficient(-2) == 1);
    CHECK(p.coefficient(-1) == 0);
    CHECK(p.coefficient(0) == -1);
    CHECK(p.exact());
  }
  SUBCASE("truncation respects unknown leading data") {
    GradedSeries a = GradedSeries::monomial(t, -2, 1, 3);
    GradedSeries b = GradedSeries::monomial(t, 1);
    CHECK((a * b).order() == 4);
  }
  SUBCASE("series agrees with polynomial arithmetic then truncation") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coef(-4, 4);
    for (int trial = 0; trial < 50; ++trial) {
      std::map<long, Rational> ca, cb;
      for (long d = 0; d < 6; ++d) {
        ca[d] = coef(rng);
        cb[d] = coef(rng);
      }
      GradedSeries a(t, 8), b(t, 8);
      for (auto& [d, c] : ca) a.set_coefficient(d, c);
      for (auto& [d, c] : cb) b.set_coefficient(d, c);
      GradedSeries p = a * b;
      for (long d = 0; d < p.order(); ++d) {
        Rational want(0);
        for (long i = 0; i <= d; ++i)
          if (ca.count(i) && cb.count(d - i)) want += ca[i] * cb[d - i];
        CHECK(p.coefficient(d) == want);
      }
    }
  }
}

TEST_CASE("restricted fractions") {
  VarId h = vars::intern("hbar");
  VarId w1 = vars::intern("w1"), w2 = vars::intern("w2");
  Atom diff = Atom::linear(w1, w2, 0);

  SUBCASE("full cancellation") {
    RestrictedFraction f(parse_poly("w1 - w2"), {{diff, 1}}, h);
    CHECK(f.is_polynomial());
    CHECK(f.numerator() == Poly::constant(1));
  }
  SUBCASE("hbar cancellation") {
    RestrictedFraction f(parse_poly("hbar*(w1 - w2)"), {{Atom::hbar(), 1}}, h);
    CHECK(f.is_polynomial());
    CHECK(f.numerator() == parse_poly("w1 - w2"));
  }
  SUBCASE("partial reduction by polynomial division") {
    Poly num = parse_poly("(w1-w2)^2 + hbar*(w1-w2)");
    RestrictedFraction f(num, {{diff, 1}}, h);
    CHECK(f.is_polynomial());
    CHECK(f.numerator() == num.divide_exact(parse_poly("w1-w2")).value());
    CHECK(f.numerator() == parse_poly("w1 - w2 + hbar"));
  }
  SUBCASE("reduction is idempotent and value-preserving") {
    std::mt19937 rng(99);
    std::vector<VarId> pool{w1, w2, h};
    for (int trial = 0; trial < 100; ++trial) {
      Poly num = random_poly(rng, pool, 3);
      std::map<Atom, int> den{{diff, 1 + static_cast<int>(trial % 2)},
                              {Atom::hbar(), 1}};
      RestrictedFraction f(num, den, h);
      RestrictedFraction again(f.numerator(), f.denominator(), h);
      CHECK(f == again);
      Poly back = f.numerator();
      std::map<Atom, int> missing = den;
      for (const auto& [a, e] : f.denominator()) missing[a] -= e;
      for (const auto& [a, e] : missing)
        for (int k = 0; k < e; ++k) back *= a.to_poly(h);
      CHECK(back == num);
    }
  }
  SUBCASE("addition over a common denominator") {
    RestrictedFraction a(Poly::constant(1), {{diff, 1}}, h);
    RestrictedFraction b(Poly::constant(-1), {{diff, 1}}, h);
    CHECK((a + b).is_zero());
    RestrictedFraction c(Poly::constant(1), {{diff, 2}}, h);
    CHECK((a * a - c).is_zero());
  }
  SUBCASE("grade") {
    RestrictedFraction f(parse_poly("w1*w2"), {{diff, 1}}, h);
    CHECK(f.grade() == 1);
    RestrictedFraction g(parse_poly("w1 + hbar^2"), h);
    CHECK(!g.grade().has_value());
  }
  SUBCASE("exact hbar division") {
    RestrictedFraction f(parse_poly("hbar*w1 + 2*hbar^2"), h);
    CHECK(f.divided_by_hbar_exact().numerator() == parse_poly("w1 + 2*hbar"));
    RestrictedFraction g(parse_poly("w1"), h);
    CHECK_THROWS(g.divided_by_hbar_exact());
  }
}
