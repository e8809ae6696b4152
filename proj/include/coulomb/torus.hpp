#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coulomb/poly.hpp"

namespace coulomb {

// Rank-2 abelian edge data: one edge with gcd g and coprime multiplicities
// f12, f21. The classical m-family is (g, f12, f21) = (1, 1, m).
struct Rank2Edge {
  long g = 1;
  long f12 = 1;
  long f21 = 1;

  static Rank2Edge classical(long m) { return Rank2Edge{1, 1, m}; }
  void check() const;
};

// Element of the localized torus model: a finite sum of Q[w1,w2]-multiples
// of lattice classes u_{a,b}, with u_{a,b} u_{a',b'} = u_{a+a',b+b'}.
class TorusClass {
 public:
  using Lattice = std::pair<long, long>;

  TorusClass() = default;
  static TorusClass zero() { return TorusClass(); }
  static TorusClass one() { return unit(0, 0); }
  static TorusClass unit(long a, long b, Poly coeff = Poly::constant(1));

  static VarId w1();
  static VarId w2();
  static Poly w1_minus_w2();

  const std::map<Lattice, Poly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  TorusClass operator+(const TorusClass& o) const;
  TorusClass operator-(const TorusClass& o) const;
  TorusClass operator*(const TorusClass& o) const;  // convolution
  TorusClass operator*(const Poly& p) const;
  TorusClass operator-() const;

  bool operator==(const TorusClass& o) const { return terms_ == o.terms_; }
  bool operator!=(const TorusClass& o) const { return !(*this == o); }

  // Exact division of every coefficient; nullopt if any fails.
  std::optional<TorusClass> divide_exact(const Poly& p) const;

  std::string str() const;

 private:
  void add(const Lattice& l, const Poly& p);
  std::map<Lattice, Poly> terms_;
};

// Fiber class over lattice point (a,b); its image in the torus model is
// (w1-w2)^(g * max(f12*b - f21*a, 0)) u_{a,b}.
struct YClass {
  long a = 0;
  long b = 0;
  Rank2Edge edge;
};

long zstar_exponent(const Rank2Edge& e, long a, long b);
TorusClass zstar(const YClass& y);
TorusClass zstar(const Rank2Edge& e, long a, long b);

// Product of images of each side, with optional scalar polynomial factors;
// true iff both sides agree exactly in the torus model.
bool check_relation(const std::vector<YClass>& lhs, const std::vector<YClass>& rhs,
                    const Poly& lhs_scalar = Poly::constant(1),
                    const Poly& rhs_scalar = Poly::constant(1));

// y_{1,b} y_{0,1} = (w1 - w2) y_{1,b+1} for 0 <= b <= m-1; returns both
// sides. Throws on out-of-range b.
struct LadderSides {
  TorusClass lhs, rhs;
  bool equal = false;
};
LadderSides ladder_relation(long m, long b);

// Expression of y_{a,b} (a,b >= 0) as a product of the positive-part
// generators y_{1,0..m} and y_{0,1}; verified against zstar by direct
// multiplication.
struct NormalForm {
  // Factor (a,b,exponent) in the generator set; exponents >= 1.
  struct Factor {
    long a, b;
    long exponent;
  };
  std::vector<Factor> factors;
  bool verified = false;
  std::string str() const;
};
NormalForm positive_normal_form(long m, long a, long b);

// Whole-algebra structure report: generator identities of the localized
// model and Laurent-monomial expressions of all y_{a,b} in a sample box.
struct PresentationCheck {
  std::string id;
  bool pass = false;
  std::string detail;
};
std::vector<PresentationCheck> whole_algebra_presentation(long m);
std::vector<PresentationCheck> presentation_general(const Rank2Edge& e);

// Zastava coordinate dictionary for the triple-edge case m = 3: the six
// quadric relations and the boundary equation, verified inside the torus
// model under A1 = -w2, A2 = -w1, b0..b4 = the five fiber classes.
std::vector<PresentationCheck> g2_zastava_dictionary();

}  // namespace coulomb
