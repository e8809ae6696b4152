#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coulomb/fraction.hpp"
#include "coulomb/quiver.hpp"

namespace coulomb {

// Variable layout of the localized difference-operator algebra of a theory:
// equivariant variables w[i,r] per gauge slot, framing variables t_k tagged
// by vertex, the loop parameter hbar, and invertible shifts u[i,r] acting by
// u w u^{-1} = w + d_i hbar on their own slot.
class ShiftAlgebra {
 public:
  explicit ShiftAlgebra(ValuedQuiver q);

  const ValuedQuiver& quiver() const { return q_; }
  int slots() const { return static_cast<int>(slot_vertex_.size()); }
  int slot(int vertex, int r) const;        // r is 1-based within the vertex
  int slot_vertex(int s) const { return slot_vertex_[s]; }
  int slot_index(int s) const { return slot_index_[s]; }  // 1-based r
  VarId w(int vertex, int r) const { return w_[slot(vertex, r)]; }
  VarId w_slot(int s) const { return w_[s]; }

  int flavor_count() const { return static_cast<int>(t_.size()); }
  VarId t(int k) const;                     // k is 1-based
  int flavor_vertex(int k) const;           // vertex tag i_k
  VarId hbar() const { return hbar_; }
  long d(int vertex) const { return q_.d[vertex]; }

  std::optional<int> slot_of_var(VarId v) const;
  std::optional<int> flavor_of_var(VarId v) const;

  // Formal square-root symbol attached to a vertex, with s_i^2 = d_i.
  VarId sqrt_symbol(int vertex) const { return sqrt_[vertex]; }
  // Rewrites even powers of the square-root symbols into d_i factors.
  Poly reduce_square_roots(const Poly& p) const;

  // A denominator atom is admissible when it is hbar or a same-vertex
  // difference w[i,r] - w[i,s] + m d_i hbar with integer m.
  bool atom_admissible(const Atom& a) const;
  void check_admissible(const RestrictedFraction& f) const;

 private:
  ValuedQuiver q_;
  VarId hbar_;
  std::vector<VarId> w_;
  std::vector<int> slot_vertex_;
  std::vector<int> slot_index_;
  std::vector<int> slot_base_;   // first slot of each vertex
  std::vector<VarId> t_;
  std::vector<int> t_vertex_;
  std::vector<VarId> sqrt_;
};

// Integer shift exponents, one per gauge slot.
using ShiftVector = std::vector<int>;

// Element of the localized algebra in left normal form: a finite sum of
// admissible fractions times shift monomials prod u[i,r]^{n_{i,r}}.
// Immutable; all operations return new values.
class ShiftOperator {
 public:
  explicit ShiftOperator(const ShiftAlgebra& alg) : alg_(&alg) {}

  static ShiftOperator zero(const ShiftAlgebra& alg) { return ShiftOperator(alg); }
  static ShiftOperator one(const ShiftAlgebra& alg);
  static ShiftOperator coefficient(const ShiftAlgebra& alg, RestrictedFraction f);
  static ShiftOperator coefficient(const ShiftAlgebra& alg, Poly p);
  static ShiftOperator variable(const ShiftAlgebra& alg, VarId v);
  // u[vertex,r]^power as an operator.
  static ShiftOperator shift(const ShiftAlgebra& alg, int vertex, int r, int power = 1);
  static ShiftOperator term(const ShiftAlgebra& alg, ShiftVector n, RestrictedFraction f);

  const ShiftAlgebra& algebra() const { return *alg_; }
  const std::map<ShiftVector, RestrictedFraction>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_shift_free() const;
  // The fraction at shift 0 (zero if absent).
  RestrictedFraction shift_free_part() const;

  ShiftOperator operator+(const ShiftOperator& o) const;
  ShiftOperator operator-(const ShiftOperator& o) const;
  ShiftOperator operator*(const ShiftOperator& o) const;
  ShiftOperator operator*(const Rational& c) const;
  ShiftOperator operator-() const;
  ShiftOperator& operator+=(const ShiftOperator& o) { return *this = *this + o; }

  ShiftOperator commutator(const ShiftOperator& o) const;

  bool operator==(const ShiftOperator& o) const;
  bool operator!=(const ShiftOperator& o) const { return !(*this == o); }

  // Common degree of all terms under deg hbar = deg t = deg w = 1,
  // deg u = 0; nullopt when terms disagree or a numerator is mixed.
  std::optional<long> grade() const;

  // Automorphism w[i,r] -> w[i,r] + sigma_i hbar, t_k -> t_k + sigma_{i_k}
  // hbar, fixing hbar and the shifts. sigma is indexed by vertex.
  ShiftOperator apply_sigma(const std::vector<Rational>& sigma) const;

  ShiftOperator divided_by_hbar_exact() const;

  std::string str() const;

 private:
  void add_term(const ShiftVector& n, const RestrictedFraction& f);
  // tau_n: substitution w[i,r] -> w[i,r] + n_{i,r} d_i hbar.
  RestrictedFraction shifted_coefficient(const RestrictedFraction& f,
                                         const ShiftVector& n) const;
  const ShiftAlgebra* alg_;
  std::map<ShiftVector, RestrictedFraction> terms_;
};

// Divides by the linear form (a - b + c*hbar), normalizing the atom
// orientation; works for any two distinct variables of the algebra.
RestrictedFraction divide_by_linear(const ShiftAlgebra& alg, RestrictedFraction f,
                                    VarId a, VarId b, const Rational& c);

}  // namespace coulomb
