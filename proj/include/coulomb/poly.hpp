#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coulomb/rational.hpp"
#include "coulomb/variables.hpp"

namespace coulomb {

// Monomial: exponent vector, sparse, sorted by variable id, exponents > 0.
// The empty monomial is 1.
class Monomial {
 public:
  using Entry = std::pair<VarId, std::int32_t>;

  Monomial() = default;
  explicit Monomial(VarId v, std::int32_t e = 1);
  static Monomial one() { return Monomial(); }

  const std::vector<Entry>& entries() const { return entries_; }
  bool is_one() const { return entries_.empty(); }
  long total_degree() const;
  std::int32_t exponent(VarId v) const;

  Monomial operator*(const Monomial& o) const;
  // Exact divide; nullopt if any exponent would go negative.
  std::optional<Monomial> divide(const Monomial& o) const;

  bool operator==(const Monomial& o) const { return entries_ == o.entries_; }

  // Graded order, smaller variable id more significant; an admissible
  // monomial order (multiplicative, 1 minimal).
  static bool less(const Monomial& a, const Monomial& b);

  std::string str() const;

 private:
  std::vector<Entry> entries_;
};

struct MonomialGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return Monomial::less(b, a);
  }
};

// Sparse multivariate polynomial over the rationals. No zero coefficients
// are stored; the zero polynomial is the empty term map. Values are
// immutable in spirit: all operations return new polynomials.
class Poly {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialGreater>;

  Poly() = default;

  static Poly zero() { return Poly(); }
  static Poly constant(const Rational& c);
  static Poly var(VarId v);
  static Poly var(std::string_view name);  // interns
  static Poly term(const Monomial& m, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant term (0 if absent).
  Rational constant_term() const;

  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  // Leading term w.r.t. the monomial order; polynomial must be nonzero.
  const Monomial& leading_monomial() const;
  const Rational& leading_coefficient() const;

  long total_degree() const;  // -1 for the zero polynomial
  bool is_homogeneous() const;
  std::int32_t degree_in(VarId v) const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly operator*(const Rational& c) const;
  Poly pow(unsigned e) const;

  bool operator==(const Poly& o) const { return terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // Replaces v by the polynomial `value` everywhere.
  Poly substitute(VarId v, const Poly& value) const;

  // Simultaneous substitution v -> target + shift * hbar for each listed
  // variable; all other variables fixed. Exact.
  struct Shift {
    VarId target;
    Rational hbar_multiple;
  };
  Poly shift_substitute(const std::map<VarId, Shift>& assignments,
                        VarId hbar) const;

  // Exact polynomial division: returns q with *this == q * divisor, or
  // nullopt if not divisible. Divisor must be nonzero.
  std::optional<Poly> divide_exact(const Poly& divisor) const;

  // Evaluation with every variable assigned (missing variables error).
  Rational evaluate(const std::map<VarId, Rational>& point) const;

  // All variables occurring with nonzero exponent.
  std::vector<VarId> variables() const;

  std::string str() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  TermMap terms_;
};

inline Poly operator*(const Rational& c, const Poly& p) { return p * c; }

}  // namespace coulomb
