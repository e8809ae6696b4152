#pragma once

#include <map>
#include <string>

#include "coulomb/poly.hpp"

namespace coulomb {

// Atomic denominator factor of the localized difference-operator algebra:
// either the quantization variable hbar itself, or a linear form
// (hi - lo + shift*hbar) in two distinct variables. Positive rational
// scalars are absorbed into numerators and never stored as atoms.
struct Atom {
  VarId hi = kNoVar;
  VarId lo = kNoVar;
  Rational shift;  // multiple of hbar

  bool is_hbar() const { return hi == kNoVar; }
  static Atom hbar() { return Atom{}; }
  static Atom linear(VarId hi, VarId lo, Rational shift);

  Poly to_poly(VarId hbar_var) const;
  std::string str(VarId hbar_var) const;

  friend bool operator==(const Atom& a, const Atom& b) {
    return a.hi == b.hi && a.lo == b.lo && a.shift == b.shift;
  }
  friend bool operator<(const Atom& a, const Atom& b) {
    if (a.hi != b.hi) return a.hi < b.hi;
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.shift < b.shift;
  }
};

// Fraction numerator / product of atoms. Kept reduced: no denominator atom
// divides the numerator, so the representation is canonical (atoms are
// pairwise non-associate irreducibles) and equality is structural.
class RestrictedFraction {
 public:
  RestrictedFraction() = default;  // zero
  explicit RestrictedFraction(Poly numerator, VarId hbar_var);
  RestrictedFraction(Poly numerator, std::map<Atom, int> denominator, VarId hbar_var);

  static RestrictedFraction zero(VarId hbar_var) {
    return RestrictedFraction(Poly::zero(), hbar_var);
  }

  const Poly& numerator() const { return num_; }
  const std::map<Atom, int>& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }
  VarId hbar_var() const { return hbar_; }

  RestrictedFraction operator+(const RestrictedFraction& o) const;
  RestrictedFraction operator-(const RestrictedFraction& o) const;
  RestrictedFraction operator*(const RestrictedFraction& o) const;
  RestrictedFraction operator*(const Rational& c) const;
  RestrictedFraction operator-() const;
  RestrictedFraction& operator+=(const RestrictedFraction& o) { return *this = *this + o; }

  // Multiplies the denominator by atom^count.
  RestrictedFraction divided_by(const Atom& a, int count = 1) const;
  // Exact division by hbar: every numerator monomial must contain hbar
  // after reduction has removed hbar atoms. Throws otherwise.
  RestrictedFraction divided_by_hbar_exact() const;

  bool operator==(const RestrictedFraction& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RestrictedFraction& o) const { return !(*this == o); }

  // Degree with deg(var) = 1 for every variable, atoms counting -1 each;
  // nullopt when the numerator is inhomogeneous.
  std::optional<long> grade() const;

  // Applies a variable substitution v -> v + c*hbar to numerator and atoms.
  RestrictedFraction shift_substitute(const std::map<VarId, Poly::Shift>& assignments) const;

  bool denominator_vanishes_at_hbar_zero() const;

  std::string str() const;

 private:
  void reduce();
  Poly num_;
  std::map<Atom, int> den_;
  VarId hbar_ = kNoVar;
};

}  // namespace coulomb
