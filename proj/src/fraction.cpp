#include "coulomb/fraction.hpp"

#include <sstream>
#include <stdexcept>

namespace coulomb {

Atom Atom::linear(VarId hi, VarId lo, Rational shift) {
  if (hi == lo) throw std::invalid_argument("atom needs two distinct variables");
  if (hi == kNoVar || lo == kNoVar) throw std::invalid_argument("bad atom variable");
  if (hi > lo) throw std::invalid_argument("atom not normalized (hi > lo)");
  Atom a;
  a.hi = hi;
  a.lo = lo;
  a.shift = std::move(shift);
  return a;
}

Poly Atom::to_poly(VarId hbar_var) const {
  if (is_hbar()) return Poly::var(hbar_var);
  Poly p = Poly::var(hi) - Poly::var(lo);
  if (shift != 0) p += Poly::var(hbar_var) * shift;
  return p;
}

std::string Atom::str(VarId hbar_var) const { return to_poly(hbar_var).str(); }

RestrictedFraction::RestrictedFraction(Poly numerator, VarId hbar_var)
    : num_(std::move(numerator)), hbar_(hbar_var) {}

RestrictedFraction::RestrictedFraction(Poly numerator, std::map<Atom, int> denominator,
                                       VarId hbar_var)
    : num_(std::move(numerator)), den_(std::move(denominator)), hbar_(hbar_var) {
  for (const auto& [a, e] : den_)
    if (e <= 0) throw std::invalid_argument("atom exponent must be positive");
  reduce();
}

void RestrictedFraction::reduce() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (auto it = den_.begin(); it != den_.end();) {
    Poly atom = it->first.to_poly(hbar_);
    while (it->second > 0) {
      auto q = num_.divide_exact(atom);
      if (!q) break;
      num_ = std::move(*q);
      --it->second;
    }
    it = it->second == 0 ? den_.erase(it) : std::next(it);
  }
}

RestrictedFraction RestrictedFraction::operator*(const RestrictedFraction& o) const {
  if (is_zero()) return *this;
  if (o.is_zero()) return o;
  std::map<Atom, int> den = den_;
  for (const auto& [a, e] : o.den_) den[a] += e;
  return RestrictedFraction(num_ * o.num_, std::move(den), hbar_);
}

RestrictedFraction RestrictedFraction::operator*(const Rational& c) const {
  if (c == 0) return RestrictedFraction(Poly::zero(), hbar_);
  RestrictedFraction r = *this;
  r.num_ = r.num_ * c;
  return r;
}

RestrictedFraction RestrictedFraction::operator-() const {
  RestrictedFraction r = *this;
  r.num_ = -r.num_;
  return r;
}

RestrictedFraction RestrictedFraction::operator+(const RestrictedFraction& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  // Common denominator: per-atom maximum of the two exponent multisets.
  std::map<Atom, int> den = den_;
  for (const auto& [a, e] : o.den_) {
    auto [it, inserted] = den.emplace(a, e);
    if (!inserted) it->second = std::max(it->second, e);
  }
  Poly lhs = num_, rhs = o.num_;
  for (const auto& [a, e] : den) {
    Poly ap = a.to_poly(hbar_);
    auto it = den_.find(a);
    int have = it == den_.end() ? 0 : it->second;
    for (int k = have; k < e; ++k) lhs *= ap;
    it = o.den_.find(a);
    have = it == o.den_.end() ? 0 : it->second;
    for (int k = have; k < e; ++k) rhs *= ap;
  }
  return RestrictedFraction(lhs + rhs, std::move(den), hbar_);
}

RestrictedFraction RestrictedFraction::operator-(const RestrictedFraction& o) const {
  return *this + (-o);
}

RestrictedFraction RestrictedFraction::divided_by(const Atom& a, int count) const {
  if (count < 0) throw std::invalid_argument("negative atom count");
  if (is_zero() || count == 0) return *this;
  std::map<Atom, int> den = den_;
  den[a] += count;
  return RestrictedFraction(num_, std::move(den), hbar_);
}

RestrictedFraction RestrictedFraction::divided_by_hbar_exact() const {
  if (is_zero()) return *this;
  if (den_.count(Atom::hbar()))
    throw std::domain_error("fraction has an hbar pole; not hbar-divisible");
  auto q = num_.divide_exact(Poly::var(hbar_));
  if (!q) throw std::domain_error("numerator not divisible by hbar");
  return RestrictedFraction(std::move(*q), den_, hbar_);
}

std::optional<long> RestrictedFraction::grade() const {
  if (num_.is_zero() || !num_.is_homogeneous()) return std::nullopt;
  long g = num_.total_degree();
  for (const auto& [a, e] : den_) g -= e;
  return g;
}

RestrictedFraction RestrictedFraction::shift_substitute(
    const std::map<VarId, Poly::Shift>& assignments) const {
  if (assignments.count(hbar_)) throw std::invalid_argument("cannot shift hbar itself");
  std::map<Atom, int> den;
  for (const auto& [a, e] : den_) {
    if (a.is_hbar()) {
      den[a] += e;
      continue;
    }
    Rational shift = a.shift;
    if (auto it = assignments.find(a.hi); it != assignments.end()) {
      if (it->second.target != a.hi)
        throw std::invalid_argument("substitution would break a denominator atom");
      shift += it->second.hbar_multiple;
    }
    if (auto it = assignments.find(a.lo); it != assignments.end()) {
      if (it->second.target != a.lo)
        throw std::invalid_argument("substitution would break a denominator atom");
      shift -= it->second.hbar_multiple;
    }
    den[Atom::linear(a.hi, a.lo, shift)] += e;
  }
  return RestrictedFraction(num_.shift_substitute(assignments, hbar_), std::move(den), hbar_);
}

bool RestrictedFraction::denominator_vanishes_at_hbar_zero() const {
  return den_.count(Atom::hbar()) > 0;
}

std::string RestrictedFraction::str() const {
  if (den_.empty()) return num_.str();
  std::ostringstream os;
  os << "(" << num_.str() << ")";
  for (const auto& [a, e] : den_) {
    os << "/(" << a.str(hbar_) << ")";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

}  // namespace coulomb
