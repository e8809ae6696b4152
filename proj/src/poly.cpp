#include "coulomb/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace coulomb {

Monomial::Monomial(VarId v, std::int32_t e) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  if (e > 0) entries_.push_back({v, e});
}

long Monomial::total_degree() const {
  long d = 0;
  for (const auto& [v, e] : entries_) d += e;
  return d;
}

std::int32_t Monomial::exponent(VarId v) const {
  for (const auto& [w, e] : entries_)
    if (w == v) return e;
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.entries_.reserve(entries_.size() + o.entries_.size());
  auto a = entries_.begin(), b = o.entries_.begin();
  while (a != entries_.end() && b != o.entries_.end()) {
    if (a->first < b->first)
      r.entries_.push_back(*a++);
    else if (b->first < a->first)
      r.entries_.push_back(*b++);
    else {
      r.entries_.push_back({a->first, a->second + b->second});
      ++a, ++b;
    }
  }
  r.entries_.insert(r.entries_.end(), a, entries_.end());
  r.entries_.insert(r.entries_.end(), b, o.entries_.end());
  return r;
}

std::optional<Monomial> Monomial::divide(const Monomial& o) const {
  Monomial r;
  auto a = entries_.begin(), b = o.entries_.begin();
  while (b != o.entries_.end()) {
    if (a == entries_.end() || a->first > b->first) return std::nullopt;
    if (a->first < b->first) {
      r.entries_.push_back(*a++);
      continue;
    }
    if (a->second < b->second) return std::nullopt;
    if (a->second > b->second) r.entries_.push_back({a->first, a->second - b->second});
    ++a, ++b;
  }
  r.entries_.insert(r.entries_.end(), a, entries_.end());
  return r;
}

bool Monomial::less(const Monomial& a, const Monomial& b) {
  long da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  // Same degree: walk variables in id order; the monomial with the higher
  // exponent on the first differing variable is the larger one.
  auto i = a.entries_.begin(), j = b.entries_.begin();
  while (i != a.entries_.end() && j != b.entries_.end()) {
    if (i->first != j->first) return i->first > j->first;
    if (i->second != j->second) return i->second < j->second;
    ++i, ++j;
  }
  return false;  // identical
}

std::string Monomial::str() const {
  if (is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [v, e] : entries_) {
    if (!first) os << "*";
    os << vars::name(v);
    if (e != 1) os << "^" << e;
    first = false;
  }
  return os.str();
}

Poly Poly::constant(const Rational& c) {
  Poly p;
  p.add_term(Monomial::one(), c);
  return p;
}

Poly Poly::var(VarId v) {
  Poly p;
  p.add_term(Monomial(v), 1);
  return p;
}

Poly Poly::var(std::string_view name) { return var(vars::intern(name)); }

Poly Poly::term(const Monomial& m, const Rational& c) {
  Poly p;
  p.add_term(m, c);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Poly::constant_term() const {
  auto it = terms_.find(Monomial::one());
  return it == terms_.end() ? Rational(0) : it->second;
}

const Monomial& Poly::leading_monomial() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return terms_.begin()->first;
}

const Rational& Poly::leading_coefficient() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return terms_.begin()->second;
}

long Poly::total_degree() const {
  if (terms_.empty()) return -1;
  return terms_.begin()->first.total_degree();
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  long d = terms_.begin()->first.total_degree();
  for (const auto& [m, c] : terms_)
    if (m.total_degree() != d) return false;
  return true;
}

std::int32_t Poly::degree_in(VarId v) const {
  std::int32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
  return d;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  r += o;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  r -= o;
  return r;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, Rational(c1 * c2));
  return r;
}

Poly Poly::operator*(const Rational& c) const {
  if (c == 0) return Poly();
  Poly r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, Rational(k * c));
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly r = constant(1);
  Poly base = *this;
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

Poly Poly::substitute(VarId v, const Poly& value) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    std::int32_t e = m.exponent(v);
    if (e == 0) {
      r.add_term(m, c);
      continue;
    }
    Monomial rest;
    for (const auto& [w, k] : m.entries())
      if (w != v) rest = rest * Monomial(w, k);
    r += Poly::term(rest, c) * value.pow(static_cast<unsigned>(e));
  }
  return r;
}

Poly Poly::shift_substitute(const std::map<VarId, Shift>& assignments,
                            VarId hbar) const {
  // Sequential passes compute the simultaneous substitution only when no
  // replacement value mentions another substituted variable.
  for (const auto& [v, shift] : assignments) {
    if (shift.target != v && assignments.count(shift.target))
      throw std::invalid_argument("substitution targets overlap");
    if (v == hbar) throw std::invalid_argument("cannot shift the hbar variable");
  }
  Poly r = *this;
  for (const auto& [v, shift] : assignments) {
    Poly value = Poly::var(shift.target);
    if (shift.hbar_multiple != 0)
      value += Poly::var(hbar) * shift.hbar_multiple;
    r = r.substitute(v, value);
  }
  return r;
}

std::optional<Poly> Poly::divide_exact(const Poly& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
  Poly rem = *this;
  Poly quot;
  const Monomial& dm = divisor.leading_monomial();
  const Rational& dc = divisor.leading_coefficient();
  while (!rem.is_zero()) {
    auto q = rem.leading_monomial().divide(dm);
    if (!q) return std::nullopt;
    Rational c = rem.leading_coefficient() / dc;
    Poly t = Poly::term(*q, c);
    quot += t;
    rem -= t * divisor;
  }
  return quot;
}

Rational Poly::evaluate(const std::map<VarId, Rational>& point) const {
  Rational total(0);
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (const auto& [var, e] : m.entries()) {
      auto it = point.find(var);
      if (it == point.end()) throw std::invalid_argument("unbound variable " + vars::name(var));
      for (std::int32_t k = 0; k < e; ++k) v *= it->second;
    }
    total += v;
  }
  return total;
}

std::vector<VarId> Poly::variables() const {
  std::vector<VarId> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.entries()) out.push_back(v);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (m.is_one())
      os << to_string(a);
    else if (a == 1)
      os << m.str();
    else
      os << to_string(a) << "*" << m.str();
    first = false;
  }
  return os.str();
}

}  // namespace coulomb
