#include "coulomb/shiftop.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace coulomb {

ShiftAlgebra::ShiftAlgebra(ValuedQuiver q) : q_(std::move(q)) {
  validate_or_throw(q_);
  hbar_ = vars::intern("hbar");
  for (int i = 0; i < q_.rank(); ++i) {
    slot_base_.push_back(static_cast<int>(w_.size()));
    for (long r = 1; r <= q_.dim_v[i]; ++r) {
      w_.push_back(vars::intern("w[" + q_.ids[i] + "," + std::to_string(r) + "]"));
      slot_vertex_.push_back(i);
      slot_index_.push_back(static_cast<int>(r));
    }
  }
  int k = 0;
  for (int i = 0; i < q_.rank(); ++i)
    for (long c = 0; c < q_.dim_w[i]; ++c) {
      ++k;
      t_.push_back(vars::intern("t" + std::to_string(k)));
      t_vertex_.push_back(i);
    }
  for (int i = 0; i < q_.rank(); ++i)
    sqrt_.push_back(vars::intern("s[" + q_.ids[i] + "]"));
}

int ShiftAlgebra::slot(int vertex, int r) const {
  if (vertex < 0 || vertex >= q_.rank() || r < 1 || r > q_.dim_v[vertex])
    throw std::out_of_range("no such gauge slot");
  return slot_base_[vertex] + r - 1;
}

VarId ShiftAlgebra::t(int k) const {
  if (k < 1 || k > flavor_count()) throw std::out_of_range("no such flavor");
  return t_[k - 1];
}

int ShiftAlgebra::flavor_vertex(int k) const {
  if (k < 1 || k > flavor_count()) throw std::out_of_range("no such flavor");
  return t_vertex_[k - 1];
}

std::optional<int> ShiftAlgebra::slot_of_var(VarId v) const {
  for (int s = 0; s < slots(); ++s)
    if (w_[s] == v) return s;
  return std::nullopt;
}

std::optional<int> ShiftAlgebra::flavor_of_var(VarId v) const {
  for (std::size_t k = 0; k < t_.size(); ++k)
    if (t_[k] == v) return static_cast<int>(k) + 1;
  return std::nullopt;
}

Poly ShiftAlgebra::reduce_square_roots(const Poly& p) const {
  Poly r = p;
  for (int i = 0; i < q_.rank(); ++i) {
    VarId s = sqrt_[i];
    if (r.degree_in(s) < 2) continue;
    Poly acc;
    for (const auto& [m, c] : r.terms()) {
      std::int32_t e = m.exponent(s);
      Monomial rest;
      for (const auto& [v, k] : m.entries())
        if (v != s) rest = rest * Monomial(v, k);
      Rational scale = c;
      for (std::int32_t k = 0; k + 1 < e; k += 2) scale *= q_.d[i];
      if (e % 2) rest = rest * Monomial(s, 1);
      acc += Poly::term(rest, scale);
    }
    r = acc;
  }
  return r;
}

bool ShiftAlgebra::atom_admissible(const Atom& a) const {
  if (a.is_hbar()) return true;
  auto s1 = slot_of_var(a.hi), s2 = slot_of_var(a.lo);
  if (!s1 || !s2) return false;
  int v1 = slot_vertex_[*s1], v2 = slot_vertex_[*s2];
  if (v1 != v2) return false;
  Rational m = a.shift / Rational(q_.d[v1]);
  return is_integer(m);
}

void ShiftAlgebra::check_admissible(const RestrictedFraction& f) const {
  for (const auto& [a, e] : f.denominator())
    if (!atom_admissible(a))
      throw std::domain_error("denominator atom outside the localization: " + a.str(hbar_));
}

ShiftOperator ShiftOperator::one(const ShiftAlgebra& alg) {
  return coefficient(alg, Poly::constant(1));
}

ShiftOperator ShiftOperator::coefficient(const ShiftAlgebra& alg, RestrictedFraction f) {
  ShiftOperator op(alg);
  op.add_term(ShiftVector(alg.slots(), 0), f);
  return op;
}

ShiftOperator ShiftOperator::coefficient(const ShiftAlgebra& alg, Poly p) {
  return coefficient(alg, RestrictedFraction(std::move(p), alg.hbar()));
}

ShiftOperator ShiftOperator::variable(const ShiftAlgebra& alg, VarId v) {
  return coefficient(alg, Poly::var(v));
}

ShiftOperator ShiftOperator::shift(const ShiftAlgebra& alg, int vertex, int r, int power) {
  ShiftVector n(alg.slots(), 0);
  n[alg.slot(vertex, r)] = power;
  return term(alg, std::move(n), RestrictedFraction(Poly::constant(1), alg.hbar()));
}

ShiftOperator ShiftOperator::term(const ShiftAlgebra& alg, ShiftVector n, RestrictedFraction f) {
  if (static_cast<int>(n.size()) != alg.slots())
    throw std::invalid_argument("shift vector has wrong length");
  ShiftOperator op(alg);
  op.add_term(n, f);
  return op;
}

void ShiftOperator::add_term(const ShiftVector& n, const RestrictedFraction& f) {
  if (f.is_zero()) return;
  alg_->check_admissible(f);
  auto [it, inserted] = terms_.emplace(n, f);
  if (!inserted) {
    it->second = it->second + f;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool ShiftOperator::is_shift_free() const {
  for (const auto& [n, f] : terms_)
    for (int x : n)
      if (x != 0) return false;
  return true;
}

RestrictedFraction ShiftOperator::shift_free_part() const {
  auto it = terms_.find(ShiftVector(alg_->slots(), 0));
  return it == terms_.end() ? RestrictedFraction::zero(alg_->hbar()) : it->second;
}

ShiftOperator ShiftOperator::operator+(const ShiftOperator& o) const {
  ShiftOperator r = *this;
  for (const auto& [n, f] : o.terms_) r.add_term(n, f);
  return r;
}

ShiftOperator ShiftOperator::operator-() const {
  ShiftOperator r(*alg_);
  for (const auto& [n, f] : terms_) r.terms_.emplace(n, -f);
  return r;
}

ShiftOperator ShiftOperator::operator-(const ShiftOperator& o) const { return *this + (-o); }

RestrictedFraction ShiftOperator::shifted_coefficient(const RestrictedFraction& f,
                                                      const ShiftVector& n) const {
  std::map<VarId, Poly::Shift> assignments;
  for (int s = 0; s < alg_->slots(); ++s) {
    if (n[s] == 0) continue;
    VarId v = alg_->w_slot(s);
    assignments[v] = {v, Rational(n[s] * alg_->d(alg_->slot_vertex(s)))};
  }
  if (assignments.empty()) return f;
  return f.shift_substitute(assignments);
}

ShiftOperator ShiftOperator::operator*(const ShiftOperator& o) const {
  // (f u^n)(g u^m) = f tau_n(g) u^{n+m}.
  ShiftOperator r(*alg_);
  for (const auto& [n, f] : terms_)
    for (const auto& [m, g] : o.terms_) {
      ShiftVector nm(n);
      for (std::size_t k = 0; k < nm.size(); ++k) nm[k] += m[k];
      r.add_term(nm, f * shifted_coefficient(g, n));
    }
  return r;
}

ShiftOperator ShiftOperator::operator*(const Rational& c) const {
  ShiftOperator r(*alg_);
  if (c == 0) return r;
  for (const auto& [n, f] : terms_) r.terms_.emplace(n, f * c);
  return r;
}

ShiftOperator ShiftOperator::commutator(const ShiftOperator& o) const {
  return *this * o - o * *this;
}

bool ShiftOperator::operator==(const ShiftOperator& o) const { return terms_ == o.terms_; }

std::optional<long> ShiftOperator::grade() const {
  std::optional<long> g;
  for (const auto& [n, f] : terms_) {
    auto fg = f.grade();
    if (!fg) return std::nullopt;
    if (g && *g != *fg) return std::nullopt;
    g = fg;
  }
  return terms_.empty() ? std::optional<long>(0) : g;
}

ShiftOperator ShiftOperator::apply_sigma(const std::vector<Rational>& sigma) const {
  if (static_cast<int>(sigma.size()) != alg_->quiver().rank())
    throw std::invalid_argument("sigma must have one entry per vertex");
  std::map<VarId, Poly::Shift> assignments;
  for (int s = 0; s < alg_->slots(); ++s) {
    VarId v = alg_->w_slot(s);
    const Rational& c = sigma[alg_->slot_vertex(s)];
    if (c != 0) assignments[v] = {v, c};
  }
  for (int k = 1; k <= alg_->flavor_count(); ++k) {
    VarId v = alg_->t(k);
    const Rational& c = sigma[alg_->flavor_vertex(k)];
    if (c != 0) assignments[v] = {v, c};
  }
  ShiftOperator r(*alg_);
  for (const auto& [n, f] : terms_) r.add_term(n, f.shift_substitute(assignments));
  return r;
}

ShiftOperator ShiftOperator::divided_by_hbar_exact() const {
  ShiftOperator r(*alg_);
  for (const auto& [n, f] : terms_) r.add_term(n, f.divided_by_hbar_exact());
  return r;
}

std::string ShiftOperator::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [n, f] : terms_) {
    if (!first) os << " + ";
    bool shifted = false;
    for (int x : n) shifted = shifted || x != 0;
    // Parenthesize coefficient sums so the rendering reparses exactly.
    if (shifted && f.is_polynomial() && f.numerator().term_count() > 1)
      os << "(" << f.str() << ")";
    else
      os << f.str();
    for (int s = 0; s < alg_->slots(); ++s) {
      if (n[s] == 0) continue;
      os << " * u[" << alg_->quiver().ids[alg_->slot_vertex(s)] << ","
         << alg_->slot_index(s) << "]";
      if (n[s] != 1) os << "^" << n[s];
    }
    first = false;
  }
  return os.str();
}

RestrictedFraction divide_by_linear(const ShiftAlgebra&, RestrictedFraction f,
                                    VarId a, VarId b, const Rational& c) {
  if (a == b) throw std::invalid_argument("degenerate linear form");
  if (a < b) return f.divided_by(Atom::linear(a, b, c));
  // (a - b + c h) = -(b - a - c h)
  return (-f).divided_by(Atom::linear(b, a, -c));
}

}  // namespace coulomb
