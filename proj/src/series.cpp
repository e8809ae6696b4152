#include "coulomb/series.hpp"

#include <sstream>
#include <stdexcept>

namespace coulomb {

namespace {
long saturating_add(long a, long b) {
  if (a == GradedSeries::kExactOrder || b == GradedSeries::kExactOrder)
    return GradedSeries::kExactOrder;
  return a + b;
}
}  // namespace

GradedSeries GradedSeries::constant(VarId var, const Rational& c, long order) {
  GradedSeries s(var, order);
  s.set_coefficient(0, c);
  return s;
}

GradedSeries GradedSeries::monomial(VarId var, long degree, const Rational& c, long order) {
  GradedSeries s(var, order);
  s.set_coefficient(degree, c);
  return s;
}

GradedSeries GradedSeries::geometric(VarId var, long step, long order) {
  if (step <= 0) throw std::invalid_argument("geometric series needs positive step");
  GradedSeries s(var, order);
  for (long d = 0; d < order; d += step) s.coeffs_[d] = 1;
  return s;
}

Rational GradedSeries::coefficient(long degree) const {
  if (degree >= order_)
    throw std::out_of_range("series coefficient beyond truncation order");
  auto it = coeffs_.find(degree);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void GradedSeries::set_coefficient(long degree, const Rational& c) {
  if (degree >= order_) return;  // unknown region, nothing to store
  if (c == 0)
    coeffs_.erase(degree);
  else
    coeffs_[degree] = c;
}

long GradedSeries::min_possible_degree() const {
  if (!coeffs_.empty()) return std::min(coeffs_.begin()->first, order_);
  return order_;
}

GradedSeries GradedSeries::truncated(long order) const {
  GradedSeries s(var_, std::min(order, order_));
  for (const auto& [d, c] : coeffs_)
    if (d < s.order_) s.coeffs_[d] = c;
  return s;
}

void GradedSeries::check_same_var(const GradedSeries& o) const {
  if (var_ != o.var_) throw std::invalid_argument("series variable mismatch");
}

GradedSeries GradedSeries::operator+(const GradedSeries& o) const {
  check_same_var(o);
  GradedSeries s(var_, std::min(order_, o.order_));
  for (const auto& [d, c] : coeffs_)
    if (d < s.order_) s.coeffs_[d] = c;
  for (const auto& [d, c] : o.coeffs_) {
    if (d >= s.order_) continue;
    auto [it, inserted] = s.coeffs_.emplace(d, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) s.coeffs_.erase(it);
    }
  }
  return s;
}

GradedSeries GradedSeries::operator-() const {
  GradedSeries s(var_, order_);
  for (const auto& [d, c] : coeffs_) s.coeffs_[d] = -c;
  return s;
}

GradedSeries GradedSeries::operator-(const GradedSeries& o) const { return *this + (-o); }

GradedSeries GradedSeries::operator*(const GradedSeries& o) const {
  check_same_var(o);
  // A product coefficient at degree d is known only when every possibly
  // nonzero split d = i + j draws from the known parts of both factors.
  long order = std::min(saturating_add(order_, o.min_possible_degree()),
                        saturating_add(o.order_, min_possible_degree()));
  if (coeffs_.empty() && exact()) order = kExactOrder;   // exact zero
  if (o.coeffs_.empty() && o.exact()) order = kExactOrder;
  GradedSeries s(var_, order);
  for (const auto& [d1, c1] : coeffs_)
    for (const auto& [d2, c2] : o.coeffs_) {
      long d = d1 + d2;
      if (d >= order) continue;
      auto [it, inserted] = s.coeffs_.emplace(d, Rational(c1 * c2));
      if (!inserted) {
        it->second += c1 * c2;
        if (it->second == 0) s.coeffs_.erase(it);
      }
    }
  return s;
}

GradedSeries GradedSeries::operator*(const Rational& c) const {
  GradedSeries s(var_, order_);
  if (c == 0) return s;
  for (const auto& [d, k] : coeffs_) s.coeffs_[d] = k * c;
  return s;
}

bool GradedSeries::agrees_with(const GradedSeries& o) const {
  if (var_ != o.var_) return false;
  long horizon = std::min(order_, o.order_);
  for (const auto& [d, c] : coeffs_) {
    if (d >= horizon) continue;
    auto it = o.coeffs_.find(d);
    if (it == o.coeffs_.end() || it->second != c) return false;
  }
  for (const auto& [d, c] : o.coeffs_) {
    if (d >= horizon) continue;
    if (coeffs_.find(d) == coeffs_.end()) return false;
  }
  return true;
}

bool GradedSeries::operator==(const GradedSeries& o) const {
  return var_ == o.var_ && order_ == o.order_ && coeffs_ == o.coeffs_;
}

std::string GradedSeries::str(std::string_view var_name) const {
  std::string v = var_name.empty() ? vars::name(var_) : std::string(var_name);
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : coeffs_) {
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
    if (d == 0)
      os << to_string(a);
    else {
      if (a != 1) os << to_string(a) << "*";
      os << v;
      if (d != 1) os << "^" << d;
    }
    first = false;
  }
  if (first) os << "0";
  if (!exact()) os << " + O(" << v << "^" << order_ << ")";
  return os.str();
}

}  // namespace coulomb
