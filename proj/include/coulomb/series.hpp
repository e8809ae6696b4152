#pragma once

#include <limits>
#include <map>
#include <string>

#include "coulomb/rational.hpp"
#include "coulomb/variables.hpp"

namespace coulomb {

// Truncated univariate Laurent series with exact rational coefficients.
// Degrees at or beyond `order()` are unknown, not zero: arithmetic tracks
// how far results are valid, and coefficient queries beyond that point are
// rejected. An order of kExactOrder means the series is an exact Laurent
// polynomial.
class GradedSeries {
 public:
  static constexpr long kExactOrder = std::numeric_limits<long>::max();

  explicit GradedSeries(VarId var, long order = kExactOrder) : var_(var), order_(order) {}

  static GradedSeries zero(VarId var, long order = kExactOrder) { return GradedSeries(var, order); }
  static GradedSeries constant(VarId var, const Rational& c, long order = kExactOrder);
  // t^k as an exact series.
  static GradedSeries monomial(VarId var, long degree, const Rational& c = 1,
                               long order = kExactOrder);
  // Expansion of 1/(1 - t^step) up to `order`, step > 0.
  static GradedSeries geometric(VarId var, long step, long order);

  VarId var() const { return var_; }
  long order() const { return order_; }
  bool exact() const { return order_ == kExactOrder; }
  const std::map<long, Rational>& coefficients() const { return coeffs_; }

  // Coefficient at `degree`; throws if degree >= order (unknown region).
  Rational coefficient(long degree) const;
  void set_coefficient(long degree, const Rational& c);

  // Least degree that could carry a nonzero coefficient (min of the stored
  // support and the truncation order).
  long min_possible_degree() const;

  GradedSeries truncated(long order) const;

  GradedSeries operator+(const GradedSeries& o) const;
  GradedSeries operator-(const GradedSeries& o) const;
  GradedSeries operator*(const GradedSeries& o) const;
  GradedSeries operator*(const Rational& c) const;
  GradedSeries operator-() const;
  GradedSeries& operator+=(const GradedSeries& o) { return *this = *this + o; }

  // Equality of the known ranges: both series must agree on every degree
  // below the smaller order.
  bool agrees_with(const GradedSeries& o) const;
  bool operator==(const GradedSeries& o) const;

  std::string str(std::string_view var_name = "") const;

 private:
  void check_same_var(const GradedSeries& o) const;
  VarId var_;
  long order_;
  std::map<long, Rational> coeffs_;  // only degrees < order_, nonzero values
};

}  // namespace coulomb
