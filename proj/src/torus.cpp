#include "coulomb/torus.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace coulomb {

void Rank2Edge::check() const {
  if (g <= 0 || f12 <= 0 || f21 <= 0) throw std::invalid_argument("edge data must be positive");
  if (std::gcd(f12, f21) != 1) throw std::invalid_argument("f12 and f21 must be coprime");
}

// Both parameters are interned together so the id order (and with it the
// canonical term order of printed polynomials) never depends on which
// accessor runs first.
VarId TorusClass::w1() {
  VarId a = vars::intern("w1");
  vars::intern("w2");
  return a;
}
VarId TorusClass::w2() {
  vars::intern("w1");
  return vars::intern("w2");
}
Poly TorusClass::w1_minus_w2() {
  Poly a = Poly::var(w1());
  return a - Poly::var(w2());
}

TorusClass TorusClass::unit(long a, long b, Poly coeff) {
  TorusClass t;
  t.add({a, b}, coeff);
  return t;
}

void TorusClass::add(const Lattice& l, const Poly& p) {
  if (p.is_zero()) return;
  auto [it, inserted] = terms_.emplace(l, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TorusClass TorusClass::operator+(const TorusClass& o) const {
  TorusClass r = *this;
  for (const auto& [l, p] : o.terms_) r.add(l, p);
  return r;
}

TorusClass TorusClass::operator-() const {
  TorusClass r;
  for (const auto& [l, p] : terms_) r.terms_.emplace(l, -p);
  return r;
}

TorusClass TorusClass::operator-(const TorusClass& o) const { return *this + (-o); }

TorusClass TorusClass::operator*(const TorusClass& o) const {
  TorusClass r;
  for (const auto& [l1, p1] : terms_)
    for (const auto& [l2, p2] : o.terms_)
      r.add({l1.first + l2.first, l1.second + l2.second}, p1 * p2);
  return r;
}

TorusClass TorusClass::operator*(const Poly& p) const {
  TorusClass r;
  for (const auto& [l, c] : terms_) r.add(l, c * p);
  return r;
}

std::optional<TorusClass> TorusClass::divide_exact(const Poly& p) const {
  TorusClass r;
  for (const auto& [l, c] : terms_) {
    auto q = c.divide_exact(p);
    if (!q) return std::nullopt;
    r.add(l, *q);
  }
  return r;
}

std::string TorusClass::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [l, p] : terms_) {
    if (!first) os << " + ";
    if (p == Poly::constant(1))
      os << "u[" << l.first << "," << l.second << "]";
    else
      os << "(" << p.str() << ")*u[" << l.first << "," << l.second << "]";
    first = false;
  }
  return os.str();
}

long zstar_exponent(const Rank2Edge& e, long a, long b) {
  e.check();
  return e.g * std::max(e.f12 * b - e.f21 * a, 0L);
}

TorusClass zstar(const Rank2Edge& e, long a, long b) {
  long exp = zstar_exponent(e, a, b);
  return TorusClass::unit(a, b, TorusClass::w1_minus_w2().pow(static_cast<unsigned>(exp)));
}

TorusClass zstar(const YClass& y) { return zstar(y.edge, y.a, y.b); }

bool check_relation(const std::vector<YClass>& lhs, const std::vector<YClass>& rhs,
                    const Poly& lhs_scalar, const Poly& rhs_scalar) {
  TorusClass l = TorusClass::one() * lhs_scalar;
  for (const auto& y : lhs) l = l * zstar(y);
  TorusClass r = TorusClass::one() * rhs_scalar;
  for (const auto& y : rhs) r = r * zstar(y);
  return l == r;
}

LadderSides ladder_relation(long m, long b) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  if (b < 0 || b > m - 1) throw std::out_of_range("ladder relation needs 0 <= b <= m-1");
  Rank2Edge e = Rank2Edge::classical(m);
  LadderSides s{zstar(e, 1, b) * zstar(e, 0, 1),
                TorusClass::unit(0, 0, TorusClass::w1_minus_w2()) * zstar(e, 1, b + 1), false};
  s.equal = s.lhs == s.rhs;
  return s;
}

std::string NormalForm::str() const {
  if (factors.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& f : factors) {
    if (!first) os << "*";
    os << "y[" << f.a << "," << f.b << "]";
    if (f.exponent != 1) os << "^" << f.exponent;
    first = false;
  }
  return os.str();
}

NormalForm positive_normal_form(long m, long a, long b) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  if (a < 0 || b < 0) throw std::invalid_argument("positive part needs a, b >= 0");
  NormalForm nf;
  auto push = [&nf](long fa, long fb, long e) {
    if (e > 0) nf.factors.push_back({fa, fb, e});
  };
  if (b <= m * a) {
    // Below the wall: b = m q + r with 0 <= r < m, at most one middle
    // generator appears.
    long q = b / m, r = b % m;
    push(1, m, q);
    push(1, 0, a - q - (r > 0 ? 1 : 0));
    push(1, r, r > 0 ? 1 : 0);
  } else {
    push(1, m, a);
    push(0, 1, b - m * a);
  }

  Rank2Edge e = Rank2Edge::classical(m);
  TorusClass prod = TorusClass::one();
  for (const auto& f : nf.factors)
    for (long k = 0; k < f.exponent; ++k) prod = prod * zstar(e, f.a, f.b);
  nf.verified = prod == zstar(e, a, b);
  return nf;
}

namespace {

// Solves f12*b0 - f21*a0 = 1 (f's coprime) by extended gcd.
std::pair<long, long> unit_pairing_point(const Rank2Edge& e) {
  long old_r = e.f12, r = e.f21;
  long old_s = 1, s = 0;
  while (r != 0) {
    long q = old_r / r;
    long tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  // old_s * f12 = old_r = 1 (mod f21); pick b0 = old_s, a0 from the relation.
  long b0 = old_s;
  long a0 = (e.f12 * b0 - 1) / e.f21;
  return {a0, b0};
}

PresentationCheck make_check(const std::string& id, bool pass, const std::string& detail) {
  return PresentationCheck{id, pass, detail};
}

}  // namespace

std::vector<PresentationCheck> presentation_general(const Rank2Edge& e) {
  e.check();
  std::vector<PresentationCheck> out;
  Poly wd = TorusClass::w1_minus_w2();

  // Invertible class along the wall direction.
  {
    TorusClass prod = zstar(e, e.f12, e.f21) * zstar(e, -e.f12, -e.f21);
    out.push_back(make_check("wall-class-invertible", prod == TorusClass::one(),
                             "y[f12,f21]*y[-f12,-f21] = " + prod.str()));
  }
  // (w1-w2)^g = y_{a0,b0} y_{-a0,-b0} for a pairing-one point (a0,b0).
  {
    auto [a0, b0] = unit_pairing_point(e);
    TorusClass prod = zstar(e, a0, b0) * zstar(e, -a0, -b0);
    TorusClass want = TorusClass::unit(0, 0, wd.pow(static_cast<unsigned>(e.g)));
    std::ostringstream os;
    os << "(a0,b0)=(" << a0 << "," << b0 << "); product = " << prod.str();
    out.push_back(make_check("difference-power-factors", prod == want, os.str()));
  }
  return out;
}

std::vector<PresentationCheck> whole_algebra_presentation(long m) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  Rank2Edge e = Rank2Edge::classical(m);
  std::vector<PresentationCheck> out;
  Poly wd = TorusClass::w1_minus_w2();

  {
    TorusClass prod = zstar(e, 0, 1) * zstar(e, 0, -1);
    TorusClass want = TorusClass::unit(0, 0, wd);
    out.push_back(make_check("w1-w2-factors", prod == want,
                             "y[0,1]*y[0,-1] = " + prod.str()));
  }
  for (const auto& c : presentation_general(e)) out.push_back(c);

  // Every y_{a,b} in the sample box is a Laurent monomial in the four
  // generators w1, y_{1,m}^{+-}, y_{0,1}, y_{0,-1}.
  bool all = true;
  std::string failure;
  for (long a = -3; a <= 3 && all; ++a)
    for (long b = -3; b <= 3; ++b) {
      long up = std::max(b - m * a, 0L);    // exponent of y_{0,1}
      long dn = std::max(m * a - b, 0L);    // exponent of y_{0,-1}
      TorusClass prod = TorusClass::unit(a, m * a);  // y_{1,m}^a image
      for (long k = 0; k < up; ++k) prod = prod * zstar(e, 0, 1);
      for (long k = 0; k < dn; ++k) prod = prod * zstar(e, 0, -1);
      if (prod != zstar(e, a, b)) {
        all = false;
        failure = "failed at (" + std::to_string(a) + "," + std::to_string(b) + ")";
        break;
      }
    }
  out.push_back(make_check("box-generator-monomials", all,
                           all ? "all (a,b) in [-3,3]^2 expressed" : failure));
  return out;
}

std::vector<PresentationCheck> g2_zastava_dictionary() {
  const long m = 3;
  Rank2Edge e = Rank2Edge::classical(m);
  std::vector<PresentationCheck> out;

  // Dictionary: A1 = -w2, A2 = -w1, b0 = y_{0,1}, b1 = -y_{1,0},
  // b2 = y_{1,1}, b3 = y_{1,2}, b4 = y_{1,3}.
  Poly A1 = -Poly::var(TorusClass::w2());
  Poly A2 = -Poly::var(TorusClass::w1());
  TorusClass b0 = zstar(e, 0, 1);
  TorusClass b1 = -zstar(e, 1, 0);
  TorusClass b2 = zstar(e, 1, 1);
  TorusClass b3 = zstar(e, 1, 2);
  TorusClass b4 = zstar(e, 1, 3);

  auto rel = [&out](const std::string& id, const TorusClass& lhs, const TorusClass& rhs) {
    out.push_back(make_check(id, lhs == rhs, lhs.str() + " vs " + rhs.str()));
  };
  rel("b0*b1=(A2-A1)*b2", b0 * b1, b2 * (A2 - A1));
  rel("b0*b2=(A1-A2)*b3", b0 * b2, b3 * (A1 - A2));
  rel("b0*b3=(A1-A2)*b4", b0 * b3, b4 * (A1 - A2));
  rel("b2^2=-b1*b3", b2 * b2, -(b1 * b3));
  rel("b2*b3=-b1*b4", b2 * b3, -(b1 * b4));
  rel("b3^2=b2*b4", b3 * b3, b2 * b4);

  // Boundary equation by exact division: b4 = -b0^3 b1 / (A1-A2)^3.
  {
    TorusClass num = -(b0 * b0 * b0 * b1);
    auto quotient = num.divide_exact((A1 - A2).pow(3));
    bool pass = quotient && *quotient == b4;
    out.push_back(make_check("boundary:b4=-b0^3*b1/(A1-A2)^3", pass,
                             quotient ? quotient->str() : "division not exact"));
  }
  return out;
}

}  // namespace coulomb
