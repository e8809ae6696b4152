#include "coulomb/gklo.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace coulomb {

namespace {

// Elementary symmetric polynomial e_r of arbitrary polynomial arguments.
Poly elementary_symmetric(const std::vector<Poly>& xs, int r) {
  if (r < 0) throw std::invalid_argument("negative symmetric degree");
  std::vector<Poly> e(static_cast<std::size_t>(r) + 1);
  e[0] = Poly::constant(1);
  for (const Poly& x : xs)
    for (int k = std::min<int>(r, static_cast<int>(e.size()) - 1); k >= 1; --k)
      e[k] += e[k - 1] * x;
  return e[r];
}

// W_j(x) = prod_s (x - w[j,s]).
Poly w_poly(const ShiftAlgebra& alg, int vertex, const Poly& x) {
  Poly p = Poly::constant(1);
  for (long r = 1; r <= alg.quiver().dim_v[vertex]; ++r)
    p *= x - Poly::var(alg.w(vertex, static_cast<int>(r)));
  return p;
}

// T_i(x) = prod_{k: i_k = i} (x - t_k - d_i hbar).
Poly t_poly(const ShiftAlgebra& alg, int vertex, const Poly& x) {
  Poly p = Poly::constant(1);
  Poly dh = Poly::var(alg.hbar()) * Rational(alg.d(vertex));
  for (int k = 1; k <= alg.flavor_count(); ++k)
    if (alg.flavor_vertex(k) == vertex) p *= x - Poly::var(alg.t(k)) - dh;
  return p;
}

// prod_{s != r} (w[i,r] - w[i,s]) as a denominator on `f`.
RestrictedFraction over_vandermonde(const ShiftAlgebra& alg, RestrictedFraction f,
                                    int vertex, int r) {
  for (long s = 1; s <= alg.quiver().dim_v[vertex]; ++s) {
    if (s == r) continue;
    f = divide_by_linear(alg, f, alg.w(vertex, r), alg.w(vertex, static_cast<int>(s)), 0);
  }
  return f;
}

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> pick;
  // 1-based members, lexicographic.
  std::function<void(int)> rec = [&](int next) {
    if (static_cast<int>(pick.size()) == k) {
      out.push_back(pick);
      return;
    }
    for (int v = next; v <= n; ++v) {
      pick.push_back(v);
      rec(v + 1);
      pick.pop_back();
    }
  };
  rec(1);
  return out;
}

}  // namespace

TheoryData TheoryData::from_quiver(ValuedQuiver q) {
  validate_or_throw(q);
  TheoryData d;
  d.lambda = q.dim_w;
  d.mu.assign(q.rank(), 0);
  for (int i = 0; i < q.rank(); ++i) {
    d.mu[i] = q.dim_w[i];
    for (int j = 0; j < q.rank(); ++j) d.mu[i] -= q.cartan[j][i] * q.dim_v[j];
  }
  d.q = std::move(q);
  return d;
}

// The filtration split is pinned by two facts: mu1 + mu2 = mu, and the
// degrees of the raising/lowering images are q + <mu1, alpha_i> and
// q + <mu2, alpha_i>. Incoming arrows weight mu1, outgoing arrows mu2,
// each with -v c (a positive edge contribution).
MuSplit mu_split(const ValuedQuiver& q) {
  validate_or_throw(q);
  MuSplit m;
  m.mu1.assign(q.rank(), 0);
  m.mu2.assign(q.rank(), 0);
  for (int i = 0; i < q.rank(); ++i) {
    m.mu1[i] = q.dim_w[i] - q.dim_v[i];
    m.mu2[i] = -q.dim_v[i];
  }
  for (const auto& a : q.arrows) {
    m.mu1[a.head] -= q.dim_v[a.tail] * q.cartan[a.tail][a.head];
    m.mu2[a.tail] -= q.dim_v[a.head] * q.cartan[a.head][a.tail];
  }
  return m;
}

SigmaSolution SigmaSolution::shifted(const Rational& c) const {
  SigmaSolution s = *this;
  for (auto& x : s.sigma) x += c;
  return s;
}

SigmaSolution solve_sigma(const ValuedQuiver& q) {
  validate_or_throw(q);
  const int n = q.rank();
  SigmaSolution sol;
  sol.sigma.assign(n, Rational(0));

  // sigma_o - sigma_i = 1/2 d_o c_{o,i} + d_o - d_i per arrow o -> i.
  auto rhs = [&q](const ValuedQuiver::Arrow& a) -> Rational {
    return rat(q.d[a.tail] * q.cartan[a.tail][a.head], 2) +
           Rational(q.d[a.tail] - q.d[a.head]);
  };

  std::vector<bool> assigned(n, false);
  for (int root = 0; root < n; ++root) {
    if (assigned[root]) continue;
    assigned[root] = true;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (const auto& a : q.arrows) {
        int other = -1;
        if (a.tail == i) other = a.head;
        if (a.head == i) other = a.tail;
        if (other == -1 || assigned[other]) continue;
        if (a.tail == i)
          sol.sigma[other] = sol.sigma[i] - rhs(a);
        else
          sol.sigma[other] = sol.sigma[i] + rhs(a);
        assigned[other] = true;
        stack.push_back(other);
      }
    }
  }

  for (const auto& a : q.arrows) {
    Rational res = sol.sigma[a.tail] - sol.sigma[a.head] - rhs(a);
    sol.residuals.push_back(res);
    if (res != 0) {
      sol.solved = false;
      sol.issues.push_back("cycle through edge " + q.ids[a.tail] + "->" + q.ids[a.head] +
                           " is inconsistent by " + to_string(res));
    }
  }
  for (const auto& s : sol.sigma)
    if (!is_integer(s)) sol.integral = false;
  return sol;
}

ShiftOperator phi(const ShiftAlgebra& alg, Generator gen, int vertex, int mode,
                  bool rescale) {
  const ValuedQuiver& q = alg.quiver();
  if (vertex < 0 || vertex >= q.rank()) throw std::out_of_range("bad vertex");
  if (mode < 1) throw std::invalid_argument("current modes start at 1");
  const long v_i = q.dim_v[vertex];
  const Poly hbar = Poly::var(alg.hbar());
  const Rational d_i(q.d[vertex]);

  if (gen == Generator::kA) {
    std::vector<Poly> ws;
    for (long r = 1; r <= v_i; ++r)
      ws.push_back(Poly::var(alg.w(vertex, static_cast<int>(r))));
    Poly e = elementary_symmetric(ws, mode);
    if (mode % 2) e = -e;
    return ShiftOperator::coefficient(alg, e);
  }

  Poly kappa = rescale ? Poly::constant(1) : Poly::var(alg.sqrt_symbol(vertex));
  ShiftOperator sum = ShiftOperator::zero(alg);
  for (long r = 1; r <= v_i; ++r) {
    Poly wr = Poly::var(alg.w(vertex, static_cast<int>(r)));
    Poly num = kappa;
    if (gen == Generator::kE) {
      num *= t_poly(alg, vertex, wr);
      for (const auto& a : q.arrows) {
        if (a.head != vertex) continue;
        int o = a.tail;
        long reps = -q.cartan[o][vertex];
        for (long p = 1; p <= reps; ++p) {
          Rational shift = rat(q.d[vertex] * q.cartan[vertex][o], 2) + Rational(p * q.d[o]);
          num *= w_poly(alg, o, wr - hbar * shift);
        }
      }
      num *= wr.pow(static_cast<unsigned>(mode - 1));
      num = -num;
    } else {
      for (const auto& a : q.arrows) {
        if (a.tail != vertex) continue;
        int h = a.head;
        long reps = -q.cartan[h][vertex];
        for (long p = 1; p <= reps; ++p) {
          Rational shift = rat(q.d[vertex] * q.cartan[vertex][h], 2) - d_i +
                           Rational(p * q.d[h]);
          num *= w_poly(alg, h, wr - hbar * shift);
        }
      }
      num *= (wr + hbar * d_i).pow(static_cast<unsigned>(mode - 1));
    }
    RestrictedFraction f = over_vandermonde(
        alg, RestrictedFraction(num, alg.hbar()), vertex, static_cast<int>(r));
    int dir = gen == Generator::kE ? -1 : +1;
    ShiftVector n(alg.slots(), 0);
    n[alg.slot(vertex, static_cast<int>(r))] = dir;
    sum += ShiftOperator::term(alg, n, f);
  }
  return sum;
}

HSeries h_series(const ShiftAlgebra& alg, int vertex, long truncation) {
  const ValuedQuiver& q = alg.quiver();
  const Poly hbar = Poly::var(alg.hbar());

  // Numerator and denominator as polynomials in an auxiliary variable t;
  // coefficients collected by descending t-power.
  VarId tv = vars::intern("_t");
  Poly t = Poly::var(tv);

  Poly num = t_poly(alg, vertex, t);
  for (int j = 0; j < q.rank(); ++j) {
    if (j == vertex || q.cartan[j][vertex] >= 0) continue;
    long reps = -q.cartan[j][vertex];
    for (long p = 1; p <= reps; ++p) {
      Rational shift = rat(q.d[vertex] * q.cartan[vertex][j], 2) + Rational(p * q.d[j]);
      num *= w_poly(alg, j, t - hbar * shift);
    }
  }
  Poly den = w_poly(alg, vertex, t) * w_poly(alg, vertex, t - hbar * Rational(q.d[vertex]));

  auto by_power = [tv](const Poly& p, long deg) {
    std::vector<Poly> out(static_cast<std::size_t>(deg) + 1);
    for (const auto& [m, c] : p.terms()) {
      long e = m.exponent(tv);
      Monomial rest;
      for (const auto& [v, k] : m.entries())
        if (v != tv) rest = rest * Monomial(v, k);
      out[static_cast<std::size_t>(deg - e)] += Poly::term(rest, c);
    }
    return out;
  };

  long deg_num = num.degree_in(tv);
  long deg_den = den.degree_in(tv);  // = 2 v_i, monic
  std::vector<Poly> N = by_power(num, deg_num);
  std::vector<Poly> D = by_power(den, deg_den);

  HSeries h;
  h.lead = deg_num - deg_den;
  long count = h.lead + truncation + 1;  // exponents down to -truncation
  if (count < 1) count = 1;

  // Invert the monic denominator series: B_0 = 1, B_k = -sum D_j B_{k-j}.
  std::vector<Poly> B(static_cast<std::size_t>(count));
  B[0] = Poly::constant(1);
  for (long k = 1; k < count; ++k) {
    Poly b;
    for (long j = 1; j <= std::min(k, deg_den); ++j) b -= D[static_cast<std::size_t>(j)] * B[static_cast<std::size_t>(k - j)];
    B[static_cast<std::size_t>(k)] = b;
  }
  for (long k = 0; k < count; ++k) {
    Poly c;
    for (long j = 0; j <= std::min(k, deg_num); ++j)
      c += N[static_cast<std::size_t>(j)] * B[static_cast<std::size_t>(k - j)];
    h.coeffs.push_back(c);
  }
  return h;
}

Poly HSeries::at_exponent(long e) const {
  if (e > lead) return Poly::zero();
  long k = lead - e;
  if (k >= static_cast<long>(coeffs.size()))
    throw std::out_of_range("H series exponent below computed horizon");
  return coeffs[static_cast<std::size_t>(k)];
}

ShiftOperator monopole_class_image(const ShiftAlgebra& alg, int vertex, int n,
                                   const SymmetricFn& f, bool dual) {
  const ValuedQuiver& q = alg.quiver();
  if (vertex < 0 || vertex >= q.rank()) throw std::out_of_range("bad vertex");
  const long v_i = q.dim_v[vertex];
  if (n < 1 || n > v_i) throw std::out_of_range("subset size out of range");
  const Poly hbar = Poly::var(alg.hbar());
  const Rational d_i(q.d[vertex]);
  EdgeConstants ec = edge_constants(q);

  ShiftOperator sum = ShiftOperator::zero(alg);
  for (const auto& subset : subsets_of_size(static_cast<int>(v_i), n)) {
    std::vector<bool> in_subset(static_cast<std::size_t>(v_i) + 1, false);
    for (int r : subset) in_subset[static_cast<std::size_t>(r)] = true;

    std::vector<Poly> args;
    for (int r : subset) {
      Poly wr = Poly::var(alg.w(vertex, r));
      args.push_back(dual ? wr - hbar * d_i : wr);
    }
    Poly num = f(args);

    for (int r : subset) {
      Poly wr = Poly::var(alg.w(vertex, r));
      if (!dual) {
        // Arrows out of the vertex: factors from the incoming-side fiber.
        for (const auto& e : ec.edges) {
          if (e.tail != vertex) continue;
          int hd = e.head;
          for (long s = 1; s <= q.dim_v[hd]; ++s) {
            Poly ws = Poly::var(alg.w(hd, static_cast<int>(s)));
            for (long p = 0; p < e.f_ht; ++p) {
              Rational shift = Rational(-q.d[vertex] * e.f_th + p * q.d[hd]);
              Poly factor = -wr + ws + hbar * shift;
              num *= factor.pow(static_cast<unsigned>(e.g));
            }
          }
        }
      } else {
        // Framing factors and arrows into the vertex.
        for (int k = 1; k <= alg.flavor_count(); ++k)
          if (alg.flavor_vertex(k) == vertex)
            num *= wr - Poly::var(alg.t(k)) - hbar * d_i;
        for (const auto& e : ec.edges) {
          if (e.head != vertex) continue;
          int o = e.tail;
          for (long s = 1; s <= q.dim_v[o]; ++s) {
            Poly ws = Poly::var(alg.w(o, static_cast<int>(s)));
            for (long p = 0; p < e.f_th; ++p) {
              Rational shift = Rational(q.d[vertex] + p * q.d[o]);
              Poly factor = wr - ws - hbar * shift;
              num *= factor.pow(static_cast<unsigned>(e.g));
            }
          }
        }
      }
    }

    RestrictedFraction frac(num, alg.hbar());
    for (int r : subset)
      for (long s = 1; s <= v_i; ++s) {
        if (in_subset[static_cast<std::size_t>(s)]) continue;
        // dual uses (-w_r + w_s); the sign is absorbed per factor.
        if (dual)
          frac = -divide_by_linear(alg, frac, alg.w(vertex, r),
                                   alg.w(vertex, static_cast<int>(s)), 0);
        else
          frac = divide_by_linear(alg, frac, alg.w(vertex, r),
                                  alg.w(vertex, static_cast<int>(s)), 0);
      }

    ShiftVector sv(alg.slots(), 0);
    for (int r : subset) sv[alg.slot(vertex, r)] = dual ? -1 : +1;
    sum += ShiftOperator::term(alg, sv, frac);
  }
  return sum;
}

CompareOutcome compare_theorem(const ShiftAlgebra& alg, int vertex, int max_mode,
                               const SigmaSolution& sigma) {
  const ValuedQuiver& q = alg.quiver();
  const long v_i = q.dim_v[vertex];
  const Poly hbar = Poly::var(alg.hbar());
  const Rational sig_i = sigma.sigma[vertex];
  const Rational d_i(q.d[vertex]);
  CompareOutcome out;
  if (v_i == 0) {
    // No gauge slots: every current image and class image vanishes.
    out.a_pass = out.e_pass = out.f_pass = true;
    return out;
  }
  out.a_pass = out.e_pass = true;
  std::optional<int> consistent_sign;
  bool f_ok = true;
  std::ostringstream detail;

  for (int r = 1; r <= max_mode; ++r) {
    // A side: images are plain symmetric polynomials.
    {
      std::vector<Poly> xs;
      for (long s = 1; s <= v_i; ++s)
        xs.push_back(Poly::var(alg.w(vertex, static_cast<int>(s))) - hbar * sig_i);
      Poly e = elementary_symmetric(xs, r);
      if (r % 2) e = -e;
      ShiftOperator claimed =
          ShiftOperator::coefficient(alg, e).apply_sigma(sigma.sigma);
      if (phi(alg, Generator::kA, vertex, r) != claimed) {
        out.a_pass = false;
        detail << "A mode " << r << " mismatch; ";
      }
    }

    SymmetricFn f = [&](const std::vector<Poly>& xs) {
      Poly prod = Poly::constant(1);
      for (const auto& x : xs)
        prod *= (x + hbar * (d_i - sig_i)).pow(static_cast<unsigned>(r - 1));
      return prod;
    };

    // E side.
    {
      ShiftOperator image = monopole_class_image(alg, vertex, 1, f, /*dual=*/true);
      if (v_i % 2) image = -image;
      image = image.apply_sigma(sigma.sigma);
      if (phi(alg, Generator::kE, vertex, r) != image) {
        out.e_pass = false;
        detail << "E mode " << r << " mismatch; ";
      }
    }

    // F side: the sign parity is searched, then required to be consistent.
    {
      ShiftOperator image =
          monopole_class_image(alg, vertex, 1, f, /*dual=*/false).apply_sigma(sigma.sigma);
      ShiftOperator lhs = phi(alg, Generator::kF, vertex, r);
      std::optional<int> found;
      if (lhs == image) found = +1;
      else if (lhs == -image) found = -1;
      if (!found) {
        f_ok = false;
        detail << "F mode " << r << ": no sign works; lhs = " << lhs.str()
               << " rhs = " << image.str() << "; ";
      } else if (consistent_sign && *consistent_sign != *found) {
        f_ok = false;
        detail << "F sign flips at mode " << r << "; ";
      } else {
        consistent_sign = found;
      }
    }
  }

  out.f_pass = f_ok && consistent_sign.has_value();
  if (consistent_sign) out.f_sign = *consistent_sign;
  out.detail = detail.str();
  return out;
}

bool SuiteReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

SuiteReport relation_suite(const ShiftAlgebra& alg, int max_mode) {
  const ValuedQuiver& q = alg.quiver();
  const int n = q.rank();
  const int Q = max_mode;
  SuiteReport rep;
  auto add = [&rep](const std::string& id, bool pass, const std::string& detail) {
    rep.checks.push_back({id, pass, detail});
  };

  std::vector<std::vector<ShiftOperator>> A, E, F;
  for (int i = 0; i < n; ++i) {
    std::vector<ShiftOperator> ai, ei, fi;
    for (int r = 1; r <= Q; ++r) {
      ai.push_back(phi(alg, Generator::kA, i, r));
      ei.push_back(phi(alg, Generator::kE, i, r));
      fi.push_back(phi(alg, Generator::kF, i, r));
    }
    A.push_back(ai);
    E.push_back(ei);
    F.push_back(fi);
  }

  // (a) A-images commute.
  {
    bool pass = true;
    for (int i = 0; i < n && pass; ++i)
      for (int j = 0; j < n && pass; ++j)
        for (int r = 0; r < Q && pass; ++r)
          for (int s = 0; s < Q; ++s)
            if (!A[i][r].commutator(A[j][s]).is_zero()) {
              pass = false;
              break;
            }
    add("a:A-commute", pass, "");
  }

  // (b) mixed E/F commutators vanish.
  {
    bool pass = true;
    std::string det;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        for (int p = 0; p < Q; ++p)
          for (int qq = 0; qq < Q; ++qq) {
            ShiftOperator c = E[i][p].commutator(F[j][qq]);
            if (!c.is_zero()) {
              pass = false;
              det = "[E_" + q.ids[i] + "^(" + std::to_string(p + 1) + "), F_" + q.ids[j] +
                    "^(" + std::to_string(qq + 1) + ")] = " + c.str();
            }
          }
      }
    add("b:EF-offdiagonal", pass, det);
  }

  // (c) diagonal commutators: shift-free, hbar-divisible, depend on p+q only.
  std::vector<std::map<int, ShiftOperator>> diag_by_total(n);
  {
    bool shift_free = true, divisible = true, total_only = true;
    std::string det;
    for (int i = 0; i < n; ++i)
      for (int p = 1; p <= Q; ++p)
        for (int qq = 1; qq <= Q; ++qq) {
          ShiftOperator c = E[i][p - 1].commutator(F[i][qq - 1]);
          if (!c.is_shift_free()) {
            shift_free = false;
            det = "shifted term in [E,F] at vertex " + q.ids[i];
            continue;
          }
          ShiftOperator reduced(alg);
          try {
            reduced = c.divided_by_hbar_exact();
          } catch (const std::exception& ex) {
            divisible = false;
            det = ex.what();
            continue;
          }
          auto [it, inserted] = diag_by_total[i].emplace(p + qq, reduced);
          if (!inserted && it->second != reduced) total_only = false;
        }
    add("c:EF-diagonal-shiftfree", shift_free, det);
    add("c:EF-diagonal-hbar-divisible", divisible, det);
    add("c:EF-diagonal-depends-on-p+q", total_only, "");
  }

  // (d) [A^{(1)}, E/F]: one global sign for the whole suite.
  {
    bool pass = true;
    std::optional<int> global_sign;
    std::string det;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int qq = 0; qq < Q; ++qq) {
          ShiftOperator ce = A[i][0].commutator(E[j][qq]);
          ShiftOperator cf = A[i][0].commutator(F[j][qq]);
          if (i != j) {
            if (!ce.is_zero() || !cf.is_zero()) {
              pass = false;
              det = "off-diagonal A-weight nonzero";
            }
            continue;
          }
          ShiftOperator he = E[j][qq] * Rational(q.d[i]);
          ShiftOperator hf = F[j][qq] * Rational(q.d[i]);
          Poly hb = Poly::var(alg.hbar());
          ShiftOperator hbe = ShiftOperator::coefficient(alg, hb) * he;
          ShiftOperator hbf = ShiftOperator::coefficient(alg, hb) * hf;
          int sign = 0;
          if (ce == -hbe && cf == hbf) sign = +1;
          if (ce == hbe && cf == -hbf) sign = -1;
          if (sign == 0) {
            pass = false;
            det = "A-weight relation fails at vertex " + q.ids[i];
          } else if (global_sign && *global_sign != sign) {
            pass = false;
            det = "A-weight sign not global";
          } else {
            global_sign = sign;
          }
        }
    add("d:A-weights", pass, det);
  }

  // (e) homogeneity of every image mode.
  {
    bool pass = true;
    std::string det;
    for (int i = 0; i < n; ++i)
      for (int r = 1; r <= Q; ++r) {
        if (!A[i][r - 1].is_zero() && !A[i][r - 1].grade()) {
          pass = false;
          det = "A_" + q.ids[i] + "^(" + std::to_string(r) + ") inhomogeneous";
        }
        if (A[i][r - 1].grade() && !A[i][r - 1].is_zero() &&
            *A[i][r - 1].grade() != r) {
          pass = false;
          det = "deg A_" + q.ids[i] + "^(" + std::to_string(r) + ") != r";
        }
        if (!E[i][r - 1].grade() || !F[i][r - 1].grade()) {
          pass = false;
          det = "E/F mode inhomogeneous at vertex " + q.ids[i];
        }
      }
    add("e:homogeneous", pass, det);
  }

  // (f) hbar^{-1}[E,F] against the H-series, one scalar per vertex.
  {
    bool pass = true;
    std::string det;
    for (int i = 0; i < n; ++i) {
      HSeries h = h_series(alg, i, 2 * Q);
      std::optional<Rational> scalar;
      for (const auto& [total, value] : diag_by_total[i]) {
        Poly hmode = h.at_exponent(-(total - 1));
        RestrictedFraction vf = value.shift_free_part();
        if (!vf.is_polynomial()) {
          pass = false;
          det = "hbar^{-1}[E,F] not polynomial at vertex " + q.ids[i];
          continue;
        }
        const Poly& vp = vf.numerator();
        if (vp.is_zero() && hmode.is_zero()) continue;
        if (hmode.is_zero() || vp.is_zero()) {
          pass = false;
          det = "H mode vs commutator support mismatch at p+q=" + std::to_string(total);
          continue;
        }
        auto ratio = vp.divide_exact(hmode);
        if (!ratio || !ratio->is_constant()) {
          pass = false;
          det = "commutator is not a scalar multiple of the H mode at p+q=" +
                std::to_string(total);
          continue;
        }
        Rational c = ratio->constant_term();
        if (!scalar) {
          scalar = c;
          rep.h_scalars[i] = c;
        } else if (*scalar != c) {
          pass = false;
          det = "H normalization scalar varies across modes at vertex " + q.ids[i];
        }
      }
    }
    add("f:H-matches-EF", pass, det);
  }

  return rep;
}

}  // namespace coulomb
