#include "coulomb/monopole.hpp"

#include <cstdlib>
#include <future>
#include <stdexcept>
#include <thread>
#include <vector>

namespace coulomb {

namespace {

long abs_long(long x) { return x < 0 ? -x : x; }

// Arrow contributions enter through f_ht*lam_tail - f_th*lam_head; the
// per-arrow weight is the edge gcd g.
template <typename F>
void for_each_arrow_pair(const ValuedQuiver& q, const DominantCoweight& lam, F&& f) {
  EdgeConstants ec = edge_constants(q);
  for (const auto& e : ec.edges)
    for (long lt : lam[e.tail])
      for (long lh : lam[e.head]) f(e.g, e.f_ht * lt - e.f_th * lh);
}

void check_shape(const ValuedQuiver& q, const DominantCoweight& lam) {
  if (static_cast<int>(lam.size()) != q.rank())
    throw std::invalid_argument("coweight has wrong number of vertices");
  for (int i = 0; i < q.rank(); ++i)
    if (static_cast<long>(lam[i].size()) != q.dim_v[i])
      throw std::invalid_argument("coweight tuple length mismatch at vertex " + q.ids[i]);
  if (!is_dominant(lam)) throw std::invalid_argument("coweight is not dominant");
}

int thread_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("COULOMB_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(std::min(hw, 8u));
}

}  // namespace

Rational delta(const ValuedQuiver& q, const DominantCoweight& lam, bool flavor_term) {
  check_shape(q, lam);
  Rational total(0);
  for (int i = 0; i < q.rank(); ++i)
    for (std::size_t a = 0; a < lam[i].size(); ++a)
      for (std::size_t b = a + 1; b < lam[i].size(); ++b)
        total -= abs_long(lam[i][a] - lam[i][b]);
  Rational half(1, 2);
  for_each_arrow_pair(q, lam, [&](long g, long x) { total += half * g * abs_long(x); });
  if (flavor_term)
    for (int i = 0; i < q.rank(); ++i)
      for (long x : lam[i]) total += half * q.dim_w[i] * abs_long(x);
  return total;
}

long d_lambda_formula(const ValuedQuiver& q, const DominantCoweight& lam, bool flavor_term) {
  check_shape(q, lam);
  long total = 0;
  for_each_arrow_pair(q, lam, [&](long g, long x) { total += g * std::max(x, 0L); });
  if (flavor_term)
    for (int i = 0; i < q.rank(); ++i)
      for (long x : lam[i]) total += q.dim_w[i] * std::max(-x, 0L);
  return total;
}

long d_lambda(const ValuedQuiver& q, const DominantCoweight& lam, bool flavor_term) {
  if (!check_assumption(q))
    throw std::domain_error(
        "rank formula unavailable: some edge has f > 1 on both sides, where the "
        "fiber ranks are not given by the max(f*lam - f*lam, 0) expression");
  return d_lambda_formula(q, lam, flavor_term);
}

long rho_pairing_doubled(const DominantCoweight& lam) {
  long total = 0;
  for (const auto& tuple : lam)
    for (std::size_t a = 0; a < tuple.size(); ++a)
      for (std::size_t b = a + 1; b < tuple.size(); ++b) total += tuple[a] - tuple[b];
  return total;
}

GradedSeries classical_factor(const DominantCoweight& lam, VarId tvar, long order) {
  GradedSeries s = GradedSeries::constant(tvar, 1, order);
  for (const auto& tuple : lam) {
    std::size_t a = 0;
    while (a < tuple.size()) {
      std::size_t b = a;
      while (b < tuple.size() && tuple[b] == tuple[a]) ++b;
      for (std::size_t j = 1; j <= b - a; ++j)
        s = s * GradedSeries::geometric(tvar, 2 * static_cast<long>(j), order);
      a = b;
    }
  }
  return s;
}

std::string status_name(SeriesStatus s) {
  switch (s) {
    case SeriesStatus::kStable: return "stable";
    case SeriesStatus::kUnstable: return "unstable";
    case SeriesStatus::kDivergent: return "divergent";
  }
  return "?";
}

MonopoleReport hilbert_series(const ValuedQuiver& q, const MonopoleOptions& opt) {
  validate_or_throw(q);
  if (!check_assumption(q))
    throw std::domain_error("hilbert series requires f = 1 on one side of every edge");
  if (opt.bound < 0) throw std::invalid_argument("negative bound");

  const VarId tvar = vars::intern("t");
  const int nthreads = thread_count(opt.threads);

  MonopoleReport report;
  report.series = GradedSeries::zero(tvar, opt.order);
  report.bound = opt.bound;

  GradedSeries prev = report.series;
  std::map<long, long> last_changed;
  long count_cur = 0, count_prev = 0;

  for (long shell = 0; shell <= opt.bound; ++shell) {
    std::vector<DominantCoweight> batch;
    for_each_coweight_shell(q.dim_v, shell, opt.cap,
                            [&batch](const DominantCoweight& lam) { batch.push_back(lam); });

    auto term = [&](const DominantCoweight& lam) {
      long exponent;
      if (opt.grading == Grading::kDelta) {
        Rational twice = delta(q, lam, opt.flavor_term) * 2;
        if (!is_integer(twice)) throw std::logic_error("2*Delta not an integer");
        exponent = twice.get_num().get_si();
      } else {
        exponent = 2 * d_lambda(q, lam, opt.flavor_term) - 2 * rho_pairing_doubled(lam);
      }
      GradedSeries p = classical_factor(lam, tvar, opt.order - std::min(exponent, 0L));
      return GradedSeries::monomial(tvar, exponent) * p;
    };

    // Disjoint strided chunks reduced in chunk order: the result is
    // independent of the thread count.
    GradedSeries shell_sum = GradedSeries::zero(tvar, opt.order);
    int chunks = std::min<std::size_t>(nthreads, std::max<std::size_t>(batch.size(), 1));
    if (chunks <= 1) {
      for (const auto& lam : batch) shell_sum += term(lam);
    } else {
      std::vector<std::future<GradedSeries>> parts;
      for (int c = 0; c < chunks; ++c)
        parts.push_back(std::async(std::launch::async, [&, c]() {
          GradedSeries sum = GradedSeries::zero(tvar, opt.order);
          for (std::size_t k = c; k < batch.size(); k += chunks) sum += term(batch[k]);
          return sum;
        }));
      for (auto& f : parts) shell_sum += f.get();
    }

    for (const auto& lam : batch)
      if (delta(q, lam, opt.flavor_term) <= 0) ++count_cur;

    GradedSeries next = report.series + shell_sum;
    for (const auto& [deg, c] : shell_sum.coefficients())
      if (c != 0) last_changed[deg] = shell;
    if (shell == opt.bound) {
      prev = report.series;
      count_prev = count_cur;
      for (const auto& lam : batch)
        if (delta(q, lam, opt.flavor_term) <= 0) --count_prev;
    }
    report.series = next;
  }

  report.first_stable_bound = last_changed;
  report.delta_nonpositive_count = count_cur;
  report.delta_nonpositive_prev = count_prev;

  if (count_cur > count_prev && opt.bound > 0)
    report.status = SeriesStatus::kDivergent;
  else if (!report.series.agrees_with(prev) && opt.bound > 0)
    report.status = SeriesStatus::kUnstable;
  else
    report.status = SeriesStatus::kStable;
  return report;
}

}  // namespace coulomb
