#include "coulomb/coweight.hpp"

#include <algorithm>
#include <stdexcept>

namespace coulomb {

bool is_dominant(const DominantCoweight& lam) {
  for (const auto& tuple : lam)
    for (std::size_t a = 1; a < tuple.size(); ++a)
      if (tuple[a - 1] < tuple[a]) return false;
  return true;
}

bool gl_dominated_by(const std::vector<long>& lam, const std::vector<long>& mu) {
  if (lam.size() != mu.size()) return false;
  long ps_l = 0, ps_m = 0;
  for (std::size_t a = 0; a < lam.size(); ++a) {
    ps_l += lam[a];
    ps_m += mu[a];
    if (ps_l > ps_m) return false;
  }
  return ps_l == ps_m;
}

bool dominated_by(const DominantCoweight& lam, const DominantCoweight& mu) {
  if (lam.size() != mu.size()) return false;
  for (std::size_t i = 0; i < lam.size(); ++i)
    if (!gl_dominated_by(lam[i], mu[i])) return false;
  return true;
}

namespace {

// Advances one non-increasing tuple with entries in [-bound, bound];
// returns false when the range is exhausted. Order: lexicographic from the
// all-(+bound) tuple down to all-(-bound).
bool next_tuple(std::vector<long>& t, long bound) {
  for (std::size_t pos = t.size(); pos-- > 0;) {
    if (t[pos] > -bound) {
      --t[pos];
      for (std::size_t k = pos + 1; k < t.size(); ++k) t[k] = t[pos];
      return true;
    }
  }
  return false;
}

void enumerate(const std::vector<long>& dims, long bound,
               const std::optional<DominantCoweight>& cap, std::optional<long> exact_norm,
               const std::function<void(const DominantCoweight&)>& fn) {
  if (bound < 0) throw std::invalid_argument("negative enumeration bound");
  const std::size_t n = dims.size();
  if (cap) {
    if (cap->size() != n) throw std::invalid_argument("cap shape mismatch");
    for (std::size_t i = 0; i < n; ++i)
      if (static_cast<long>((*cap)[i].size()) != dims[i])
        throw std::invalid_argument("cap shape mismatch");
    if (!is_dominant(*cap)) throw std::invalid_argument("cap is not dominant");
  }

  DominantCoweight lam(n);
  for (std::size_t i = 0; i < n; ++i) lam[i].assign(dims[i], bound);

  // Odometer over vertices, each cycling through its non-increasing tuples.
  while (true) {
    bool keep = true;
    if (exact_norm) {
      long norm = 0;
      for (const auto& t : lam)
        for (long x : t) norm = std::max(norm, std::labs(x));
      keep = lam.empty() ? (*exact_norm == 0) : norm == *exact_norm;
    }
    if (keep && cap && !dominated_by(lam, *cap)) keep = false;
    if (keep) fn(lam);

    std::size_t i = n;
    while (i-- > 0) {
      if (next_tuple(lam[i], bound)) break;
      lam[i].assign(dims[i], bound);
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

}  // namespace

void for_each_coweight(const std::vector<long>& dims, long bound,
                       const std::optional<DominantCoweight>& cap,
                       const std::function<void(const DominantCoweight&)>& fn) {
  enumerate(dims, bound, cap, std::nullopt, fn);
}

void for_each_coweight_shell(const std::vector<long>& dims, long norm,
                             const std::optional<DominantCoweight>& cap,
                             const std::function<void(const DominantCoweight&)>& fn) {
  enumerate(dims, norm, cap, norm, fn);
}

std::size_t count_coweights(const std::vector<long>& dims, long bound,
                            const std::optional<DominantCoweight>& cap) {
  std::size_t n = 0;
  for_each_coweight(dims, bound, cap, [&n](const DominantCoweight&) { ++n; });
  return n;
}

}  // namespace coulomb
