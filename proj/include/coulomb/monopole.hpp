#pragma once

#include <map>
#include <optional>
#include <string>

#include "coulomb/coweight.hpp"
#include "coulomb/quiver.hpp"
#include "coulomb/series.hpp"

namespace coulomb {

// Conformal-dimension style exponent of the twisted monopole formula:
//   Delta(lambda) = - sum_i sum_{a<b} |lam_i^a - lam_i^b|
//                   + 1/2 sum_arrows g * sum_{a,b} |f_ht lam_t^b - f_th lam_h^a|
// plus, when the framing term is enabled, 1/2 sum_i w_i sum_a |lam_i^a|.
Rational delta(const ValuedQuiver& q, const DominantCoweight& lam, bool flavor_term);

// Rank of the fiber quotient attached to lambda:
//   d_lambda = sum_arrows g * sum_{a,b} max(f_ht lam_t^b - f_th lam_h^a, 0)
// plus, when enabled, sum_i w_i sum_a max(-lam_i^a, 0). Only valid when
// every edge has f = 1 on one side; the checked form refuses otherwise.
long d_lambda(const ValuedQuiver& q, const DominantCoweight& lam, bool flavor_term);

// Same formula without the admissibility precondition (for formula-level
// identity checks on quivers where the rank interpretation fails).
long d_lambda_formula(const ValuedQuiver& q, const DominantCoweight& lam, bool flavor_term);

// 2 <rho, lambda> = sum_i sum_{a<b} (lam_i^a - lam_i^b).
long rho_pairing_doubled(const DominantCoweight& lam);

// Poincare series of the equivariant cohomology of a point for the
// stabilizer of lambda: per vertex, per block of equal entries of size m,
// a factor prod_{j=1}^m 1/(1 - t^{2j}).
GradedSeries classical_factor(const DominantCoweight& lam, VarId tvar, long order);

enum class Grading { kDelta, kHomological };
enum class SeriesStatus { kStable, kUnstable, kDivergent };

struct MonopoleReport {
  GradedSeries series;
  long bound = 0;
  SeriesStatus status = SeriesStatus::kStable;
  // For each degree with a nonzero coefficient, the smallest enumeration
  // bound from which its value never changed again (within this horizon).
  std::map<long, long> first_stable_bound;
  long delta_nonpositive_count = 0;      // population of Delta <= 0 at `bound`
  long delta_nonpositive_prev = 0;       // same at bound-1

  MonopoleReport() : series(0, 0) {}
};

struct MonopoleOptions {
  long order = 20;   // series truncation
  long bound = 6;    // enumeration bound on |lambda| entries
  bool flavor_term = true;
  Grading grading = Grading::kDelta;
  std::optional<DominantCoweight> cap;
  int threads = 0;   // 0 = decide from environment
};

// Truncated Hilbert series with stabilization and divergence diagnostics.
// Deterministic: the coweight sum is reduced in a fixed shell/chunk order
// regardless of thread count.
MonopoleReport hilbert_series(const ValuedQuiver& q, const MonopoleOptions& opt);

std::string status_name(SeriesStatus s);

}  // namespace coulomb
