#pragma once

#include <functional>
#include <optional>
#include <vector>

namespace coulomb {

// Dominant coweight of prod_i GL(v_i): one non-increasing integer tuple per
// vertex, tuple i of length v_i.
using DominantCoweight = std::vector<std::vector<long>>;

bool is_dominant(const DominantCoweight& lam);

// Dominance order on coweights of GL(n): equal total sum and dominated
// partial sums. Both arguments must be non-increasing of equal length.
bool gl_dominated_by(const std::vector<long>& lam, const std::vector<long>& mu);

// Componentwise dominance per vertex.
bool dominated_by(const DominantCoweight& lam, const DominantCoweight& mu);

// Streams every dominant coweight with all |entries| <= bound, and when a
// cap is given only those dominated by it. Enumeration order is
// deterministic (odometer over per-vertex non-increasing tuples).
void for_each_coweight(const std::vector<long>& dims, long bound,
                       const std::optional<DominantCoweight>& cap,
                       const std::function<void(const DominantCoweight&)>& fn);

// As above but restricted to coweights whose max |entry| is exactly `norm`
// (used for incremental enumeration by shells).
void for_each_coweight_shell(const std::vector<long>& dims, long norm,
                             const std::optional<DominantCoweight>& cap,
                             const std::function<void(const DominantCoweight&)>& fn);

std::size_t count_coweights(const std::vector<long>& dims, long bound,
                            const std::optional<DominantCoweight>& cap = std::nullopt);

}  // namespace coulomb
