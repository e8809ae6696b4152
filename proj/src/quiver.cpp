#include "coulomb/quiver.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace coulomb {

long ValuedQuiver::total_gauge_dim() const {
  return std::accumulate(dim_v.begin(), dim_v.end(), 0L);
}

std::optional<int> ValuedQuiver::vertex_by_id(const std::string& id) const {
  for (int i = 0; i < rank(); ++i)
    if (ids[i] == id) return i;
  return std::nullopt;
}

std::vector<std::string> validate(const ValuedQuiver& q) {
  std::vector<std::string> errs;
  const int n = q.rank();
  auto err = [&errs](const std::string& m) { errs.push_back(m); };

  if (n == 0) err("shape: empty quiver");
  for (const auto& row : q.cartan)
    if (static_cast<int>(row.size()) != n) {
      err("shape: cartan matrix is not square");
      return errs;
    }
  if (static_cast<int>(q.d.size()) != n || static_cast<int>(q.dim_v.size()) != n ||
      static_cast<int>(q.dim_w.size()) != n || static_cast<int>(q.ids.size()) != n) {
    err("shape: per-vertex data length mismatch");
    return errs;
  }
  if (std::set<std::string>(q.ids.begin(), q.ids.end()).size() != q.ids.size())
    err("shape: duplicate vertex ids");

  for (int i = 0; i < n; ++i) {
    if (q.cartan[i][i] != 2) err("cartan: diagonal entry must be 2 at vertex " + q.ids[i]);
    if (q.d[i] <= 0) err("symmetrizer: d must be positive at vertex " + q.ids[i]);
    if (q.dim_v[i] < 0 || q.dim_w[i] < 0)
      err("dims: negative dimension at vertex " + q.ids[i]);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (q.cartan[i][j] > 0) err("cartan: positive off-diagonal entry");
      if ((q.cartan[i][j] < 0) != (q.cartan[j][i] < 0))
        err("sign pattern: c_ij < 0 must imply c_ji < 0 (vertices " + q.ids[i] + "," + q.ids[j] + ")");
      if (q.cartan[i][j] * q.d[i] != q.cartan[j][i] * q.d[j])
        err("symmetrizer: d_i c_ij != d_j c_ji at (" + q.ids[i] + "," + q.ids[j] + ")");
    }

  // Exactly one arrow per unordered pair with c_ij < 0, no loops.
  std::map<std::pair<int, int>, int> arrow_count;
  for (const auto& a : q.arrows) {
    if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n) {
      err("orientation: arrow endpoint out of range");
      continue;
    }
    if (a.tail == a.head) err("orientation: loops are not allowed");
    arrow_count[{std::min(a.tail, a.head), std::max(a.tail, a.head)}]++;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int want = q.cartan[i][j] < 0 ? 1 : 0;
      int have = arrow_count.count({i, j}) ? arrow_count[{i, j}] : 0;
      if (have != want)
        err("orientation: pair (" + q.ids[i] + "," + q.ids[j] + ") needs exactly " +
            std::to_string(want) + " arrow(s), has " + std::to_string(have));
    }
  return errs;
}

void validate_or_throw(const ValuedQuiver& q) {
  auto errs = validate(q);
  if (!errs.empty()) {
    std::ostringstream os;
    os << "invalid quiver:";
    for (const auto& e : errs) os << "\n  " << e;
    throw std::invalid_argument(os.str());
  }
}

EdgeConstants edge_constants(const ValuedQuiver& q) {
  EdgeConstants ec;
  for (const auto& a : q.arrows) {
    EdgeConstants::Edge e;
    e.tail = a.tail;
    e.head = a.head;
    long cth = -q.cartan[a.tail][a.head];
    long cht = -q.cartan[a.head][a.tail];
    e.g = std::gcd(cth, cht);
    e.f_th = cth / e.g;
    e.f_ht = cht / e.g;
    e.d_edge = std::gcd(q.d[a.tail], q.d[a.head]);
    ec.edges.push_back(e);
  }
  return ec;
}

const EdgeConstants::Edge& EdgeConstants::at(int tail, int head) const {
  for (const auto& e : edges)
    if (e.tail == tail && e.head == head) return e;
  throw std::out_of_range("no such edge");
}

bool check_assumption(const ValuedQuiver& q) {
  for (const auto& e : edge_constants(q).edges)
    if (e.f_th != 1 && e.f_ht != 1) return false;
  return true;
}

std::optional<std::vector<long>> minimal_symmetrizer(
    const std::vector<std::vector<long>>& cartan) {
  const int n = static_cast<int>(cartan.size());
  for (const auto& row : cartan)
    if (static_cast<int>(row.size()) != n) return std::nullopt;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j && cartan[i][i] != 2) return std::nullopt;
      if (i != j && cartan[i][j] > 0) return std::nullopt;
      if (i != j && (cartan[i][j] < 0) != (cartan[j][i] < 0)) return std::nullopt;
    }

  // Propagate ratios d_j = d_i * c_ij / c_ji along edges, per component.
  std::vector<Rational> x(n, Rational(0));
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int root = 0; root < n; ++root) {
    if (comp[root] != -1) continue;
    comp[root] = ncomp++;
    x[root] = 1;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j) {
        if (i == j || cartan[i][j] == 0) continue;
        Rational want = x[i] * Rational(cartan[i][j]) / Rational(cartan[j][i]);
        if (comp[j] == -1) {
          comp[j] = comp[i];
          x[j] = want;
          stack.push_back(j);
        } else if (x[j] != want) {
          return std::nullopt;  // inconsistent cycle: not symmetrizable
        }
      }
    }
  }

  // Scale each component to the minimal positive integer solution.
  std::vector<long> d(n, 1);
  for (int c = 0; c < ncomp; ++c) {
    Integer den_lcm = 1, num_gcd = 0;
    for (int i = 0; i < n; ++i) {
      if (comp[i] != c) continue;
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x[i].get_den_mpz_t());
    }
    for (int i = 0; i < n; ++i) {
      if (comp[i] != c) continue;
      Integer scaled = x[i].get_num() * (den_lcm / x[i].get_den());
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    }
    for (int i = 0; i < n; ++i) {
      if (comp[i] != c) continue;
      Integer scaled = x[i].get_num() * (den_lcm / x[i].get_den()) / num_gcd;
      if (!scaled.fits_slong_p()) return std::nullopt;
      d[i] = scaled.get_si();
    }
  }
  return d;
}

namespace {

// Shape classification of a connected simply-laced graph given by a 0/1
// symmetric adjacency matrix: path -> A_n, three arms -> D/E.
std::optional<std::string> classify_simply_laced_shape(
    const std::vector<std::vector<long>>& adj) {
  const int n = static_cast<int>(adj.size());
  if (n == 0) return std::nullopt;
  std::vector<int> deg(n, 0);
  int edge_count = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (adj[i][j] < 0 || adj[i][j] > 1) return std::nullopt;
      if (adj[i][j] != adj[j][i]) return std::nullopt;
      if (i < j && adj[i][j]) ++edge_count, ++deg[i], ++deg[j];
      if (i == j && adj[i][j]) return std::nullopt;
    }
  if (edge_count != n - 1) return std::nullopt;  // tree check (with connectivity below)

  // Connectivity.
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int visited = 1;
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < n; ++j)
      if (adj[i][j] && !seen[j]) {
        seen[j] = true;
        ++visited;
        stack.push_back(j);
      }
  }
  if (visited != n) return std::nullopt;

  int branches = 0, branch_vertex = -1;
  for (int i = 0; i < n; ++i) {
    if (deg[i] > 3) return std::nullopt;
    if (deg[i] == 3) {
      ++branches;
      branch_vertex = i;
    }
  }
  if (branches == 0) return "A" + std::to_string(n);
  if (branches > 1) return std::nullopt;

  // Arm lengths from the unique degree-3 vertex.
  std::vector<long> arms;
  for (int j = 0; j < n; ++j) {
    if (!adj[branch_vertex][j]) continue;
    long len = 1;
    int prev = branch_vertex, cur = j;
    while (true) {
      int next = -1;
      for (int k = 0; k < n; ++k)
        if (adj[cur][k] && k != prev) next = k;
      if (next == -1) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms.size() != 3) return std::nullopt;
  if (arms[0] == 1 && arms[1] == 1) return "D" + std::to_string(n);
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
    return "E" + std::to_string(n);
  return std::nullopt;
}

}  // namespace

std::optional<std::string> classify_finite_type(const ValuedQuiver& q) {
  if (!validate(q).empty()) return std::nullopt;
  const int n = q.rank();
  auto mind = minimal_symmetrizer(q.cartan);
  if (!mind) return std::nullopt;

  bool simply_laced = true;
  for (int i = 0; i < n && simply_laced; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && q.cartan[i][j] < -1) {
        simply_laced = false;
        break;
      }
  if (simply_laced) {
    std::vector<std::vector<long>> adj(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && q.cartan[i][j] < 0) adj[i][j] = 1;
    return classify_simply_laced_shape(adj);
  }

  // One valued edge: B/C/F/G patterns on a path.
  std::vector<std::pair<int, int>> valued, plain;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (q.cartan[i][j] == 0) continue;
      long m = std::max(-q.cartan[i][j], -q.cartan[j][i]);
      long mn = std::min(-q.cartan[i][j], -q.cartan[j][i]);
      if (mn != 1) return std::nullopt;  // finite types have no (2,2) etc.
      (m == 1 ? plain : valued).push_back({i, j});
      if (m > 3) return std::nullopt;
      if (m == 3 && n != 2) return std::nullopt;
    }
  if (valued.size() != 1) return std::nullopt;
  long mult = std::max(-q.cartan[valued[0].first][valued[0].second],
                       -q.cartan[valued[0].second][valued[0].first]);
  if (n == 2) return mult == 3 ? "G2" : "B2";

  // Path check with the valued edge somewhere on it.
  std::vector<int> deg(n, 0);
  for (auto [i, j] : valued) ++deg[i], ++deg[j];
  for (auto [i, j] : plain) ++deg[i], ++deg[j];
  if (static_cast<int>(valued.size() + plain.size()) != n - 1) return std::nullopt;
  for (int i = 0; i < n; ++i)
    if (deg[i] > 2) return std::nullopt;

  long shorts = std::count(mind->begin(), mind->end(), 1L);
  auto [a, b] = valued[0];
  bool at_end = deg[a] == 1 || deg[b] == 1;
  if (mult != 2) return std::nullopt;
  if (n == 4 && !at_end && shorts == 2) return "F4";
  if (at_end && shorts == 1) return "B" + std::to_string(n);
  if (at_end && shorts == n - 1) return "C" + std::to_string(n);
  return std::nullopt;
}

std::vector<std::vector<long>> default_partition(const ValuedQuiver& q) {
  std::vector<std::vector<long>> part;
  for (int i = 0; i < q.rank(); ++i) {
    std::vector<long> p(q.d[i], 0);
    p[0] = q.dim_v[i];
    part.push_back(p);
  }
  return part;
}

UnfoldedQuiver unfold(const ValuedQuiver& q,
                      const std::vector<std::vector<long>>& partition) {
  validate_or_throw(q);
  if (static_cast<int>(partition.size()) != q.rank())
    throw std::invalid_argument("partition: one dimension list per vertex required");
  for (int i = 0; i < q.rank(); ++i) {
    if (static_cast<long>(partition[i].size()) != q.d[i])
      throw std::invalid_argument("partition: vertex " + q.ids[i] + " needs " +
                                  std::to_string(q.d[i]) + " parts");
    long sum = 0;
    for (long x : partition[i]) {
      if (x < 0) throw std::invalid_argument("partition: negative part");
      sum += x;
    }
    if (sum != q.dim_v[i])
      throw std::invalid_argument("partition: parts at vertex " + q.ids[i] +
                                  " must sum to " + std::to_string(q.dim_v[i]));
  }

  UnfoldedQuiver u;
  std::map<std::pair<int, long>, int> index;
  for (int i = 0; i < q.rank(); ++i)
    for (long k = 1; k <= q.d[i]; ++k) {
      UnfoldedQuiver::SplitVertex sv;
      sv.orig = i;
      sv.copy = k;
      sv.dim = partition[i][k - 1];
      sv.label = q.d[i] == 1 ? q.ids[i] : q.ids[i] + "_" + std::to_string(k);
      index[{i, k}] = static_cast<int>(u.vertices.size());
      u.vertices.push_back(sv);
    }

  const int m = static_cast<int>(u.vertices.size());
  u.adjacency.assign(m, std::vector<long>(m, 0));
  EdgeConstants ec = edge_constants(q);
  for (const auto& e : ec.edges) {
    for (long k = 1; k <= q.d[e.tail]; ++k)
      for (long l = 1; l <= q.d[e.head]; ++l) {
        if ((k - l) % e.d_edge != 0) continue;
        int a = index[{e.tail, k}], b = index[{e.head, l}];
        u.adjacency[a][b] += e.g;
        u.adjacency[b][a] += e.g;
        if (e.g > 1) u.simply_laced = false;
      }
  }

  for (const auto& sv : u.vertices) u.weight.push_back(sv.dim);
  if (u.simply_laced) u.type = classify_simply_laced_shape(u.adjacency);
  return u;
}

PairData build_pair(const ValuedQuiver& q) {
  validate_or_throw(q);
  PairData pd;
  for (int i = 0; i < q.rank(); ++i) {
    pd.groups[q.d[i]].push_back({i, q.dim_v[i]});
    if (q.dim_w[i] > 0) pd.summands[q.d[i]].push_back({PairData::Summand::kFraming, i, -1, 1});
  }
  for (const auto& e : edge_constants(q).edges)
    pd.summands[e.d_edge].push_back(
        {PairData::Summand::kBifundamental, e.head, e.tail, e.g});
  return pd;
}

std::vector<std::string> PairData::violations() const {
  std::vector<std::string> errs;
  // G_k may act nontrivially on N_j only when j | k: every vertex of a level-j
  // summand must have its group level divisible by j.
  std::map<int, long> level_of_vertex;
  for (const auto& [k, factors] : groups)
    for (const auto& f : factors) level_of_vertex[f.vertex] = k;
  for (const auto& [j, parts] : summands)
    for (const auto& s : parts) {
      std::vector<int> touched;
      touched.push_back(s.vertex);
      if (s.kind == Summand::kBifundamental) touched.push_back(s.tail);
      for (int v : touched) {
        long k = level_of_vertex.count(v) ? level_of_vertex[v] : 0;
        if (k % j != 0)
          errs.push_back("level " + std::to_string(j) + " summand touched by G_" +
                         std::to_string(k));
      }
    }
  return errs;
}

}  // namespace coulomb
