#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coulomb/rational.hpp"

namespace coulomb {

// Valued quiver for a symmetrizable Cartan matrix: vertices with symmetrizer
// d_i and dimensions v_i (gauge) and w_i (framing), one oriented arrow per
// pair {i,j} with c_ij < 0.
struct ValuedQuiver {
  struct Arrow {
    int tail = 0;  // o(h)
    int head = 0;  // i(h)
  };

  std::vector<std::string> ids;       // display names, one per vertex
  std::vector<std::vector<long>> cartan;
  std::vector<long> d;                // symmetrizer, positive
  std::vector<long> dim_v;
  std::vector<long> dim_w;
  std::vector<Arrow> arrows;

  int rank() const { return static_cast<int>(cartan.size()); }
  long total_gauge_dim() const;
  std::optional<int> vertex_by_id(const std::string& id) const;
};

// All invariant violations, empty when the quiver is well-formed.
std::vector<std::string> validate(const ValuedQuiver& q);
void validate_or_throw(const ValuedQuiver& q);

// Per-edge derived constants g_ij = gcd(|c_ij|,|c_ji|), f_ij = |c_ij|/g_ij,
// d_ij = gcd(d_i, d_j).
struct EdgeConstants {
  struct Edge {
    int tail = 0, head = 0;
    long g = 0;
    long f_th = 0;  // f_{tail,head} = |c_{tail,head}| / g
    long f_ht = 0;  // f_{head,tail}
    long d_edge = 0;
  };
  std::vector<Edge> edges;  // aligned with q.arrows

  const Edge& at(int tail, int head) const;
};

EdgeConstants edge_constants(const ValuedQuiver& q);

// True iff every edge has f_ij = 1 or f_ji = 1; the twisted rank formula is
// only valid under this assumption. All finite types satisfy it.
bool check_assumption(const ValuedQuiver& q);

// Componentwise-minimal positive integer symmetrizer of a symmetrizable
// Cartan matrix; nullopt when no symmetrizer exists.
std::optional<std::vector<long>> minimal_symmetrizer(
    const std::vector<std::vector<long>>& cartan);

// Finite-type recognition by graph shape and symmetrizer pattern. Returns
// names such as "A5", "B3", "C3", "D4", "E6", "F4", "G2".
std::optional<std::string> classify_finite_type(const ValuedQuiver& q);

struct UnfoldedQuiver {
  // Vertex (i,k) of the split quiver, k = 1..d_i.
  struct SplitVertex {
    int orig = 0;
    long copy = 1;   // 1-based
    long dim = 0;    // dim V_i{k}
    std::string label;
  };
  std::vector<SplitVertex> vertices;
  std::vector<std::vector<long>> adjacency;  // symmetric multiplicity matrix
  std::optional<std::string> type;           // ADE name when recognizable
  // Weight of the associated canonical base element, as multiplicities of
  // the split simple roots: weight = -sum dims[k] * alpha_{i_k}.
  std::vector<long> weight;
  bool simply_laced = true;
};

// Splits vertex i into d_i copies; copies k and l of adjacent vertices are
// joined iff k = l mod gcd(d_i, d_j), with multiplicity g_ij. The partition
// gives dim V_i{k} per copy and must sum to v_i per vertex.
UnfoldedQuiver unfold(const ValuedQuiver& q,
                      const std::vector<std::vector<long>>& partition);

// Default partition: all of v_i on the first copy.
std::vector<std::vector<long>> default_partition(const ValuedQuiver& q);

// The pair (G_., N_.) attached to a valued quiver: group factors GL(V_i)
// collected by d_i = k, and representation summands collected by level.
struct PairData {
  struct GroupFactor {
    int vertex = 0;
    long dim = 0;
  };
  struct Summand {
    enum Kind { kFraming, kBifundamental } kind = kFraming;
    int vertex = 0;        // framing vertex, or head for bifundamental
    int tail = -1;         // bifundamental only
    long multiplicity = 1; // g_ij for bifundamental
  };
  std::map<long, std::vector<GroupFactor>> groups;   // level k -> factors
  std::map<long, std::vector<Summand>> summands;     // level k -> N_k parts

  // Checks that G_k can act nontrivially on N_j only when j divides k.
  std::vector<std::string> violations() const;
};

PairData build_pair(const ValuedQuiver& q);

}  // namespace coulomb
