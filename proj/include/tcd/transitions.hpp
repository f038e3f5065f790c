#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "tcd/hypergraph.hpp"
#include "tcd/rational.hpp"
#include "tcd/walks.hpp"

namespace tcd {

// Transition graph at a (k-1)-set x: a simple graph whose vertices are the
// edges of H containing x (by edge id).
struct LocalGraph {
  std::vector<std::size_t> members;                        // sorted edge ids
  std::set<std::pair<std::size_t, std::size_t>> adj;       // normalized (lo, hi)

  bool adjacent(std::size_t e, std::size_t f) const {
    if (e == f) return false;
    return adj.count(e < f ? std::make_pair(e, f) : std::make_pair(f, e)) > 0;
  }
};

// A transition system assigns a transition graph to every (k-1)-set contained
// in an edge. The distinguished "full" system makes every one-step transition
// compatible (conceptually the complete graph with loops, so that rotation
// steps like (a,b) -> (b,a) are allowed); explicit systems are simple graphs.
class TransitionSystem {
 public:
  static TransitionSystem full(const Hypergraph& h);
  static TransitionSystem explicit_system(const Hypergraph& h,
                                          std::map<std::vector<int>, LocalGraph> graphs,
                                          std::optional<int> regularity);

  bool is_full() const { return full_; }
  std::optional<int> regularity() const { return r_; }
  const std::map<std::vector<int>, LocalGraph>& graphs() const { return graphs_; }

  // x must be sorted. For full systems this is constant true.
  bool adjacent(const std::vector<int>& x, std::size_t e_id, std::size_t f_id) const;

  // Consistency against h: member lists match exactly the edges containing x,
  // endpoints of adjacencies are members, and (for sampled systems) every
  // vertex has degree r. Throws InputError on violation.
  void validate(const Hypergraph& h) const;

 private:
  bool full_ = false;
  std::optional<int> r_;
  std::map<std::vector<int>, LocalGraph> graphs_;
};

// Independent uniform r-regular sample at every (k-1)-set, in sorted key
// order from one deterministic stream. Requires r even, 0 <= r <= delta(H)-1
// (r = 0 yields edgeless transition graphs).
TransitionSystem sample_transition_system(const Hypergraph& h, int r, std::uint64_t seed);

// Number of labeled r-regular graphs on d vertices (exact; used by tests).
Int count_regular_graphs(int d, int r);

// Every consecutive window pair of the walk is adjacent in the transition
// graph at their shared (k-1)-set.
bool is_compatible_walk(const Hypergraph& h, const TransitionSystem& ts, const Walk& w);
// All ell cyclic transitions of the canonical traversal; invariant under
// rotation and reversal because transition graphs are undirected.
bool is_compatible_cycle(const Hypergraph& h, const TransitionSystem& ts, const TightCycle& c);

// Digraph on ordered edges with arcs for compatible one-step transitions.
// For an r-regular system this is r-out-regular and r-in-regular with
// r * e_vec(H) arcs, and arc (e,f) implies arc (reverse f, reverse e).
struct CompatibilityDigraph {
  const OrderedEdgeSpace* space = nullptr;
  std::vector<std::vector<std::size_t>> succ;
  std::size_t arc_count = 0;

  std::optional<std::size_t> uniform_out_degree() const;
  bool in_regular(std::size_t r) const;
  // "vertices <n>" header, "edge <id> <v1> <v2> ..." per ordered edge, then
  // "arc <src> <dst>" lines.
  std::string to_arc_list() const;
};

CompatibilityDigraph build_compatibility_digraph(const OrderedEdgeSpace& sp,
                                                 const TransitionSystem& ts);

Int count_compatible_walks(const CompatibilityDigraph& dg, std::size_t s, std::size_t t,
                           std::size_t ell);

// All-pairs compatible ell-walk counts, scaled against the regular-system
// target r^(ell-1)/e_vec(H): alpha_compat = min scaled ratio, zeta = max
// |ratio - 1| (the exactness defect).
struct CompatConnectivity {
  std::size_t ell = 0;
  int r = 0;
  Int min_count, max_count;
  Rat alpha_compat;
  Rat zeta;
};

CompatConnectivity compatible_connectivity(const CompatibilityDigraph& dg, std::size_t ell,
                                           int r);

std::vector<TightCycle> enumerate_compatible_cycles(const Hypergraph& h,
                                                    const TransitionSystem& ts,
                                                    std::size_t ell);

// Sum over ordered edges of the number of compatible internally-self-avoiding
// closed (ell+1)-walks starting and ending there. Equals 2*ell*(number of
// compatible ell-cycles): each cycle is traversed from ell starts in 2
// directions.
Int compatible_closed_walk_census(const Hypergraph& h, const TransitionSystem& ts,
                                  std::size_t ell);

struct CertifyLengthStats {
  std::size_t ell = 0;
  Int min_count, max_count;
  Rat alpha_compat;
  Rat zeta;
};

struct CertifyReport {
  bool accepted = false;
  int attempts = 0;
  std::uint64_t seed = 0;           // master seed
  std::uint64_t accepted_attempt = 0;
  std::vector<CertifyLengthStats> lengths;  // stats of the last-examined system
};

// Samples systems from the seed stream until one has alpha_compat > 0 at the
// base length max(ells) (stats are reported for every requested length), or
// the attempt budget runs out.
struct CertifiedSystem {
  std::optional<TransitionSystem> system;
  CertifyReport report;
};

CertifiedSystem certify_system(const Hypergraph& h, int r,
                               const std::vector<std::size_t>& ells, std::uint64_t seed,
                               int attempt_budget);

// JSON (de)serialization lives in json_io.hpp.

}  // namespace tcd
