#pragma once

#include <map>
#include <set>
#include <vector>

#include "tcd/hypergraph.hpp"
#include "tcd/rational.hpp"

namespace tcd {

// Plain digraph on vertices 0..n-1 used as the transport-plan arena.
struct Digraph {
  std::size_t n = 0;
  std::vector<std::vector<std::size_t>> succ;  // sorted

  bool has_arc(std::size_t u, std::size_t v) const;
  std::size_t arc_count() const;
};

// Disjointness digraph on the edges of H: arcs both ways between every pair
// of disjoint edges.
Digraph disjointness_digraph(const Hypergraph& h);

using Arc = std::pair<std::size_t, std::size_t>;
using Flow = std::map<Arc, Rat>;  // sparse, nonzero entries only

// All directed ell-arc paths with distinct vertices between every ordered
// pair, enumerated exhaustively. alpha = (min family size) / n^(ell-1).
struct PathFamilies {
  std::size_t ell = 0;
  std::map<Arc, std::vector<std::vector<std::size_t>>> fams;
  std::size_t min_size = 0;
  std::size_t max_size = 0;
  Rat alpha;
};

PathFamilies path_families(const Digraph& dg, std::size_t ell);

// Balanced flow: for every vertex v, xi(v) + inflow(v) - outflow(v) = 0,
// exactly. eta is supported on arcs only, with antisymmetric support
// (never both (u,v) and (v,u)), and obeys eta <= cap = 2 beta ell / (alpha n)
// where beta = max |xi|.
struct BalancedFlow {
  Flow eta;
  std::size_t ell = 0;
  Rat alpha;  // of the path families used
  Rat beta;   // max |xi|
  Rat cap;    // 2 beta ell / (alpha n)
  bool within_cap = false;
};

// Routes xi(u)/(n |P_uv|) along every ell-path from u to v for every ordered
// pair, then cancels opposite arcs and keeps positive parts. Requires
// sum(xi) = 0 (InputError otherwise). If xi is identically zero the flow is
// empty; otherwise every ordered pair must have a nonempty family
// (PipelineAbort otherwise).
BalancedFlow balance_flow(const Digraph& dg, const std::vector<Rat>& xi, std::size_t ell);

// Independent exact re-check of all postconditions above.
struct BalanceCheck {
  bool divergence_ok = false;
  bool support_ok = false;  // arcs exist, antisymmetric support
  bool cap_ok = false;
  bool ok() const { return divergence_ok && support_ok && cap_ok; }
};
BalanceCheck verify_balance(const Digraph& dg, const std::vector<Rat>& xi,
                            const BalancedFlow& f);

}  // namespace tcd
