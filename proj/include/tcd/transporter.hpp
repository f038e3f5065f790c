#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tcd/hypergraph.hpp"
#include "tcd/rational.hpp"
#include "tcd/transitions.hpp"
#include "tcd/walks.hpp"
#include "tcd/weights.hpp"

namespace tcd {

// Left-rotation by i: (v_{i+1}, ..., v_k, v_1, ..., v_i).
Tuple rotate(const Tuple& t, std::size_t i);

// Order-L transporter between disjoint ordered edges s and t: a closed walk
// of k(L+1)+1 ordered edges (stored as its cyclic vertex sequence cyc of
// period k(L+1), anchored so edge position 0 is s) such that, with
// h = floor((L+1)/2),
//   (i)   edge position i(L+1) is rotate(s, i) and i(L+1)+h is rotate(t, i);
//   (ii)  each of the k vertex segments [i(L+1), (i+1)(L+1)) is repeat-free;
//   (iii) distinct segments intersect only inside s ∪ t.
// Splicing out the t-edges gives k sending cycles (all containing s, none
// containing t), splicing out the s-edges gives k receiving cycles; every
// other edge of the walk lies on exactly one of each. Sending cycles must be
// compatible with the transition system; receiving cycles need not be.
struct Transporter {
  Tuple s, t;
  std::size_t order = 0;   // L; cycles have length L
  std::vector<int> cyc;    // k(L+1) vertices

  std::vector<TightCycle> sending, receiving;  // k each, canonical
};

// Populates sending/receiving from cyc (no validation beyond index bounds).
Transporter assemble_transporter(int k, const Tuple& s, const Tuple& t, std::size_t order,
                                 std::vector<int> cyc);

struct TransporterCheck {
  bool ok = false;
  std::string reason;  // empty when ok
};

// Re-derives and checks everything: shape, properties (i)-(iii), windows,
// genuineness of all 2k extracted cycles, compatibility of sending cycles,
// and the membership census (s in k sending / 0 receiving, t in 0 / k,
// every other walk edge in exactly 1 / 1).
TransporterCheck validate_transporter(const Hypergraph& h, const TransitionSystem& ts,
                                      const Transporter& tp);

// Randomized backtracking search for up to m_max transporters. Free slots are
// filled in position order with seed-shuffled candidate lists; every check
// (window edges, sending-side compatibility, splice adjacency) prunes the
// search. Returns an empty list when the geometry is infeasible: that needs
// floor((L+1)/2) >= k (otherwise the s- and t-windows would have to share a
// vertex) and n >= 2k + k(L+1-2k) spare vertices. Deterministic per seed;
// each found transporter passes validate_transporter. The node budget is
// node_budget_per * m_max placement attempts.
std::vector<Transporter> find_transporters(const Hypergraph& h, const TransitionSystem& ts,
                                           const Tuple& s, const Tuple& t, std::size_t order,
                                           std::size_t m_max, std::uint64_t seed,
                                           std::size_t node_budget_per = 100000);

// Adds -amount/k to each sending cycle and +amount/k to each receiving cycle:
// the edge sums of w move by exactly -amount at s, +amount at t, 0 elsewhere.
void apply_transporter(WeightFunction& w, const Transporter& tp, const Rat& amount);

}  // namespace tcd
