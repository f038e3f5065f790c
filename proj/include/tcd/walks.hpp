#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tcd/hypergraph.hpp"
#include "tcd/rational.hpp"

namespace tcd {

// Ordered edge: a k-tuple of distinct vertices whose underlying set is an edge.
using Tuple = std::vector<int>;

// Indexes all k! |E| ordered edges of a hypergraph (lexicographically) and
// their one-step walk successors: (v1..vk) -> (v2..vk, u) for every u with
// {v2..vk, u} an edge. Holds a pointer to the hypergraph; keep it alive.
class OrderedEdgeSpace {
 public:
  explicit OrderedEdgeSpace(const Hypergraph& h);

  const Hypergraph& graph() const { return *h_; }
  std::size_t size() const { return tuples_.size(); }
  const Tuple& tuple(std::size_t id) const { return tuples_[id]; }
  std::optional<std::size_t> id(const Tuple& t) const;
  std::size_t require_id(const Tuple& t) const;  // throws InputError when absent
  const std::vector<std::size_t>& successors(std::size_t id) const { return succ_[id]; }
  // Id of the reversed tuple (always present).
  std::size_t reversed(std::size_t id) const;

 private:
  const Hypergraph* h_;
  std::vector<Tuple> tuples_;
  std::unordered_map<Tuple, std::size_t, VecHash> ids_;
  std::vector<std::vector<std::size_t>> succ_;
};

// Tight walk: every k-window of the vertex sequence is an edge. Length is the
// number of windows (= ordered edges). Walks of length 0 are not a thing.
struct Walk {
  int k = 0;
  std::vector<int> vertices;

  std::size_t length() const { return vertices.size() - k + 1; }
  Tuple edge_tuple(std::size_t i) const {  // i in [0, length)
    return Tuple(vertices.begin() + i, vertices.begin() + i + k);
  }
  // First ordered edge equals the last one.
  bool is_closed() const;
};

// Validates the window condition; throws InputError otherwise.
Walk walk_from_vertices(const Hypergraph& h, const std::vector<int>& vs);

// All vertices of the vertex sequence are distinct.
bool is_self_avoiding(const Walk& w);
// The two sub-walks obtained by dropping the last k edges / the first k edges
// are each self-avoiding (vacuously true when the ranges are empty).
bool is_internally_self_avoiding(const Walk& w);

// Number of ell-walks with first ordered edge s and last ordered edge t.
Int count_walks(const OrderedEdgeSpace& sp, std::size_t s, std::size_t t, std::size_t ell);
Int count_walks(const Hypergraph& h, const Tuple& s, const Tuple& t, std::size_t ell);

// alpha such that every ordered pair of ordered edges is joined by at least
// alpha * n^(ell-1) / e_vec(H) tight ell-walks; alpha is exact and attained.
struct ConnectivityCertificate {
  std::size_t ell = 0;
  Int min_count;
  Int max_count;
  Rat alpha;          // min_count * e_vec / n^(ell-1)
  Tuple argmin_s, argmin_t;
  std::size_t e_vec = 0;
};

ConnectivityCertificate connectivity(const Hypergraph& h, std::size_t ell);

// Tight cycle on ell >= k+1 distinct vertices, stored canonically: the
// lexicographically least among all 2*ell rotations/reflections of the
// cyclic vertex sequence.
struct TightCycle {
  std::vector<int> vertices;

  static TightCycle canonical(const std::vector<int>& cyclic);
  std::size_t length() const { return vertices.size(); }
  bool operator<(const TightCycle& o) const { return vertices < o.vertices; }
  bool operator==(const TightCycle& o) const { return vertices == o.vertices; }

  // The ell cyclic k-windows, as sorted vertex sets.
  std::vector<Edge> window_sets(int k) const;
  // Edge ids of the windows; throws InputError if some window is not an edge.
  std::vector<std::size_t> edge_ids(const Hypergraph& h) const;
  // Closed (ell+1)-walk traversal starting at the canonical position.
  Walk traversal(int k) const;
};

// Distinct vertices, length >= k+1, every window an edge.
bool is_valid_cycle(const Hypergraph& h, const TightCycle& c, std::string* why = nullptr);

// All tight ell-cycles, canonical, sorted. In K_n^k there are
// n(n-1)...(n-ell+1) / (2 ell) of them.
std::vector<TightCycle> enumerate_cycles(const Hypergraph& h, std::size_t ell);

// Connecting-walk constants: walks of length ell_k = k^2-k+2 between any two
// ordered edges, with count lower bound alpha^(a_k) n^(ell_k - k - 1);
// a_k = (k-1)! * sum_{i=0}^{k-2} (i+1)/i!  (so a_2 = 1, a_3 = 6, a_4 = 27).
struct LkConstants {
  unsigned long ell_k;
  Int a_k;
};
LkConstants lk_constants(int k);

// Constructive count of ell_k-walks from s to t by the z-insertion pattern:
// vertex sequence  s1..sk  z1 [x-block] z2 [x-block] ... z_{k-1}  t1..tk,
// with k-2 blocks of k-1 free vertices between consecutive z-slots. For each
// choice of the (k-1)(k-2) free vertices x, the admissible z-set S(x) consists
// of the common neighbors z of {s2..sk} and {t1..tk-1} for which the reduced
// sequence s2..sk x t1..tk-1 is a walk in the link of z; each of the
// |S(x)|^(k-1) slot assignments yields a distinct valid walk.
struct InsertionCount {
  Int count;              // sum over examined x of |S(x)|^(k-1); a lower bound
  Int tuples_examined;    // number of x-tuples processed
  Int tuples_total;       // n^((k-1)(k-2))
  bool partial = false;   // budget stopped the x-enumeration early
  Rat lower_bound;        // alpha^(a_k) * n^(ell_k - k - 1), alpha = intersecting alpha
  bool meets_lower_bound = false;
  std::vector<std::vector<int>> samples;  // up to 5 constructed vertex sequences
};

InsertionCount insertion_walks(const Hypergraph& h, const Tuple& s, const Tuple& t,
                               const Int& budget);

}  // namespace tcd
