#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "tcd/rational.hpp"
#include "tcd/util.hpp"

namespace tcd {

using Vertex = int;              // 1-based
using Edge = std::vector<int>;   // sorted k-set

// k-uniform hypergraph on vertex set {1..n}. Edges are stored sorted
// (lexicographically) and deduplicated; edge ids index that order.
class Hypergraph {
 public:
  Hypergraph(int n, int k, std::vector<Edge> edges);

  int n() const { return n_; }
  int k() const { return k_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t id) const { return edges_[id]; }

  bool is_edge(const Edge& sorted_e) const { return edge_ids_.count(sorted_e) > 0; }
  // Id of a sorted k-set, if present.
  std::optional<std::size_t> edge_id(const Edge& sorted_e) const;

  // Vertices z with x ∪ {z} an edge, for a (k-1)-set x (any order accepted).
  std::vector<Vertex> neighborhood(const std::vector<int>& x) const;
  std::size_t codegree(const std::vector<int>& x) const;

  // Min/max codegree over all (k-1)-subsets of {1..n}.
  std::size_t min_codegree() const;
  std::size_t max_codegree() const;

  // |N(x) ∩ N(y)| >= alpha * n for every pair of (k-1)-sets x, y.
  bool is_alpha_intersecting(const Rat& alpha) const;
  // Largest alpha for which the above holds: min over pairs of |N(x)∩N(y)| / n.
  Rat intersecting_alpha() const;

 private:
  void check_edge(const Edge& e) const;

  int n_;
  int k_;
  std::vector<Edge> edges_;
  std::unordered_map<Edge, std::size_t, VecHash> edge_ids_;
};

// Link of a vertex: (k-1)-uniform graph on the other n-1 vertices, relabeled
// compactly to {1..n-1}. to_link[v] maps an original vertex (v != z) to its
// link label; from_link inverts it.
struct Link {
  Hypergraph graph;
  std::vector<int> to_link;    // indexed by original vertex, 0 for z
  std::vector<int> from_link;  // indexed by link vertex
};

Link link_of(const Hypergraph& h, Vertex z);

// Complete k-graph K_n^k.
Hypergraph gen_complete(int n, int k);

// Binomial random k-graph conditioned (by retry) on min codegree >= delta_target.
// Each retry raises the edge probability; throws GenerationError when the
// retry budget is exhausted.
Hypergraph gen_random_min_codegree(int n, int k, int delta_target, std::uint64_t seed,
                                   int max_attempts = 64);

// Extremal-construction instance: vertex classes A (|A| = floor(n/2)) and its
// complement, edge classes E_i = { e : |e ∩ A| = i }, and a sparse sample h02
// of E_0 ∪ E_2 taken with probability 2(1+zeta)eps. The base graph is
// h02 ∪ E_1 ∪ E_3 ∪ ... (all classes except E_0, E_2 are kept whole).
struct LabeledExample {
  Hypergraph base;
  std::vector<Vertex> side_a;                  // sorted
  std::map<int, std::vector<std::size_t>> classes;  // |e ∩ A| -> edge ids in base
  std::vector<std::size_t> h02;                // edge ids in base
};

LabeledExample gen_lowerbound_example(int n, int k, double eps, double zeta,
                                      std::uint64_t seed);

}  // namespace tcd
