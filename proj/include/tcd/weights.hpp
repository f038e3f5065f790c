#pragma once

#include <map>

#include "tcd/hypergraph.hpp"
#include "tcd/rational.hpp"
#include "tcd/walks.hpp"

namespace tcd {

// Sparse exact weight assignment on tight ell-cycles. Entries with weight 0
// are never stored, so equality of maps is equality of functions.
class WeightFunction {
 public:
  WeightFunction(int k, std::size_t ell) : k_(k), ell_(ell) {}

  int k() const { return k_; }
  std::size_t ell() const { return ell_; }
  const std::map<TightCycle, Rat>& entries() const { return entries_; }
  std::size_t support_size() const { return entries_.size(); }

  Rat at(const TightCycle& c) const {
    auto it = entries_.find(c);
    return it == entries_.end() ? Rat(0) : it->second;
  }

  void set(const TightCycle& c, const Rat& w);
  void add(const TightCycle& c, const Rat& delta);

  Rat total() const;

  // Sum of weights of support cycles containing each edge of h.
  std::vector<Rat> edge_sums(const Hypergraph& h) const;

  bool operator==(const WeightFunction& o) const {
    return k_ == o.k_ && ell_ == o.ell_ && entries_ == o.entries_;
  }

 private:
  int k_;
  std::size_t ell_;
  std::map<TightCycle, Rat> entries_;
};

}  // namespace tcd
