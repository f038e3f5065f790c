#include "tcd/weights.hpp"

#include "tcd/errors.hpp"

namespace tcd {

void WeightFunction::set(const TightCycle& c, const Rat& w) {
  if (c.length() != ell_) throw InputError("cycle length differs from the ambient ell");
  if (w == 0)
    entries_.erase(c);
  else
    entries_[c] = w;
}

void WeightFunction::add(const TightCycle& c, const Rat& delta) {
  if (c.length() != ell_) throw InputError("cycle length differs from the ambient ell");
  auto it = entries_.find(c);
  if (it == entries_.end()) {
    if (delta != 0) entries_.emplace(c, delta);
    return;
  }
  it->second += delta;
  if (it->second == 0) entries_.erase(it);
}

Rat WeightFunction::total() const {
  Rat t = 0;
  for (const auto& [c, w] : entries_) t += w;
  return t;
}

std::vector<Rat> WeightFunction::edge_sums(const Hypergraph& h) const {
  std::vector<Rat> sums(h.edge_count(), Rat(0));
  for (const auto& [c, w] : entries_)
    for (std::size_t id : c.edge_ids(h)) sums[id] += w;
  return sums;
}

}  // namespace tcd
