#include "tcd/transport.hpp"

#include <algorithm>

#include "tcd/errors.hpp"

namespace tcd {

bool Digraph::has_arc(std::size_t u, std::size_t v) const {
  return std::binary_search(succ[u].begin(), succ[u].end(), v);
}

std::size_t Digraph::arc_count() const {
  std::size_t total = 0;
  for (const auto& s : succ) total += s.size();
  return total;
}

Digraph disjointness_digraph(const Hypergraph& h) {
  Digraph dg;
  dg.n = h.edge_count();
  dg.succ.resize(dg.n);
  for (std::size_t i = 0; i < dg.n; ++i) {
    const Edge& e = h.edge(i);
    for (std::size_t j = 0; j < dg.n; ++j) {
      if (i == j) continue;
      const Edge& f = h.edge(j);
      bool meet = false;
      for (int v : e)
        if (std::binary_search(f.begin(), f.end(), v)) {
          meet = true;
          break;
        }
      if (!meet) dg.succ[i].push_back(j);
    }
  }
  return dg;
}

PathFamilies path_families(const Digraph& dg, std::size_t ell) {
  if (ell < 1) throw InputError("paths have length >= 1");
  if (dg.n < 2) throw InputError("path families need at least two vertices");
  PathFamilies pf;
  pf.ell = ell;
  // DFS from every start over distinct-vertex sequences of ell arcs.
  std::vector<std::size_t> path;
  std::vector<char> used(dg.n, 0);
  auto dfs = [&](auto&& self, std::size_t cur, std::size_t depth) -> void {
    if (depth == ell) {
      pf.fams[{path.front(), cur}].push_back(path);
      return;
    }
    for (std::size_t nxt : dg.succ[cur]) {
      if (used[nxt]) continue;
      used[nxt] = 1;
      path.push_back(nxt);
      self(self, nxt, depth + 1);
      path.pop_back();
      used[nxt] = 0;
    }
  };
  for (std::size_t s = 0; s < dg.n; ++s) {
    path.assign(1, s);
    std::fill(used.begin(), used.end(), 0);
    used[s] = 1;
    dfs(dfs, s, 0);
  }
  bool first = true;
  for (std::size_t u = 0; u < dg.n; ++u)
    for (std::size_t v = 0; v < dg.n; ++v) {
      if (u == v) continue;
      auto it = pf.fams.find({u, v});
      const std::size_t sz = it == pf.fams.end() ? 0 : it->second.size();
      if (first || sz < pf.min_size) pf.min_size = sz;
      if (first || sz > pf.max_size) pf.max_size = sz;
      first = false;
    }
  Int npow;
  mpz_ui_pow_ui(npow.get_mpz_t(), static_cast<unsigned long>(dg.n), ell - 1);
  pf.alpha = Rat(Int(static_cast<unsigned long>(pf.min_size)), npow);
  pf.alpha.canonicalize();
  return pf;
}

BalancedFlow balance_flow(const Digraph& dg, const std::vector<Rat>& xi, std::size_t ell) {
  if (xi.size() != dg.n) throw InputError("xi dimension mismatch");
  Rat total = 0;
  for (const Rat& x : xi) total += x;
  if (total != 0) throw InputError("xi must sum to zero");

  BalancedFlow out;
  out.ell = ell;
  for (const Rat& x : xi) out.beta = std::max(out.beta, Rat(abs(x)));
  if (out.beta == 0) {  // nothing to move
    out.within_cap = true;
    return out;
  }

  PathFamilies pf = path_families(dg, ell);
  out.alpha = pf.alpha;
  if (pf.min_size == 0)
    throw PipelineAbort("transport refused: some ordered pair has an empty " +
                        std::to_string(ell) + "-path family");

  // Raw routing: u sends xi(u)/n to every other vertex, split evenly over the
  // u->v path family.
  Flow raw;
  const Rat inv_n(1, static_cast<unsigned long>(dg.n));
  for (const auto& [pair, fam] : pf.fams) {
    const Rat& supply = xi[pair.first];
    if (supply == 0) continue;
    const Rat per_path = supply * inv_n / Rat(static_cast<unsigned long>(fam.size()));
    for (const auto& path : fam)
      for (std::size_t i = 0; i + 1 < path.size(); ++i) raw[{path[i], path[i + 1]}] += per_path;
  }
  // Net positive part per opposite arc pair.
  for (const auto& [arc, val] : raw) {
    Arc rev{arc.second, arc.first};
    auto it = raw.find(rev);
    const Rat opposite = it == raw.end() ? Rat(0) : it->second;
    const Rat net = val - opposite;
    if (net > 0) out.eta[arc] = net;
  }
  out.cap = Rat(2) * out.beta * Rat(static_cast<unsigned long>(ell)) /
            (out.alpha * Rat(static_cast<unsigned long>(dg.n)));
  out.within_cap = true;
  for (const auto& [arc, val] : out.eta)
    if (val > out.cap) out.within_cap = false;
  return out;
}

BalanceCheck verify_balance(const Digraph& dg, const std::vector<Rat>& xi,
                            const BalancedFlow& f) {
  BalanceCheck chk;
  std::vector<Rat> divergence(dg.n, Rat(0));  // inflow - outflow
  chk.support_ok = true;
  for (const auto& [arc, val] : f.eta) {
    if (val <= 0 || arc.first >= dg.n || arc.second >= dg.n ||
        !dg.has_arc(arc.first, arc.second))
      chk.support_ok = false;
    if (f.eta.count({arc.second, arc.first})) chk.support_ok = false;
    divergence[arc.second] += val;
    divergence[arc.first] -= val;
  }
  chk.divergence_ok = true;
  for (std::size_t v = 0; v < dg.n; ++v)
    if (xi[v] + divergence[v] != 0) chk.divergence_ok = false;
  chk.cap_ok = f.beta == 0;
  if (f.beta > 0) {
    chk.cap_ok = true;
    for (const auto& [arc, val] : f.eta)
      if (val > f.cap) chk.cap_ok = false;
  }
  return chk;
}

}  // namespace tcd
