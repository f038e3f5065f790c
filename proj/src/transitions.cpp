#include "tcd/transitions.hpp"

#include <algorithm>
#include <sstream>

#include "tcd/errors.hpp"
#include "tcd/rng.hpp"

namespace tcd {

TransitionSystem TransitionSystem::full(const Hypergraph& h) {
  (void)h;
  TransitionSystem ts;
  ts.full_ = true;
  return ts;
}

TransitionSystem TransitionSystem::explicit_system(const Hypergraph& h,
                                                   std::map<std::vector<int>, LocalGraph> graphs,
                                                   std::optional<int> regularity) {
  TransitionSystem ts;
  ts.graphs_ = std::move(graphs);
  ts.r_ = regularity;
  ts.validate(h);
  return ts;
}

bool TransitionSystem::adjacent(const std::vector<int>& x, std::size_t e_id,
                                std::size_t f_id) const {
  if (full_) return true;
  auto it = graphs_.find(x);
  if (it == graphs_.end()) return false;
  return it->second.adjacent(e_id, f_id);
}

void TransitionSystem::validate(const Hypergraph& h) const {
  if (full_) return;
  // Collect expected member lists.
  std::map<std::vector<int>, std::vector<std::size_t>> expect;
  std::vector<int> x(h.k() - 1);
  for (std::size_t id = 0; id < h.edge_count(); ++id) {
    const Edge& e = h.edge(id);
    for (int skip = 0; skip < h.k(); ++skip) {
      x.clear();
      for (int j = 0; j < h.k(); ++j)
        if (j != skip) x.push_back(e[j]);
      expect[x].push_back(id);
    }
  }
  if (expect.size() != graphs_.size())
    throw InputError("transition system covers the wrong set of (k-1)-sets");
  for (const auto& [key, lg] : graphs_) {
    auto it = expect.find(key);
    if (it == expect.end()) throw InputError("transition graph at a non-occurring (k-1)-set");
    if (lg.members != it->second)
      throw InputError("transition graph members differ from the edges containing the set");
    std::map<std::size_t, int> deg;
    for (const auto& [a, b] : lg.adj) {
      if (a >= b) throw InputError("transition adjacency not normalized");
      if (!std::binary_search(lg.members.begin(), lg.members.end(), a) ||
          !std::binary_search(lg.members.begin(), lg.members.end(), b))
        throw InputError("transition adjacency endpoint outside member list");
      ++deg[a];
      ++deg[b];
    }
    if (r_) {
      for (std::size_t m : lg.members)
        if (deg[m] != *r_) throw InputError("transition graph is not r-regular");
    }
  }
}

namespace {

// All r-regular labeled graphs on d vertices, as normalized edge lists.
// DFS over potential edges in lex order with degree bounds and a remaining-
// capacity prune; cached per (d, r).
const std::vector<std::vector<std::pair<int, int>>>& regular_graphs(int d, int r) {
  static std::map<std::pair<int, int>, std::vector<std::vector<std::pair<int, int>>>> cache;
  auto key = std::make_pair(d, r);
  auto hit = cache.find(key);
  if (hit != cache.end()) return hit->second;

  std::vector<std::pair<int, int>> pot;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) pot.emplace_back(i, j);
  std::vector<std::vector<std::pair<int, int>>> out;
  std::vector<std::pair<int, int>> cur;
  std::vector<int> deg(d, 0);

  // slots_left[v] at position p: potential edges at >= p incident to v.
  auto dfs = [&](auto&& self, std::size_t p) -> void {
    if (p == pot.size()) {
      for (int v = 0; v < d; ++v)
        if (deg[v] != r) return;
      out.push_back(cur);
      return;
    }
    auto [i, j] = pot[p];
    // Feasibility: vertex i sees only edges (i, j..d-1) from here on.
    // Cheap prune: remaining potential degree for i.
    int remain_i = d - 1 - j + 1;  // edges (i,j),(i,j+1),...,(i,d-1)
    if (deg[i] + remain_i < r) return;
    if (deg[i] < r && deg[j] < r) {
      cur.push_back(pot[p]);
      ++deg[i];
      ++deg[j];
      self(self, p + 1);
      --deg[i];
      --deg[j];
      cur.pop_back();
    }
    // Skipping (i,j): if j == d-1, vertex i's degree is final.
    if (!(j == d - 1 && deg[i] != r)) self(self, p + 1);
  };
  dfs(dfs, 0);
  return cache.emplace(key, std::move(out)).first->second;
}

LocalGraph sample_local(const std::vector<std::size_t>& members, int r, SeededRng& rng) {
  const int d = static_cast<int>(members.size());
  LocalGraph lg;
  lg.members = members;
  if (r == 0) return lg;
  if (d <= 8) {
    const auto& all = regular_graphs(d, r);
    if (all.empty()) throw GenerationError("no r-regular graph on d vertices exists");
    const auto& pick = all[rng.below(all.size())];
    for (auto [i, j] : pick) lg.adj.emplace(members[i], members[j]);
    return lg;
  }
  // Pairing model with rejection: uniform over simple regular graphs. When
  // r is above half the degree, sample the (d-1-r)-regular complement
  // instead and invert — complementation is a uniformity-preserving
  // bijection, and the sparse side keeps the rejection rate tame.
  const int rc = d - 1 - r;
  const bool flip = rc < r;
  const int target = flip ? rc : r;
  std::set<std::pair<int, int>> edges;
  bool sampled = target == 0;  // empty graph needs no pairing
  std::vector<int> stubs;
  stubs.reserve(static_cast<std::size_t>(d) * target);
  for (int v = 0; v < d; ++v)
    for (int c = 0; c < target; ++c) stubs.push_back(v);
  for (int attempt = 0; !sampled && attempt < 200000; ++attempt) {
    rng.shuffle(stubs);
    edges.clear();
    bool ok = true;
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
      int a = stubs[i], b = stubs[i + 1];
      if (a == b) {
        ok = false;
        break;
      }
      if (a > b) std::swap(a, b);
      if (!edges.emplace(a, b).second) {
        ok = false;
        break;
      }
    }
    sampled = ok;
  }
  if (!sampled) throw GenerationError("pairing model failed to produce a simple regular graph");
  if (!flip) {
    for (auto [i, j] : edges) lg.adj.emplace(members[i], members[j]);
  } else {
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j)
        if (!edges.count({i, j})) lg.adj.emplace(members[i], members[j]);
  }
  return lg;
}

}  // namespace

Int count_regular_graphs(int d, int r) {
  return Int(static_cast<unsigned long>(regular_graphs(d, r).size()));
}

TransitionSystem sample_transition_system(const Hypergraph& h, int r, std::uint64_t seed) {
  if (r < 0 || r % 2 != 0) throw InputError("transition regularity r must be even and >= 0");
  if (r > 0 && static_cast<std::size_t>(r) + 1 > h.min_codegree())
    throw InputError("need r <= min codegree - 1");
  // Member lists per (k-1)-set, in sorted key order for a deterministic stream.
  std::map<std::vector<int>, std::vector<std::size_t>> members;
  std::vector<int> x;
  for (std::size_t id = 0; id < h.edge_count(); ++id) {
    const Edge& e = h.edge(id);
    for (int skip = 0; skip < h.k(); ++skip) {
      x.clear();
      for (int j = 0; j < h.k(); ++j)
        if (j != skip) x.push_back(e[j]);
      members[x].push_back(id);
    }
  }
  SeededRng rng(seed);
  std::map<std::vector<int>, LocalGraph> graphs;
  for (auto& [key, mem] : members) {
    std::sort(mem.begin(), mem.end());
    graphs.emplace(key, sample_local(mem, r, rng));
  }
  return TransitionSystem::explicit_system(h, std::move(graphs), r);
}

bool is_compatible_walk(const Hypergraph& h, const TransitionSystem& ts, const Walk& w) {
  if (ts.is_full()) return true;
  const int k = w.k;
  std::vector<int> x;
  Edge cur, nxt;
  for (std::size_t i = 0; i + 1 < w.length(); ++i) {
    x.assign(w.vertices.begin() + i + 1, w.vertices.begin() + i + k);
    std::sort(x.begin(), x.end());
    cur.assign(w.vertices.begin() + i, w.vertices.begin() + i + k);
    std::sort(cur.begin(), cur.end());
    nxt.assign(w.vertices.begin() + i + 1, w.vertices.begin() + i + 1 + k);
    std::sort(nxt.begin(), nxt.end());
    auto e = h.edge_id(cur), f = h.edge_id(nxt);
    if (!e || !f) throw InputError("walk window is not an edge");
    if (!ts.adjacent(x, *e, *f)) return false;
  }
  return true;
}

bool is_compatible_cycle(const Hypergraph& h, const TransitionSystem& ts, const TightCycle& c) {
  if (ts.is_full()) return true;
  const int k = h.k();
  const std::size_t ell = c.length();
  const auto ids = c.edge_ids(h);
  std::vector<int> x(k - 1);
  for (std::size_t i = 0; i < ell; ++i) {
    for (int j = 0; j < k - 1; ++j) x[j] = c.vertices[(i + 1 + j) % ell];
    std::sort(x.begin(), x.end());
    if (!ts.adjacent(x, ids[i], ids[(i + 1) % ell])) return false;
  }
  return true;
}

std::optional<std::size_t> CompatibilityDigraph::uniform_out_degree() const {
  if (succ.empty()) return std::nullopt;
  std::size_t d = succ[0].size();
  for (const auto& s : succ)
    if (s.size() != d) return std::nullopt;
  return d;
}

bool CompatibilityDigraph::in_regular(std::size_t r) const {
  std::vector<std::size_t> indeg(succ.size(), 0);
  for (const auto& s : succ)
    for (std::size_t j : s) ++indeg[j];
  return std::all_of(indeg.begin(), indeg.end(), [&](std::size_t d) { return d == r; });
}

std::string CompatibilityDigraph::to_arc_list() const {
  std::ostringstream os;
  os << "vertices " << succ.size() << "\n";
  for (std::size_t i = 0; i < succ.size(); ++i) {
    os << "edge " << i;
    for (int v : space->tuple(i)) os << ' ' << v;
    os << "\n";
  }
  for (std::size_t i = 0; i < succ.size(); ++i)
    for (std::size_t j : succ[i]) os << "arc " << i << ' ' << j << "\n";
  return os.str();
}

CompatibilityDigraph build_compatibility_digraph(const OrderedEdgeSpace& sp,
                                                 const TransitionSystem& ts) {
  const Hypergraph& h = sp.graph();
  CompatibilityDigraph dg;
  dg.space = &sp;
  dg.succ.resize(sp.size());
  std::vector<int> x;
  Edge cur, nxt;
  for (std::size_t i = 0; i < sp.size(); ++i) {
    const Tuple& t = sp.tuple(i);
    cur = t;
    std::sort(cur.begin(), cur.end());
    const std::size_t e = *h.edge_id(cur);
    x.assign(t.begin() + 1, t.end());
    std::sort(x.begin(), x.end());
    for (std::size_t j : sp.successors(i)) {
      nxt = sp.tuple(j);
      std::sort(nxt.begin(), nxt.end());
      if (ts.adjacent(x, e, *h.edge_id(nxt))) dg.succ[i].push_back(j);
    }
    dg.arc_count += dg.succ[i].size();
  }
  return dg;
}

Int count_compatible_walks(const CompatibilityDigraph& dg, std::size_t s, std::size_t t,
                           std::size_t ell) {
  if (ell < 1) throw InputError("walks have length >= 1");
  std::vector<Int> cur(dg.succ.size(), Int(0)), nxt(dg.succ.size());
  cur[s] = 1;
  for (std::size_t step = 1; step < ell; ++step) {
    std::fill(nxt.begin(), nxt.end(), Int(0));
    for (std::size_t i = 0; i < dg.succ.size(); ++i) {
      if (cur[i] == 0) continue;
      for (std::size_t j : dg.succ[i]) nxt[j] += cur[i];
    }
    std::swap(cur, nxt);
  }
  return cur[t];
}

CompatConnectivity compatible_connectivity(const CompatibilityDigraph& dg, std::size_t ell,
                                           int r) {
  if (ell < 1) throw InputError("walks have length >= 1");
  if (r < 1) throw InputError("compatible connectivity is scaled by r^(ell-1); need r >= 1");
  CompatConnectivity cc;
  cc.ell = ell;
  cc.r = r;
  const std::size_t m = dg.succ.size();
  if (m == 0) throw InputError("empty digraph");
  std::vector<Int> cur(m), nxt(m);
  bool first = true;
  for (std::size_t s = 0; s < m; ++s) {
    std::fill(cur.begin(), cur.end(), Int(0));
    cur[s] = 1;
    for (std::size_t step = 1; step < ell; ++step) {
      std::fill(nxt.begin(), nxt.end(), Int(0));
      for (std::size_t i = 0; i < m; ++i) {
        if (cur[i] == 0) continue;
        for (std::size_t j : dg.succ[i]) nxt[j] += cur[i];
      }
      std::swap(cur, nxt);
    }
    for (std::size_t t = 0; t < m; ++t) {
      if (first || cur[t] < cc.min_count) cc.min_count = cur[t];
      if (first || cur[t] > cc.max_count) cc.max_count = cur[t];
      first = false;
    }
  }
  Int rpow;
  mpz_ui_pow_ui(rpow.get_mpz_t(), static_cast<unsigned long>(r), ell - 1);
  const Rat scale = Rat(Int(static_cast<unsigned long>(m)), rpow);  // e_vec / r^(ell-1)
  cc.alpha_compat = Rat(cc.min_count) * scale;
  cc.alpha_compat.canonicalize();
  Rat lo = Rat(cc.min_count) * scale - 1;
  Rat hi = Rat(cc.max_count) * scale - 1;
  cc.zeta = std::max(Rat(abs(lo)), Rat(abs(hi)));
  return cc;
}

std::vector<TightCycle> enumerate_compatible_cycles(const Hypergraph& h,
                                                    const TransitionSystem& ts,
                                                    std::size_t ell) {
  std::vector<TightCycle> out;
  for (auto& c : enumerate_cycles(h, ell))
    if (is_compatible_cycle(h, ts, c)) out.push_back(std::move(c));
  return out;
}

namespace {

// Compatible closed (ell+1)-walks from start with the first ell vertices
// distinct: after ell steps through the compatibility digraph we must sit on
// the unique tuple whose suffix matches the start's prefix, then step home.
struct CensusDfs {
  const Hypergraph& h;
  const TransitionSystem& ts;
  const OrderedEdgeSpace& sp;
  const CompatibilityDigraph& dg;
  std::size_t ell;
  std::size_t start;
  std::vector<char> used;  // vertex usage among the first ell
  Int hits = 0;

  // depth = number of edges placed so far; cur = current tuple id.
  void run(std::size_t depth, std::size_t cur) {
    const int k = h.k();
    if (depth == ell + 1) {
      if (cur == start) hits += 1;
      return;
    }
    for (std::size_t j : dg.succ[cur]) {
      const Tuple& t = sp.tuple(j);
      const int entering = t.back();
      // Vertex index entering the sequence at this step: position depth+k-1
      // (0-based); it belongs to the distinct prefix iff index < ell.
      const std::size_t pos = depth + k - 1;
      if (pos < ell) {
        if (used[entering]) continue;
        used[entering] = 1;
        run(depth + 1, j);
        used[entering] = 0;
      } else {
        // Forced closing tail: must match the start tuple's coordinates.
        const Tuple& s0 = sp.tuple(start);
        if (entering != s0[pos - ell]) continue;
        run(depth + 1, j);
      }
    }
  }
};

}  // namespace

Int compatible_closed_walk_census(const Hypergraph& h, const TransitionSystem& ts,
                                  std::size_t ell) {
  if (ell < static_cast<std::size_t>(h.k()) + 1)
    throw InputError("census needs ell >= k+1");
  OrderedEdgeSpace sp(h);
  CompatibilityDigraph dg = build_compatibility_digraph(sp, ts);
  Int total = 0;
  for (std::size_t s = 0; s < sp.size(); ++s) {
    CensusDfs dfs{h, ts, sp, dg, ell, s, std::vector<char>(h.n() + 1, 0), 0};
    for (int v : sp.tuple(s)) dfs.used[v] = 1;
    dfs.run(1, s);
    total += dfs.hits;
  }
  return total;
}

CertifiedSystem certify_system(const Hypergraph& h, int r,
                               const std::vector<std::size_t>& ells, std::uint64_t seed,
                               int attempt_budget) {
  if (ells.empty()) throw InputError("certification needs at least one walk length");
  // Acceptance keys on the base length ell = max(ells): short designated
  // lengths can have alpha_compat = 0 by pigeonhole (r^(ell-1) walks cannot
  // cover e_vec(H) targets) and are reported, not enforced.
  const std::size_t base = *std::max_element(ells.begin(), ells.end());
  CertifiedSystem out;
  out.report.seed = seed;
  SeededRng master(seed);
  for (int attempt = 0; attempt < attempt_budget; ++attempt) {
    SeededRng child = master.child(static_cast<std::uint64_t>(attempt));
    const std::uint64_t sys_seed = child.next();
    TransitionSystem ts = sample_transition_system(h, r, sys_seed);
    OrderedEdgeSpace sp(h);
    CompatibilityDigraph dg = build_compatibility_digraph(sp, ts);
    out.report.attempts = attempt + 1;
    out.report.lengths.clear();
    bool ok = true;
    for (std::size_t ell : ells) {
      if (r == 0) {
        // Arcless digraph: no compatible walks at any certified length.
        out.report.lengths.push_back({ell, Int(0), Int(0), Rat(0), Rat(1)});
        ok = false;
        continue;
      }
      CompatConnectivity cc = compatible_connectivity(dg, ell, r);
      out.report.lengths.push_back({cc.ell, cc.min_count, cc.max_count, cc.alpha_compat, cc.zeta});
      if (ell == base && cc.alpha_compat <= 0) ok = false;
    }
    if (ok) {
      out.report.accepted = true;
      out.report.accepted_attempt = static_cast<std::uint64_t>(attempt);
      out.system = std::move(ts);
      return out;
    }
  }
  return out;
}

}  // namespace tcd
