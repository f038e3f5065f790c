#include "tcd/walks.hpp"

#include <algorithm>

#include "tcd/errors.hpp"

namespace tcd {

OrderedEdgeSpace::OrderedEdgeSpace(const Hypergraph& h) : h_(&h) {
  for (const Edge& e : h.edges()) {
    Tuple t = e;  // sorted; next_permutation walks all orderings
    do {
      tuples_.push_back(t);
    } while (std::next_permutation(t.begin(), t.end()));
  }
  std::sort(tuples_.begin(), tuples_.end());
  ids_.reserve(tuples_.size());
  for (std::size_t i = 0; i < tuples_.size(); ++i) ids_.emplace(tuples_[i], i);

  const int k = h.k();
  succ_.resize(tuples_.size());
  for (std::size_t i = 0; i < tuples_.size(); ++i) {
    if (k == 1) {  // windows share no vertices; every edge follows every edge
      succ_[i].resize(tuples_.size());
      for (std::size_t j = 0; j < tuples_.size(); ++j) succ_[i][j] = j;
      continue;
    }
    std::vector<int> x(tuples_[i].begin() + 1, tuples_[i].end());
    Tuple next(x.begin(), x.end());
    next.push_back(0);
    for (Vertex u : h.neighborhood(x)) {
      next.back() = u;
      succ_[i].push_back(ids_.at(next));
    }
    std::sort(succ_[i].begin(), succ_[i].end());
  }
}

std::optional<std::size_t> OrderedEdgeSpace::id(const Tuple& t) const {
  auto it = ids_.find(t);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

std::size_t OrderedEdgeSpace::require_id(const Tuple& t) const {
  auto found = id(t);
  if (!found) throw InputError("tuple is not an ordered edge of this hypergraph");
  return *found;
}

std::size_t OrderedEdgeSpace::reversed(std::size_t id) const {
  Tuple t = tuples_[id];
  std::reverse(t.begin(), t.end());
  return ids_.at(t);
}

bool Walk::is_closed() const {
  const std::size_t len = length();
  if (len < 2) return true;
  return std::equal(vertices.begin(), vertices.begin() + k, vertices.end() - k);
}

Walk walk_from_vertices(const Hypergraph& h, const std::vector<int>& vs) {
  const int k = h.k();
  if (vs.size() < static_cast<std::size_t>(k))
    throw InputError("walk needs at least k vertices");
  Edge window;
  for (std::size_t i = 0; i + k <= vs.size(); ++i) {
    window.assign(vs.begin() + i, vs.begin() + i + k);
    std::sort(window.begin(), window.end());
    for (std::size_t j = 1; j < window.size(); ++j)
      if (window[j] == window[j - 1])
        throw InputError("window " + std::to_string(i) + " repeats a vertex");
    if (!h.is_edge(window))
      throw InputError("window " + std::to_string(i) + " is not an edge");
  }
  return Walk{k, vs};
}

bool is_self_avoiding(const Walk& w) {
  std::vector<int> v = w.vertices;
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

static bool range_distinct(const std::vector<int>& vs, std::size_t lo, std::size_t hi) {
  if (lo >= hi) return true;
  std::vector<int> v(vs.begin() + lo, vs.begin() + hi);
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

bool is_internally_self_avoiding(const Walk& w) {
  const std::size_t ell = w.length();
  const std::size_t k = static_cast<std::size_t>(w.k);
  // Sub-walk e_1..e_{ell-k} covers vertices [0, ell-1); e_{k+1}..e_ell covers
  // [k, ell+k-1). Empty edge ranges are vacuously self-avoiding.
  bool head_ok = ell <= k || range_distinct(w.vertices, 0, ell - 1);
  bool tail_ok = ell <= k || range_distinct(w.vertices, k, ell + k - 1);
  return head_ok && tail_ok;
}

Int count_walks(const OrderedEdgeSpace& sp, std::size_t s, std::size_t t, std::size_t ell) {
  if (ell < 1) throw InputError("walks have length >= 1");
  std::vector<Int> cur(sp.size(), Int(0)), nxt(sp.size());
  cur[s] = 1;
  for (std::size_t step = 1; step < ell; ++step) {
    std::fill(nxt.begin(), nxt.end(), Int(0));
    for (std::size_t i = 0; i < sp.size(); ++i) {
      if (cur[i] == 0) continue;
      for (std::size_t j : sp.successors(i)) nxt[j] += cur[i];
    }
    std::swap(cur, nxt);
  }
  return cur[t];
}

Int count_walks(const Hypergraph& h, const Tuple& s, const Tuple& t, std::size_t ell) {
  OrderedEdgeSpace sp(h);
  return count_walks(sp, sp.require_id(s), sp.require_id(t), ell);
}

ConnectivityCertificate connectivity(const Hypergraph& h, std::size_t ell) {
  if (ell < 1) throw InputError("walks have length >= 1");
  OrderedEdgeSpace sp(h);
  if (sp.size() == 0) throw InputError("hypergraph has no edges");
  ConnectivityCertificate cert;
  cert.ell = ell;
  cert.e_vec = sp.size();
  std::vector<Int> cur(sp.size()), nxt(sp.size());
  bool first = true;
  for (std::size_t s = 0; s < sp.size(); ++s) {
    std::fill(cur.begin(), cur.end(), Int(0));
    cur[s] = 1;
    for (std::size_t step = 1; step < ell; ++step) {
      std::fill(nxt.begin(), nxt.end(), Int(0));
      for (std::size_t i = 0; i < sp.size(); ++i) {
        if (cur[i] == 0) continue;
        for (std::size_t j : sp.successors(i)) nxt[j] += cur[i];
      }
      std::swap(cur, nxt);
    }
    for (std::size_t t = 0; t < sp.size(); ++t) {
      if (first || cur[t] < cert.min_count) {
        cert.min_count = cur[t];
        cert.argmin_s = sp.tuple(s);
        cert.argmin_t = sp.tuple(t);
      }
      if (first || cur[t] > cert.max_count) cert.max_count = cur[t];
      first = false;
    }
  }
  Int npow;
  mpz_ui_pow_ui(npow.get_mpz_t(), static_cast<unsigned long>(h.n()), ell - 1);
  cert.alpha = Rat(cert.min_count * Int(static_cast<unsigned long>(cert.e_vec)), npow);
  cert.alpha.canonicalize();
  return cert;
}

TightCycle TightCycle::canonical(const std::vector<int>& cyclic) {
  if (cyclic.empty()) throw InputError("empty cycle");
  const std::size_t m = cyclic.size();
  std::vector<int> best = cyclic, cand(m);
  for (int dir = 0; dir < 2; ++dir) {
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t i = 0; i < m; ++i)
        cand[i] = dir == 0 ? cyclic[(r + i) % m] : cyclic[(r + m - i) % m];
      if (cand < best) best = cand;
    }
  }
  return TightCycle{best};
}

std::vector<Edge> TightCycle::window_sets(int k) const {
  const std::size_t ell = vertices.size();
  std::vector<Edge> out(ell);
  for (std::size_t i = 0; i < ell; ++i) {
    Edge w(k);
    for (int j = 0; j < k; ++j) w[j] = vertices[(i + j) % ell];
    std::sort(w.begin(), w.end());
    out[i] = std::move(w);
  }
  return out;
}

std::vector<std::size_t> TightCycle::edge_ids(const Hypergraph& h) const {
  std::vector<std::size_t> out;
  for (const Edge& w : window_sets(h.k())) {
    auto id = h.edge_id(w);
    if (!id) throw InputError("cycle window is not an edge");
    out.push_back(*id);
  }
  return out;
}

Walk TightCycle::traversal(int k) const {
  std::vector<int> vs = vertices;
  vs.insert(vs.end(), vertices.begin(), vertices.begin() + k);
  return Walk{k, std::move(vs)};
}

bool is_valid_cycle(const Hypergraph& h, const TightCycle& c, std::string* why) {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  const std::size_t ell = c.vertices.size();
  if (ell < static_cast<std::size_t>(h.k()) + 1) return fail("cycle shorter than k+1");
  if (!range_distinct(c.vertices, 0, ell)) return fail("repeated vertex");
  for (int v : c.vertices)
    if (v < 1 || v > h.n()) return fail("vertex out of range");
  const auto wins = c.window_sets(h.k());
  for (std::size_t i = 0; i < wins.size(); ++i)
    if (!h.is_edge(wins[i])) return fail("window " + std::to_string(i) + " is not an edge");
  return true;
}

namespace {

struct CycleDfs {
  const Hypergraph& h;
  std::size_t ell;
  std::vector<int> seq;
  std::vector<char> used;
  std::vector<TightCycle>* out;

  bool window_ok(std::size_t start) const {
    Edge w(seq.begin() + start, seq.begin() + start + h.k());
    std::sort(w.begin(), w.end());
    return h.is_edge(w);
  }

  bool wrap_ok() const {
    const int k = h.k();
    Edge w(k);
    for (std::size_t i = ell - k + 1; i < ell; ++i) {
      for (int j = 0; j < k; ++j) w[j] = seq[(i + j) % ell];
      std::sort(w.begin(), w.end());
      if (!h.is_edge(w)) return false;
    }
    return true;
  }

  void extend() {
    const std::size_t d = seq.size();
    if (d == ell) {
      if (seq[1] < seq[ell - 1] && wrap_ok()) out->push_back(TightCycle{seq});
      return;
    }
    for (int v = seq[0] + 1; v <= h.n(); ++v) {
      if (used[v]) continue;
      seq.push_back(v);
      used[v] = 1;
      if (d + 1 < static_cast<std::size_t>(h.k()) || window_ok(d + 1 - h.k())) extend();
      used[v] = 0;
      seq.pop_back();
    }
  }
};

}  // namespace

std::vector<TightCycle> enumerate_cycles(const Hypergraph& h, std::size_t ell) {
  if (ell < static_cast<std::size_t>(h.k()) + 1)
    throw InputError("tight cycles need ell >= k+1");
  if (ell > static_cast<std::size_t>(h.n())) return {};
  std::vector<TightCycle> out;
  CycleDfs dfs{h, ell, {}, std::vector<char>(h.n() + 1, 0), &out};
  for (int m = 1; m <= h.n(); ++m) {
    dfs.seq.assign(1, m);
    std::fill(dfs.used.begin(), dfs.used.end(), 0);
    dfs.used[m] = 1;
    dfs.extend();
  }
  std::sort(out.begin(), out.end());
  return out;
}

LkConstants lk_constants(int k) {
  if (k < 2) throw InputError("connecting constants need k >= 2");
  LkConstants c;
  c.ell_k = static_cast<unsigned long>(k) * (k - 1) + 2;
  // a_k = sum_{i=0}^{k-2} (i+1) * (k-1)!/i!, each term an integer.
  Int a = 0, km1_fact = 1;
  for (int j = 1; j <= k - 1; ++j) km1_fact *= j;
  for (int i = 0; i <= k - 2; ++i) {
    Int ifact = 1;
    for (int j = 1; j <= i; ++j) ifact *= j;
    a += Int(i + 1) * km1_fact / ifact;
  }
  c.a_k = a;
  return c;
}

InsertionCount insertion_walks(const Hypergraph& h, const Tuple& s, const Tuple& t,
                               const Int& budget) {
  const int k = h.k();
  if (k < 2) throw InputError("insertion construction needs k >= 2");
  OrderedEdgeSpace sp(h);
  sp.require_id(s);
  sp.require_id(t);
  const auto consts = lk_constants(k);

  // Common z-pool: N(s2..sk) ∩ N(t1..tk-1).
  std::vector<int> xs(s.begin() + 1, s.end()), xt(t.begin(), t.end() - 1);
  std::vector<Vertex> ns = h.neighborhood(xs), nt = h.neighborhood(xt);
  std::vector<Vertex> pool;
  std::set_intersection(ns.begin(), ns.end(), nt.begin(), nt.end(), std::back_inserter(pool));

  InsertionCount res;
  res.count = 0;
  res.tuples_examined = 0;
  const unsigned long x_len = static_cast<unsigned long>(k - 1) * (k - 2);
  mpz_ui_pow_ui(res.tuples_total.get_mpz_t(), static_cast<unsigned long>(h.n()), x_len);

  // Reduced sequence s2..sk x t1..tk-1 must be a (k-1)-walk in the link of z:
  // every (k-1)-window, plus z, must be an edge of h.
  std::vector<int> reduced;
  reduced.reserve(2 * (k - 1) + x_len);
  auto z_admissible = [&](Vertex z) {
    Edge probe(k);
    for (std::size_t i = 0; i + (k - 1) <= reduced.size(); ++i) {
      bool clash = false;
      for (int j = 0; j < k - 1; ++j) {
        probe[j] = reduced[i + j];
        if (probe[j] == z) clash = true;
      }
      if (clash) return false;
      probe[k - 1] = z;
      std::sort(probe.begin(), probe.end());
      for (std::size_t j = 1; j < probe.size(); ++j)
        if (probe[j] == probe[j - 1]) return false;
      if (!h.is_edge(probe)) return false;
    }
    return true;
  };

  auto full_sequence = [&](const std::vector<int>& x, const std::vector<Vertex>& zs) {
    // s1..sk, then z_i separated by k-1 x's, then t1..tk.
    std::vector<int> seq(s);
    std::size_t xi = 0;
    for (int i = 0; i < k - 1; ++i) {
      seq.push_back(zs[i]);
      if (i + 1 < k - 1)
        for (int j = 0; j < k - 1; ++j) seq.push_back(x[xi++]);
    }
    seq.insert(seq.end(), t.begin(), t.end());
    return seq;
  };

  std::vector<int> x(x_len);
  std::vector<Vertex> sx;  // S(x)
  bool done = false;
  // Odometer over all x in V^((k-1)(k-2)).
  std::vector<int> digits(x_len, 1);
  while (!done) {
    if (res.tuples_examined >= budget) {
      res.partial = true;
      break;
    }
    for (unsigned long i = 0; i < x_len; ++i) x[i] = digits[i];
    reduced.assign(xs.begin(), xs.end());
    reduced.insert(reduced.end(), x.begin(), x.end());
    reduced.insert(reduced.end(), xt.begin(), xt.end());
    sx.clear();
    for (Vertex z : pool)
      if (z_admissible(z)) sx.push_back(z);
    if (!sx.empty()) {
      Int m;
      mpz_ui_pow_ui(m.get_mpz_t(), static_cast<unsigned long>(sx.size()),
                    static_cast<unsigned long>(k - 1));
      res.count += m;
      if (res.samples.size() < 5) {
        std::vector<Vertex> zs(k - 1, sx[0]);
        if (sx.size() > 1) zs.back() = sx[1];  // exercise distinct slots when possible
        res.samples.push_back(full_sequence(x, zs));
      }
    }
    res.tuples_examined += 1;
    // advance odometer
    done = true;
    for (unsigned long i = 0; i < x_len; ++i) {
      if (digits[i] < h.n()) {
        ++digits[i];
        for (unsigned long j = 0; j < i; ++j) digits[j] = 1;
        done = false;
        break;
      }
    }
    if (x_len == 0) done = true;  // single empty tuple
  }

  const Rat alpha = h.intersecting_alpha();
  Int npow;
  mpz_ui_pow_ui(npow.get_mpz_t(), static_cast<unsigned long>(h.n()),
                consts.ell_k - static_cast<unsigned long>(k) - 1);
  res.lower_bound = rat_pow(alpha, consts.a_k.get_ui()) * Rat(npow);
  res.meets_lower_bound = !res.partial && Rat(res.count) >= res.lower_bound;
  return res;
}

}  // namespace tcd
