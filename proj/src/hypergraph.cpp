#include "tcd/hypergraph.hpp"

#include <algorithm>

#include "tcd/errors.hpp"
#include "tcd/rng.hpp"

namespace tcd {

Hypergraph::Hypergraph(int n, int k, std::vector<Edge> edges) : n_(n), k_(k) {
  if (k < 1) throw InputError("uniformity k must be >= 1");
  if (n < k) throw InputError("need n >= k");
  for (auto& e : edges) {
    std::sort(e.begin(), e.end());
    check_edge(e);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  edge_ids_.reserve(edges_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) edge_ids_.emplace(edges_[i], i);
}

void Hypergraph::check_edge(const Edge& e) const {
  if (static_cast<int>(e.size()) != k_) throw InputError("edge arity != k");
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 1 || e[i] > n_) throw InputError("edge vertex out of range");
    if (i > 0 && e[i] == e[i - 1]) throw InputError("edge has a repeated vertex");
  }
}

std::optional<std::size_t> Hypergraph::edge_id(const Edge& sorted_e) const {
  auto it = edge_ids_.find(sorted_e);
  if (it == edge_ids_.end()) return std::nullopt;
  return it->second;
}

std::vector<Vertex> Hypergraph::neighborhood(const std::vector<int>& x) const {
  if (static_cast<int>(x.size()) != k_ - 1) throw InputError("neighborhood wants a (k-1)-set");
  Edge probe = sorted_copy(x);
  for (std::size_t i = 1; i < probe.size(); ++i)
    if (probe[i] == probe[i - 1]) throw InputError("(k-1)-set has a repeated vertex");
  std::vector<Vertex> out;
  Edge e(k_);
  for (Vertex v = 1; v <= n_; ++v) {
    if (std::binary_search(probe.begin(), probe.end(), v)) continue;
    e.assign(probe.begin(), probe.end());
    e.insert(std::lower_bound(e.begin(), e.end(), v), v);
    if (is_edge(e)) out.push_back(v);
  }
  return out;
}

std::size_t Hypergraph::codegree(const std::vector<int>& x) const {
  return neighborhood(x).size();
}

std::size_t Hypergraph::min_codegree() const {
  std::size_t best = edge_count() == 0 && k_ == 1 ? 0 : static_cast<std::size_t>(n_);
  bool any = false;
  for_each_subset(n_, k_ - 1, [&](const std::vector<int>& x) {
    std::size_t d = codegree(x);
    best = any ? std::min(best, d) : d;
    any = true;
  });
  return any ? best : 0;
}

std::size_t Hypergraph::max_codegree() const {
  std::size_t best = 0;
  for_each_subset(n_, k_ - 1, [&](const std::vector<int>& x) { best = std::max(best, codegree(x)); });
  return best;
}

bool Hypergraph::is_alpha_intersecting(const Rat& alpha) const {
  return intersecting_alpha() >= alpha;
}

Rat Hypergraph::intersecting_alpha() const {
  // min over ordered-irrelevant pairs {x,y} (x = y included) of |N(x)∩N(y)|.
  std::vector<std::vector<int>> sets;
  for_each_subset(n_, k_ - 1, [&](const std::vector<int>& x) { sets.push_back(x); });
  std::vector<std::vector<Vertex>> nbhd(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) nbhd[i] = neighborhood(sets[i]);
  std::size_t best = static_cast<std::size_t>(n_) + 1;
  std::vector<Vertex> tmp;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i; j < sets.size(); ++j) {
      tmp.clear();
      std::set_intersection(nbhd[i].begin(), nbhd[i].end(), nbhd[j].begin(), nbhd[j].end(),
                            std::back_inserter(tmp));
      best = std::min(best, tmp.size());
    }
  }
  if (best > static_cast<std::size_t>(n_)) best = 0;  // no (k-1)-sets at all
  return Rat(static_cast<unsigned long>(best), static_cast<unsigned long>(n_));
}

Link link_of(const Hypergraph& h, Vertex z) {
  if (h.k() < 3) throw InputError("link needs k >= 3: links are (k-1)-uniform");
  if (z < 1 || z > h.n()) throw InputError("link vertex out of range");
  std::vector<int> to_link(h.n() + 1, 0), from_link(h.n(), 0);
  int next = 0;
  for (Vertex v = 1; v <= h.n(); ++v) {
    if (v == z) continue;
    to_link[v] = ++next;
    from_link[next] = v;  // 1-based, like the link's vertex labels
  }
  std::vector<Edge> edges;
  for (const Edge& e : h.edges()) {
    if (!std::binary_search(e.begin(), e.end(), z)) continue;
    Edge f;
    for (int v : e)
      if (v != z) f.push_back(to_link[v]);
    edges.push_back(std::move(f));
  }
  from_link.resize(next + 1);
  return Link{Hypergraph(h.n() - 1, h.k() - 1, std::move(edges)), std::move(to_link),
              std::move(from_link)};
}

Hypergraph gen_complete(int n, int k) {
  std::vector<Edge> edges;
  for_each_subset(n, k, [&](const std::vector<int>& e) { edges.push_back(e); });
  return Hypergraph(n, k, std::move(edges));
}

Hypergraph gen_random_min_codegree(int n, int k, int delta_target, std::uint64_t seed,
                                   int max_attempts) {
  if (k < 2) throw InputError("random generator needs k >= 2");
  if (delta_target < 0 || delta_target > n - k + 1)
    throw InputError("delta_target out of range (max possible codegree is n-k+1)");
  SeededRng master(seed);
  double p = std::min(1.0, std::max(0.2, 1.5 * static_cast<double>(delta_target) /
                                             static_cast<double>(n - k + 1)));
  std::size_t best_delta = 0;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    SeededRng rng = master.child(static_cast<std::uint64_t>(attempt));
    std::vector<Edge> edges;
    for_each_subset(n, k, [&](const std::vector<int>& e) {
      if (rng.bernoulli(p)) edges.push_back(e);
    });
    Hypergraph h(n, k, std::move(edges));
    std::size_t d = h.min_codegree();
    best_delta = std::max(best_delta, d);
    if (d >= static_cast<std::size_t>(delta_target)) return h;
    p = std::min(1.0, p * 1.25 + 0.02);
  }
  throw GenerationError("min-codegree target " + std::to_string(delta_target) +
                        " not met in " + std::to_string(max_attempts) +
                        " attempts (best " + std::to_string(best_delta) + ")");
}

LabeledExample gen_lowerbound_example(int n, int k, double eps, double zeta,
                                      std::uint64_t seed) {
  if (k < 2) throw InputError("example construction needs k >= 2");
  if (n < 2 * k) throw InputError("example construction needs n >= 2k");
  if (eps < 0 || eps > 1 || zeta < 0) throw InputError("eps in [0,1] and zeta >= 0 required");
  const int half = n / 2;
  std::vector<Vertex> side_a(half);
  for (int i = 0; i < half; ++i) side_a[i] = i + 1;

  const double p = 2.0 * (1.0 + zeta) * eps;
  SeededRng rng(seed);
  std::vector<Edge> edges;
  std::vector<int> kept_class;  // parallel to edges
  for_each_subset(n, k, [&](const std::vector<int>& e) {
    int in_a = 0;
    for (int v : e)
      if (v <= half) ++in_a;
    if (in_a == 0 || in_a == 2) {
      if (rng.bernoulli(std::min(1.0, p))) {
        edges.push_back(e);
        kept_class.push_back(in_a);
      }
    } else {
      edges.push_back(e);
      kept_class.push_back(in_a);
    }
  });
  Hypergraph base(n, k, edges);  // same lex order as generated: ids line up
  LabeledExample ex{std::move(base), std::move(side_a), {}, {}};
  for (std::size_t id = 0; id < edges.size(); ++id) {
    ex.classes[kept_class[id]].push_back(id);
    if (kept_class[id] == 0 || kept_class[id] == 2) ex.h02.push_back(id);
  }
  return ex;
}

}  // namespace tcd
