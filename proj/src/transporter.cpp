#include "tcd/transporter.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "tcd/errors.hpp"
#include "tcd/rng.hpp"
#include "tcd/util.hpp"

namespace tcd {

namespace {

int at(const std::vector<int>& cyc, std::size_t p) { return cyc[p % cyc.size()]; }

Edge window_at(const std::vector<int>& cyc, std::size_t k, std::size_t q) {
  Edge w(k);
  for (std::size_t j = 0; j < k; ++j) w[j] = at(cyc, q + j);
  std::sort(w.begin(), w.end());
  return w;
}

TransporterCheck fail(std::string r) { return {false, std::move(r)}; }

}  // namespace

Tuple rotate(const Tuple& t, std::size_t i) {
  if (t.empty()) return {};
  Tuple out(t.size());
  for (std::size_t j = 0; j < t.size(); ++j) out[j] = t[(i + j) % t.size()];
  return out;
}

Transporter assemble_transporter(int k, const Tuple& s, const Tuple& t, std::size_t order,
                                 std::vector<int> cyc) {
  const std::size_t kk = std::size_t(k), L = order, seg = L + 1, half = seg / 2;
  Transporter tp;
  tp.s = s;
  tp.t = t;
  tp.order = order;
  tp.cyc = std::move(cyc);
  for (std::size_t i = 0; i < kk; ++i) {
    // Sending cycle i skips the t-edges: walk edges i(L+1)..i(L+1)+h-1
    // spliced onto (i-1)(L+1)+h+1..i(L+1)-1.
    std::vector<int> snd;
    for (std::size_t j = 0; j < half; ++j) snd.push_back(at(tp.cyc, i * seg + j));
    for (std::size_t j = half + 1; j <= L; ++j)
      snd.push_back(at(tp.cyc, (i + kk - 1) * seg + j));
    // Receiving cycle i skips the s-edges: i(L+1)+h..(i+1)(L+1)-1 spliced
    // onto i(L+1)+1..i(L+1)+h-1.
    std::vector<int> rcv;
    for (std::size_t j = half; j <= L; ++j) rcv.push_back(at(tp.cyc, i * seg + j));
    for (std::size_t j = 1; j < half; ++j) rcv.push_back(at(tp.cyc, i * seg + j));
    tp.sending.push_back(TightCycle::canonical(snd));
    tp.receiving.push_back(TightCycle::canonical(rcv));
  }
  return tp;
}

TransporterCheck validate_transporter(const Hypergraph& h, const TransitionSystem& ts,
                                      const Transporter& tp) {
  const std::size_t k = std::size_t(h.k());
  const std::size_t L = tp.order, seg = L + 1, half = seg / 2, P = k * seg;
  if (k < 2) return fail("requires k >= 2");
  if (tp.s.size() != k || tp.t.size() != k) return fail("s or t has wrong arity");
  if (half < k) return fail("order too small: floor((order+1)/2) < k");
  if (tp.cyc.size() != P) return fail("cyc has wrong period");
  Edge ss = sorted_copy(tp.s), tt = sorted_copy(tp.t);
  if (!h.is_edge(ss)) return fail("s is not an ordered edge");
  if (!h.is_edge(tt)) return fail("t is not an ordered edge");
  std::vector<int> inter;
  std::set_intersection(ss.begin(), ss.end(), tt.begin(), tt.end(), std::back_inserter(inter));
  if (!inter.empty()) return fail("s and t share a vertex");
  for (int v : tp.cyc)
    if (v < 1 || v > h.n()) return fail("cyc vertex out of range");

  // (i) edge position i(L+1) carries rotate(s, i); i(L+1)+h carries rotate(t, i).
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (at(tp.cyc, i * seg + j) != tp.s[(i + j) % k])
        return fail("property (i) fails at an s-window");
      if (at(tp.cyc, i * seg + half + j) != tp.t[(i + j) % k])
        return fail("property (i) fails at a t-window");
    }
  // Every window of the closed walk is an edge.
  for (std::size_t q = 0; q < P; ++q)
    if (!h.is_edge(window_at(tp.cyc, k, q)))
      return fail("window " + std::to_string(q) + " is not an edge");
  // (ii) each segment is repeat-free.
  for (std::size_t i = 0; i < k; ++i) {
    std::set<int> seen;
    for (std::size_t j = 0; j < seg; ++j)
      if (!seen.insert(tp.cyc[i * seg + j]).second)
        return fail("segment " + std::to_string(i) + " repeats a vertex");
  }
  // (iii) distinct segments intersect only inside s ∪ t.
  std::set<int> st(ss.begin(), ss.end());
  st.insert(tt.begin(), tt.end());
  for (std::size_t i = 0; i < k; ++i) {
    std::set<int> a(tp.cyc.begin() + long(i * seg), tp.cyc.begin() + long((i + 1) * seg));
    for (std::size_t j = i + 1; j < k; ++j)
      for (std::size_t q = 0; q < seg; ++q) {
        int v = tp.cyc[j * seg + q];
        if (a.count(v) && !st.count(v)) return fail("segments share a vertex outside s ∪ t");
      }
  }

  Transporter der = assemble_transporter(int(k), tp.s, tp.t, L, tp.cyc);
  if (!tp.sending.empty() || !tp.receiving.empty()) {
    if (tp.sending != der.sending || tp.receiving != der.receiving)
      return fail("stored cycles do not match cyc");
  }
  for (const TightCycle& c : der.sending) {
    std::string why;
    if (!is_valid_cycle(h, c, &why)) return fail("sending cycle invalid: " + why);
    if (!is_compatible_cycle(h, ts, c)) return fail("sending cycle not compatible");
  }
  for (const TightCycle& c : der.receiving) {
    std::string why;
    if (!is_valid_cycle(h, c, &why)) return fail("receiving cycle invalid: " + why);
  }

  // Membership census over the walk's edges: s on k sending / 0 receiving,
  // t on 0 / k, every other walk edge on exactly 1 / 1.
  std::map<Edge, std::pair<int, int>> census;
  for (std::size_t q = 0; q < P; ++q) census[window_at(tp.cyc, k, q)];
  for (const TightCycle& c : der.sending)
    for (const Edge& w : c.window_sets(int(k))) {
      auto it = census.find(w);
      if (it == census.end()) return fail("sending cycle uses an edge outside the walk");
      ++it->second.first;
    }
  for (const TightCycle& c : der.receiving)
    for (const Edge& w : c.window_sets(int(k))) {
      auto it = census.find(w);
      if (it == census.end()) return fail("receiving cycle uses an edge outside the walk");
      ++it->second.second;
    }
  for (const auto& [w, cnt] : census) {
    std::pair<int, int> want =
        w == ss ? std::pair<int, int>{int(k), 0}
                : (w == tt ? std::pair<int, int>{0, int(k)} : std::pair<int, int>{1, 1});
    if (cnt != want)
      return fail("membership census violated at an edge (got " + std::to_string(cnt.first) +
                  " sending / " + std::to_string(cnt.second) + " receiving)");
  }
  return {true, ""};
}

namespace {

// Backtracking search over the free positions of the transporter template.
class TransporterSearch {
 public:
  TransporterSearch(const Hypergraph& h, const TransitionSystem& ts, const Tuple& s,
                    const Tuple& t, std::size_t order, std::size_t m_max, std::uint64_t seed,
                    std::size_t budget)
      : h_(h),
        ts_(ts),
        s_(s),
        t_(t),
        k_(std::size_t(h.k())),
        L_(order),
        seg_(order + 1),
        half_((order + 1) / 2),
        P_(k_ * seg_),
        m_max_(m_max),
        budget_(budget),
        rng_(seed) {}

  std::vector<Transporter> run() {
    if (m_max_ == 0) return {};
    if (half_ < k_) return {};  // s- and t-windows would overlap: no transporter exists
    const std::size_t free_total = k_ * (seg_ - 2 * k_);
    if (std::size_t(h_.n()) < 2 * k_ + free_total) return {};  // not enough spare vertices

    cyc_.assign(P_, 0);
    for (std::size_t i = 0; i < k_; ++i)
      for (std::size_t j = 0; j < k_; ++j) {
        cyc_[i * seg_ + j] = s_[(i + j) % k_];
        cyc_[i * seg_ + half_ + j] = t_[(i + j) % k_];
      }
    spl_a_.resize(k_);
    spl_b_.resize(k_);
    spl_pivot_.resize(k_);
    for (std::size_t i = 0; i < k_; ++i) {
      spl_a_[i] = (i * seg_ + half_ - 1) % P_;
      spl_b_[i] = ((i + k_ - 1) * seg_ + half_ + 1) % P_;
      Edge piv(k_ - 1);
      for (std::size_t j = 0; j + 1 < k_; ++j) piv[j] = t_[(i + j) % k_];
      std::sort(piv.begin(), piv.end());
      spl_pivot_[i] = piv;
    }
    if (!initial_checks()) return {};

    std::set<int> st(s_.begin(), s_.end());
    st.insert(t_.begin(), t_.end());
    std::vector<int> base;
    for (int v = 1; v <= h_.n(); ++v)
      if (!st.count(v)) base.push_back(v);
    for (std::size_t p = 0; p < P_; ++p)
      if (cyc_[p] == 0) {
        slots_.push_back(p);
        std::vector<int> c = base;
        rng_.shuffle(c);
        cand_.push_back(std::move(c));
      }

    dfs(0);
    return std::move(out_);
  }

 private:
  bool window_complete(std::size_t q) const {
    for (std::size_t j = 0; j < k_; ++j)
      if (at(cyc_, q + j) == 0) return false;
    return true;
  }

  bool window_is_edge(std::size_t q) const { return h_.is_edge(window_at(cyc_, k_, q)); }

  bool step_exempt(std::size_t q) const {
    const std::size_t r = q % seg_;
    return r == half_ - 1 || r == half_;  // steps into / out of a t-window
  }

  // Step q -> q+1, both windows known to be edges.
  bool step_ok(std::size_t q) const {
    Edge piv(k_ - 1);
    for (std::size_t j = 0; j + 1 < k_; ++j) piv[j] = at(cyc_, q + 1 + j);
    std::sort(piv.begin(), piv.end());
    std::size_t e = *h_.edge_id(window_at(cyc_, k_, q));
    std::size_t f = *h_.edge_id(window_at(cyc_, k_, (q + 1) % P_));
    return ts_.adjacent(piv, e, f);
  }

  // Splice of sending cycle i: windows at spl_a_[i] and spl_b_[i] share the
  // (k-1)-set spl_pivot_[i] and must be adjacent in its transition graph.
  bool splice_ok(std::size_t i) const {
    std::size_t e = *h_.edge_id(window_at(cyc_, k_, spl_a_[i]));
    std::size_t f = *h_.edge_id(window_at(cyc_, k_, spl_b_[i]));
    return ts_.adjacent(spl_pivot_[i], e, f);
  }

  bool splices_ok() const {
    for (std::size_t i = 0; i < k_; ++i)
      if (window_complete(spl_a_[i]) && window_complete(spl_b_[i]) && !splice_ok(i)) return false;
    return true;
  }

  bool initial_checks() const {
    for (std::size_t q = 0; q < P_; ++q)
      if (window_complete(q) && !window_is_edge(q)) return false;
    for (std::size_t q = 0; q < P_; ++q) {
      if (step_exempt(q)) continue;
      if (window_complete(q) && window_complete((q + 1) % P_) && !step_ok(q)) return false;
    }
    return splices_ok();
  }

  // Checks triggered by filling position p: windows covering p, steps whose
  // two windows just both completed, and the splice constraints.
  bool place_checks(std::size_t p) const {
    for (std::size_t d = 0; d < k_; ++d) {
      std::size_t q = (p + P_ - d) % P_;
      if (window_complete(q) && !window_is_edge(q)) return false;
    }
    for (std::size_t d = 0; d <= k_; ++d) {
      std::size_t q = (p + P_ - d) % P_;
      if (step_exempt(q)) continue;
      if (window_complete(q) && window_complete((q + 1) % P_) && !step_ok(q)) return false;
    }
    return splices_ok();
  }

  void dfs(std::size_t depth) {
    if (stop_) return;
    if (depth == slots_.size()) {
      Transporter tp = assemble_transporter(int(k_), s_, t_, L_, cyc_);
      if (validate_transporter(h_, ts_, tp).ok) {
        out_.push_back(std::move(tp));
        if (out_.size() >= m_max_) stop_ = true;
      }
      return;
    }
    const std::size_t p = slots_[depth];
    for (int v : cand_[depth]) {
      if (stop_) return;
      if (used_.count(v)) continue;
      if (++nodes_ > budget_) {
        stop_ = true;
        return;
      }
      cyc_[p] = v;
      used_.insert(v);
      if (place_checks(p)) dfs(depth + 1);
      used_.erase(v);
      cyc_[p] = 0;
    }
  }

  const Hypergraph& h_;
  const TransitionSystem& ts_;
  Tuple s_, t_;
  std::size_t k_, L_, seg_, half_, P_, m_max_, budget_;
  SeededRng rng_;
  std::vector<int> cyc_;
  std::vector<std::size_t> slots_, spl_a_, spl_b_;
  std::vector<Edge> spl_pivot_;
  std::vector<std::vector<int>> cand_;
  std::set<int> used_;
  std::vector<Transporter> out_;
  std::size_t nodes_ = 0;
  bool stop_ = false;
};

}  // namespace

std::vector<Transporter> find_transporters(const Hypergraph& h, const TransitionSystem& ts,
                                           const Tuple& s, const Tuple& t, std::size_t order,
                                           std::size_t m_max, std::uint64_t seed,
                                           std::size_t node_budget_per) {
  const std::size_t k = std::size_t(h.k());
  if (s.size() != k || t.size() != k) throw InputError("transporter endpoints have wrong arity");
  Edge ss = sorted_copy(s), tt = sorted_copy(t);
  if (!h.is_edge(ss) || !h.is_edge(tt))
    throw InputError("transporter endpoints must be ordered edges");
  std::vector<int> inter;
  std::set_intersection(ss.begin(), ss.end(), tt.begin(), tt.end(), std::back_inserter(inter));
  if (!inter.empty()) throw InputError("transporter endpoints must be disjoint");
  if (order < 2) throw InputError("transporter order must be at least 2");

  TransporterSearch search(h, ts, s, t, order, m_max, seed,
                           node_budget_per * std::max<std::size_t>(1, m_max));
  return search.run();
}

void apply_transporter(WeightFunction& w, const Transporter& tp, const Rat& amount) {
  const unsigned long k = static_cast<unsigned long>(tp.s.size());
  if (k == 0) throw InputError("transporter has empty endpoints");
  Rat unit = amount / Rat(k);
  for (const TightCycle& c : tp.sending) w.add(c, -unit);
  for (const TightCycle& c : tp.receiving) w.add(c, unit);
}

}  // namespace tcd
