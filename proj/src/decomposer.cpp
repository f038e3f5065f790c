#include "tcd/decomposer.hpp"

#include <mpfr.h>

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>

#include "tcd/errors.hpp"
#include "tcd/rng.hpp"
#include "tcd/simplex.hpp"
#include "tcd/transport.hpp"
#include "tcd/transporter.hpp"
#include "tcd/util.hpp"

namespace tcd {

namespace {

std::string tuple_str(const Tuple& t) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
  os << ")";
  return os.str();
}

std::vector<Tuple> orientations(const Edge& e) {
  Tuple t = e;  // edges are stored sorted, so this walks all k! permutations
  std::vector<Tuple> out;
  do {
    out.push_back(t);
  } while (std::next_permutation(t.begin(), t.end()));
  return out;
}

// Measured stats at one certified length; nullopt when the report lacks it.
std::optional<Rat> zeta_at(const CertifyReport& cert, std::size_t ell) {
  for (const auto& s : cert.lengths)
    if (s.ell == ell) return s.zeta;
  return std::nullopt;
}

std::optional<Rat> alpha_at(const CertifyReport& cert, std::size_t ell) {
  for (const auto& s : cert.lengths)
    if (s.ell == ell) return s.alpha_compat;
  return std::nullopt;
}

HypothesisFlag mixing_flag(const Hypergraph& h, int ell, const Rat& mu, Rat* alpha_out,
                           int* ell0_out) {
  HypothesisFlag f;
  if (!(mu > 0) || !(mu < 1) || h.edge_count() == 0) {
    f.detail = "needs mu in (0,1) and a nonempty edge set";
    return f;
  }
  const std::size_t ell0 = std::size_t(h.k()) + 1;
  ConnectivityCertificate cc = connectivity(h, ell0);
  *alpha_out = cc.alpha;
  *ell0_out = int(ell0);
  f.applicable = true;
  if (cc.alpha <= 0) {
    f.detail = "not connected at ell0 = " + std::to_string(ell0);
    return f;
  }
  Rat ratio = Rat(static_cast<unsigned long>(ell0)) / cc.alpha;
  if (ratio <= 1) {
    f.satisfied = true;
    f.detail = "ell0/alpha <= 1, left side nonpositive";
    return f;
  }
  // All factors positive; round every step up so the bound never flatters.
  mpfr_t r_, lg_, m_, lhs_;
  mpfr_inits2(128, r_, lg_, m_, lhs_, (mpfr_ptr)0);
  mpfr_set_q(r_, ratio.get_mpq_t(), MPFR_RNDU);
  mpfr_log(lg_, r_, MPFR_RNDU);
  Rat inv_mu = Rat(1) / mu;
  mpfr_set_q(m_, inv_mu.get_mpq_t(), MPFR_RNDU);
  mpfr_log(m_, m_, MPFR_RNDU);
  mpfr_mul(lhs_, r_, lg_, MPFR_RNDU);
  mpfr_mul(lhs_, lhs_, m_, MPFR_RNDU);
  mpfr_mul_ui(lhs_, lhs_, 180UL * static_cast<unsigned long>(h.k()), MPFR_RNDU);
  f.satisfied = mpfr_cmp_si(lhs_, long(ell)) <= 0;
  char buf[64];
  mpfr_snprintf(buf, sizeof buf, "%.6Rg", lhs_);
  f.detail = std::string("upper bound ") + buf + " vs ell = " + std::to_string(ell);
  mpfr_clears(r_, lg_, m_, lhs_, (mpfr_ptr)0);
  return f;
}

}  // namespace

std::vector<std::size_t> designated_lengths(int ell) {
  if (ell < 1) throw InputError("ell must be positive");
  std::set<std::size_t> s{std::size_t(ell + 2) / 2, std::size_t(ell + 1) / 2 + 1,
                          std::size_t(ell)};
  return std::vector<std::size_t>(s.begin(), s.end());
}

WeightFunction initial_weights(const Hypergraph& h, const TransitionSystem& ts, int ell) {
  if (ell < h.k() + 1) throw InputError("ell must be at least k+1");
  std::vector<TightCycle> cycles = enumerate_compatible_cycles(h, ts, std::size_t(ell));
  if (cycles.empty())
    throw PipelineAbort("no compatible cycles of length " + std::to_string(ell));
  WeightFunction w(h.k(), std::size_t(ell));
  Rat w0 = Rat(static_cast<unsigned long>(h.edge_count())) /
           (Rat(ell) * Rat(static_cast<unsigned long>(cycles.size())));
  for (const TightCycle& c : cycles) w.set(c, w0);
  return w;
}

std::vector<Rat> edge_deviation(const Hypergraph& h, const WeightFunction& w) {
  std::vector<Rat> xi = w.edge_sums(h);
  for (Rat& x : xi) x -= 1;
  return xi;
}

RebalanceStats rebalance(const Hypergraph& h, const TransitionSystem& ts, WeightFunction& w,
                         int ell, std::size_t m_cap, std::uint64_t seed,
                         std::size_t node_budget_per) {
  if (ell < 4) throw InputError("adjustment requires ell >= 4");
  if (m_cap == 0) throw InputError("m_cap must be positive");
  std::vector<Rat> xi = edge_deviation(h, w);
  Digraph dg = disjointness_digraph(h);
  BalancedFlow bal = balance_flow(dg, xi, 2);

  RebalanceStats st;
  st.beta = bal.beta;
  st.cap = bal.cap;
  st.within_cap = bal.within_cap;

  SeededRng root(seed);
  std::size_t min_found = std::size_t(-1);
  std::size_t arc_idx = 0;
  for (const auto& [arc, eta] : bal.eta) {
    if (eta <= 0) continue;
    ++st.arcs_routed;
    if (eta > st.max_flow) st.max_flow = eta;
    SeededRng arc_rng = root.child(arc_idx++);
    // Search every orientation pair first: a pair that admits no transporter
    // forfeits its share to the arc's remaining pairs (conservation needs
    // only equal splitting within each pair that carries weight), and the
    // arc aborts only when every orientation comes up empty.
    std::vector<std::vector<Transporter>> batches;
    std::size_t nonempty = 0;
    std::string first_empty;
    std::size_t pair_idx = 0;
    for (const Tuple& su : orientations(h.edge(arc.first)))
      for (const Tuple& tv : orientations(h.edge(arc.second))) {
        SeededRng pair_rng = arc_rng.child(pair_idx++);
        std::vector<Transporter> found = find_transporters(
            h, ts, su, tv, std::size_t(ell), m_cap, pair_rng.next(), node_budget_per);
        if (found.empty() && first_empty.empty())
          first_empty = tuple_str(su) + " -> " + tuple_str(tv);
        if (!found.empty()) ++nonempty;
        batches.push_back(std::move(found));
      }
    if (nonempty == 0)
      throw PipelineAbort("no order-" + std::to_string(ell) +
                          " transporter for any orientation of " + first_empty);
    Rat share = eta / Rat(static_cast<unsigned long>(nonempty));
    for (const std::vector<Transporter>& found : batches) {
      if (found.empty()) {
        ++st.pairs_skipped;
        continue;
      }
      min_found = std::min(min_found, found.size());
      Rat amount = share / Rat(static_cast<unsigned long>(found.size()));
      for (const Transporter& tp : found) {
        apply_transporter(w, tp, amount);
        ++st.transporters_applied;
      }
      ++st.pairs_routed;
    }
  }
  st.min_found = min_found == std::size_t(-1) ? 0 : min_found;
  return st;
}

Decomposition adjust(const Hypergraph& h, const TransitionSystem& ts, const PipelineConfig& cfg,
                     const CertifyReport* cert) {
  WeightFunction w = initial_weights(h, ts, cfg.ell);
  RebalanceStats st = rebalance(h, ts, w, cfg.ell, cfg.m_cap, cfg.seed, cfg.node_budget_per);
  DecompositionReport rep = verify(h, w, cfg.ell, cfg.mu, cfg.r, &ts, cert);
  rep.arcs_routed = st.arcs_routed;
  rep.pairs_routed = st.pairs_routed;
  rep.pairs_skipped = st.pairs_skipped;
  rep.transporters_applied = st.transporters_applied;
  rep.transporter_min_found = st.min_found;
  rep.max_arc_flow = st.max_flow;
  rep.flow_beta = st.beta;
  rep.flow_cap = st.cap;
  rep.flow_within_cap = st.within_cap;
  rep.runs_averaged = 1;
  if (cert && cfg.r >= 1) {
    // The proof bounds the per-arc transporter count by the walk-count
    // tolerances at the two connecting lengths; the certification report
    // carries those tolerances measured exactly, so plug them in where the
    // asymptotic argument uses (1 - zeta/2)^len.
    const unsigned long c1 = static_cast<unsigned long>(cfg.ell + 2) / 2;
    const unsigned long c2 = static_cast<unsigned long>(cfg.ell + 1) / 2;
    std::optional<Rat> z1 = zeta_at(*cert, c1), z2 = zeta_at(*cert, c2 + 1);
    if (z1 && z2) {
      Int kf;
      mpz_fac_ui(kf.get_mpz_t(), static_cast<unsigned long>(h.k()));
      Rat evec = Rat(kf) * Rat(static_cast<unsigned long>(h.edge_count()));
      Rat rr(static_cast<unsigned long>(cfg.r));
      Rat dn(static_cast<unsigned long>(h.min_codegree()));
      Rat nn(static_cast<unsigned long>(h.n()));
      // Each factor of the lower bound clamps at 0: a defect >= 1 or a
      // codegree below k*ell makes the guarantee vacuous, and clamping per
      // factor keeps two negative factors from flipping the product positive.
      Rat lo1 = *z1 < 1 ? Rat(1) - *z1 : Rat(0);
      Rat lo2 = *z2 < 1 ? Rat(1) - *z2 : Rat(0);
      Rat dfac = dn - Rat(static_cast<unsigned long>(h.k()) *
                          static_cast<unsigned long>(cfg.ell));
      if (dfac < 0) dfac = 0;
      Rat f1lo = lo1 * rat_pow(rr, c1 - 1) / evec;
      Rat f2lo = lo2 * rat_pow(rr, c2) / evec;
      rep.paper_m_lower = rat_pow(dfac * f1lo * f2lo, static_cast<unsigned long>(h.k()));
      Rat f1hi = (Rat(1) + *z1) * rat_pow(rr, c1 - 1) / evec;
      Rat f2hi = (Rat(1) + *z2) * rat_pow(rr, c2) / evec;
      rep.paper_m_upper = Rat(2 * static_cast<unsigned long>(h.k()) *
                              static_cast<unsigned long>(cfg.ell)) *
                          nn * rat_pow(nn * f1hi * f2hi, static_cast<unsigned long>(h.k() - 1));
      rep.paper_bounds_applicable = true;
    }
  }
  return {std::move(w), std::move(rep), {}};
}

Decomposition average_decompositions(const Hypergraph& h, const PipelineConfig& cfg,
                                     std::size_t runs) {
  if (runs < 1) throw InputError("need at least one run");
  SeededRng root(cfg.seed);
  WeightFunction avg(h.k(), std::size_t(cfg.ell));
  std::vector<RunSummary> summaries;
  Rat inv = Rat(1) / Rat(static_cast<unsigned long>(runs));
  for (std::size_t i = 0; i < runs; ++i) {
    // An aborted run (failed certification or a stuck transporter arc) is
    // resampled with fresh seeds up to cfg.run_retries extra tries.
    SeededRng run_rng = root.child(i);
    std::optional<Decomposition> run;
    CertifyReport cert;
    const CertifyReport* certp = nullptr;
    PipelineConfig rc = cfg;
    for (std::size_t attempt = 0;; ++attempt) {
      std::uint64_t cert_seed = run_rng.next();
      rc.seed = run_rng.next();
      try {
        std::optional<TransitionSystem> ts;
        certp = nullptr;
        if (cfg.r == 0) {
          ts = TransitionSystem::full(h);
        } else {
          CertifiedSystem cs = certify_system(h, cfg.r, designated_lengths(cfg.ell), cert_seed,
                                              int(cfg.certify_attempts));
          if (!cs.system)
            throw PipelineAbort("transition-system certification failed on run " +
                                std::to_string(i) + " after " +
                                std::to_string(cs.report.attempts) + " attempts");
          ts = std::move(cs.system);
          cert = std::move(cs.report);
          certp = &cert;
        }
        run = adjust(h, *ts, rc, certp);
        break;
      } catch (const PipelineAbort&) {
        if (attempt >= cfg.run_retries) throw;
      }
    }
    Decomposition& d = *run;
    for (const auto& [c, wt] : d.weights.entries()) avg.add(c, wt * inv);

    RunSummary s;
    s.run = i;
    s.adjust_seed = rc.seed;
    s.certify_attempts = certp ? cert.attempts : 0;
    if (certp) {
      if (auto z = zeta_at(cert, std::size_t(cfg.ell))) s.zeta = *z;
      if (auto a = alpha_at(cert, std::size_t(cfg.ell))) s.alpha_compat = *a;
    }
    s.min_weight = d.report.min_weight;
    s.max_weight = d.report.max_weight;
    s.exact_cover = d.report.is_exact_cover;
    s.nonnegative = d.report.nonnegative;
    s.adjust_hypothesis = d.report.adjust_hypothesis.satisfied;
    s.mixing_hypothesis = d.report.mixing_hypothesis.satisfied;
    summaries.push_back(std::move(s));
  }
  DecompositionReport rep = verify(h, avg, cfg.ell, cfg.mu, cfg.r, nullptr, nullptr);
  rep.runs_averaged = runs;
  return {std::move(avg), std::move(rep), std::move(summaries)};
}

DecompositionReport verify(const Hypergraph& h, const WeightFunction& w, int ell, const Rat& mu,
                           int r, const TransitionSystem* ts, const CertifyReport* cert) {
  if (w.k() != h.k()) throw InputError("weight function arity mismatch");
  if (w.ell() != std::size_t(ell)) throw InputError("weight function is for a different ell");
  DecompositionReport rep;
  rep.n = h.n();
  rep.k = h.k();
  rep.ell = ell;
  rep.r = r;
  rep.mu = mu;
  rep.support_size = w.support_size();

  rep.edge_sums.assign(h.edge_count(), Rat(0));
  bool first = true;
  for (const auto& [c, wt] : w.entries()) {
    std::string why;
    if (c.length() != std::size_t(ell) || !is_valid_cycle(h, c, &why)) {
      rep.support_valid = false;
      ++rep.invalid_support;
      continue;
    }
    for (std::size_t e : c.edge_ids(h)) rep.edge_sums[e] += wt;
    if (first || wt < rep.min_weight) rep.min_weight = wt;
    if (first || wt > rep.max_weight) rep.max_weight = wt;
    first = false;
    rep.total_weight += wt;
  }
  for (std::size_t e = 0; e < h.edge_count(); ++e)
    if (rep.edge_sums[e] != 1) rep.offending_edges.push_back(e);
  rep.is_exact_cover = rep.offending_edges.empty() && rep.support_valid;
  rep.nonnegative = first || rep.min_weight >= 0;

  std::vector<Rat> dom;
  if (ts) {
    for (const TightCycle& c : enumerate_compatible_cycles(h, *ts, std::size_t(ell)))
      dom.push_back(w.at(c));
    rep.envelope_domain = "compatible-cycles";
  } else {
    for (const auto& [c, wt] : w.entries()) dom.push_back(wt);
    rep.envelope_domain = "support-cycles";
  }
  const Rat e2 = Rat(2) * Rat(static_cast<unsigned long>(h.edge_count()));
  if (r >= 1) {
    Rat re = rat_pow(Rat(static_cast<unsigned long>(r)), static_cast<unsigned long>(ell));
    rep.r_envelope.applicable = true;
    rep.r_envelope.lo = (Rat(1) - mu) * e2 / re;
    rep.r_envelope.hi = (Rat(1) + mu) * e2 / re;
    for (const Rat& x : dom) {
      ++rep.r_envelope.checked;
      if (x >= rep.r_envelope.lo && x <= rep.r_envelope.hi) ++rep.r_envelope.inside;
    }
  }
  const std::size_t dmin = h.min_codegree(), dmax = h.max_codegree();
  if (dmin >= 1) {
    rep.theorem_envelope.applicable = true;
    rep.theorem_envelope.lo =
        (Rat(1) - mu) * e2 /
        rat_pow(Rat(static_cast<unsigned long>(dmax)), static_cast<unsigned long>(ell));
    rep.theorem_envelope.hi =
        (Rat(1) + mu) * e2 /
        rat_pow(Rat(static_cast<unsigned long>(dmin)), static_cast<unsigned long>(ell));
    for (const Rat& x : dom) {
      ++rep.theorem_envelope.checked;
      if (x >= rep.theorem_envelope.lo && x <= rep.theorem_envelope.hi)
        ++rep.theorem_envelope.inside;
    }
  }

  rep.mixing_hypothesis = mixing_flag(h, ell, mu, &rep.alpha_used, &rep.ell0_used);
  if (cert && mu > 0 && !cert->lengths.empty()) {
    if (auto zb = zeta_at(*cert, std::size_t(ell))) rep.zeta_used = *zb;
    // The hypothesis's zeta posits a count defect of at most (1 - zeta)^len
    // at every certified length; recover the largest zeta all measured
    // defects admit. Roots round up and the subtraction rounds down, so the
    // recovered zeta is never overstated and the flag never flatters.
    mpfr_t zp_, tmp_, lhs_;
    mpfr_inits2(128, zp_, tmp_, lhs_, (mpfr_ptr)0);
    mpfr_set_ui(zp_, 1, MPFR_RNDD);
    bool vacuous = false;
    for (const auto& s : cert->lengths) {
      if (s.zeta >= 1) {
        vacuous = true;
        break;
      }
      if (s.zeta == 0) continue;  // a zero defect admits any zeta <= 1
      mpfr_set_q(tmp_, s.zeta.get_mpq_t(), MPFR_RNDU);
      mpfr_rootn_ui(tmp_, tmp_, static_cast<unsigned long>(s.ell), MPFR_RNDU);
      mpfr_ui_sub(tmp_, 1, tmp_, MPFR_RNDD);
      if (mpfr_cmp(tmp_, zp_) < 0) mpfr_set(zp_, tmp_, MPFR_RNDD);
    }
    rep.adjust_hypothesis.applicable = true;
    if (vacuous || mpfr_sgn(zp_) <= 0) {
      rep.adjust_hypothesis.satisfied = false;
      rep.adjust_hypothesis.detail =
          "a certified length has count defect >= 1; no positive zeta admissible";
    } else {
      // lhs = ell (1 - zeta/2)^(ell+1), every step rounded up.
      mpfr_div_ui(tmp_, zp_, 2, MPFR_RNDD);
      mpfr_ui_sub(lhs_, 1, tmp_, MPFR_RNDU);
      mpfr_pow_ui(lhs_, lhs_, static_cast<unsigned long>(ell + 1), MPFR_RNDU);
      mpfr_mul_ui(lhs_, lhs_, static_cast<unsigned long>(ell), MPFR_RNDU);
      Rat dd = Rat(static_cast<unsigned long>(h.min_codegree())) /
               Rat(static_cast<unsigned long>(h.n()));
      Rat rhs = rat_pow(dd, static_cast<unsigned long>(h.k() + 1)) * mu /
                Rat(static_cast<unsigned long>(400 * h.k()));
      rep.adjust_hypothesis.satisfied = mpfr_cmp_q(lhs_, rhs.get_mpq_t()) <= 0;
      char zb_[64], lb_[64];
      mpfr_snprintf(zb_, sizeof zb_, "%.4Rg", zp_);
      mpfr_snprintf(lb_, sizeof lb_, "%.6Rg", lhs_);
      rep.adjust_hypothesis.detail = std::string("zeta >= ") + zb_ +
                                     " from certified defects; upper bound " + lb_ +
                                     " vs " + rat_str(rhs);
    }
    mpfr_clears(zp_, tmp_, lhs_, (mpfr_ptr)0);
  }
  return rep;
}

OracleResult lp_oracle(const Hypergraph& h, int ell, std::int64_t budget_ms) {
  if (ell < 1) throw InputError("ell must be positive");
  OracleResult res(h.k(), std::size_t(ell));
  std::vector<TightCycle> cycles;
  if (ell >= h.k() + 1) cycles = enumerate_cycles(h, std::size_t(ell));
  res.cycle_count = cycles.size();
  const std::size_t m = h.edge_count();
  if (m == 0) {
    res.status = OracleStatus::feasible;
    res.note = "no edges, vacuously decomposed";
    return res;
  }
  std::vector<std::vector<Rat>> cols(cycles.size(), std::vector<Rat>(m, Rat(0)));
  for (std::size_t j = 0; j < cycles.size(); ++j)
    for (std::size_t e : cycles[j].edge_ids(h)) cols[j][e] = 1;
  std::vector<Rat> rhs(m, Rat(1));
  Phase1Result ph = phase1_simplex(cols, rhs, budget_ms);
  res.pivots = ph.pivots;
  if (!ph.finished) {
    res.status = OracleStatus::inconclusive;
    res.note = "time budget exhausted after " + std::to_string(ph.pivots) + " pivots";
    return res;
  }
  if (ph.objective == 0) {
    res.status = OracleStatus::feasible;
    for (std::size_t j = 0; j < cycles.size(); ++j)
      if (ph.primal[j] != 0) res.weights.set(cycles[j], ph.primal[j]);
    return res;
  }
  // Farkas direction: y with sum_e y_e < 0, sum_{e in C} y_e >= 0 for all C.
  res.dual.assign(m, Rat(0));
  Rat total(0);
  for (std::size_t i = 0; i < m; ++i) {
    res.dual[i] = -ph.dual[i];
    total += res.dual[i];
  }
  bool ok = total < 0;
  for (std::size_t j = 0; j < cycles.size() && ok; ++j) {
    Rat s(0);
    for (std::size_t e : cycles[j].edge_ids(h)) s += res.dual[e];
    if (s < 0) ok = false;
  }
  res.certificate_verified = ok;
  if (!ok) {
    res.status = OracleStatus::inconclusive;
    res.note = "dual certificate failed exact verification";
    res.dual.clear();
    return res;
  }
  res.status = OracleStatus::infeasible;
  return res;
}

ExampleReport example_structure_check(const LabeledExample& le, int ell) {
  const Hypergraph& h = le.base;
  const int k = h.k();
  if (ell % k == 0) throw InputError("ell must not be divisible by k");
  if (ell <= k) throw InputError("ell must exceed k");
  ExampleReport rep;
  rep.n = h.n();
  rep.k = k;
  rep.ell = ell;

  std::set<int> aset(le.side_a.begin(), le.side_a.end());
  std::set<std::size_t> e1;
  if (auto it = le.classes.find(1); it != le.classes.end())
    e1.insert(it->second.begin(), it->second.end());
  std::set<std::size_t> h02(le.h02.begin(), le.h02.end());

  // (a) Exhaustive window analysis: along any walk inside E1, the vertex of
  // the one-per-edge side recurs with period exactly k.
  auto check_side = [&](const std::set<int>& side) {
    bool okside = true;
    for (std::size_t id : e1) {
      Tuple t = h.edge(id);
      do {
        int pos = -1;
        for (int j = 0; j < k; ++j)
          if (side.count(t[j])) {
            pos = j;
            break;
          }
        if (pos == -1) return false;  // side does not meet this E1 edge
        std::vector<int> x(t.begin() + 1, t.end());
        for (int u : h.neighborhood(x)) {
          std::vector<int> wnd(t.begin() + 1, t.end());
          wnd.push_back(u);
          std::sort(wnd.begin(), wnd.end());
          auto wid = h.edge_id(wnd);
          if (!wid || !e1.count(*wid)) continue;
          ++rep.spacing_pairs_checked;
          if ((side.count(u) > 0) != (pos == 0)) okside = false;
        }
      } while (std::next_permutation(t.begin(), t.end()));
    }
    return okside;
  };
  rep.spacing_holds = check_side(aset);
  if (k == 2) {
    std::set<int> bset;
    for (int v = 1; v <= h.n(); ++v)
      if (!aset.count(v)) bset.insert(v);
    rep.spacing_holds = rep.spacing_holds && check_side(bset);
  }

  // (b) every ell-cycle through E1 passes through the sparse class
  for (const TightCycle& c : enumerate_cycles(h, std::size_t(ell))) {
    ++rep.cycles_total;
    bool m1 = false, m2 = false;
    for (std::size_t e : c.edge_ids(h)) {
      m1 = m1 || e1.count(e) > 0;
      m2 = m2 || h02.count(e) > 0;
    }
    if (m1) {
      ++rep.cycles_meeting_e1;
      if (m2) ++rep.cycles_meeting_both;
    }
  }
  rep.every_e1_cycle_meets_h02 = rep.cycles_meeting_e1 == rep.cycles_meeting_both;

  // (c) the counting budget
  rep.budget_lhs = Int(long(ell - 1)) * Int(static_cast<unsigned long>(le.h02.size()));
  rep.budget_rhs = Int(static_cast<unsigned long>(e1.size()));
  rep.witnesses_nondecomposability = rep.budget_lhs < rep.budget_rhs;
  return rep;
}

}  // namespace tcd
