#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tcd/hypergraph.hpp"
#include "tcd/rational.hpp"
#include "tcd/transitions.hpp"
#include "tcd/walks.hpp"
#include "tcd/weights.hpp"

namespace tcd {

// Walk lengths whose compatible connectivity a system must certify before the
// pipeline uses it at cycle length ell: the two connecting lengths
// ceil((ell+1)/2) and floor((ell+1)/2)+1 used by transporter search, and ell
// itself. Deduplicated, ascending.
std::vector<std::size_t> designated_lengths(int ell);

struct EnvelopeStats {
  bool applicable = false;
  Rat lo, hi;
  std::size_t checked = 0, inside = 0;
  bool all_inside() const { return applicable && inside == checked; }
};

struct HypothesisFlag {
  bool applicable = false;
  bool satisfied = false;
  std::string detail;
};

struct DecompositionReport {
  int n = 0, k = 0, ell = 0, r = 0;  // r = 0 means the full transition system
  Rat mu;

  // Recomputed from scratch on every call; never incrementally trusted.
  std::vector<Rat> edge_sums;
  bool is_exact_cover = false;
  std::vector<std::size_t> offending_edges;  // ids with sum != 1

  bool support_valid = true;  // all support keys are genuine ell-cycles of H
  std::size_t invalid_support = 0;
  std::size_t support_size = 0;
  Rat min_weight, max_weight, total_weight;
  bool nonnegative = false;

  // Per-cycle weight against (1 +- mu) 2e(H)/r^ell, and against the
  // [(1-mu) 2e(H)/Delta^ell, (1+mu) 2e(H)/delta^ell] envelope. The domain is
  // the compatible cycles when a transition system is at hand, otherwise the
  // support of the weight function.
  std::string envelope_domain;
  EnvelopeStats r_envelope, theorem_envelope;

  // 180 k (l0/a) log(l0/a) log(1/mu) <= ell, with a the plain connectivity
  // constant at l0 = k+1, evaluated with upward rounding (report-only).
  HypothesisFlag mixing_hypothesis;
  Rat alpha_used;
  int ell0_used = 0;
  // ell (1 - zeta/2)^(ell+1) <= d^(k+1) mu / (400 k), d = delta(H)/n, where
  // zeta is the largest value every certified length admits (count defect at
  // length len <= (1 - zeta)^len), recovered with directed rounding so the
  // flag never flatters (report-only).
  HypothesisFlag adjust_hypothesis;
  Rat zeta_used;  // measured count defect at the base length

  // Pipeline diagnostics, filled by adjust/average runs only.
  std::size_t arcs_routed = 0, pairs_routed = 0, transporters_applied = 0;
  std::size_t pairs_skipped = 0;          // orientation pairs with no transporter
  std::size_t transporter_min_found = 0;  // smallest m over routed pairs
  Rat max_arc_flow, flow_beta, flow_cap;
  bool flow_within_cap = false;
  // Abundance diagnostics: the proof's lower/upper transporter-count bounds,
  // evaluated exactly at this scale (not enforced).
  bool paper_bounds_applicable = false;
  Rat paper_m_lower, paper_m_upper;
  std::size_t runs_averaged = 0;
};

struct RunSummary {
  std::size_t run = 0;
  std::uint64_t adjust_seed = 0;
  int certify_attempts = 0;
  Rat zeta;          // measured count defect at the base length (0 for the full system)
  Rat alpha_compat;  // certified connectivity at the base length (0 for the full system)
  Rat min_weight, max_weight;
  bool exact_cover = false;
  bool nonnegative = false;
  bool adjust_hypothesis = false;
  bool mixing_hypothesis = false;
};

struct Decomposition {
  WeightFunction weights;
  DecompositionReport report;
  std::vector<RunSummary> runs;
};

struct PipelineConfig {
  int ell = 5;
  int r = 0;  // 0 selects the full transition system
  std::size_t m_cap = 3;
  std::uint64_t seed = 0;
  Rat mu = Rat(1, 2);
  std::size_t certify_attempts = 16;
  std::size_t node_budget_per = 100000;
  std::size_t run_retries = 8;  // extra (system, adjust) samples after an aborted run
};

// Scaled uniform weights on the compatible ell-cycles: e(H)/(ell c) each, so
// the total is exactly e(H)/ell. PipelineAbort when no compatible cycle exists.
WeightFunction initial_weights(const Hypergraph& h, const TransitionSystem& ts, int ell);

// xi(e) = (sum of weights of support cycles through e) - 1, per edge id.
std::vector<Rat> edge_deviation(const Hypergraph& h, const WeightFunction& w);

// The transport-and-transporter stage alone: balances the deviation of w over
// the disjointness digraph (2-paths), then cancels every positive arc flow
// eta(u,v) with order-ell transporters. Each of the (k!)^2 ordered
// orientation pairs is searched for m = min(m_cap, found) transporters; the
// p pairs that found any split eta equally, eta/(p m) per transporter (a
// pair that exists for every orientation carries eta/((k!)^2 m), and any
// split by orientation pairs conserves edge sums, so skipping an empty pair
// is exact). Afterwards every edge sum of w is exactly its old value minus
// xi, i.e. exactly 1 when w came from initial_weights. PipelineAbort when
// some arc admits no transporter in any orientation.
struct RebalanceStats {
  std::size_t arcs_routed = 0, pairs_routed = 0, transporters_applied = 0;
  std::size_t pairs_skipped = 0;
  std::size_t min_found = 0;
  Rat beta, cap, max_flow;
  bool within_cap = false;
};
RebalanceStats rebalance(const Hypergraph& h, const TransitionSystem& ts, WeightFunction& w,
                         int ell, std::size_t m_cap, std::uint64_t seed,
                         std::size_t node_budget_per = 100000);

// initial_weights + rebalance + full verification report. cert, when given,
// supplies the certified zeta for the hypothesis flag and abundance bounds.
Decomposition adjust(const Hypergraph& h, const TransitionSystem& ts, const PipelineConfig& cfg,
                     const CertifyReport* cert = nullptr);

// Samples `runs` certified systems (full system when cfg.r == 0), adjusts
// each, and returns the uniform average, whose edge sums stay exactly 1.
Decomposition average_decompositions(const Hypergraph& h, const PipelineConfig& cfg,
                                     std::size_t runs);

// Full recomputation: edge sums, exactness, nonnegativity, envelopes,
// hypothesis flags. ts widens the envelope domain to all compatible cycles;
// cert supplies zeta for the adjustments-hypothesis flag.
DecompositionReport verify(const Hypergraph& h, const WeightFunction& w, int ell, const Rat& mu,
                           int r, const TransitionSystem* ts = nullptr,
                           const CertifyReport* cert = nullptr);

// Exact phase-1 simplex over all ell-cycles: weights >= 0 with every edge sum
// exactly 1. Either a feasible weight function, or a dual vector y (per edge)
// with sum_e y_e < 0 and sum_{e in C} y_e >= 0 for every cycle C — verified
// exactly before it is returned — or an explicit inconclusive status when the
// time budget runs out.
enum class OracleStatus { feasible, infeasible, inconclusive };
struct OracleResult {
  OracleStatus status = OracleStatus::inconclusive;
  WeightFunction weights;
  std::vector<Rat> dual;
  bool certificate_verified = false;
  std::size_t pivots = 0;
  std::size_t cycle_count = 0;
  std::string note;

  OracleResult(int k, std::size_t ell) : weights(k, ell) {}
};
OracleResult lp_oracle(const Hypergraph& h, int ell, std::int64_t budget_ms = 120000);

// Structural checks on the extremal construction: (a) the walk-spacing
// property of E1 windows (the side meeting every E1 edge exactly once recurs
// with period exactly k along any E1-walk), (b) every ell-cycle through an E1
// edge passes through the sparse sampled class, (c) the budget comparison
// (ell-1) e(h02) < |E1| that drives the non-decomposability count.
struct ExampleReport {
  int n = 0, k = 0, ell = 0;
  bool spacing_holds = false;
  std::size_t spacing_pairs_checked = 0;
  std::size_t cycles_total = 0;
  std::size_t cycles_meeting_e1 = 0;
  std::size_t cycles_meeting_both = 0;
  bool every_e1_cycle_meets_h02 = false;
  Int budget_lhs;  // (ell-1) e(h02)
  Int budget_rhs;  // |E1|
  bool witnesses_nondecomposability = false;
};
ExampleReport example_structure_check(const LabeledExample& le, int ell);

}  // namespace tcd
