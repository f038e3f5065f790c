#include <algorithm>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "tcd/decomposer.hpp"
#include "tcd/errors.hpp"
#include "tcd/hypergraph.hpp"
#include "tcd/rng.hpp"
#include "tcd/transitions.hpp"
#include "tcd/walks.hpp"
#include "tcd/weights.hpp"

using namespace tcd;

TEST_CASE("designated_lengths: connecting lengths plus the cycle length") {
  CHECK(designated_lengths(5) == std::vector<std::size_t>{3, 4, 5});
  CHECK(designated_lengths(4) == std::vector<std::size_t>{3, 4});
  CHECK(designated_lengths(6) == std::vector<std::size_t>{4, 6});
  CHECK(designated_lengths(9) == std::vector<std::size_t>{5, 6, 9});
}

TEST_CASE("initial_weights: full K_5^2 is uniform 1/6 with unit edge sums") {
  auto h = gen_complete(5, 2);
  auto w = initial_weights(h, TransitionSystem::full(h), 5);
  CHECK(w.support_size() == 12);
  for (const auto& [c, v] : w.entries()) CHECK(v == Rat(1, 6));
  CHECK(w.total() == 2);  // e/ell = 10/5
  for (const auto& s : w.edge_sums(h)) CHECK(s == 1);
}

TEST_CASE("initial_weights: aborts when no compatible cycle exists") {
  auto h = gen_complete(5, 2);
  auto ts0 = sample_transition_system(h, 0, 1);
  CHECK_THROWS_AS(initial_weights(h, ts0, 5), PipelineAbort);
}

TEST_CASE("initial_weights: sampled K_8^2 totals e/ell exactly") {
  auto h = gen_complete(8, 2);
  auto cert = certify_system(h, 4, designated_lengths(6), 0, 16);
  REQUIRE(cert.report.accepted);
  auto w = initial_weights(h, *cert.system, 6);
  CHECK(w.total() == Rat(14, 3));
  // deviation sums to zero by the normalization identity
  auto xi = edge_deviation(h, w);
  Rat total(0);
  for (const auto& v : xi) total += v;
  CHECK(total == 0);
}

TEST_CASE("edge_deviation: zero for the K_5^2 uniform weights, -1 for empty") {
  auto h = gen_complete(5, 2);
  auto w = initial_weights(h, TransitionSystem::full(h), 5);
  for (const auto& v : edge_deviation(h, w)) CHECK(v == 0);
  WeightFunction empty(2, 5);
  for (const auto& v : edge_deviation(h, empty)) CHECK(v == -1);
}

TEST_CASE("adjust: K_5^2 full system needs no transporters") {
  auto h = gen_complete(5, 2);
  PipelineConfig cfg;
  cfg.ell = 5;
  cfg.r = 0;
  auto dec = adjust(h, TransitionSystem::full(h), cfg);
  CHECK(dec.report.is_exact_cover);
  CHECK(dec.report.nonnegative);
  CHECK(dec.report.transporters_applied == 0);
  CHECK(dec.report.arcs_routed == 0);
  CHECK(dec.report.support_size == 12);
  CHECK(dec.report.min_weight == Rat(1, 6));
  CHECK(dec.report.max_weight == Rat(1, 6));
  for (const auto& s : dec.report.edge_sums) CHECK(s == 1);
}

// n = 9 is the largest complete instance where r = 6 keeps the local graphs
// dense enough (6 of 7 possible neighbours) that every disjoint edge pair
// admits an order-5 transporter for most sampled systems; at n >= 10 some
// arc comes up empty in every orientation for nearly every system.
TEST_CASE("adjust: sampled K_9^2 system balances to exact unit edge sums") {
  auto h = gen_complete(9, 2);
  auto cert = certify_system(h, 6, designated_lengths(5), 3, 16);
  REQUIRE(cert.report.accepted);
  PipelineConfig cfg;
  cfg.ell = 5;
  cfg.r = 6;
  cfg.m_cap = 2;
  cfg.seed = 3;
  auto dec = adjust(h, *cert.system, cfg, &cert.report);
  CHECK(dec.report.is_exact_cover);
  CHECK(dec.report.offending_edges.empty());
  for (const auto& s : dec.report.edge_sums) CHECK(s == 1);
  // cross-check the sums against the brute-force recomputation
  auto brute = oracle::brute_edge_sums(h, dec.weights);
  CHECK(dec.report.edge_sums == brute);
  CHECK(dec.report.support_valid);
  if (dec.report.transporters_applied > 0) CHECK(dec.report.transporter_min_found >= 1);
  CHECK(dec.report.flow_within_cap);
}

TEST_CASE("rebalance: zero-sum perturbation is transported away exactly") {
  auto h = gen_complete(12, 2);
  auto ts = TransitionSystem::full(h);
  auto w = initial_weights(h, ts, 5);
  // perturb two cycles in opposite directions; total stays e/ell
  auto it = w.entries().begin();
  TightCycle c1 = it->first;
  std::advance(it, 500);
  TightCycle c2 = it->first;
  w.add(c1, Rat(1, 10));
  w.add(c2, Rat(-1, 10));
  auto stats = rebalance(h, ts, w, 5, 3, 11);
  for (const auto& s : w.edge_sums(h)) CHECK(s == 1);
  CHECK(stats.transporters_applied > 0);
  CHECK(stats.within_cap);
}

TEST_CASE("rebalance: one-sided perturbation breaks conservation and is refused") {
  auto h = gen_complete(12, 2);
  auto ts = TransitionSystem::full(h);
  auto w = initial_weights(h, ts, 5);
  w.add(w.entries().begin()->first, Rat(1, 10));
  // total deviation is now ell/10 != 0: the flow problem has no solution
  CHECK_THROWS_AS(rebalance(h, ts, w, 5, 3, 11), InputError);
}

TEST_CASE("average_decompositions: N=1 equals a single adjust run") {
  auto h = gen_complete(5, 2);
  PipelineConfig cfg;
  cfg.ell = 5;
  cfg.r = 0;
  cfg.seed = 4;
  auto avg = average_decompositions(h, cfg, 1);
  auto one = adjust(h, TransitionSystem::full(h), cfg);
  CHECK(avg.weights == one.weights);
  CHECK(avg.runs.size() == 1);
  CHECK(avg.report.runs_averaged == 1);
}

TEST_CASE("average_decompositions: averaging identical runs is idempotent") {
  auto h = gen_complete(5, 2);
  PipelineConfig cfg;
  cfg.ell = 5;
  cfg.r = 0;
  auto avg = average_decompositions(h, cfg, 3);
  auto one = adjust(h, TransitionSystem::full(h), cfg);
  CHECK(avg.weights == one.weights);
  CHECK(avg.report.is_exact_cover);
}

TEST_CASE("average_decompositions: sampled systems keep exact sums; min rises") {
  auto h = gen_complete(9, 2);
  PipelineConfig cfg;
  cfg.ell = 5;
  cfg.r = 6;
  cfg.m_cap = 2;
  cfg.seed = 1;
  auto avg = average_decompositions(h, cfg, 2);
  REQUIRE(avg.runs.size() == 2);
  for (const auto& s : avg.report.edge_sums) CHECK(s == 1);
  CHECK(avg.report.is_exact_cover);
  Rat worst_min = avg.runs[0].min_weight;
  for (const auto& rs : avg.runs) worst_min = std::min(worst_min, rs.min_weight);
  CHECK(avg.report.min_weight >= worst_min);
  CHECK(avg.report.runs_averaged == 2);
  // per-run summaries carry their own exactness verdicts
  for (const auto& rs : avg.runs) CHECK(rs.exact_cover);
}

TEST_CASE("verify: envelope honesty on the full-system K_5^2 decomposition") {
  auto h = gen_complete(5, 2);
  auto w = initial_weights(h, TransitionSystem::full(h), 5);
  auto rep = verify(h, w, 5, Rat(1, 2), 4);
  CHECK(rep.is_exact_cover);
  CHECK(rep.nonnegative);
  // 2e/r^ell = 20/1024 is far below the actual 1/6: reported, not hidden
  CHECK(rep.r_envelope.applicable);
  CHECK(!rep.r_envelope.all_inside());
  CHECK(rep.r_envelope.inside == 0);
}

TEST_CASE("verify: perturbation is caught with the offending edges listed") {
  auto h = gen_complete(5, 2);
  auto w = initial_weights(h, TransitionSystem::full(h), 5);
  TightCycle c = w.entries().begin()->first;
  w.add(c, Rat(1, 10));
  auto rep = verify(h, w, 5, Rat(1, 2), 0);
  CHECK(!rep.is_exact_cover);
  CHECK(rep.offending_edges.size() == 5);  // exactly the perturbed cycle's edges
  auto ids = c.edge_ids(h);
  std::sort(ids.begin(), ids.end());
  auto off = rep.offending_edges;
  std::sort(off.begin(), off.end());
  CHECK(ids == off);
}

TEST_CASE("verify: foreign support keys are counted, not trusted") {
  auto h5 = gen_complete(5, 2);
  Hypergraph h_missing(5, 2, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}});
  WeightFunction w(2, 5);
  w.set(TightCycle::canonical({1, 2, 3, 4, 5}), Rat(1));
  auto rep5 = verify(h_missing, w, 5, Rat(1, 2), 0);
  CHECK(rep5.support_valid);
  CHECK(rep5.is_exact_cover);
  // the same key is not a cycle once an edge disappears
  Hypergraph h_broken(5, 2, {{1, 2}, {2, 3}, {3, 4}, {4, 5}});
  auto repb = verify(h_broken, w, 5, Rat(1, 2), 0);
  CHECK(!repb.support_valid);
  CHECK(repb.invalid_support == 1);
  CHECK(!repb.is_exact_cover);
}

TEST_CASE("exact-cover invariant over random instances and seeds") {
  SeededRng rng(2024);
  int completed = 0, attempted = 0;
  for (int trial = 0; trial < 12; ++trial) {
    // n = 9 with r = 6: small enough that the 6-regular local graphs stay
    // dense (certification needs r^4 well above e_vec, transporter existence
    // needs r close to n - 2), large enough that deviations are nonzero and
    // the whole transport + transporter machinery actually runs.
    const int n = 9;
    const int r = 6;
    const std::uint64_t seed = rng.next();
    Hypergraph h = (trial % 3 == 0)
                       ? gen_complete(n, 2)
                       : gen_random_min_codegree(n, 2, n - 2, seed, 64);
    ++attempted;
    try {
      auto cert = certify_system(h, r, designated_lengths(5), seed, 8);
      if (!cert.report.accepted) continue;
      PipelineConfig cfg;
      cfg.ell = 5;
      cfg.r = r;
      cfg.m_cap = 2;
      cfg.seed = seed;
      auto dec = adjust(h, *cert.system, cfg, &cert.report);
      ++completed;
      CHECK(dec.report.is_exact_cover);
      CHECK(dec.report.edge_sums == oracle::brute_edge_sums(h, dec.weights));
    } catch (const PipelineAbort&) {
      // a failed transporter search is a legal outcome on sparse instances;
      // the invariant quantifies over completed runs
    }
  }
  CHECK(attempted == 12);
  CHECK(completed >= 6);
}

TEST_CASE("lp_oracle: K_5^2 at ell=5 is feasible and verifies") {
  auto h = gen_complete(5, 2);
  auto res = lp_oracle(h, 5);
  REQUIRE(res.status == OracleStatus::feasible);
  CHECK(res.cycle_count == 12);
  auto rep = verify(h, res.weights, 5, Rat(1, 2), 0);
  CHECK(rep.is_exact_cover);
  CHECK(rep.nonnegative);
}

TEST_CASE("lp_oracle: an edge on no cycle gives a verified infeasibility certificate") {
  // 5-cycle on {1..5} plus the isolated edge {6,7}
  Hypergraph h(7, 2, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}, {6, 7}});
  auto res = lp_oracle(h, 5);
  REQUIRE(res.status == OracleStatus::infeasible);
  CHECK(res.certificate_verified);
  REQUIRE(res.dual.size() == 6);
  // re-verify the Farkas inequalities here, independently
  Rat total(0);
  for (const auto& y : res.dual) total += y;
  CHECK(total < 0);
  for (const auto& c : enumerate_cycles(h, 5)) {
    Rat along(0);
    for (auto e : c.edge_ids(h)) along += res.dual[e];
    CHECK(along >= 0);
  }
}

TEST_CASE("lp_oracle: zero budget is inconclusive") {
  auto h = gen_complete(5, 2);
  auto res = lp_oracle(h, 5, 0);
  CHECK(res.status == OracleStatus::inconclusive);
}

TEST_CASE("oracle consistency: pipeline output is LP-feasible") {
  auto h = gen_complete(6, 2);
  PipelineConfig cfg;
  cfg.ell = 4;
  cfg.r = 0;
  auto dec = adjust(h, TransitionSystem::full(h), cfg);
  REQUIRE(dec.report.is_exact_cover);
  REQUIRE(dec.report.nonnegative);
  auto res = lp_oracle(h, 4);
  CHECK(res.status == OracleStatus::feasible);
  auto rep = verify(h, res.weights, 4, Rat(1, 2), 0);
  CHECK(rep.is_exact_cover);
  CHECK(rep.nonnegative);
}

TEST_CASE("lp_oracle decides an extremal-example instance definitively") {
  auto le = gen_lowerbound_example(10, 2, 0.2, 0.05, 7);
  auto res = lp_oracle(le.base, 5, 120000);
  CHECK(res.status != OracleStatus::inconclusive);
  if (res.status == OracleStatus::infeasible) {
    CHECK(res.certificate_verified);
  } else {
    auto rep = verify(le.base, res.weights, 5, Rat(1, 2), 0);
    CHECK(rep.is_exact_cover);
    CHECK(rep.nonnegative);
  }
}

TEST_CASE("example_structure_check: n=12 extremal instance") {
  auto le = gen_lowerbound_example(12, 2, 0.15, 0.05, 5);
  auto rep = example_structure_check(le, 5);
  CHECK(rep.n == 12);
  CHECK(rep.spacing_holds);
  CHECK(rep.spacing_pairs_checked > 0);
  CHECK(rep.every_e1_cycle_meets_h02);
  CHECK(rep.cycles_meeting_both == rep.cycles_meeting_e1);
  CHECK(rep.budget_lhs == Int(4) * Int(le.h02.size()));
  CHECK(rep.budget_rhs == 36);
  if (rep.budget_lhs < rep.budget_rhs) CHECK(rep.witnesses_nondecomposability);
}

TEST_CASE("example_structure_check: eps = 0 leaves E1 untouched by cycles") {
  auto le = gen_lowerbound_example(10, 2, 0.0, 0.0, 3);
  REQUIRE(le.h02.empty());
  auto rep = example_structure_check(le, 5);
  CHECK(rep.spacing_holds);
  CHECK(rep.cycles_meeting_e1 == 0);
  CHECK(rep.every_e1_cycle_meets_h02);  // vacuously
  CHECK(rep.budget_lhs == 0);
  CHECK(rep.witnesses_nondecomposability);
}

TEST_CASE("example_structure_check: ell divisible by k is rejected") {
  auto le = gen_lowerbound_example(10, 2, 0.1, 0.0, 3);
  CHECK_THROWS_AS(example_structure_check(le, 4), InputError);
  auto le3 = gen_lowerbound_example(12, 3, 0.1, 0.0, 3);
  CHECK_THROWS_AS(example_structure_check(le3, 6), InputError);
}
