#include <string>

#include "doctest.h"
#include "tcd/decomposer.hpp"
#include "tcd/errors.hpp"
#include "tcd/hypergraph.hpp"
#include "tcd/json_io.hpp"
#include "tcd/markov.hpp"
#include "tcd/transitions.hpp"

using namespace tcd;

TEST_CASE("edge keys round-trip and reject junk") {
  CHECK(edge_key({1, 2, 3}) == "1,2,3");
  CHECK(parse_edge_key("3,1,2") == std::vector<int>{1, 2, 3});
  CHECK_THROWS_AS(parse_edge_key(""), InputError);
  CHECK_THROWS_AS(parse_edge_key("1,,2"), InputError);
  CHECK_THROWS_AS(parse_edge_key("1,x"), InputError);
}

TEST_CASE("parse_json: malformed input raises InputError") {
  CHECK_THROWS_AS(parse_json("{"), InputError);
  CHECK_THROWS_AS(parse_json("not json"), InputError);
  CHECK(parse_json("{\"a\": 1}")["a"] == 1);
}

TEST_CASE("instance round-trip") {
  auto h = gen_random_min_codegree(9, 2, 6, 42, 64);
  auto j = instance_to_json(h);
  auto h2 = instance_from_json(j);
  CHECK(h2.n() == h.n());
  CHECK(h2.k() == h.k());
  CHECK(h2.edges() == h.edges());
  // serialization is deterministic
  CHECK(instance_to_json(h2).dump() == j.dump());
}

TEST_CASE("instance parsing validates shape") {
  CHECK_THROWS_AS(instance_from_json(parse_json("{\"n\": 4}")), InputError);
  CHECK_THROWS_AS(instance_from_json(parse_json("{\"n\": 4, \"k\": 2, \"edges\": [[1]]}")),
                  InputError);
}

TEST_CASE("labeled example round-trip") {
  auto le = gen_lowerbound_example(12, 2, 0.15, 0.05, 5);
  auto j = labeled_to_json(le);
  auto le2 = labeled_from_json(j);
  CHECK(le2.base.edges() == le.base.edges());
  CHECK(le2.side_a == le.side_a);
  CHECK(le2.classes == le.classes);
  CHECK(le2.h02 == le.h02);
}

TEST_CASE("transition system round-trip: sampled and full") {
  auto h = gen_complete(6, 2);
  auto ts = sample_transition_system(h, 2, 9);
  auto j = system_to_json(ts);
  auto ts2 = system_from_json(h, j);
  CHECK(!ts2.is_full());
  CHECK(ts2.regularity() == 2);
  CHECK(ts2.graphs().size() == ts.graphs().size());
  for (const auto& [x, g] : ts.graphs()) {
    CHECK(ts2.graphs().at(x).members == g.members);
    CHECK(ts2.graphs().at(x).adj == g.adj);
  }
  ts2.validate(h);

  auto full = TransitionSystem::full(h);
  auto jf = system_to_json(full);
  auto full2 = system_from_json(h, jf);
  CHECK(full2.is_full());
}

TEST_CASE("decomposition round-trip preserves weights exactly") {
  auto h = gen_complete(5, 2);
  PipelineConfig cfg;
  cfg.ell = 5;
  cfg.r = 0;
  auto dec = adjust(h, TransitionSystem::full(h), cfg);
  auto j = decomposition_to_json(h, dec);
  // through a dump/parse cycle, as the CLI would do
  auto parsed = parse_json(j.dump(2));
  auto [h2, w2] = decomposition_from_json(parsed);
  CHECK(h2.edges() == h.edges());
  CHECK(w2 == dec.weights);
  // weights are strings of exact rationals
  CHECK(parsed["cycles"][0]["weight"] == "1/6");
  auto rep = verify(h2, w2, 5, Rat(1, 2), 0);
  CHECK(rep.is_exact_cover);
}

TEST_CASE("report serialization carries sums, flags and envelopes") {
  auto h = gen_complete(5, 2);
  auto w = initial_weights(h, TransitionSystem::full(h), 5);
  auto rep = verify(h, w, 5, Rat(1, 2), 4);
  auto j = report_to_json(h, rep);
  CHECK(j["is_exact_cover"] == true);
  CHECK(j["edge_sums"]["1,2"] == "1");
  CHECK(j["r_envelope"]["applicable"] == true);
  CHECK(j["mixing_hypothesis"].contains("satisfied"));
  CHECK(j["min_weight"] == "1/6");
  // byte determinism
  CHECK(report_to_json(h, rep).dump() == j.dump());
}

TEST_CASE("certify report serialization") {
  auto h = gen_complete(8, 2);
  auto cert = certify_system(h, 4, designated_lengths(5), 0, 8);
  auto j = certify_to_json(cert.report);
  CHECK(j["accepted"] == cert.report.accepted);
  CHECK(j["lengths"].size() == cert.report.lengths.size());
  CHECK(j["lengths"][0].contains("alpha_compat"));
}

TEST_CASE("oracle serialization: feasible and infeasible") {
  auto h = gen_complete(5, 2);
  auto res = lp_oracle(h, 5);
  auto j = oracle_to_json(h, res);
  CHECK(j["status"] == "feasible");
  CHECK(j["cycles"].size() == res.weights.support_size());

  Hypergraph bad(7, 2, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}, {6, 7}});
  auto res2 = lp_oracle(bad, 5);
  auto j2 = oracle_to_json(bad, res2);
  CHECK(j2["status"] == "infeasible");
  CHECK(j2["certificate_verified"] == true);
  CHECK(j2["dual"].size() == 6);
}

TEST_CASE("mixing report serialization") {
  auto c = chain_from_matrix({{Rat(1, 3), Rat(2, 3)}, {Rat(2, 3), Rat(1, 3)}});
  auto rep = verify_mixing(c, 3);
  auto j = mixing_to_json(rep);
  CHECK(j["pass"] == true);
  CHECK(j["t_min"] == 3);
  CHECK(j["worst_ratio"] == "1/8");
}

TEST_CASE("example report serialization") {
  auto le = gen_lowerbound_example(10, 2, 0.0, 0.0, 3);
  auto j = example_report_to_json(example_structure_check(le, 5));
  CHECK(j["spacing_holds"] == true);
  CHECK(j["cycles_meeting_e1"] == 0);
}

TEST_CASE("run summaries CSV has a header and one line per run") {
  auto h = gen_complete(5, 2);
  PipelineConfig cfg;
  cfg.ell = 5;
  cfg.r = 0;
  auto avg = average_decompositions(h, cfg, 3);
  auto csv = run_summaries_csv(avg.runs);
  std::size_t lines = 0;
  for (char ch : csv)
    if (ch == '\n') ++lines;
  CHECK(lines == 4);  // header + 3 runs
  CHECK(csv.rfind("run,adjust_seed,certify_attempts,zeta,alpha_compat,", 0) == 0);
}
