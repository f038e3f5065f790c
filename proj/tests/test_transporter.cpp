#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "tcd/errors.hpp"
#include "tcd/hypergraph.hpp"
#include "tcd/transitions.hpp"
#include "tcd/transporter.hpp"
#include "tcd/walks.hpp"
#include "tcd/weights.hpp"

using namespace tcd;

TEST_CASE("rotate: index arithmetic") {
  CHECK(rotate({1, 2, 3}, 1) == Tuple{2, 3, 1});
  CHECK(rotate({1, 2}, 2) == Tuple{1, 2});
  CHECK(rotate({4, 7, 2, 9}, 3) == Tuple{9, 4, 7, 2});
  CHECK(rotate({5}, 0) == Tuple{5});
}

TEST_CASE("find + validate: K_9^2 at order 4") {
  auto h = gen_complete(9, 2);
  auto ts = TransitionSystem::full(h);
  auto found = find_transporters(h, ts, {1, 2}, {3, 4}, 4, 1, 5);
  REQUIRE(found.size() == 1);
  const auto& tp = found[0];
  CHECK(tp.order == 4);
  CHECK(tp.cyc.size() == 10);  // k(L+1) = 2*5
  CHECK(tp.sending.size() == 2);
  CHECK(tp.receiving.size() == 2);
  auto chk = validate_transporter(h, ts, tp);
  CHECK(chk.ok);
  CHECK(chk.reason.empty());
  // sending and receiving cycles are genuine 4-cycles of H
  for (const auto& c : tp.sending) CHECK(is_valid_cycle(h, c));
  for (const auto& c : tp.receiving) CHECK(is_valid_cycle(h, c));
}

TEST_CASE("validation: corrupted t-window violates property (i)") {
  auto h = gen_complete(9, 2);
  auto ts = TransitionSystem::full(h);
  auto found = find_transporters(h, ts, {1, 2}, {3, 4}, 4, 1, 5);
  REQUIRE(found.size() == 1);
  auto bad = found[0];
  // h = floor(5/2) = 2: positions 2 and 3 hold t = (3,4); swap them so the
  // t-window reads (4,3) instead.
  std::swap(bad.cyc[2], bad.cyc[3]);
  auto rebuilt = assemble_transporter(2, bad.s, bad.t, bad.order, bad.cyc);
  auto chk = validate_transporter(h, ts, rebuilt);
  CHECK(!chk.ok);
  CHECK(chk.reason.find("(i)") != std::string::npos);
}

TEST_CASE("validation: overlapping s and t is a precondition error") {
  auto h = gen_complete(9, 2);
  auto ts = TransitionSystem::full(h);
  CHECK_THROWS_AS(find_transporters(h, ts, {1, 2}, {2, 3}, 4, 1, 0), InputError);
  Transporter tp;
  tp.s = {1, 2};
  tp.t = {2, 3};
  tp.order = 4;
  tp.cyc.assign(10, 1);
  auto chk = validate_transporter(h, ts, tp);
  CHECK(!chk.ok);
}

TEST_CASE("orders below 3 are infeasible; order 3 has zero free slots yet works") {
  auto h = gen_complete(9, 2);
  auto ts = TransitionSystem::full(h);
  CHECK_THROWS_AS(find_transporters(h, ts, {1, 2}, {3, 4}, 1, 1, 0), InputError);
  // order 2: floor(3/2) = 1 < k, the windows would overlap — empty, not an error
  CHECK(find_transporters(h, ts, {1, 2}, {3, 4}, 2, 1, 0).empty());
  // order 3: the closed walk is fully determined by s and t
  auto found = find_transporters(h, ts, {1, 2}, {3, 4}, 3, 2, 0);
  REQUIRE(found.size() == 1);
  CHECK(validate_transporter(h, ts, found[0]).ok);
  Transporter bad = found[0];
  bad.order = 2;
  bad.cyc.resize(6);
  CHECK(!validate_transporter(h, ts, bad).ok);
}

TEST_CASE("find: K_12^2 full system at order 5 yields the requested m distinct") {
  auto h = gen_complete(12, 2);
  auto ts = TransitionSystem::full(h);
  auto found = find_transporters(h, ts, {1, 2}, {3, 4}, 5, 4, 9);
  REQUIRE(found.size() == 4);
  std::set<std::vector<int>> walks;
  for (const auto& tp : found) {
    walks.insert(tp.cyc);
    CHECK(validate_transporter(h, ts, tp).ok);
  }
  CHECK(walks.size() == 4);  // pairwise distinct as closed walks
}

TEST_CASE("find: r=0 system admits no transporters") {
  auto h = gen_complete(12, 2);
  auto ts = sample_transition_system(h, 0, 1);
  auto found = find_transporters(h, ts, {1, 2}, {3, 4}, 5, 2, 3);
  CHECK(found.empty());
}

TEST_CASE("find: too few vertices for k disjoint segments") {
  // order 5, k=2 needs n >= 2k + k(L+1-2k) = 8
  auto h = gen_complete(7, 2);
  auto ts = TransitionSystem::full(h);
  auto found = find_transporters(h, ts, {1, 2}, {3, 4}, 5, 1, 3);
  CHECK(found.empty());
}

TEST_CASE("find: k=3 works at a geometry-legal order") {
  // k=3, L=7: half = 4 >= k, n >= 6 + 3*(8-6) = 12
  auto h = gen_complete(12, 3);
  auto ts = TransitionSystem::full(h);
  auto found = find_transporters(h, ts, {1, 2, 3}, {4, 5, 6}, 7, 1, 11);
  REQUIRE(found.size() == 1);
  CHECK(found[0].cyc.size() == 24);  // k(L+1) = 3*8
  CHECK(found[0].sending.size() == 3);
  CHECK(found[0].receiving.size() == 3);
  CHECK(validate_transporter(h, ts, found[0]).ok);
}

TEST_CASE("find: k=3 at order 4 is geometrically impossible") {
  // half = floor(5/2) = 2 < k = 3: the s- and t-windows inside one segment
  // would have to share a vertex, contradicting s ∩ t = ∅.
  auto h = gen_complete(12, 3);
  auto ts = TransitionSystem::full(h);
  auto found = find_transporters(h, ts, {1, 2, 3}, {4, 5, 6}, 4, 1, 2);
  CHECK(found.empty());
}

TEST_CASE("apply: zero amount leaves the function untouched") {
  auto h = gen_complete(9, 2);
  auto ts = TransitionSystem::full(h);
  auto tp = find_transporters(h, ts, {1, 2}, {3, 4}, 4, 1, 5).at(0);
  WeightFunction w(2, 4);
  apply_transporter(w, tp, Rat(0));
  CHECK(w.support_size() == 0);
}

TEST_CASE("apply: amount k on the zero function shows the census pattern") {
  auto h = gen_complete(9, 2);
  auto ts = TransitionSystem::full(h);
  auto tp = find_transporters(h, ts, {1, 2}, {3, 4}, 4, 1, 5).at(0);
  WeightFunction w(2, 4);
  apply_transporter(w, tp, Rat(2));  // amount = k
  for (const auto& c : tp.sending) CHECK(w.at(c) == -1);
  for (const auto& c : tp.receiving) CHECK(w.at(c) == 1);
  auto sums = w.edge_sums(h);
  auto s_id = *h.edge_id({1, 2});
  auto t_id = *h.edge_id({3, 4});
  for (std::size_t e = 0; e < sums.size(); ++e) {
    if (e == s_id) {
      CHECK(sums[e] == -2);
    } else if (e == t_id) {
      CHECK(sums[e] == 2);
    } else {
      CHECK(sums[e] == 0);
    }
  }
  CHECK(sums == oracle::brute_edge_sums(h, w));
}

TEST_CASE("apply: rational amount shifts a nonzero base exactly") {
  auto h = gen_complete(12, 2);
  auto ts = TransitionSystem::full(h);
  auto tp = find_transporters(h, ts, {5, 6}, {9, 10}, 5, 1, 21).at(0);
  // order-5 transporter shifts weight among 5-cycles
  WeightFunction w(2, 5);
  auto cycles = enumerate_cycles(h, 5);
  for (std::size_t i = 0; i < cycles.size(); i += 7) w.set(cycles[i], Rat(1, 3));
  auto before = w.edge_sums(h);
  apply_transporter(w, tp, Rat(3, 7));
  auto after = w.edge_sums(h);
  auto s_id = *h.edge_id({5, 6});
  auto t_id = *h.edge_id({9, 10});
  for (std::size_t e = 0; e < after.size(); ++e) {
    Rat want = before[e];
    if (e == s_id) want -= Rat(3, 7);
    if (e == t_id) want += Rat(3, 7);
    CHECK(after[e] == want);
  }
  CHECK(after == oracle::brute_edge_sums(h, w));
}

TEST_CASE("find is reproducible per seed and seed-sensitive") {
  auto h = gen_complete(12, 2);
  auto ts = TransitionSystem::full(h);
  auto a = find_transporters(h, ts, {1, 2}, {3, 4}, 5, 3, 17);
  auto b = find_transporters(h, ts, {1, 2}, {3, 4}, 5, 3, 17);
  REQUIRE(a.size() == b.size());
  bool same = true;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].cyc != b[i].cyc) same = false;
  CHECK(same);
  auto c = find_transporters(h, ts, {1, 2}, {3, 4}, 5, 3, 18);
  bool differs = c.size() != a.size();
  for (std::size_t i = 0; !differs && i < a.size(); ++i)
    if (a[i].cyc != c[i].cyc) differs = true;
  CHECK(differs);
}

TEST_CASE("sending cycles of search output are compatible with the sampled system") {
  auto h = gen_complete(12, 2);
  auto cert = certify_system(h, 6, {5}, 0, 16);
  REQUIRE(cert.report.accepted);
  const auto& ts = *cert.system;
  auto found = find_transporters(h, ts, {1, 2}, {3, 4}, 5, 2, 7);
  REQUIRE(!found.empty());
  for (const auto& tp : found) {
    CHECK(validate_transporter(h, ts, tp).ok);
    for (const auto& c : tp.sending) CHECK(is_compatible_cycle(h, ts, c));
  }
}
