#include "tcd/hypergraph.hpp"

#include <algorithm>
#include <set>

#include "doctest.h"
#include "tcd/errors.hpp"

using namespace tcd;

TEST_CASE("construction normalizes and validates") {
  Hypergraph h(4, 2, {{2, 1}, {1, 2}, {3, 4}});
  CHECK(h.edge_count() == 2);  // dedup after sorting
  CHECK(h.edge(0) == Edge{1, 2});
  CHECK(h.edge(1) == Edge{3, 4});
  CHECK(h.is_edge({1, 2}));
  CHECK_FALSE(h.is_edge({1, 3}));
  CHECK(h.edge_id({3, 4}) == 1);
  CHECK_FALSE(h.edge_id({1, 4}).has_value());

  CHECK_THROWS_AS(Hypergraph(4, 2, {{1, 1}}), InputError);   // repeated vertex
  CHECK_THROWS_AS(Hypergraph(4, 2, {{1, 5}}), InputError);   // out of range
  CHECK_THROWS_AS(Hypergraph(4, 2, {{1, 2, 3}}), InputError);  // arity
  CHECK_THROWS_AS(Hypergraph(2, 3, {}), InputError);         // n < k
}

TEST_CASE("codegree") {
  CHECK(gen_complete(6, 2).codegree({3}) == 5);
  CHECK(Hypergraph(6, 2, {}).codegree({3}) == 0);
  Hypergraph h(4, 3, {{1, 2, 3}, {1, 2, 4}, {2, 3, 4}});
  CHECK(h.codegree({2, 3}) == 2);
  CHECK_THROWS_AS(h.codegree({2}), InputError);  // wrong-size x
}

TEST_CASE("min and max codegree") {
  Hypergraph k5 = gen_complete(5, 2);
  CHECK(k5.min_codegree() == 4);
  CHECK(k5.max_codegree() == 4);

  Hypergraph h(4, 3, {{1, 2, 3}, {1, 2, 4}});
  CHECK(h.min_codegree() == 0);  // e.g. x = {3,4}
  CHECK(h.max_codegree() == 2);  // x = {1,2}

  Hypergraph r = gen_random_min_codegree(8, 2, 5, 123);
  CHECK(r.min_codegree() >= 5);
}

TEST_CASE("neighborhood") {
  CHECK(gen_complete(5, 2).neighborhood({2}) == std::vector<int>{1, 3, 4, 5});
  CHECK(Hypergraph(5, 2, {}).neighborhood({2}).empty());
  Hypergraph h(4, 3, {{1, 2, 3}, {2, 3, 4}});
  CHECK(h.neighborhood({2, 3}) == std::vector<int>{1, 4});
  for (int a = 1; a <= 4; ++a)
    for (int b = a + 1; b <= 4; ++b)
      CHECK(h.neighborhood({a, b}).size() == h.codegree({a, b}));
  CHECK_THROWS_AS(h.neighborhood({2}), InputError);  // wrong arity
}

TEST_CASE("alpha-intersecting") {
  CHECK(gen_complete(8, 2).is_alpha_intersecting(Rat(1, 2)));  // |N∩N| >= 6 >= 4
  CHECK_FALSE(Hypergraph(6, 2, {}).is_alpha_intersecting(Rat(1, 100)));

  // delta >= (1+alpha) n/2 implies alpha-intersecting; delta >= 8 on n=10.
  Hypergraph r = gen_random_min_codegree(10, 2, 8, 77);
  REQUIRE(r.min_codegree() >= 8);
  CHECK(r.is_alpha_intersecting(Rat(1, 2)));
  CHECK(r.intersecting_alpha() >= Rat(1, 2));
  CHECK(r.is_alpha_intersecting(r.intersecting_alpha()));
}

TEST_CASE("links") {
  Link l = link_of(gen_complete(5, 3), 1);
  CHECK(l.graph.n() == 4);
  CHECK(l.graph.k() == 2);
  CHECK(l.graph.edge_count() == 6);  // complete K4^2

  Hypergraph single(3, 3, {{1, 2, 3}});
  Link l2 = link_of(single, 3);
  CHECK(l2.graph.edge_count() == 1);
  CHECK(l2.graph.is_edge({l2.to_link[1], l2.to_link[2]}));
  CHECK(l2.from_link[l2.to_link[1]] == 1);

  // Sum over z of e(link) = k e(H).
  Hypergraph r = gen_random_min_codegree(7, 3, 2, 5);
  std::size_t total = 0;
  for (int z = 1; z <= r.n(); ++z) total += link_of(r, z).graph.edge_count();
  CHECK(total == 3 * r.edge_count());

  CHECK_THROWS_AS(link_of(gen_complete(4, 2), 1), InputError);  // k = 2 unsupported
}

TEST_CASE("gen_complete") {
  Hypergraph h = gen_complete(5, 2);
  CHECK(h.edge_count() == 10);
  CHECK(h.min_codegree() == 4);
  CHECK(gen_complete(6, 3).edge_count() == 20);
}

TEST_CASE("generators are deterministic") {
  Hypergraph a = gen_random_min_codegree(8, 2, 4, 99);
  Hypergraph b = gen_random_min_codegree(8, 2, 4, 99);
  CHECK(a.edges() == b.edges());

  LabeledExample x = gen_lowerbound_example(10, 2, 0.2, 0.1, 31);
  LabeledExample y = gen_lowerbound_example(10, 2, 0.2, 0.1, 31);
  CHECK(x.base.edges() == y.base.edges());
  CHECK(x.side_a == y.side_a);
  CHECK(x.h02 == y.h02);
}

TEST_CASE("lowerbound example: eps = 0 keeps no crossing-free edges") {
  LabeledExample le = gen_lowerbound_example(10, 2, 0.0, 0.1, 4);
  CHECK(le.h02.empty());
  // Base is exactly E1 for k = 2.
  for (const Edge& e : le.base.edges()) {
    int in_a = 0;
    for (int v : e)
      in_a += std::binary_search(le.side_a.begin(), le.side_a.end(), v) ? 1 : 0;
    CHECK(in_a == 1);
  }
  CHECK(le.base.edge_count() == 25);  // |A| |B| = 5*5
}

TEST_CASE("lowerbound example: class sizes and partition at n=12") {
  LabeledExample le = gen_lowerbound_example(12, 2, 0.15, 0.05, 2024);
  CHECK(le.side_a.size() == 6);
  REQUIRE(le.classes.count(1) == 1);
  CHECK(le.classes.at(1).size() == 36);  // 6*6 crossing pairs

  // h02 is exactly the class-0 and class-2 content of the base.
  std::set<std::size_t> h02(le.h02.begin(), le.h02.end());
  std::size_t c0 = le.classes.count(0) ? le.classes.at(0).size() : 0;
  std::size_t c2 = le.classes.count(2) ? le.classes.at(2).size() : 0;
  CHECK(h02.size() == c0 + c2);
  for (std::size_t id : le.h02) {
    int in_a = 0;
    for (int v : le.base.edge(id))
      in_a += std::binary_search(le.side_a.begin(), le.side_a.end(), v) ? 1 : 0;
    CHECK((in_a == 0 || in_a == 2));
  }

  // Every edge lies in the class matching its |e ∩ A|.
  std::size_t classified = 0;
  for (const auto& [i, ids] : le.classes) {
    classified += ids.size();
    for (std::size_t id : ids) {
      int in_a = 0;
      for (int v : le.base.edge(id))
        in_a += std::binary_search(le.side_a.begin(), le.side_a.end(), v) ? 1 : 0;
      CHECK(in_a == i);
    }
  }
  CHECK(classified == le.base.edge_count());
  CHECK(le.base.edge_count() == 36 + h02.size());
}

TEST_CASE("generator failure modes") {
  // Target above the complete graph's codegree is a parameter violation.
  CHECK_THROWS_AS(gen_random_min_codegree(8, 2, 8, 1), InputError);
  // Exhausted retry budget is a generation failure.
  CHECK_THROWS_AS(gen_random_min_codegree(8, 2, 4, 1, 0), GenerationError);
}
