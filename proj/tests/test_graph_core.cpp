#include <doctest.h>

#include <random>

#include "swg/graph.hpp"
#include "oracles.hpp"

using namespace swg;
using namespace swg::testing;

TEST_CASE("make_graph basics") {
  CHECK(make_graph(3, {{0, 1}}).edge_count() == 1);
  CHECK(make_graph(3, {{0, 1}, {1, 0}}).edge_count() == 1);  // duplicate collapses
  CHECK_THROWS_AS(make_graph(4, {{0, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(make_graph(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(17), std::invalid_argument);
}

TEST_CASE("named families") {
  CHECK(complete(6).edge_count() == 15);
  CHECK(empty_graph(6).edge_count() == 0);
  Graph l6 = path(6);
  CHECK(l6.edge_count() == 5);
  CHECK(l6.degree_sequence() == std::vector<int>{1, 1, 2, 2, 2, 2});
  Graph c5 = cycle(5);
  CHECK(c5.edge_count() == 5);
  for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);
  CHECK_THROWS_AS(cycle(2), std::invalid_argument);
}

TEST_CASE("complete_bipartite") {
  CHECK(complete_bipartite(6, 0) == empty_graph(6));
  Graph star = complete_bipartite(6, vset({0}));
  CHECK(star.edge_count() == 5);
  CHECK(star.degree(0) == 5);
  Graph k22 = complete_bipartite(4, vset({0, 1}));
  CHECK(k22.edge_count() == 4);
  CHECK(k22 == complete_bipartite(4, vset({2, 3})));
}

TEST_CASE("symmetric difference") {
  // K_X minus a spanning bipartite graph leaves two cliques
  Graph g = symmetric_difference(complete(4), complete_bipartite(4, vset({0, 1})));
  CHECK(g == make_graph(4, {{0, 1}, {2, 3}}));

  Graph r = make_graph(5, {{0, 2}, {1, 4}, {3, 4}});
  CHECK(symmetric_difference(r, r) == empty_graph(5));

  Graph lhs = symmetric_difference(complete_bipartite(4, vset({0, 1})),
                                   complete_bipartite(4, vset({1, 2})));
  CHECK(lhs == complete_bipartite(4, vset({0, 2})));

  CHECK_THROWS_AS(symmetric_difference(complete(3), complete(4)), std::invalid_argument);
}

TEST_CASE("disjoint_union") {
  Graph g = disjoint_union(path(3), path(3));
  CHECK(g.order() == 6);
  CHECK(g.edge_count() == 4);
  CHECK(g.has_edge(3, 4));
  CHECK_FALSE(g.has_edge(2, 3));

  Graph padded = disjoint_union(cycle(3), empty_graph(2));
  CHECK(padded.order() == 5);
  CHECK(padded.edge_count() == 3);

  CHECK(disjoint_union(complete(2), complete(2)) == make_graph(4, {{0, 1}, {2, 3}}));
  CHECK_THROWS_AS(disjoint_union(complete(9), complete(8)), std::invalid_argument);
}

TEST_CASE("complement") {
  CHECK(complement(complete(5)) == empty_graph(5));
  CHECK(complement(empty_graph(5)) == complete(5));
  CHECK(iso_oracle(complement(cycle(5)), cycle(5)));  // C_5 self-complementary
  CHECK(iso_oracle(complement(path(4)), path(4)));    // L_4 self-complementary
  std::mt19937 rng(7);
  for (int t = 0; t < 20; ++t) {
    Graph g = random_graph(8, rng);
    CHECK(complement(complement(g)) == g);
  }
}

TEST_CASE("induced subgraphs") {
  CHECK(induced(path(6), vset({0, 1, 2})) == path(3));
  CHECK(induced(path(4), vset({0, 1, 3})) == make_graph(3, {{0, 1}}));
  CHECK(induced(cycle(6), vset({0, 1, 3, 4})) == make_graph(4, {{0, 1}, {2, 3}}));
  CHECK_THROWS_AS(induced(path(4), vset({0, 5})), std::invalid_argument);
}

TEST_CASE("symmetric difference group laws") {
  // exhaustive on n <= 4
  for (int n = 2; n <= 4; ++n) {
    std::uint64_t total = std::uint64_t{1} << pair_count(n);
    for (std::uint64_t a = 0; a < total; ++a)
      for (std::uint64_t b = 0; b < total; ++b) {
        Graph ga(n, EdgeBits{a, 0}), gb(n, EdgeBits{b, 0});
        CHECK(symmetric_difference(ga, gb) == symmetric_difference(gb, ga));
        CHECK(symmetric_difference(ga, ga) == empty_graph(n));
        CHECK(symmetric_difference(empty_graph(n), ga) == ga);
      }
    for (std::uint64_t a = 0; a < total; a += 7)
      for (std::uint64_t b = 0; b < total; b += 5)
        for (std::uint64_t c = 0; c < total; c += 3) {
          Graph ga(n, EdgeBits{a, 0}), gb(n, EdgeBits{b, 0}), gc(n, EdgeBits{c, 0});
          CHECK(symmetric_difference(symmetric_difference(ga, gb), gc) ==
                symmetric_difference(ga, symmetric_difference(gb, gc)));
        }
  }
  // randomized up to the size limit
  std::mt19937 rng(11);
  for (int t = 0; t < 500; ++t) {
    int n = 5 + static_cast<int>(rng() % 12);
    Graph a = random_graph(n, rng), b = random_graph(n, rng), c = random_graph(n, rng);
    CHECK(symmetric_difference(symmetric_difference(a, b), c) ==
          symmetric_difference(a, symmetric_difference(b, c)));
    CHECK(symmetric_difference(a, b) == symmetric_difference(b, a));
    CHECK(symmetric_difference(a, a) == empty_graph(n));
  }
}

TEST_CASE("bipartite switch algebra identities") {
  for (int n = 1; n <= 6; ++n) {
    VertexSet limit = VertexSet{1} << n;
    for (VertexSet a = 0; a < limit; ++a) {
      // K_X minus K_{A,X\A} splits into the two cliques
      Graph expect;
      {
        Graph inner = complete_on(n, a);
        Graph outer = complete_on(n, static_cast<VertexSet>(~a & (limit - 1)));
        expect = Graph(n, inner.bits() | outer.bits());
      }
      CHECK(symmetric_difference(complete(n), complete_bipartite(n, a)) == expect);

      // (K_A padded) minus K_{A,X\A} is the complement of (K_{X\A} padded)
      Graph lhs = symmetric_difference(complete_on(n, a), complete_bipartite(n, a));
      Graph rhs = complement(complete_on(n, static_cast<VertexSet>(~a & (limit - 1))));
      CHECK(lhs == rhs);

      for (VertexSet b = 0; b < limit; ++b)
        CHECK(symmetric_difference(complete_bipartite(n, a), complete_bipartite(n, b)) ==
              complete_bipartite(n, a ^ b));
    }
  }
}

TEST_CASE("edge count under symmetric difference") {
  std::mt19937 rng(13);
  for (int t = 0; t < 200; ++t) {
    int n = 2 + static_cast<int>(rng() % 15);
    Graph a = random_graph(n, rng), b = random_graph(n, rng);
    int inter = (a.bits() & b.bits()).count();
    CHECK(symmetric_difference(a, b).edge_count() ==
          a.edge_count() + b.edge_count() - 2 * inter);
  }
}
