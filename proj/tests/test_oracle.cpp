#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dynmpc/oracle.hpp"
#include "dynmpc/rng.hpp"

using namespace dynmpc;
using namespace dynmpc::oracle;

namespace {

Graph triangle() {
  Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  return g;
}

Graph path4() {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  return g;
}

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);     // outer cycle
  for (int i = 0; i < 5; ++i) g.add_edge(5 + i, 5 + (i + 2) % 5); // pentagram
  for (int i = 0; i < 5; ++i) g.add_edge(i, 5 + i);            // spokes
  return g;
}

} // namespace

TEST_CASE("check_maximal") {
  auto g = triangle();
  CHECK(check_maximal(g, {{0, 1}}));
  auto p = path4();
  CHECK(check_maximal(p, {{1, 2}}));
  auto bad = check_maximal(p, {});
  CHECK_FALSE(bad.ok);
  CHECK(bad.witness.size() == 2);
  auto alien = check_maximal(p, {{0, 3}});
  CHECK_FALSE(alien.ok);
}

TEST_CASE("check_no_short_augmenting") {
  auto p = path4();
  auto v = check_no_short_augmenting(p, {{1, 2}});
  CHECK_FALSE(v.ok);
  REQUIRE(v.witness.size() == 4);
  CHECK(v.witness == std::vector<Word>{0, 1, 2, 3});
  Graph c4(4);
  c4.add_edge(0, 1);
  c4.add_edge(1, 2);
  c4.add_edge(2, 3);
  c4.add_edge(3, 0);
  CHECK(check_no_short_augmenting(c4, {{0, 1}, {2, 3}}));
}

TEST_CASE("same sole free neighbor on both sides is not a simple path") {
  // star: 0 matched to 1, vertex 2 adjacent to both; <2,0,1,2> is not simple
  Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  CHECK(check_no_short_augmenting(g, {{0, 1}}));
}

TEST_CASE("max matching exhaustive") {
  CHECK(max_matching_exhaustive(triangle()) == 1);
  CHECK(max_matching_exhaustive(path4()) == 2);
  CHECK(max_matching_exhaustive(petersen()) == 5);
  Graph big(30);
  for (int i = 0; i < 25; ++i) big.add_edge(i, i + 1);
  CHECK_THROWS(max_matching_exhaustive(big));
}

TEST_CASE("components oracle") {
  Graph g(3);
  auto label = components_oracle(g);
  CHECK(label == std::vector<Word>{0, 1, 2});
  g.add_edge(0, 2);
  label = components_oracle(g);
  CHECK(label[0] == label[2]);
  CHECK(label[1] != label[0]);
}

TEST_CASE("mst weights: empty and spanning tree") {
  Graph g(3);
  CHECK(mst_weight_kruskal(g) == 0);
  g.add_edge(0, 1, 5);
  g.add_edge(1, 2, 7);
  CHECK(mst_weight_kruskal(g) == 12);
  CHECK(mst_weight_prim(g) == 12);
}

TEST_CASE("kruskal and prim agree on seeded random weighted graphs") {
  Rng rng(7);
  for (int iter = 0; iter < 30; ++iter) {
    Word n = 6 + Word(rng.below(20));
    Graph g(n);
    long long edges = n + rng.below(static_cast<std::uint64_t>(2 * n));
    for (long long i = 0; i < edges; ++i) {
      Word u = Word(rng.below(n)), v = Word(rng.below(n));
      if (u == v) continue;
      g.add_edge(u, v, Word(1 + rng.below(1000)));
    }
    CHECK(mst_weight_kruskal(g) == mst_weight_prim(g));
  }
}

TEST_CASE("spanning forest check") {
  auto p = path4();
  CHECK(check_spanning_forest(p, {{0, 1}, {1, 2}, {2, 3}}));
  CHECK_FALSE(check_spanning_forest(p, {{0, 1}}).ok);        // does not span
  auto t = triangle();
  CHECK_FALSE(check_spanning_forest(t, {{0, 1}, {1, 2}, {0, 2}}).ok); // cycle
}
