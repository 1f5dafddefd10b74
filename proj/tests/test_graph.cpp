#include "oracles.hpp"

#include "permlab/errors.hpp"
#include "permlab/graph.hpp"

#include <doctest.h>

using namespace permlab;

namespace {
Permutation P(const char *s) { return Permutation::parse(s); }
using Edges = std::vector<std::pair<int, int>>;
} // namespace

TEST_CASE("inversion graph examples") {
  const auto g = inversion_graph(P("3 1 4 2"));
  CHECK(g.edges() == Edges{{0, 1}, {0, 3}, {2, 3}});
  CHECK(g.is_path());
  CHECK(inversion_graph(P("1 2 3")).edge_count() == 0);
  CHECK_FALSE(inversion_graph(P("1 2 3")).is_connected());
  CHECK(inversion_graph(P("2 1")).edges() == Edges{{0, 1}});
  CHECK(inversion_graph(Permutation::decreasing(5)).edge_count() == 10);
}

TEST_CASE("edges follow the inversion definition") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 50; ++t) {
    const auto p = oracle::random_permutation(rng, 9);
    const auto g = inversion_graph(p);
    for (int i = 0; i < 9; ++i)
      for (int j = i + 1; j < 9; ++j)
        CHECK(g.adjacent(i, j) == (p[i] > p[j]));
  }
}

TEST_CASE("induced subgraph search") {
  CHECK(is_induced_subgraph(InversionGraph::path(3), InversionGraph::path(5)));
  CHECK_FALSE(is_induced_subgraph(InversionGraph::complete(3), InversionGraph::path(5)));
  CHECK(is_induced_subgraph(inversion_graph(P("2 3 1")), inversion_graph(P("3 1 4 2"))));
  CHECK_FALSE(is_induced_subgraph(InversionGraph::path(4), InversionGraph::complete(4)));
  CHECK_THROWS_AS(is_induced_subgraph(InversionGraph::path(2), InversionGraph::path(40)), ResourceError);
}

TEST_CASE("containment transports to induced subgraphs") {
  std::mt19937_64 rng(13);
  int contained = 0;
  for (int t = 0; t < 300; ++t) {
    const int n = std::uniform_int_distribution<int>(2, 8)(rng);
    const auto host = oracle::random_permutation(rng, n);
    const auto pat = oracle::random_permutation(rng, std::uniform_int_distribution<int>(1, n)(rng));
    if (!oracle::contains(host, pat))
      continue;
    ++contained;
    CHECK(is_induced_subgraph(inversion_graph(pat), inversion_graph(host)));
  }
  CHECK(contained > 50);
}

TEST_CASE("the converse fails: 21 and 12 ⊕ ... share graphs up to isomorphism") {
  // 231 and 312 have isomorphic inversion graphs (paths on 3 vertices), yet
  // neither contains the other.
  CHECK(is_induced_subgraph(inversion_graph(P("2 3 1")), inversion_graph(P("3 1 2"))));
  CHECK_FALSE(is_contained(P("2 3 1"), P("3 1 2")));
}

TEST_CASE("dot output lists 1-based vertices and edges") {
  const std::string dot = inversion_graph(P("2 1")).dot();
  CHECK(dot.find("1 -- 2;") != std::string::npos);
  CHECK(dot.rfind("graph G {", 0) == 0);
}
