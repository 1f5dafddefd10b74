#include "oracles.hpp"

#include "permlab/errors.hpp"
#include "permlab/graph.hpp"
#include "permlab/perm.hpp"

#include <doctest.h>

using namespace permlab;

namespace {
Permutation P(const char *s) { return Permutation::parse(s); }
} // namespace

TEST_CASE("parse and print") {
  CHECK(P("3 1 4 2").str() == "3 1 4 2");
  CHECK(P("3,1,4,2") == P("3 1 4 2"));
  CHECK(P("10 1 2 3 4 5 6 7 8 9").size() == 10);
  CHECK(P("").empty());
  CHECK_THROWS_AS(P("1 1"), InvalidInput);
  CHECK_THROWS_AS(P("0 1"), InvalidInput);
  CHECK_THROWS_AS(P("1 3"), InvalidInput);
  CHECK_THROWS_AS(P("1 x"), InvalidInput);
}

TEST_CASE("canonical order is by length, then lexicographic") {
  CHECK(P("2 1") < P("1 2 3"));
  CHECK(P("1 3 2") < P("2 1 3"));
  CHECK_FALSE(P("1 2") < P("1 2"));
}

TEST_CASE("flatten") {
  CHECK(flatten(std::vector<int>{4, 1, 6, 3}) == P("3 1 4 2"));
  CHECK(flatten(std::vector<int>{9, 1, 6, 7, 2}) == P("5 1 3 4 2"));
  CHECK(flatten(std::vector<int>{5}) == P("1"));
  for (int n = 0; n <= 5; ++n)
    for (const auto &p : all_permutations(n))
      CHECK(flatten(p.values()) == p);
}

TEST_CASE("containment examples") {
  const auto occ = contains(P("3 9 1 8 6 7 4 5 2"), P("5 1 3 4 2"));
  REQUIRE(occ);
  // 9 1 6 7 2 is an occurrence; 9 1 6 7 4 is the lexicographically least one.
  CHECK(occurrence_is_valid(P("3 9 1 8 6 7 4 5 2"), P("5 1 3 4 2"), std::vector<int>{1, 2, 4, 5, 8}));
  CHECK(occ->positions == std::vector<int>{1, 2, 4, 5, 6});
  const auto self = contains(P("2 4 1 3"), P("2 4 1 3"));
  REQUIRE(self);
  CHECK(self->positions == std::vector<int>{0, 1, 2, 3});
  CHECK_FALSE(contains(P("1 2 3"), P("2 1")));
  CHECK(contains(P("1 2 3"), Permutation()));
}

TEST_CASE("containment agrees with the subset oracle on random pairs") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 400; ++t) {
    const int n = std::uniform_int_distribution<int>(1, 9)(rng);
    const int k = std::uniform_int_distribution<int>(1, n)(rng);
    const auto host = oracle::random_permutation(rng, n);
    const auto pat = oracle::random_permutation(rng, k);
    const auto occ = contains(host, pat);
    CHECK(occ.has_value() == oracle::contains(host, pat));
    if (occ) {
      CHECK(occurrence_is_valid(host, pat, occ->positions));
      CHECK(std::is_sorted(occ->positions.begin(), occ->positions.end()));
    }
  }
}

TEST_CASE("least occurrence is the lexicographically least position set") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 150; ++t) {
    const auto host = oracle::random_permutation(rng, 8);
    const auto pat = oracle::random_permutation(rng, 3);
    std::optional<std::vector<int>> least;
    oracle::for_each_subset(8, 3, [&](const std::vector<int> &idx) {
      if (least)
        return;
      std::vector<int> w;
      for (int i : idx)
        w.push_back(host[i]);
      if (oracle::rank_word(w) == oracle::word_of(pat))
        least = idx;
    });
    const auto occ = contains(host, pat);
    REQUIRE(occ.has_value() == least.has_value());
    if (occ)
      CHECK(occ->positions == *least);
  }
}

TEST_CASE("containment is a partial order on small lengths") {
  std::vector<Permutation> all;
  for (int n = 1; n <= 5; ++n)
    for (const auto &p : all_permutations(n))
      all.push_back(p);
  for (const auto &p : all)
    CHECK(is_contained(p, p));
  const auto s6 = all_permutations(6);
  for (std::size_t i = 0; i < s6.size(); i += 37)
    for (std::size_t j = 0; j < s6.size(); j += 41)
      if (i != j)
        CHECK_FALSE((is_contained(s6[i], s6[j]) && is_contained(s6[j], s6[i])));
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const auto c = oracle::random_permutation(rng, 8);
    const auto b = flatten(std::vector<int>(c.values().begin(), c.values().begin() + 6));
    const auto a = oracle::random_permutation(rng, 3);
    if (is_contained(a, b))
      CHECK(is_contained(a, c));
  }
}

TEST_CASE("sums and components") {
  CHECK(direct_sum(P("2 1"), P("1")) == P("2 1 3"));
  CHECK(direct_sum(P("1"), P("1")) == P("1 2"));
  CHECK(direct_sum(P("3 1 2"), P("2 1")) == P("3 1 2 5 4"));
  CHECK(skew_sum(P("1"), P("1")) == P("2 1"));
  CHECK(sum_components(P("2 1 3 4 6 5")) ==
        std::vector<Permutation>{P("2 1"), P("1"), P("1"), P("2 1")});
  CHECK(sum_components(P("4 1 2 5 6 3")) == std::vector<Permutation>{P("4 1 2 5 6 3")});
  CHECK(sum_components(P("1 2 3")) == std::vector<Permutation>{P("1"), P("1"), P("1")});
}

TEST_CASE("components reassemble and indecomposability matches graph connectivity") {
  for (int n = 1; n <= 7; ++n)
    for (const auto &p : all_permutations(n)) {
      const auto parts = sum_components(p);
      Permutation acc;
      for (const auto &c : parts) {
        CHECK(is_sum_indecomposable(c));
        acc = direct_sum(acc, c);
      }
      CHECK(acc == p);
      CHECK(is_sum_indecomposable(p) == inversion_graph(p).is_connected());
    }
}

TEST_CASE("patterns") {
  CHECK(patterns_of_length(P("3 1 4 2"), 3) ==
        std::vector<Permutation>{P("1 3 2"), P("2 1 3"), P("2 3 1"), P("3 1 2")});
  CHECK(patterns(P("1")) == std::vector<Permutation>{P("1")});
  CHECK(patterns(P("1 2")) == std::vector<Permutation>{P("1"), P("1 2")});
  CHECK(delete_entry(P("3 1 4 2"), 1) == P("2 3 1"));

  std::mt19937_64 rng(5);
  for (int t = 0; t < 40; ++t) {
    const auto p = oracle::random_permutation(rng, 7);
    const auto all = patterns(p);
    CHECK(std::binary_search(all.begin(), all.end(), p));
    CHECK(patterns_of_length(p, 6).size() <= 7u);
    for (int k = 1; k <= 7; ++k) {
      std::set<oracle::Word> expected = oracle::patterns_of_length(oracle::word_of(p), k);
      const auto got = patterns_of_length(p, k);
      REQUIRE(got.size() == expected.size());
      std::size_t i = 0;
      for (const auto &w : expected)
        CHECK(oracle::word_of(got[i++]) == w);
    }
  }
}

TEST_CASE("all_permutations") {
  CHECK(all_permutations(0).size() == 1);
  CHECK(all_permutations(5).size() == 120);
  const auto s4 = all_permutations(4);
  CHECK(std::is_sorted(s4.begin(), s4.end()));
}

TEST_CASE("hosts above the containment cap are refused") {
  CHECK_THROWS_AS(contains(Permutation::identity(kMaxContainmentHost + 1), P("1")), ResourceError);
}
