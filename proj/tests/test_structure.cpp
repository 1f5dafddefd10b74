#include "oracles.hpp"

#include "permlab/oscillation.hpp"
#include "permlab/structure.hpp"

#include <doctest.h>

using namespace permlab;

namespace {
Permutation P(const char *s) { return Permutation::parse(s); }

bool window_is_interval(const Permutation &p, int s, int e) {
  int lo = p[s], hi = p[s];
  for (int i = s; i <= e; ++i) {
    lo = std::min(lo, p[i]);
    hi = std::max(hi, p[i]);
  }
  return hi - lo == e - s;
}

bool simple_by_definition(const Permutation &p) {
  const int n = p.size();
  for (int s = 0; s < n; ++s)
    for (int e = s + 1; e < n; ++e)
      if (e - s + 1 < n && window_is_interval(p, s, e))
        return false;
  return true;
}
} // namespace

TEST_CASE("proper intervals") {
  CHECK(proper_intervals(P("2 4 1 3")).empty());
  const auto iv = proper_intervals(P("4 7 9 8 3 2 1 5 6"));
  CHECK(std::find(iv.begin(), iv.end(), Interval{2, 4}) != iv.end());
  CHECK(std::find(iv.begin(), iv.end(), Interval{5, 7}) != iv.end());
  CHECK(proper_intervals(P("1 2 3")) == std::vector<Interval>{{1, 2}, {2, 3}});
}

TEST_CASE("simplicity") {
  CHECK(is_simple(P("3 1 4 2")));
  CHECK_FALSE(is_simple(P("1 2 3 4")));
  CHECK(is_simple(P("1")));
  // Simple permutations by length: 1, 2, 0, 2, 6, 46, 338.
  const std::vector<std::size_t> expected{0, 1, 2, 0, 2, 6, 46, 338};
  for (int n = 1; n <= 7; ++n) {
    std::size_t count = 0;
    for (const auto &p : all_permutations(n)) {
      CHECK(is_simple(p) == simple_by_definition(p));
      count += is_simple(p);
    }
    CHECK(count == expected[n]);
  }
}

TEST_CASE("inflation examples") {
  CHECK(inflate(P("2 4 1 3"), std::vector<Permutation>{P("1"), P("1 3 2"), P("3 2 1"), P("1 2")}) ==
        P("4 7 9 8 3 2 1 5 6"));
  CHECK(inflate(P("3 1 4 2"), std::vector<Permutation>{P("1 3 2"), P("2 1"), P("1"), P("1 2 3")}) ==
        P("6 8 7 2 1 9 3 4 5"));
  const auto s = P("3 1 5 2 4");
  CHECK(inflate(s, std::vector<Permutation>(5, P("1"))) == s);
}

TEST_CASE("simple quotient examples") {
  const auto d1 = simple_quotient(P("4 7 9 8 3 2 1 5 6"));
  CHECK(d1.quotient == P("2 4 1 3"));
  CHECK(d1.blocks == std::vector<Permutation>{P("1"), P("1 3 2"), P("3 2 1"), P("1 2")});
  const auto d2 = simple_quotient(P("6 8 7 2 1 9 3 4 5"));
  CHECK(d2.quotient == P("3 1 4 2"));
  CHECK(d2.blocks == std::vector<Permutation>{P("1 3 2"), P("2 1"), P("1"), P("1 2 3")});
  const auto d3 = simple_quotient(P("3 1 4 2"));
  CHECK(d3.blocks == std::vector<Permutation>(4, P("1")));
  const auto d4 = simple_quotient(P("2 1 3 5 4"));
  CHECK(d4.quotient == P("1 2"));
  CHECK(d4.blocks == std::vector<Permutation>{P("2 1"), P("1 3 2")});
  const auto d5 = simple_quotient(P("4 5 3 1 2"));
  CHECK(d5.quotient == P("2 1"));
}

TEST_CASE("round trip through the decomposition, exhaustive to length 7") {
  for (int n = 1; n <= 7; ++n)
    for (const auto &p : all_permutations(n)) {
      const auto d = simple_quotient(p);
      CHECK(inflate(d.quotient, d.blocks) == p);
      CHECK((d.quotient.size() <= 2 || is_simple(d.quotient)));
    }
}

TEST_CASE("decomposition of a simple inflation is unique") {
  std::mt19937_64 rng(17);
  std::vector<Permutation> simples;
  for (int n = 4; n <= 6; ++n)
    for (const auto &p : all_permutations(n))
      if (is_simple(p))
        simples.push_back(p);
  for (int t = 0; t < 200; ++t) {
    const auto &q = simples[std::uniform_int_distribution<std::size_t>(0, simples.size() - 1)(rng)];
    std::vector<Permutation> blocks;
    for (int i = 0; i < q.size(); ++i)
      blocks.push_back(oracle::random_permutation(rng, std::uniform_int_distribution<int>(1, 3)(rng)));
    const auto d = simple_quotient(inflate(q, blocks));
    CHECK(d.quotient == q);
    CHECK(d.blocks == blocks);
  }
}

TEST_CASE("sigma_m is simple") {
  for (int m = 4; m <= 14; ++m)
    CHECK(is_simple(sigma(m)));
}

TEST_CASE("inflation agrees with the oracle substitution") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 100; ++t) {
    const auto q = oracle::random_permutation(rng, 5);
    std::vector<Permutation> blocks;
    std::vector<oracle::Word> words;
    for (int i = 0; i < 5; ++i) {
      blocks.push_back(oracle::random_permutation(rng, std::uniform_int_distribution<int>(1, 3)(rng)));
      words.push_back(oracle::word_of(blocks.back()));
    }
    CHECK(oracle::word_of(inflate(q, blocks)) == oracle::substitute(oracle::word_of(q), words));
  }
}
