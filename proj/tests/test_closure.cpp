#include "oracles.hpp"

#include "permlab/closure.hpp"
#include "permlab/errors.hpp"

#include <doctest.h>

#include <filesystem>

using namespace permlab;

namespace {
Permutation P(const char *s) { return Permutation::parse(s); }

std::vector<oracle::Word> words(const std::vector<Permutation> &ps) {
  std::vector<oracle::Word> out;
  for (const auto &p : ps)
    out.push_back(oracle::word_of(p));
  return out;
}

void check_against_oracle(const AntichainSpec &spec, int n_max, int cutoff) {
  const auto table = element_pattern_table(spec, n_max, cutoff);
  const auto expected = oracle::closure(words(spec.A), oracle::word_of(spec.alpha), n_max, cutoff);
  for (int n = 1; n <= n_max; ++n) {
    REQUIRE(table.count(n) == expected[n].size());
    std::size_t i = 0;
    for (const auto &w : expected[n])
      CHECK(oracle::word_of(unpack_perm(table.layers[n][i++], n)) == w);
  }
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("permlab-test-" + std::to_string(std::random_device{}()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};
} // namespace

TEST_CASE("downset of explicit seeds") {
  const auto t = downset({P("3 1 4 2")}, 4);
  CHECK(t.counts() == std::vector<std::size_t>{1, 2, 4, 1});
  CHECK(t.contains(P("2 3 1")));
  CHECK_FALSE(t.contains(P("1 2 3")));
  const auto u = downset({P("1 2 3"), P("2 1")}, 3);
  CHECK(u.members(2) == std::vector<Permutation>{P("1 2"), P("2 1")});
  CHECK(u.members(3) == std::vector<Permutation>{P("1 2 3")});
  // Seeds longer than n_max contribute their short patterns only.
  CHECK(downset({P("2 4 1 3 6 5")}, 2).counts() == std::vector<std::size_t>{1, 2});
  CHECK_FALSE(downward_closure_violation(t));
}

TEST_CASE("downset agrees with pattern enumeration") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 20; ++t) {
    std::vector<Permutation> seed;
    for (int i = 0; i < 3; ++i)
      seed.push_back(oracle::random_permutation(rng, std::uniform_int_distribution<int>(3, 9)(rng)));
    const auto table = downset(seed, 6);
    for (int n = 1; n <= 6; ++n) {
      std::set<oracle::Word> expected;
      for (const auto &s : seed)
        for (auto &w : oracle::patterns_of_length(oracle::word_of(s), n))
          expected.insert(w);
      CHECK(table.count(n) == expected.size());
    }
  }
}

TEST_CASE("closure violations are found") {
  ClosureTable t = downset({P("2 1 3")}, 3);
  t.layers[2].erase(std::find(t.layers[2].begin(), t.layers[2].end(), pack(P("2 1"))));
  const auto v = downward_closure_violation(t);
  REQUIRE(v);
  CHECK(*v == P("2 1 3"));
}

TEST_CASE("element pattern tables match the oracle closure") {
  check_against_oracle(AntichainSpec::from_tau(3, P("2 1"), P("1 2 3 4")), 8, 16);
  check_against_oracle(AntichainSpec::from_tau(3, P("1 2"), P("4 3 2 1")), 7, 15);
  check_against_oracle(AntichainSpec::split_end_paths(), 9, 17);
}

TEST_CASE("closure counts for the default parameters") {
  const auto spec = AntichainSpec::from_tau(3, P("2 1"), P("1 2 3 4"));
  const auto c = closure_counts(spec, 9);
  CHECK(c.cutoff == default_cutoff(spec, 9));
  CHECK(c.stability_checked);
  CHECK(c.stable);
  const std::vector<std::size_t> expected{1, 2, 6, 23, 85, 293, 956, 3049, 9730};
  CHECK(c.table.counts() == expected);
  CHECK(c.recheck_counts == expected);
  CHECK_FALSE(downward_closure_violation(c.table));
  CHECK(c.counts.coeffs.front() == 1);
}

TEST_CASE("membership") {
  const auto spec = AntichainSpec::from_tau(3, P("2 1"), P("1 2 3 4"));
  const int cutoff = default_cutoff(spec, 8);
  const auto table = element_pattern_table(spec, 8, cutoff);
  for (int n = 1; n <= 6; ++n)
    for (const auto &p : all_permutations(n))
      CHECK(in_closure(p, spec, cutoff) == table.contains(p));
  CHECK(in_closure(Permutation(), spec, cutoff));
  for (const auto &e : elements_of_length(spec, 20))
    CHECK(in_closure(e, spec, 20));
  CHECK_FALSE(in_closure(elements_of_length(spec, 20).front(), spec, 19));
}

TEST_CASE("witnesses are genuine occurrences") {
  const auto spec = AntichainSpec::from_tau(3, P("2 1"), P("1 2 3 4"));
  const auto table = element_pattern_table(spec, 7, 25);
  const auto witnesses = closure_witnesses(spec, 25, 7, table.layers[7]);
  for (std::size_t i = 0; i < witnesses.size(); ++i) {
    REQUIRE(witnesses[i]);
    const auto &w = *witnesses[i];
    CHECK(w.host == build_element(spec, w.element));
    CHECK(oracle::contains(w.host, unpack_perm(table.layers[7][i], 7)));
    CHECK(occurrence_is_valid(w.host, unpack_perm(table.layers[7][i], 7), w.positions));
  }
  const auto missing = closure_witnesses(spec, 25, 5, {pack(P("5 4 3 2 1"))});
  CHECK_FALSE(missing[0]);
  CHECK(verify_soundness(spec, table, 25).ok());
}

TEST_CASE("tables persist and reload") {
  TempDir tmp;
  const auto spec = AntichainSpec::from_tau(3, P("2 1"), P("1 2 3 4"));
  ClosureOptions opt;
  opt.cache_dir = tmp.path.string();
  const auto first = closure_counts(spec, 8, opt);
  CHECK_FALSE(first.from_cache);
  const auto second = closure_counts(spec, 8, opt);
  CHECK(second.from_cache);
  CHECK(second.table.same_sets(first.table));

  const std::string dir = (tmp.path / table_address(spec, 8, first.cutoff)).string();
  CHECK(load_table(dir, spec.fingerprint(), 8, first.cutoff));
  CHECK_FALSE(load_table(dir, "k=9", 8, first.cutoff));
  CHECK_FALSE(load_table(dir, spec.fingerprint(), 7, first.cutoff));
  CHECK(table_address(spec, 8, 36) != table_address(spec, 8, 40));
}

TEST_CASE("argument checks") {
  const auto spec = AntichainSpec::from_tau(3, P("2 1"), P("1 2 3 4"));
  CHECK_THROWS_AS(closure_problem(spec, 17, 40), InvalidInput);
  CHECK_THROWS_AS(closure_problem(spec, 10, 9), InvalidInput);
  CHECK_THROWS_AS(downset({P("1")}, 17), ResourceError);
}
