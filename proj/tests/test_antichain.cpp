#include "oracles.hpp"

#include "permlab/antichain.hpp"
#include "permlab/errors.hpp"
#include "permlab/oscillation.hpp"

#include <doctest.h>

using namespace permlab;

namespace {
Permutation P(const char *s) { return Permutation::parse(s); }

std::vector<oracle::Word> words(const std::vector<Permutation> &ps) {
  std::vector<oracle::Word> out;
  for (const auto &p : ps)
    out.push_back(oracle::word_of(p));
  return out;
}

bool failed(const ValidationReport &r, const std::string &name) {
  for (const auto &c : r.checks)
    if (c.name == name)
      return !c.passed;
  FAIL("no check named " << name);
  return false;
}
} // namespace

TEST_CASE("A_tau examples") {
  CHECK(make_A_tau(3, P("2 1")) == std::vector<Permutation>{P("2 1"), P("1 2 3")});
  CHECK(make_A_tau(3, P("1 2")) == std::vector<Permutation>{P("1 2"), P("3 2 1")});
  CHECK_THROWS_AS(make_A_tau(3, P("1 2 3")), InvalidInput);
  CHECK_THROWS_AS(make_A_tau(2, P("1")), InvalidInput);
}

TEST_CASE("A_tau is tau plus the permutations of length k avoiding it") {
  for (int k = 3; k <= 6; ++k)
    for (const auto &tau : all_permutations(k - 1)) {
      const auto A = make_A_tau(k, tau);
      std::size_t avoiders = 0;
      for (const auto &w : oracle::all_words(k))
        avoiders += !oracle::contains(Permutation(w), tau);
      CHECK(A.size() == avoiders + 1);
      CHECK(A.front() == tau);
      CHECK(verify_pairwise(A).passed);
    }
}

TEST_CASE("spec validation") {
  const auto good = AntichainSpec::from_tau(3, P("2 1"), P("1 2 3 4"));
  CHECK(validate_spec(good).ok());
  CHECK(good.min_element_length() == 12);
  CHECK(good.in_A(P("1 2 3")));
  CHECK_FALSE(good.in_A(P("1 3 2")));

  const auto tau_inside = AntichainSpec::from_tau(3, P("2 1"), P("1 2 4 3"));
  CHECK_FALSE(validate_spec(tau_inside).ok());
  CHECK(failed(validate_spec(tau_inside), "tau not contained in alpha"));

  const auto chain = AntichainSpec::make(3, P("4 3 2 1"), {P("1 2"), P("1 2 3")});
  CHECK_FALSE(validate_spec(chain).ok());

  CHECK(validate_spec(AntichainSpec::split_end_paths()).ok());
  CHECK(good.fingerprint() != tau_inside.fingerprint());
}

TEST_CASE("endpoint positions hold the least and the greatest or last entry") {
  for (int m = 4; m <= 14; ++m) {
    const auto s = sigma(m);
    const auto [a, b] = endpoint_positions(m);
    CHECK(s[a] == 1);
    if (m % 2 == 0)
      CHECK(s[b] == m);
    else
      CHECK(b == m - 1);
  }
}

TEST_CASE("elements match the substitution oracle") {
  const auto spec = AntichainSpec::from_tau(3, P("2 1"), P("1 2 3 4"));
  const std::vector<oracle::Word> A = words(spec.A);
  for (int n = 1; n <= 15; ++n) {
    const auto got = elements_of_length(spec, n);
    const auto expected = oracle::elements_of_length(A, oracle::word_of(spec.alpha), n);
    REQUIRE(got.size() == expected.size());
    std::size_t i = 0;
    for (const auto &w : expected)
      CHECK(oracle::word_of(got[i++]) == w);
  }
  const auto split = AntichainSpec::split_end_paths();
  for (int n = 1; n <= 14; ++n)
    CHECK(elements_of_length(split, n).size() ==
          oracle::elements_of_length({{1}}, {1, 2}, n).size());
}

TEST_CASE("element counts of the default family") {
  const auto spec = AntichainSpec::from_tau(3, P("2 1"), P("1 2 3 4"));
  const std::vector<std::size_t> expected{1, 2, 2, 3, 4};
  for (int n = 0; n < 12; ++n)
    CHECK(elements_of_length(spec, n).empty());
  for (int i = 0; i < 5; ++i)
    CHECK(elements_of_length(spec, 12 + i).size() == expected[i]);
  CHECK(elements_of_length(spec, 12).front() == build_element(spec, ElementId{4, {P("2 1"), P("2 1")}}));
}

TEST_CASE("identified elements rebuild") {
  const auto spec = AntichainSpec::from_tau(3, P("1 2"), P("2 3 4 1"));
  for (int n = 12; n <= 16; ++n)
    for (const auto &[id, perm] : identified_elements_of_length(spec, n)) {
      CHECK(build_element(spec, id) == perm);
      CHECK(perm.size() == n);
    }
}

TEST_CASE("families are antichains") {
  CHECK(verify_antichain(AntichainSpec::split_end_paths(), 16).passed);
  const auto r = verify_antichain(AntichainSpec::from_tau(3, P("2 1"), P("1 2 3 4")), 16);
  CHECK(r.passed);
  CHECK(r.elements == 12);

  // Independent confirmation on short elements with the subset oracle.
  const auto els = elements_up_to(AntichainSpec::split_end_paths(), 11);
  REQUIRE(els.size() >= 4);
  for (std::size_t i = 0; i < els.size(); ++i)
    for (std::size_t j = 0; j < els.size(); ++j)
      if (i != j && els[i].size() <= els[j].size())
        CHECK_FALSE(oracle::contains(els[j], els[i]));
}

TEST_CASE("pairwise check reports the offending pair") {
  const auto r = verify_pairwise({P("2 1"), P("3 1 2"), P("1 2 3")});
  CHECK_FALSE(r.passed);
  REQUIRE(r.offending);
  CHECK(r.offending->first == P("2 1"));
  CHECK(r.offending->second == P("3 1 2"));
}
