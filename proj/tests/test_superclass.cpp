#include "oracles.hpp"

#include "permlab/errors.hpp"
#include "permlab/superclass.hpp"

#include <doctest.h>

using namespace permlab;

namespace {
Permutation P(const char *s) { return Permutation::parse(s); }
AntichainSpec default_spec() { return AntichainSpec::from_tau(3, P("2 1"), P("1 2 3 4")); }
} // namespace

TEST_CASE("class specs") {
  CHECK_THROWS_AS(ClassSpec::make({}), InvalidInput);
  CHECK_THROWS_AS(ClassSpec::make({P("1 2"), P("1 2 3")}), InvalidInput);
  const auto c = ClassSpec::make({P("2 3 1")});
  CHECK(c.contains(P("3 1 2")));
  CHECK_FALSE(c.contains(P("2 4 1 3")));
  CHECK(c.contains(Permutation()));
}

TEST_CASE("avoider layers") {
  const auto catalan = avoider_layers(ClassSpec::make({P("2 3 1")}), 9);
  const std::vector<std::size_t> expected{1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862};
  for (int n = 0; n <= 9; ++n)
    CHECK(catalan[n].size() == expected[n]);
  const auto empty = avoider_layers(ClassSpec::make({P("1 2"), P("2 1")}), 4);
  CHECK(empty[1].size() == 1);
  CHECK(empty[2].empty());
  CHECK(empty[4].empty());

  const std::vector<Permutation> basis{P("3 2 1"), P("2 4 1 3")};
  const auto cls = ClassSpec::make(basis);
  for (int n = 1; n <= 7; ++n) {
    std::size_t count = 0;
    for (const auto &w : oracle::all_words(n)) {
      bool avoids = true;
      for (const auto &b : basis)
        avoids = avoids && !oracle::contains(Permutation(w), b);
      count += avoids;
    }
    CHECK(avoiders(cls, n).size() == count);
  }
}

TEST_CASE("conditions") {
  const auto ok = check_conditions(ClassSpec::make({P("1 2")}), default_spec(), 10);
  CHECK(ok.ok());
  CHECK(ok.class_growth_estimate == doctest::Approx(1.0));
  CHECK(ok.antichain_growth > 1.3);

  const auto inside = check_conditions(ClassSpec::make({P("3 2 1")}), default_spec(), 8);
  CHECK_FALSE(inside.anchor_outside_class.passed);
  const auto big = check_conditions(ClassSpec::make({P("1 2 3 4 5")}), default_spec(), 8);
  CHECK_FALSE(big.growth_exceeds_class.passed);
}

TEST_CASE("failed conditions stop the construction") {
  const auto r = build_rational_superclass(ClassSpec::make({P("3 2 1")}), default_spec(), 8);
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.failure.empty());
}

TEST_CASE("rational superclass of the decreasing permutations") {
  const auto cls = ClassSpec::make({P("1 2")});
  const auto r = build_rational_superclass(cls, default_spec(), 13);
  CHECK(r.ok());
  REQUIRE(r.threshold);
  CHECK(*r.threshold == 12);
  CHECK(r.closure_stable);
  CHECK(r.class_disjoint_from_antichain);
  CHECK(r.class_contained);
  CHECK_FALSE(r.closure_violation);
  CHECK(r.removed_are_maximal);
  CHECK(r.counts_match_closure);
  CHECK(r.removed.size() == 2);
  for (const auto &x : r.removed)
    CHECK(x.size() >= 12);
  REQUIRE(r.rows.size() == 13);
  for (const auto &row : r.rows) {
    CHECK(row.class_count == 1);
    if (row.n >= 5)
      CHECK(row.overlap == 0);
    if (row.n >= 12) {
      CHECK(row.removed == 1);
      CHECK(row.rational_count == row.closure_count);
      CHECK(row.literal_removed == row.removed);
    } else {
      CHECK(row.removed == 0);
      CHECK(row.rational_count == row.closure_count + row.class_outside);
    }
  }

  SuperclassOptions literal;
  literal.paper_literal_removal = true;
  const auto l = build_rational_superclass(cls, default_spec(), 13, literal);
  CHECK(l.ok());
  CHECK(l.removed == r.removed);
}
