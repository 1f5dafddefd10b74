#include "permlab/closure.hpp"
#include "permlab/genfun.hpp"

#include <doctest.h>

using namespace permlab;

namespace {
Permutation P(const char *s) { return Permutation::parse(s); }

AntichainSpec default_spec() { return AntichainSpec::from_tau(3, P("2 1"), P("1 2 3 4")); }
} // namespace

TEST_CASE("grammar reproduces the exhaustive closure") {
  const std::vector<AntichainSpec> specs{default_spec(),
                                         AntichainSpec::from_tau(3, P("1 2"), P("4 3 2 1")),
                                         AntichainSpec::from_tau(4, P("1 3 2"), P("1 2 3 4 5"))};
  for (const auto &spec : specs) {
    const int n_max = 9;
    const auto exhaustive = element_pattern_table(spec, n_max, default_cutoff(spec, n_max));
    GrammarOptions opt;
    opt.closure = &exhaustive;
    const auto g = grammar_generate(spec, n_max, opt);
    CHECK(g.table.same_sets(exhaustive));
    for (int n = 1; n <= n_max; ++n) {
      CHECK(g.distinct[n] == exhaustive.count(n));
      CHECK(g.raw[n] >= g.distinct[n]);
      CHECK(g.raw[n] == g.two_anchor_raw[n] + g.sum_raw[n]);
    }
  }
}

TEST_CASE("raw generation counts follow the closed form") {
  const auto spec = default_spec();
  const auto g = grammar_generate(spec, 10);
  const auto s = series_expand(gf_closure_paper(spec).total, 10);
  for (int n = 1; n <= 10; ++n)
    CHECK(g.raw[n] == s.at(n));

  // Four generation events cover the two members of length 2.
  CHECK(g.raw[2] == 4);
  CHECK(g.distinct[2] == 2);
  CHECK(g.repeated_members[4] > 0);
  CHECK(g.max_multiplicity[4] >= 2);

  // Two-anchor members need both anchors plus two fills from the closure of A.
  for (int n = 1; n < 10; ++n)
    CHECK(g.two_anchor_raw[n] == 0);
  CHECK(g.two_anchor_raw[10] > 0);
}

TEST_CASE("admissibility decisions are recorded") {
  const auto g = grammar_generate(default_spec(), 8);
  REQUIRE_FALSE(g.candidates.empty());
  bool some_beginning = false, some_ending = false;
  for (const auto &c : g.candidates) {
    CHECK((c.role == "beginning" || c.role == "ending"));
    some_beginning = some_beginning || (c.role == "beginning" && c.admissible);
    some_ending = some_ending || (c.role == "ending" && c.admissible);
    CHECK(c.admissible == !c.rejected_by.has_value());
    CHECK(c.anchor_position >= 0);
    CHECK(c.anchor_position < c.oscillation.size());
  }
  CHECK(some_beginning);
  CHECK(some_ending);
}

TEST_CASE("reconciliation on a short range") {
  ClosureOptions opt;
  const auto r = reconcile_report(default_spec(), 8, opt);
  CHECK(r.stable);
  CHECK(r.sets_equal);
  CHECK(r.soundness.ok());
  REQUIRE(r.rows.size() == 8);
  const std::vector<long long> brute{1, 2, 6, 23, 85, 293, 956, 3049};
  const std::vector<long long> raw{1, 4, 14, 55, 200, 723, 2591, 9316};
  for (int i = 0; i < 8; ++i) {
    CHECK(r.rows[i].n == i + 1);
    CHECK(r.rows[i].brute == brute[i]);
    CHECK(r.rows[i].grammar_distinct == brute[i]);
    CHECK(r.rows[i].grammar_raw == raw[i]);
    CHECK(r.rows[i].paper_gf == raw[i]);
  }
}
