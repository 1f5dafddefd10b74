#include "permlab/errors.hpp"
#include "permlab/io.hpp"

#include <doctest.h>

#include <sstream>

using namespace permlab;
using permlab::io::json;

namespace {
Permutation P(const char *s) { return Permutation::parse(s); }
} // namespace

TEST_CASE("permutation lists") {
  std::istringstream in("# header\n3 1 4 2\n\n2,1\n  \n1\n");
  const auto ps = io::read_permutations(in);
  CHECK(ps == std::vector<Permutation>{P("3 1 4 2"), P("2 1"), P("1")});

  std::ostringstream out;
  io::write_permutations(out, ps);
  CHECK(out.str() == "3 1 4 2\n2 1\n1\n");
  std::istringstream back(out.str());
  CHECK(io::read_permutations(back) == ps);

  std::istringstream bad("1 2\n2 2\n");
  try {
    io::read_permutations(bad);
    FAIL("expected InvalidInput");
  } catch (const InvalidInput &e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(io::read_permutation_file("/nonexistent/permlab.txt"), InvalidInput);
}

TEST_CASE("integer lists") {
  CHECK(io::parse_integer_list("1,-1,0,2") == std::vector<BigInt>{1, -1, 0, 2});
  CHECK(io::parse_integer_list("1 2  3") == std::vector<BigInt>{1, 2, 3});
  CHECK(io::parse_integer_list("123456789012345678901234567890").front() ==
        BigInt("123456789012345678901234567890"));
  CHECK_THROWS_AS(io::parse_integer_list("1,x"), InvalidInput);
}

TEST_CASE("json forms") {
  CHECK(io::to_json(P("3 1 4 2")) == json::parse("[3,1,4,2]"));
  CHECK(io::to_json(BigInt(-7)) == "-7");
  CHECK(io::to_json(Poly{1, 0, -1}) == json::parse(R"(["1","0","-1"])"));
  const auto gf = io::to_json(RationalGF(Poly{0, 1}, Poly{1, -1}));
  CHECK(gf["num"] == json::parse(R"(["0","1"])"));
  CHECK(gf["den"] == json::parse(R"(["1","-1"])"));
  CHECK(gf["text"].is_string());

  const auto g = io::to_json(inversion_graph(P("3 1 4 2")));
  CHECK(g["vertices"] == 4);
  CHECK(g["edges"] == json::parse("[[1,2],[1,4],[3,4]]"));
  CHECK(g["is_path"] == true);

  const auto d = io::to_json(simple_quotient(P("2 1 3 5 4")));
  CHECK(d["quotient"] == json::parse("[1,2]"));
  CHECK(d["blocks"] == json::parse("[[2,1],[1,3,2]]"));

  const auto spec = io::to_json(AntichainSpec::from_tau(3, P("2 1"), P("1 2 3 4")));
  CHECK(spec["k"] == 3);
  CHECK(spec["A"] == json::parse("[[2,1],[1,2,3]]"));
  CHECK(spec["tau"] == json::parse("[2,1]"));
}

TEST_CASE("fixed precision text") {
  CHECK(io::fixed(1.5, 3) == "1.500");
  CHECK(io::fixed(2.0, 0) == "2");
}
