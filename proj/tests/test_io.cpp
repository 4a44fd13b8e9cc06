#include <doctest.h>

#include "fnlab/coproduct.hpp"
#include "fnlab/io.hpp"
#include "fnlab/random.hpp"
#include "helpers.hpp"

using namespace fnlab;
using fixtures::diamond;

TEST_CASE("poset round-trip") {
  Rng rng(1);
  for (int t = 0; t < 50; ++t) {
    auto p = random_poset(rng.below(9), rng);
    auto text = io::poset_to_json(p).dump();
    CHECK(io::poset_from_json(io::parse_json(text)) == p);
  }
  auto labeled = Poset::from_covers(2, {{0, 1}}, {"bot", "top"});
  auto back = io::poset_from_json(io::poset_to_json(labeled));
  CHECK(back.labels() == labeled.labels());
}

TEST_CASE("poset json errors") {
  CHECK_THROWS_AS(io::poset_from_json(io::parse_json(R"({"n": 2})")), Error);
  CHECK_THROWS_AS(io::poset_from_json(io::parse_json(R"({"n": 2, "covers": [[0, 2]]})")), Error);
  CHECK_THROWS_AS(io::poset_from_json(io::parse_json(R"({"n": 2, "covers": [[0, 1, 1]]})")), Error);
  CHECK_THROWS_AS(io::poset_from_json(io::parse_json(R"({"n": "two", "covers": []})")), Error);
  CHECK_THROWS_AS(io::poset_from_json(io::parse_json(R"({"n": 2, "covers": [[0, 1], [1, 0]]})")), Error);
}

TEST_CASE("parse errors carry line and column") {
  try {
    io::parse_json("{\n  \"n\": 2,\n  \"covers\": [ oops ]\n}");
    FAIL("malformed JSON accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    REQUIRE(e.witness().size() == 2);
    CHECK(e.witness()[0] == 3);
    CHECK(e.witness()[1] == 15);
  }
}

TEST_CASE("algebra round-trip") {
  std::vector<io::AlgebraDoc> docs;
  docs.push_back({"powerset", {{"atoms", 3}}, BooleanAlgebra::powerset(3), {}});
  docs.push_back({"subalgebra", {{"atoms", 3}}, BooleanAlgebra::from_carrier(3, {0, 1, 6, 7}), {1}});
  auto ia = interval_algebra(3);
  docs.push_back({"interval", {{"n", 3}}, ia.algebra, ia.generators});
  auto ta = tree_algebra(2, 3);
  docs.push_back({"tree", {{"lam", 2}, {"kap", 3}}, ta.algebra, ta.generators});
  for (const auto& doc : docs) {
    auto j = io::algebra_to_json(doc);
    CHECK(j["element_count"] == doc.algebra.size());
    auto back = io::algebra_from_json(io::parse_json(j.dump()));
    CHECK(back.kind == doc.kind);
    CHECK(back.params == doc.params);
    CHECK(back.algebra == doc.algebra);
    CHECK(back.generators == doc.generators);
  }
  CHECK(io::structure_from_json(io::algebra_to_json(docs[0])) == BooleanAlgebra::powerset(3).as_poset());
}

TEST_CASE("pair and verdict round-trip") {
  Rng rng(6);
  for (int t = 0; t < 30; ++t) {
    auto p = share(random_poset(1 + rng.below(6), rng));
    auto pair = random_valid_pair(p, rng);
    auto back = io::pair_from_json(io::parse_json(io::pair_to_json(pair).dump()));
    CHECK(back == pair);
    for (bool certs : {false, true}) {
      auto v = verify_pair(pair, certs);
      CHECK(io::verdict_from_json(io::parse_json(io::verdict_to_json(v).dump())) == v);
    }
  }
  auto c2 = share(Poset::chain(2));
  FnPair bad{c2, fixtures::set_map(2, {{0}, {1}}), fixtures::set_map(2, {{0}, {1}})};
  auto v = verify_pair(bad);
  auto j = io::verdict_to_json(v);
  CHECK(j["violation"]["p"] == 0);
  CHECK(j["violation"]["q"] == 1);
  CHECK(j["violation"]["clause"] == 1);
  CHECK(io::verdict_from_json(j) == v);
}

TEST_CASE("pair with an algebra poset") {
  auto j = io::parse_json(R"({"poset": {"kind": "powerset", "atoms": 1}, "f": [[0, 1], [0, 1]], "g": [[0], [1]]})");
  auto pair = io::pair_from_json(j);
  CHECK(*pair.poset == Poset::chain(2));
  CHECK(verify_pair(pair).valid);
  CHECK_THROWS_AS(io::pair_from_json(io::parse_json(R"({"poset": {"n": 2, "covers": []}, "f": [[0]], "g": [[0], [1]]})")),
                  Error);
}

TEST_CASE("frontier csv round-trip") {
  Frontier f;
  f.points = {{1, 3}, {2, 2}, {3, 1}};
  auto text = io::frontier_to_csv(f);
  CHECK(text == "a,b\n1,3\n2,2\n3,1\n");
  auto back = io::frontier_from_csv(text);
  CHECK(back.points == f.points);
  CHECK(back.complete);
  f.complete = false;
  f.stalled_at = CapacityPair{2, 1};
  auto partial = io::frontier_from_csv(io::frontier_to_csv(f));
  CHECK_FALSE(partial.complete);
  CHECK(partial.points == f.points);
  CHECK_THROWS_AS(io::frontier_from_csv("a,b\n1;2\n"), Error);
}
