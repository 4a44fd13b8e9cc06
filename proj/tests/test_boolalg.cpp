#include <doctest.h>

#include <algorithm>

#include "fnlab/boolalg.hpp"
#include "fnlab/oracle.hpp"
#include "fnlab/random.hpp"
#include "helpers.hpp"

using namespace fnlab;

TEST_CASE("powerset examples") {
  auto b0 = BooleanAlgebra::powerset(0);
  CHECK(b0.size() == 1);
  CHECK(b0.top() == 0);
  CHECK(BooleanAlgebra::powerset(1).size() == 2);
  auto b2 = BooleanAlgebra::powerset(2);
  CHECK(b2.as_poset() == fixtures::diamond());
  CHECK(b2.atoms() == std::vector<Mask>{1, 2});
  Limits small;
  small.max_algebra_elements = 8;
  CHECK_THROWS_AS(BooleanAlgebra::powerset(4, small), Error);
}

TEST_CASE("generated_subalgebra examples") {
  auto b2 = BooleanAlgebra::powerset(2);
  CHECK(generated_subalgebra(b2, {}).elements() == std::vector<Mask>{0, 3});
  const Mask a = 1;
  CHECK(generated_subalgebra(b2, std::vector<Mask>{a}) == b2);
  auto b3 = BooleanAlgebra::powerset(3);
  CHECK(generated_subalgebra(b3, std::vector<Mask>{0b011, 0b110}).size() == 8);
  CHECK(generated_subalgebra(b3, std::vector<Mask>{0b011}).size() == 4);
  CHECK_THROWS_AS(generated_subalgebra(b3, std::vector<Mask>{0b1000}), Error);
}

TEST_CASE("generated_subalgebra agrees with the fixpoint closure") {
  Rng rng(5);
  for (int t = 0; t < 200; ++t) {
    const unsigned k = 1 + static_cast<unsigned>(rng.below(6));
    std::vector<Mask> gens(rng.below(4));
    for (auto& g : gens) g = rng.below(Mask{1} << k);
    auto sub = generated_subalgebra(BooleanAlgebra::powerset(k), gens);
    CHECK(sub.elements() == oracle::fixpoint_closure(k, gens));
    // idempotent, contains gens
    CHECK(generated_subalgebra(sub, gens) == sub);
    for (Mask g : gens) CHECK(sub.contains(g));
    // monotone in gens
    auto more = gens;
    more.push_back(rng.below(Mask{1} << k));
    auto bigger = generated_subalgebra(BooleanAlgebra::powerset(k), more);
    for (Mask m : sub.elements()) CHECK(bigger.contains(m));
    // atoms partition the ambient set
    Mask seen = 0;
    for (Mask at : sub.atoms()) {
      CHECK((seen & at) == 0);
      seen |= at;
    }
    CHECK(seen == full_mask(k));
  }
}

TEST_CASE("from_carrier validation") {
  CHECK_NOTHROW(BooleanAlgebra::from_carrier(3, {0, 0b001, 0b110, 0b111}));
  CHECK_THROWS_AS(BooleanAlgebra::from_carrier(3, {0, 0b001, 0b111}), Error);
  CHECK_THROWS_AS(BooleanAlgebra::from_carrier(2, {0b01, 0b11, 0b10}), Error);
  // the whole powerset given as a carrier normalizes to the powerset form
  CHECK(BooleanAlgebra::from_carrier(2, {0, 1, 2, 3}) == BooleanAlgebra::powerset(2));
}

TEST_CASE("subalgebra as poset") {
  auto sub = BooleanAlgebra::from_carrier(3, {0, 0b001, 0b110, 0b111});
  CHECK(sub.as_poset() == fixtures::diamond());
  CHECK(sub.index_of(0b110) == 2);
  CHECK_FALSE(sub.index_of(0b010).has_value());
}

TEST_CASE("interval_algebra") {
  auto i1 = interval_algebra(1);
  CHECK(i1.algebra.size() == 2);
  auto i3 = interval_algebra(3);
  CHECK(i3.algebra == BooleanAlgebra::powerset(3));
  auto i4 = interval_algebra(4);
  CHECK(i4.generators.size() == 11);
  CHECK(std::count(i4.generators.begin(), i4.generators.end(), Mask{0}) == 1);
  CHECK(std::find(i4.generators.begin(), i4.generators.end(), Mask{0b0110}) != i4.generators.end());
  for (std::size_t n = 0; n <= 6; ++n) {
    auto ia = interval_algebra(n);
    CHECK(ia.algebra == BooleanAlgebra::powerset(static_cast<unsigned>(n)));
    CHECK(ia.algebra.elements() == oracle::fixpoint_closure(static_cast<unsigned>(n), ia.generators));
  }
}

TEST_CASE("tree_algebra") {
  auto t1 = tree_algebra(2, 1);
  CHECK(t1.tree.size() == 1);
  CHECK(t1.family.size() == 1);
  CHECK(t1.algebra.size() == 2);

  auto t2 = tree_algebra(2, 2);
  CHECK(t2.tree == std::vector<std::vector<std::size_t>>{{}, {0}, {1}});
  CHECK(t2.family == std::vector<std::vector<std::size_t>>{{}, {0}});
  CHECK(t2.generators.size() == 2);
  CHECK(t2.algebra.size() == 4);

  auto t3 = tree_algebra(2, 3);
  CHECK(t3.tree.size() == 7);
  CHECK(t3.algebra.elements() ==
        oracle::fixpoint_closure(t3.algebra.ambient_atoms(), t3.generators));

  for (std::size_t lam = 1; lam <= 4; ++lam) CHECK(tree_algebra(lam, 1).algebra.size() == 2);
  CHECK_THROWS_AS(tree_algebra(3, 4), Error);
}
