#include <doctest.h>

#include "fnlab/fnpair.hpp"
#include "fnlab/oracle.hpp"
#include "fnlab/random.hpp"
#include "helpers.hpp"

using namespace fnlab;
using fixtures::diamond;
using fixtures::lists;
using fixtures::set_map;

namespace {

SetMap random_map(std::size_t n, Rng& rng, bool seeded) {
  SetMap h(n, ElementSet(n));
  for (std::size_t x = 0; x < n; ++x) {
    if (seeded) h[x].insert(x);
    for (std::size_t y = 0; y < n; ++y)
      if (rng.chance(1, 3)) h[x].insert(y);
  }
  return h;
}

}  // namespace

TEST_CASE("verify_single examples") {
  const Poset c2 = Poset::chain(2);
  CHECK(verify_single(c2, set_map(2, {{0, 1}, {0, 1}})).valid);
  auto v = verify_single(c2, set_map(2, {{0}, {1}}));
  CHECK_FALSE(v.valid);
  CHECK(v.violation == Violation{0, 1, 1});
  CHECK(verify_single(Poset::chain(3), set_map(3, {{0, 1}, {1}, {1, 2}})).valid);
  CHECK_THROWS_AS(verify_single(c2, set_map(2, {{0}})), Error);
  CHECK_THROWS_AS(verify_single(c2, set_map(3, {{0}, {1}})), Error);
}

TEST_CASE("verify_pair examples") {
  auto c2 = share(Poset::chain(2));
  CHECK(verify_pair(FnPair{c2, set_map(2, {{0}, {0, 1}}), set_map(2, {{0}, {0, 1}})}).valid);
  auto v = verify_pair(FnPair{c2, set_map(2, {{0}, {1}}), set_map(2, {{0}, {1}})});
  CHECK_FALSE(v.valid);
  CHECK(v.violation == Violation{0, 1, 1});
  // clause 2 only
  auto v2 = verify_pair(FnPair{c2, set_map(2, {{0}, {1}}), set_map(2, {{0}, {0, 1}})});
  CHECK(v2.violation == Violation{0, 1, 2});
  auto d = share(diamond());
  auto t = trivial_pair(d);
  CHECK(t.f[2] == ElementSet::full(4));
  CHECK(t.g[2] == ElementSet::singleton(4, 2));
  CHECK(verify_pair(t).valid);
  CHECK(t.capacity() == CapacityPair{4, 1});
}

TEST_CASE("certificates") {
  auto d = share(diamond());
  auto v = verify_pair(trivial_pair(d), true);
  REQUIRE(v.interpolants.has_value());
  CHECK(v.interpolants->size() == 9);
  for (const auto& w : *v.interpolants) {
    CHECK(d->leq(w.p, w.r));
    CHECK(d->leq(w.r, w.q));
    CHECK(d->leq(w.p, w.s));
    CHECK(d->leq(w.s, w.q));
  }
  CHECK_FALSE(verify_pair(trivial_pair(d)).interpolants.has_value());
}

TEST_CASE("collapse") {
  auto d = share(diamond());
  auto h = collapse(trivial_pair(d));
  for (const auto& s : h) CHECK(s == ElementSet::full(4));
  CHECK(verify_single(*d, h).valid);
  auto w = wellorder_map(*d, {0, 1, 2, 3});
  CHECK(collapse(FnPair{d, w, w}) == w);
}

TEST_CASE("wellorder_map") {
  auto d = diamond();
  auto h = wellorder_map(d, {0, 1, 2, 3});
  for (std::size_t q = 0; q < 4; ++q) {
    CHECK(h[q].size() == q + 1);
    CHECK(h[q].contains(q));
  }
  CHECK(verify_single(d, h).valid);
  auto r = wellorder_map(Poset::chain(2), {1, 0});
  CHECK(r == set_map(2, {{0, 1}, {1}}));
  CHECK(verify_single(Poset::chain(2), r).valid);
  CHECK(wellorder_map(Poset::chain(1), {0}) == set_map(1, {{0}}));
  CHECK_THROWS_AS(wellorder_map(d, {0, 1, 1, 3}), Error);
  CHECK_THROWS_AS(wellorder_map(d, {0, 1, 2}), Error);

  Rng rng(9);
  for (int t = 0; t < 50; ++t) {
    auto p = random_poset(1 + rng.below(8), rng);
    auto order = rng.permutation(p.size());
    auto w = wellorder_map(p, order);
    CHECK(verify_single(p, w).valid);
    for (std::size_t i = 0; i < order.size(); ++i) CHECK(w[order[i]].size() == i + 1);
  }
}

TEST_CASE("interpolant_lookup") {
  auto d = share(diamond());
  auto t = trivial_pair(d);
  for (std::size_t x = 0; x < 4; ++x) CHECK(interpolant_lookup(t, x, x) == std::pair<std::size_t, std::size_t>{x, x});
  CHECK(interpolant_lookup(t, 0, 3) == std::pair<std::size_t, std::size_t>{3, 0});
  CHECK_THROWS_AS(interpolant_lookup(t, 1, 2), Error);
  auto c2 = share(Poset::chain(2));
  FnPair pair{c2, set_map(2, {{0}, {1}}), set_map(2, {{0, 1}, {0, 1}})};
  CHECK(interpolant_lookup(pair, 0, 1) == std::pair<std::size_t, std::size_t>{0, 1});
  FnPair bad{c2, set_map(2, {{0}, {1}}), set_map(2, {{0}, {1}})};
  CHECK_THROWS_AS(interpolant_lookup(bad, 0, 1), Error);
}

TEST_CASE("reference verifier agreement on random instances") {
  Rng rng(2024);
  for (int t = 0; t < 10000; ++t) {
    auto p = share(random_poset(1 + rng.below(6), rng));
    const std::size_t n = p->size();
    const bool seeded = rng.chance(3, 4);
    FnPair pair{p, random_map(n, rng, seeded), random_map(n, rng, seeded)};
    const bool ours = verify_pair(pair).valid;
    REQUIRE(ours == oracle::reference_verify_pair(*p, lists(pair.f), lists(pair.g)));
    REQUIRE(verify_single(*p, pair.f).valid == oracle::reference_verify_single(*p, lists(pair.f)));
  }
}

TEST_CASE("pair properties") {
  Rng rng(31);
  for (int t = 0; t < 300; ++t) {
    auto p = share(random_poset(1 + rng.below(7), rng));
    const std::size_t n = p->size();
    auto pair = random_valid_pair(p, rng);
    for (std::size_t x = 0; x < n; ++x) {
      CHECK(pair.f[x].contains(x));
      CHECK(pair.g[x].contains(x));
    }
    CHECK(verify_pair(FnPair{p, pair.g, pair.f}).valid);
    CHECK(verify_single(*p, collapse(pair)).valid);
    auto bigger = pair;
    bigger.f[rng.below(n)].insert(rng.below(n));
    bigger.g[rng.below(n)].insert(rng.below(n));
    CHECK(verify_pair(bigger).valid);
    auto h = random_map(n, rng, true);
    CHECK(verify_single(*p, h).valid == verify_pair(FnPair{p, h, h}).valid);
  }
}

TEST_CASE("forced membership") {
  // removing x from f(x) or g(x) always breaks validity
  Rng rng(8);
  for (int t = 0; t < 100; ++t) {
    auto p = share(random_poset(1 + rng.below(6), rng));
    auto pair = random_valid_pair(p, rng);
    const std::size_t x = rng.below(p->size());
    auto broken = pair;
    (rng.chance(1, 2) ? broken.f : broken.g)[x].erase(x);
    CHECK_FALSE(verify_pair(broken).valid);
  }
}
