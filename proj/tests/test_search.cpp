#include <doctest.h>

#include "fnlab/oracle.hpp"
#include "fnlab/random.hpp"
#include "fnlab/search.hpp"
#include "helpers.hpp"

using namespace fnlab;
using fixtures::diamond;
using fixtures::set_map;

using Points = std::vector<CapacityPair>;

TEST_CASE("search_pair examples") {
  auto a3 = share(Poset::antichain(3));
  auto r = search_pair(a3, {1, 1});
  REQUIRE(r.has_value());
  CHECK(r->f == set_map(3, {{0}, {1}, {2}}));
  CHECK(r->g == r->f);

  auto c2 = share(Poset::chain(2));
  CHECK_FALSE(search_pair(c2, {1, 1}).has_value());
  auto s = search_pair(c2, {1, 2});
  REQUIRE(s.has_value());
  CHECK(s->f == set_map(2, {{0}, {1}}));
  CHECK(s->g == set_map(2, {{0, 1}, {0, 1}}));
  auto m = search_pair(c2, {2, 1});
  REQUIRE(m.has_value());
  CHECK(m->g == set_map(2, {{0}, {1}}));

  CHECK_THROWS_AS(search_pair(c2, {0, 2}), Error);
}

TEST_CASE("search respects capacities and agrees with the oracle") {
  for (std::size_t n = 0; n <= 4; ++n)
    oracle::for_each_poset(n, [&](const Poset& p) {
      auto pp = share(p);
      for (std::size_t a = 1; a <= n; ++a)
        for (std::size_t b = 1; b <= n; ++b) {
          auto r = search_pair(pp, {a, b});
          REQUIRE(r.has_value() == oracle::brute_feasible(p, {a, b}));
          if (r) {
            auto cap = r->capacity();
            CHECK(cap.a <= a);
            CHECK(cap.b <= b);
            CHECK(verify_pair(*r).valid);
          }
        }
    });
}

TEST_CASE("budget exhaustion is distinct from infeasibility") {
  auto p = share(Poset::chain(6));
  auto r = run_search(p, {2, 2}, 3);
  CHECK(r.status == SearchStatus::BudgetExceeded);
  CHECK_FALSE(r.pair.has_value());
  CHECK_THROWS_AS(search_pair(p, {2, 2}, 3), Error);
  auto full = run_search(p, {1, 1});
  CHECK(full.status == SearchStatus::Infeasible);
}

TEST_CASE("search is deterministic") {
  Rng rng(4);
  for (int t = 0; t < 20; ++t) {
    auto p = share(random_poset(1 + rng.below(7), rng));
    CapacityPair cap{1 + rng.below(p->size()), 1 + rng.below(p->size())};
    auto a = run_search(p, cap);
    auto b = run_search(p, cap);
    CHECK(a.status == b.status);
    CHECK(a.nodes == b.nodes);
    if (a.pair) CHECK(*a.pair == *b.pair);
  }
}

TEST_CASE("frontier examples") {
  CHECK(frontier(share(Poset::antichain(3))).points == Points{{1, 1}});
  CHECK(frontier(share(Poset::antichain(1))).points == Points{{1, 1}});
  CHECK(frontier(share(Poset::chain(2))).points == Points{{1, 2}, {2, 1}});
  auto d = frontier(share(diamond()));
  CHECK(d.complete);
  CHECK(d.points == oracle::brute_frontier(diamond()));
  CHECK(std::find(d.points.begin(), d.points.end(), CapacityPair{1, 4}) != d.points.end());
  CHECK(std::find(d.points.begin(), d.points.end(), CapacityPair{4, 1}) != d.points.end());
}

TEST_CASE("frontier invariants") {
  Rng rng(12);
  for (int t = 0; t < 40; ++t) {
    auto p = share(random_poset(1 + rng.below(6), rng));
    auto f = frontier(p);
    REQUIRE(f.complete);
    REQUIRE(f.witnesses.size() == f.points.size());
    for (std::size_t i = 0; i < f.points.size(); ++i) {
      const auto c = f.points[i];
      CHECK(std::find(f.points.begin(), f.points.end(), CapacityPair{c.b, c.a}) != f.points.end());
      for (const auto& d : f.points)
        if (d != c) CHECK_FALSE((d.a <= c.a && d.b <= c.b));
      CHECK(verify_pair(f.witnesses[i]).valid);
      CHECK(f.witnesses[i].capacity().a <= c.a);
      CHECK(f.witnesses[i].capacity().b <= c.b);
      if (i > 0) CHECK(f.points[i - 1].a < c.a);
    }
    if (p->size() <= 5) CHECK(f.points == oracle::brute_frontier(*p));
  }
}

TEST_CASE("frontier is identical across worker counts") {
  Rng rng(21);
  for (int t = 0; t < 10; ++t) {
    auto p = share(random_poset(3 + rng.below(5), rng));
    auto one = frontier(p, {Limits{}.node_budget, 1});
    for (std::size_t w : {2, 3, 8}) {
      auto many = frontier(p, {Limits{}.node_budget, w});
      CHECK(many.points == one.points);
      CHECK(many.witnesses == one.witnesses);
    }
  }
}

TEST_CASE("inconclusive frontier") {
  auto f = frontier(share(Poset::chain(7)), {5, 1});
  CHECK_FALSE(f.complete);
  CHECK(f.stalled_at.has_value());
}

TEST_CASE("universal pairs are feasible") {
  Rng rng(17);
  for (int t = 0; t < 30; ++t) {
    auto p = share(random_poset(1 + rng.below(7), rng));
    const std::size_t n = p->size();
    CHECK(search_pair(p, {n, 1}).has_value());
    CHECK(search_pair(p, {1, n}).has_value());
  }
}
