#include "fnlab/random.hpp"

#include <algorithm>
#include <tuple>

#include "fnlab/search.hpp"

namespace fnlab {

Poset random_poset(std::size_t n, Rng& rng, std::uint64_t num, std::uint64_t den) {
  const auto order = rng.permutation(n);
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng.chance(num, den)) covers.emplace_back(order[i], order[j]);
  return Poset::from_covers(n, covers);
}

ElementSet random_subset(std::size_t n, Rng& rng) {
  ElementSet s(n);
  while (s.empty() && n > 0)
    for (std::size_t x = 0; x < n; ++x)
      if (rng.chance(1, 2)) s.insert(x);
  return s;
}

FnPair random_valid_pair(const PosetPtr& poset, Rng& rng) {
  const std::size_t n = poset->size();
  FnPair pair;
  switch (n == 0 ? 0 : rng.below(4)) {
    case 0:
      pair = trivial_pair(poset);
      break;
    case 1:
      pair = trivial_pair(poset);
      std::swap(pair.f, pair.g);
      break;
    case 2: {
      auto h = wellorder_map(*poset, rng.permutation(n));
      pair = FnPair{poset, h, h};
      break;
    }
    default: {
      CapacityPair cap{1 + rng.below(n), 1 + rng.below(n)};
      auto r = run_search(poset, cap, 100'000);
      if (!r.pair) r = run_search(poset, {cap.a, n});
      pair = std::move(*r.pair);
      break;
    }
  }
  if (rng.chance(1, 2)) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        if (rng.chance(1, 8)) pair.f[x].insert(y);
        if (rng.chance(1, 8)) pair.g[x].insert(y);
      }
  }
  if (!verify_pair(pair).valid) throw Error(ErrorCode::InternalError, "random pair generator produced an invalid pair");
  return pair;
}

RetractionInstance random_retraction(std::size_t retract_size, std::size_t extra, Rng& rng) {
  const Poset p = random_poset(retract_size, rng);
  const std::size_t m = retract_size + extra;
  if (retract_size == 0 && extra > 0) throw Error(ErrorCode::BadParams, "an empty poset only retracts from itself");

  // A random linear extension of P gives every element a rank.
  std::vector<std::size_t> rank(retract_size);
  {
    std::vector<std::size_t> indeg(retract_size, 0);
    for (auto [lo, hi] : p.covers()) ++indeg[hi];
    std::vector<std::size_t> ready;
    for (std::size_t x = 0; x < retract_size; ++x)
      if (indeg[x] == 0) ready.push_back(x);
    const auto covers = p.covers();
    for (std::size_t r = 0; r < retract_size; ++r) {
      const std::size_t pick = rng.below(ready.size());
      const std::size_t x = ready[pick];
      ready.erase(ready.begin() + static_cast<std::ptrdiff_t>(pick));
      rank[x] = r;
      for (auto [lo, hi] : covers)
        if (lo == x && --indeg[hi] == 0) ready.push_back(hi);
    }
  }

  // Q = P plus extras; retraction image of each extra chosen at random.
  std::vector<std::size_t> retract_of(m);
  for (std::size_t x = 0; x < retract_size; ++x) retract_of[x] = x;
  for (std::size_t e = retract_size; e < m; ++e) retract_of[e] = rng.below(retract_size);

  // Edges only go forward in (rank of image, random tiebreak) order and only
  // between elements whose images are ordered, so Q is acyclic and the
  // retraction stays monotone through the closure.
  std::vector<std::tuple<std::size_t, std::uint64_t, std::size_t>> keyed;
  for (std::size_t v = 0; v < m; ++v) keyed.emplace_back(rank[retract_of[v]], rng.below(1'000'000), v);
  std::sort(keyed.begin(), keyed.end());
  std::vector<std::pair<std::size_t, std::size_t>> covers = p.covers();
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t t = s + 1; t < m; ++t) {
      const std::size_t u = std::get<2>(keyed[s]);
      const std::size_t v = std::get<2>(keyed[t]);
      if (p.leq(retract_of[u], retract_of[v]) && rng.chance(1, 3)) covers.emplace_back(u, v);
    }
  const Poset q_plain = Poset::from_covers(m, covers);

  // Relabel Q so the section is not just the inclusion of a prefix.
  const auto relabel = rng.permutation(m);
  RelationMatrix rel(m, std::vector<bool>(m));
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v) rel[relabel[u]][relabel[v]] = q_plain.leq(u, v);
  auto pp = share(p);
  auto qq = share(Poset::from_relation(rel));
  std::vector<std::size_t> i_img(retract_size), j_img(m);
  for (std::size_t x = 0; x < retract_size; ++x) i_img[x] = relabel[x];
  for (std::size_t v = 0; v < m; ++v) j_img[relabel[v]] = retract_of[v];
  return RetractionInstance{make_monotone(pp, qq, i_img), make_monotone(qq, pp, j_img)};
}

}  // namespace fnlab
