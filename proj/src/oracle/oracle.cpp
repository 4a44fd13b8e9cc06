#include "fnlab/oracle.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

namespace fnlab::oracle {

namespace {

void require_at_most(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap)
    throw Error(ErrorCode::SizeExceeded, std::string(what) + " is limited to " + std::to_string(cap) + " elements");
}

using Bits = std::uint32_t;

bool has(Bits s, std::size_t x) { return ((s >> x) & 1U) != 0; }

std::vector<std::size_t> to_list(Bits s) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < 32; ++x)
    if (has(s, x)) out.push_back(x);
  return out;
}

ListMap to_lists(const std::vector<Bits>& m) {
  ListMap out;
  for (Bits s : m) out.push_back(to_list(s));
  return out;
}

bool in_list(const std::vector<std::size_t>& l, std::size_t x) { return std::find(l.begin(), l.end(), x) != l.end(); }

/// All subsets of `pool` containing x with exactly `size` members.
std::vector<Bits> exact_subsets_with(Bits pool, std::size_t x, std::size_t size) {
  std::vector<Bits> out;
  for (Bits s = 0; s <= pool; ++s) {
    if ((s & ~pool) != 0 || !has(s, x)) continue;
    if (static_cast<std::size_t>(std::popcount(s)) == size) out.push_back(s);
  }
  return out;
}

/// All subsets of {0..n-1} containing x with at most `size` members.
std::vector<Bits> bounded_subsets_with(std::size_t n, std::size_t x, std::size_t size) {
  std::vector<Bits> out;
  for (Bits s = 0; s < (Bits{1} << n); ++s)
    if (has(s, x) && static_cast<std::size_t>(std::popcount(s)) <= size) out.push_back(s);
  return out;
}

/// Odometer over per-element option lists; stops early when visit returns true.
bool any_assignment(const std::vector<std::vector<Bits>>& options, const std::function<bool(const std::vector<Bits>&)>& visit) {
  const std::size_t n = options.size();
  for (const auto& o : options)
    if (o.empty()) return false;
  std::vector<std::size_t> idx(n, 0);
  std::vector<Bits> cur(n);
  while (true) {
    for (std::size_t x = 0; x < n; ++x) cur[x] = options[x][idx[x]];
    if (visit(cur)) return true;
    std::size_t x = 0;
    while (x < n && ++idx[x] == options[x].size()) idx[x++] = 0;
    if (x == n) return false;
  }
}

}  // namespace

std::uint64_t for_each_poset(std::size_t n, const std::function<void(const Poset&)>& visit) {
  require_at_most(n, kMaxEnumeration, "poset enumeration");
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (x != y) slots.emplace_back(x, y);
  std::uint64_t count = 0;
  RelationMatrix rel(n, std::vector<bool>(n));
  for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << slots.size()); ++pattern) {
    for (std::size_t x = 0; x < n; ++x) rel[x][x] = true;
    for (std::size_t s = 0; s < slots.size(); ++s) rel[slots[s].first][slots[s].second] = ((pattern >> s) & 1U) != 0;
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      for (std::size_t y = 0; y < n && ok; ++y) {
        if (x != y && rel[x][y] && rel[y][x]) ok = false;
        for (std::size_t z = 0; z < n && ok; ++z)
          if (rel[x][y] && rel[y][z] && !rel[x][z]) ok = false;
      }
    if (!ok) continue;
    ++count;
    visit(Poset::from_relation(rel));
  }
  return count;
}

std::vector<Poset> enumerate_posets(std::size_t n) {
  std::vector<Poset> out;
  for_each_poset(n, [&](const Poset& p) { out.push_back(p); });
  return out;
}

bool reference_verify_single(const Poset& p, const ListMap& h) { return reference_verify_pair(p, h, h); }

bool reference_verify_pair(const Poset& p, const ListMap& f, const ListMap& g) {
  const std::size_t n = p.size();
  if (f.size() != n || g.size() != n) return false;
  for (std::size_t lo = 0; lo < n; ++lo)
    for (std::size_t hi = 0; hi < n; ++hi) {
      if (!p.leq(lo, hi)) continue;
      bool first = false, second = false;
      for (std::size_t m = 0; m < n; ++m) {
        if (!p.leq(lo, m) || !p.leq(m, hi)) continue;
        if (in_list(f[lo], m) && in_list(g[hi], m)) first = true;
        if (in_list(g[lo], m) && in_list(f[hi], m)) second = true;
      }
      if (!first || !second) return false;
    }
  return true;
}

bool brute_feasible(const Poset& p, CapacityPair cap) {
  const std::size_t n = p.size();
  require_at_most(n, kMaxBruteForce, "brute-force feasibility");
  if (n == 0) return true;
  if (cap.a == 0 || cap.b == 0) return false;
  std::vector<Bits> comp(n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (p.leq(x, y) || p.leq(y, x)) comp[x] |= Bits{1} << y;
  std::vector<std::vector<Bits>> f_options(n), g_options(n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto c = static_cast<std::size_t>(std::popcount(comp[x]));
    f_options[x] = exact_subsets_with(comp[x], x, std::min(cap.a, c));
    g_options[x] = exact_subsets_with(comp[x], x, std::min(cap.b, c));
  }
  std::vector<std::vector<Bits>> between(n, std::vector<Bits>(n, 0));
  for (std::size_t lo = 0; lo < n; ++lo)
    for (std::size_t hi = 0; hi < n; ++hi)
      for (std::size_t m = 0; m < n; ++m)
        if (p.leq(lo, m) && p.leq(m, hi)) between[lo][hi] |= Bits{1} << m;
  return any_assignment(f_options, [&](const std::vector<Bits>& f) {
    std::vector<Bits> g(n);
    for (std::size_t y = 0; y < n; ++y) {
      bool found = false;
      for (Bits cand : g_options[y]) {
        bool ok = true;
        for (std::size_t x = 0; x < n && ok; ++x) {
          if (p.leq(x, y) && (f[x] & cand & between[x][y]) == 0) ok = false;  // clause 1 at (x, y)
          if (p.leq(y, x) && (cand & f[x] & between[y][x]) == 0) ok = false;  // clause 2 at (y, x)
        }
        if (ok) {
          g[y] = cand;
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
    if (!reference_verify_pair(p, to_lists(f), to_lists(g)))
      throw Error(ErrorCode::InternalError, "oracle assembled a pair its own verifier rejects");
    return true;
  });
}

bool literal_brute_feasible(const Poset& p, CapacityPair cap) {
  const std::size_t n = p.size();
  require_at_most(n, 3, "literal enumeration");
  std::vector<std::vector<Bits>> f_options(n), g_options(n);
  for (std::size_t x = 0; x < n; ++x) {
    f_options[x] = bounded_subsets_with(n, x, cap.a);
    g_options[x] = bounded_subsets_with(n, x, cap.b);
  }
  if (n == 0) return true;
  return any_assignment(f_options, [&](const std::vector<Bits>& f) {
    return any_assignment(g_options, [&](const std::vector<Bits>& g) {
      return reference_verify_pair(p, to_lists(f), to_lists(g));
    });
  });
}

std::vector<CapacityPair> brute_frontier(const Poset& p) {
  const std::size_t n = std::max<std::size_t>(p.size(), 1);
  std::vector<CapacityPair> feasible;
  for (std::size_t a = 1; a <= n; ++a)
    for (std::size_t b = 1; b <= n; ++b)
      if (brute_feasible(p, {a, b})) feasible.push_back({a, b});
  std::vector<CapacityPair> out;
  for (const auto& c : feasible) {
    bool dominated = std::any_of(feasible.begin(), feasible.end(), [&](const CapacityPair& d) {
      return d != c && d.a <= c.a && d.b <= c.b;
    });
    if (!dominated) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<std::optional<std::size_t>, std::optional<std::size_t>> brute_minmax_in_subset(const SubsetView& a,
                                                                                          std::size_t x) {
  const Poset& p = *a.ambient;
  std::vector<std::size_t> above, below;
  for (std::size_t m = 0; m < p.size(); ++m) {
    if (!a.members.contains(m)) continue;
    if (p.leq(x, m)) above.push_back(m);
    if (p.leq(m, x)) below.push_back(m);
  }
  std::optional<std::size_t> least, greatest;
  for (auto m : above)
    if (std::all_of(above.begin(), above.end(), [&](std::size_t u) { return p.leq(m, u); })) least = m;
  for (auto m : below)
    if (std::all_of(below.begin(), below.end(), [&](std::size_t u) { return p.leq(u, m); })) greatest = m;
  return {least, greatest};
}

std::pair<std::optional<Mask>, std::optional<Mask>> brute_minmax_masks(std::span<const Mask> family, Mask x) {
  // m is least in U iff m lies below every member of U, i.e. below their
  // intersection; dually for greatest.
  Mask meet_up = ~Mask{0}, join_down = 0;
  for (Mask u : family) {
    if ((x & ~u) == 0) meet_up &= u;
    if ((u & ~x) == 0) join_down |= u;
  }
  std::optional<Mask> least, greatest;
  for (Mask m : family) {
    if ((x & ~m) == 0 && (m & ~meet_up) == 0) least = m;
    if ((m & ~x) == 0 && (join_down & ~m) == 0) greatest = m;
  }
  return {least, greatest};
}

std::vector<Mask> fixpoint_closure(unsigned k, std::span<const Mask> gens) {
  const Mask top = k >= 64 ? ~Mask{0} : (Mask{1} << k) - 1;
  std::set<Mask> s{0, top};
  s.insert(gens.begin(), gens.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Mask> cur(s.begin(), s.end());
    for (Mask u : cur) {
      grew |= s.insert(top & ~u).second;
      for (Mask v : cur) {
        grew |= s.insert(u & v).second;
        grew |= s.insert(u | v).second;
      }
    }
  }
  return {s.begin(), s.end()};
}

}  // namespace fnlab::oracle
