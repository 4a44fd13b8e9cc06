#include "fnlab/fnpair.hpp"

#include <algorithm>
#include <string>

namespace fnlab {

CapacityPair FnPair::capacity() const {
  CapacityPair cap{0, 0};
  for (const auto& s : f) cap.a = std::max(cap.a, s.size());
  for (const auto& s : g) cap.b = std::max(cap.b, s.size());
  return cap;
}

void check_total(const Poset& p, const SetMap& h) {
  if (h.size() != p.size())
    throw Error(ErrorCode::MapNotTotal,
                "map has " + std::to_string(h.size()) + " images for " + std::to_string(p.size()) + " elements");
  for (std::size_t x = 0; x < h.size(); ++x)
    if (h[x].universe() != p.size())
      throw Error(ErrorCode::MapNotTotal, "image of " + std::to_string(x) + " is over the wrong universe", {x});
}

namespace {

std::optional<std::size_t> least_witness(const Poset& poset, const ElementSet& lo_side, const ElementSet& hi_side,
                                         std::size_t p, std::size_t q) {
  return (lo_side & hi_side & poset.interval(p, q)).first();
}

}  // namespace

Verdict verify_single(const Poset& poset, const SetMap& h, bool with_certificates) {
  check_total(poset, h);
  Verdict v;
  std::vector<Interpolant> certs;
  for (std::size_t p = 0; p < poset.size(); ++p) {
    for (std::size_t q : poset.up(p).members()) {
      if (with_certificates) {
        auto r = least_witness(poset, h[p], h[q], p, q);
        if (!r) {
          v.violation = Violation{p, q, 1};
          return v;
        }
        certs.push_back({p, q, *r, *r});
      } else if (!ElementSet::triple_intersects(h[p], h[q], poset.interval(p, q))) {
        v.violation = Violation{p, q, 1};
        return v;
      }
    }
  }
  v.valid = true;
  if (with_certificates) v.interpolants = std::move(certs);
  return v;
}

Verdict verify_pair(const FnPair& pair, bool with_certificates) {
  const Poset& poset = *pair.poset;
  check_total(poset, pair.f);
  check_total(poset, pair.g);
  Verdict v;
  std::vector<Interpolant> certs;
  for (std::size_t p = 0; p < poset.size(); ++p) {
    const ElementSet& above = poset.up(p);
    // f(p) ∩ g(q) ∩ ↑p ∩ ↓q as a triple intersection with f(p) ∩ ↑p hoisted.
    const ElementSet lower_f = pair.f[p] & above;
    const ElementSet lower_g = pair.g[p] & above;
    for (std::size_t q : above.members()) {
      const ElementSet& below = poset.down(q);
      if (!ElementSet::triple_intersects(lower_f, pair.g[q], below)) {
        v.violation = Violation{p, q, 1};
        return v;
      }
      if (!ElementSet::triple_intersects(lower_g, pair.f[q], below)) {
        v.violation = Violation{p, q, 2};
        return v;
      }
      if (with_certificates) {
        auto r = (lower_f & pair.g[q] & below).first();
        auto s = (lower_g & pair.f[q] & below).first();
        certs.push_back({p, q, *r, *s});
      }
    }
  }
  v.valid = true;
  if (with_certificates) v.interpolants = std::move(certs);
  return v;
}

SetMap collapse(const FnPair& pair) {
  SetMap h;
  h.reserve(pair.f.size());
  for (std::size_t x = 0; x < pair.f.size(); ++x) h.push_back(pair.f[x] | pair.g[x]);
  return h;
}

SetMap wellorder_map(const Poset& p, const std::vector<std::size_t>& order) {
  const std::size_t n = p.size();
  std::vector<bool> seen(n, false);
  if (order.size() != n) throw Error(ErrorCode::NotPermutation, "order lists " + std::to_string(order.size()) +
                                                                    " elements, poset has " + std::to_string(n));
  for (auto x : order) {
    if (x >= n || seen[x]) throw Error(ErrorCode::NotPermutation, "order repeats or skips element " + std::to_string(x), {x});
    seen[x] = true;
  }
  SetMap h(n, ElementSet(n));
  ElementSet prefix(n);
  for (auto x : order) {
    prefix.insert(x);
    h[x] = prefix;
  }
  return h;
}

FnPair trivial_pair(PosetPtr p) {
  const std::size_t n = p->size();
  FnPair pair{p, SetMap(n, ElementSet::full(n)), SetMap()};
  for (std::size_t x = 0; x < n; ++x) pair.g.push_back(ElementSet::singleton(n, x));
  return pair;
}

std::pair<std::size_t, std::size_t> interpolant_lookup(const FnPair& pair, std::size_t p, std::size_t q) {
  const Poset& poset = *pair.poset;
  poset.check_index(p);
  poset.check_index(q);
  check_total(poset, pair.f);
  check_total(poset, pair.g);
  if (!poset.leq(p, q))
    throw Error(ErrorCode::NotComparable, std::to_string(p) + " is not below " + std::to_string(q), {p, q});
  auto r = least_witness(poset, pair.f[p], pair.g[q], p, q);
  auto s = least_witness(poset, pair.g[p], pair.f[q], p, q);
  if (!r || !s) throw Error(ErrorCode::NoWitness, "no interpolant; the pair is invalid", {p, q});
  return {*r, *s};
}

}  // namespace fnlab
