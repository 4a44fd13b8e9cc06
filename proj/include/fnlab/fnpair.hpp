#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "fnlab/poset.hpp"

namespace fnlab {

/// A set-valued map on a poset: element x ↦ map[x].
using SetMap = std::vector<ElementSet>;

/// Inclusive capacity bounds: |f(x)| <= a and |g(x)| <= b.
struct CapacityPair {
  std::size_t a = 1;
  std::size_t b = 1;
  friend auto operator<=>(const CapacityPair&, const CapacityPair&) = default;
};

/// The pair (f, g). Validity means: for all p <= q some r ∈ f(p) ∩ g(q) and
/// some s ∈ g(p) ∩ f(q) lie in [p, q].
struct FnPair {
  PosetPtr poset;
  SetMap f;
  SetMap g;

  /// Largest image sizes (max |f(x)|, max |g(x)|); (0, 0) on an empty poset.
  CapacityPair capacity() const;
  friend bool operator==(const FnPair& x, const FnPair& y) {
    return *x.poset == *y.poset && x.f == y.f && x.g == y.g;
  }
};

/// Which clause of the definition failed: clause 1 needs r ∈ f(p) ∩ g(q),
/// clause 2 needs s ∈ g(p) ∩ f(q). Single maps only have clause 1.
struct Violation {
  std::size_t p;
  std::size_t q;
  int clause;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct Interpolant {
  std::size_t p;
  std::size_t q;
  std::size_t r;
  std::size_t s;
  friend bool operator==(const Interpolant&, const Interpolant&) = default;
};

struct Verdict {
  bool valid = false;
  std::optional<Violation> violation;
  std::optional<std::vector<Interpolant>> interpolants;
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Throws MapNotTotal unless every map has one set per element over the
/// poset's universe.
void check_total(const Poset& p, const SetMap& h);

/// Single-map check: for all p <= q some r ∈ h(p) ∩ h(q) ∩ [p,q]. On failure
/// reports the least (p, q) in lexicographic order. With certificates, the
/// least-index witness r is recorded for every comparable pair (s = r).
Verdict verify_single(const Poset& p, const SetMap& h, bool with_certificates = false);

/// Both clauses for every p <= q; the violation names the first failing
/// clause of the least failing (p, q).
Verdict verify_pair(const FnPair& pair, bool with_certificates = false);

/// h(x) = f(x) ∪ g(x).
SetMap collapse(const FnPair& pair);

/// h(q) = {p : p ⊑ q} for the linear order listing elements in `order`.
/// Throws NotPermutation.
SetMap wellorder_map(const Poset& p, const std::vector<std::size_t>& order);

/// f(x) = P, g(x) = {x}.
FnPair trivial_pair(PosetPtr p);

/// Least-index r ∈ f(p) ∩ g(q) ∩ [p,q] and s ∈ g(p) ∩ f(q) ∩ [p,q].
/// Throws NotComparable or NoWitness.
std::pair<std::size_t, std::size_t> interpolant_lookup(const FnPair& pair, std::size_t p, std::size_t q);

}  // namespace fnlab
