#pragma once

// Brute-force references. Nothing here calls into the optimized kernels: the
// oracle reads posets only through size() and leq(), keeps its own mask
// representations and its own verifier.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "fnlab/boolalg.hpp"
#include "fnlab/fnpair.hpp"
#include "fnlab/poset.hpp"

namespace fnlab::oracle {

inline constexpr std::size_t kMaxEnumeration = 5;
inline constexpr std::size_t kMaxBruteForce = 6;

/// Calls visit on every labeled poset on n elements (n <= 5), in the order of
/// their off-diagonal relation bit patterns. Returns the count.
std::uint64_t for_each_poset(std::size_t n, const std::function<void(const Poset&)>& visit);
std::vector<Poset> enumerate_posets(std::size_t n);

using ListMap = std::vector<std::vector<std::size_t>>;

/// Literal reading of the definitions with a naive scan for r.
bool reference_verify_single(const Poset& p, const ListMap& h);
bool reference_verify_pair(const Poset& p, const ListMap& f, const ListMap& g);

/// Exhaustive decision of (a, b)-feasibility for |P| <= 6. Every f with
/// x ∈ f(x) ⊆ comparable(x) of size min(a, |comparable(x)|) is tried; for
/// each, every element's candidate g-images are scanned independently (g
/// constraints decouple once f is fixed), and a hit is confirmed with the
/// reference verifier.
bool brute_feasible(const Poset& p, CapacityPair cap);

/// Fully literal: every pair of maps with x ∈ f(x), x ∈ g(x) and sizes
/// within capacity, each checked with the reference verifier. |P| <= 3.
bool literal_brute_feasible(const Poset& p, CapacityPair cap);

/// Pareto-minimal feasible pairs from brute_feasible over 1..n × 1..n,
/// sorted by a.
std::vector<CapacityPair> brute_frontier(const Poset& p);

/// (min of A ∩ ↑x, max of A ∩ ↓x) by literal scan; nullopt when no least /
/// greatest element exists.
std::pair<std::optional<std::size_t>, std::optional<std::size_t>> brute_minmax_in_subset(const SubsetView& a,
                                                                                          std::size_t x);

/// Same scan over a family of masks ordered by inclusion.
std::pair<std::optional<Mask>, std::optional<Mask>> brute_minmax_masks(std::span<const Mask> family, Mask x);

/// Subalgebra generated by gens in the powerset of k atoms, by closing under
/// meet, join and complement until nothing changes. Sorted.
std::vector<Mask> fixpoint_closure(unsigned k, std::span<const Mask> gens);

}  // namespace fnlab::oracle
