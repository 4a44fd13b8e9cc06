#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "fnlab/fnpair.hpp"
#include "fnlab/limits.hpp"

namespace fnlab {

enum class SearchStatus { Found, Infeasible, BudgetExceeded };

struct SearchResult {
  SearchStatus status = SearchStatus::Infeasible;
  std::optional<FnPair> pair;
  std::uint64_t nodes = 0;
};

/// Complete backtracking search for a valid pair with |f(x)| <= a and
/// |g(x)| <= b.
///
/// The map with the smaller capacity is enumerated element by element in
/// index order; its candidate images are x plus an exact-size combination of
/// elements comparable to x (enlarging an image never breaks validity, so
/// padding to the cap loses nothing). Once one map is fixed the other
/// decouples into independent hitting-set problems, one per element, which
/// are maintained incrementally and used to prune partial assignments.
/// When a > b the search runs on (b, a) and the result is swapped back.
///
/// Deterministic: same poset and capacities give the same pair.
SearchResult run_search(const PosetPtr& poset, CapacityPair cap, std::uint64_t node_budget = Limits{}.node_budget);

/// As run_search, but the budget running out throws SizeExceeded instead of
/// being folded into "no pair".
std::optional<FnPair> search_pair(const PosetPtr& poset, CapacityPair cap,
                                  std::uint64_t node_budget = Limits{}.node_budget);

struct Frontier {
  /// Pareto-minimal feasible capacity pairs, sorted by a ascending.
  std::vector<CapacityPair> points;
  /// One valid witness pair per point, same order.
  std::vector<FnPair> witnesses;
  /// False when a feasibility query ran out of budget; points then hold only
  /// what was settled before the query at `stalled_at`.
  bool complete = true;
  std::optional<CapacityPair> stalled_at;
};

struct FrontierOptions {
  std::uint64_t node_budget = Limits{}.node_budget;
  std::size_t workers = 1;
};

/// Walks the boundary of the monotone feasibility region for a <= b,
/// descending b as a grows, and mirrors the result (feasible(a,b) ⇔
/// feasible(b,a)). With workers > 1 the descent probes several b values
/// at once; the outcome is identical to the sequential walk.
Frontier frontier(const PosetPtr& poset, const FrontierOptions& options = {});

}  // namespace fnlab
