#include "fnlab/search.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <thread>

namespace fnlab {

namespace {

/// Enumerates the "enumerated" map e (capacity enum_cap) and solves the other
/// map h (capacity hit_cap) as per-element hitting sets.
class PairSearch {
 public:
  PairSearch(const Poset& poset, std::size_t enum_cap, std::size_t hit_cap, std::uint64_t budget)
      : poset_(poset),
        n_(poset.size()),
        extra_enum_(enum_cap - 1),
        extra_hit_(hit_cap - 1),
        budget_(budget),
        requirements_(n_),
        hitting_(n_, ElementSet(n_)),
        enumerated_(n_, ElementSet(n_)),
        undo_marks_(n_ + 1, 0) {
    neighbors_.resize(n_);
    between_.resize(n_);
    others_.resize(n_);
    for (std::size_t x = 0; x < n_; ++x) {
      ElementSet comp = poset.comparable_set(x);
      comp.erase(x);
      others_[x] = comp.members();
      for (std::size_t y : others_[x]) {
        neighbors_[x].push_back(y);
        between_[x].push_back(poset.leq(x, y) ? poset.interval(x, y) : poset.interval(y, x));
      }
    }
  }

  SearchStatus run() {
    if (descend(0)) return SearchStatus::Found;
    return exhausted_ ? SearchStatus::BudgetExceeded : SearchStatus::Infeasible;
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

  SetMap enumerated() const { return enumerated_; }
  SetMap solved() const {
    SetMap out(n_, ElementSet(n_));
    for (std::size_t y = 0; y < n_; ++y) {
      out[y] = hitting_[y];
      out[y].insert(y);
    }
    return out;
  }

 private:
  struct UndoRecord {
    std::size_t element;
    std::optional<ElementSet> previous_hitting;
  };

  bool tick() {
    if (++nodes_ > budget_) exhausted_ = true;
    return !exhausted_;
  }

  bool descend(std::size_t x) {
    if (x == n_) return true;
    const auto& pool = others_[x];
    const std::size_t k = std::min(extra_enum_, pool.size());
    // Lexicographic k-combinations of `pool` (indices into it).
    std::vector<std::size_t> comb(k);
    for (std::size_t i = 0; i < k; ++i) comb[i] = i;
    while (true) {
      if (!tick()) return false;
      ElementSet image = ElementSet::singleton(n_, x);
      for (auto i : comb) image.insert(pool[i]);
      undo_marks_[x] = undo_.size();
      if (apply(x, image) && descend(x + 1)) return true;
      rollback(x);
      if (exhausted_) return false;
      // Advance the combination.
      std::size_t i = k;
      while (i > 0 && comb[i - 1] == pool.size() - k + i - 1) --i;
      if (i == 0) return false;
      ++comb[i - 1];
      for (std::size_t j = i; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }
  }

  bool apply(std::size_t x, const ElementSet& image) {
    enumerated_[x] = image;
    for (std::size_t idx = 0; idx < neighbors_[x].size(); ++idx) {
      const std::size_t y = neighbors_[x][idx];
      ElementSet need = image & between_[x][idx];
      if (need.contains(y)) continue;  // y itself interpolates
      requirements_[y].push_back(std::move(need));
      undo_.push_back({y, std::nullopt});
      if (requirements_[y].back().intersects(hitting_[y])) continue;
      undo_.back().previous_hitting = hitting_[y];
      ElementSet fresh(n_);
      if (!hit(requirements_[y], extra_hit_, fresh)) return false;
      hitting_[y] = std::move(fresh);
    }
    return true;
  }

  void rollback(std::size_t x) {
    while (undo_.size() > undo_marks_[x]) {
      auto& rec = undo_.back();
      requirements_[rec.element].pop_back();
      if (rec.previous_hitting) hitting_[rec.element] = std::move(*rec.previous_hitting);
      undo_.pop_back();
    }
  }

  /// Finds at most `budget` elements meeting every set; branches on the
  /// smallest unmet set.
  bool hit(const std::vector<ElementSet>& sets, std::size_t budget, ElementSet& chosen) {
    if (!tick()) return false;
    const ElementSet* smallest = nullptr;
    std::size_t smallest_size = SIZE_MAX;
    std::size_t unmet = 0;
    for (const auto& s : sets) {
      if (s.intersects(chosen)) continue;
      ++unmet;
      const std::size_t sz = s.size();
      if (sz < smallest_size) {
        smallest = &s;
        smallest_size = sz;
      }
    }
    if (unmet == 0) return true;
    if (unmet <= budget) {
      for (const auto& s : sets)
        if (!s.intersects(chosen)) chosen.insert(*s.first());
      return true;
    }
    if (budget == 0) return false;
    for (std::size_t e : smallest->members()) {
      chosen.insert(e);
      if (hit(sets, budget - 1, chosen)) return true;
      chosen.erase(e);
      if (exhausted_) return false;
    }
    return false;
  }

  const Poset& poset_;
  std::size_t n_;
  std::size_t extra_enum_;
  std::size_t extra_hit_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;

  std::vector<std::vector<std::size_t>> others_;
  std::vector<std::vector<std::size_t>> neighbors_;
  std::vector<std::vector<ElementSet>> between_;
  std::vector<std::vector<ElementSet>> requirements_;
  std::vector<ElementSet> hitting_;
  SetMap enumerated_;
  std::vector<UndoRecord> undo_;
  std::vector<std::size_t> undo_marks_;
};

}  // namespace

SearchResult run_search(const PosetPtr& poset, CapacityPair cap, std::uint64_t node_budget) {
  if (cap.a == 0 || cap.b == 0) throw Error(ErrorCode::BadParams, "capacities must be at least 1");
  const bool swapped = cap.a > cap.b;
  const std::size_t enum_cap = swapped ? cap.b : cap.a;
  const std::size_t hit_cap = swapped ? cap.a : cap.b;
  PairSearch search(*poset, enum_cap, hit_cap, node_budget);
  SearchResult result;
  result.status = search.run();
  result.nodes = search.nodes();
  if (result.status != SearchStatus::Found) return result;
  FnPair pair{poset, search.enumerated(), search.solved()};
  if (swapped) std::swap(pair.f, pair.g);
  if (!verify_pair(pair).valid) throw Error(ErrorCode::InternalError, "search produced an invalid pair");
  result.pair = std::move(pair);
  return result;
}

std::optional<FnPair> search_pair(const PosetPtr& poset, CapacityPair cap, std::uint64_t node_budget) {
  auto result = run_search(poset, cap, node_budget);
  if (result.status == SearchStatus::BudgetExceeded)
    throw Error(ErrorCode::SizeExceeded, "node budget of " + std::to_string(node_budget) + " exhausted at (" +
                                             std::to_string(cap.a) + "," + std::to_string(cap.b) + ")");
  return std::move(result.pair);
}

namespace {

class FrontierWalk {
 public:
  FrontierWalk(const PosetPtr& poset, const FrontierOptions& options) : poset_(poset), options_(options) {}

  Frontier run() {
    Frontier out;
    const std::size_t n = poset_->size();
    if (n == 0) {
      out.points.push_back({1, 1});
      out.witnesses.push_back(FnPair{poset_, {}, {}});
      return out;
    }
    std::vector<CapacityPair> lower;  // points with a < b
    std::optional<CapacityPair> diagonal;
    std::size_t prev = SIZE_MAX;
    std::size_t bcur = n;
    for (std::size_t a = 1;; ++a) {
      if (!descend(a, bcur)) return incomplete(std::move(out), lower);
      if (bcur > a) {
        if (bcur < prev) {
          lower.push_back({a, bcur});
          prev = bcur;
        }
        continue;
      }
      if (a < prev) diagonal = CapacityPair{a, a};
      break;
    }
    for (const auto& pt : lower) {
      out.points.push_back(pt);
    }
    if (diagonal) out.points.push_back(*diagonal);
    for (auto it = lower.rbegin(); it != lower.rend(); ++it) out.points.push_back({it->b, it->a});
    for (const auto& pt : out.points) {
      auto w = witness(pt);
      if (!w) return incomplete(Frontier{}, lower, pt);
      out.witnesses.push_back(std::move(*w));
    }
    return out;
  }

 private:
  /// Lowers bcur while feasible(a, bcur - 1), never below a. False when a
  /// query ran out of budget.
  bool descend(std::size_t a, std::size_t& bcur) {
    const std::size_t width = std::max<std::size_t>(1, options_.workers);
    while (bcur > a) {
      std::vector<std::size_t> probes;
      for (std::size_t b = bcur - 1; b >= a && probes.size() < width; --b) {
        probes.push_back(b);
        if (b == 0) break;
      }
      auto results = query_batch(a, probes);
      for (std::size_t i = 0; i < probes.size(); ++i) {
        if (results[i] == SearchStatus::BudgetExceeded) {
          stalled_ = CapacityPair{a, probes[i]};
          return false;
        }
        if (results[i] == SearchStatus::Infeasible) return true;
        bcur = probes[i];
      }
    }
    return true;
  }

  std::vector<SearchStatus> query_batch(std::size_t a, const std::vector<std::size_t>& probes) {
    std::vector<SearchResult> results(probes.size());
    if (probes.size() == 1) {
      results[0] = run_search(poset_, {a, probes[0]}, options_.node_budget);
    } else {
      std::vector<std::thread> threads;
      for (std::size_t i = 0; i < probes.size(); ++i)
        threads.emplace_back([&, i] { results[i] = run_search(poset_, {a, probes[i]}, options_.node_budget); });
      for (auto& t : threads) t.join();
    }
    std::vector<SearchStatus> statuses;
    for (std::size_t i = 0; i < probes.size(); ++i) {
      statuses.push_back(results[i].status);
      if (results[i].pair) found_.emplace(CapacityPair{a, probes[i]}, std::move(*results[i].pair));
    }
    return statuses;
  }

  std::optional<FnPair> witness(CapacityPair pt) {
    if (auto it = found_.find(pt); it != found_.end()) return it->second;
    if (auto it = found_.find({pt.b, pt.a}); it != found_.end()) {
      FnPair w = it->second;
      std::swap(w.f, w.g);
      return w;
    }
    auto r = run_search(poset_, pt, options_.node_budget);
    if (r.status == SearchStatus::BudgetExceeded) {
      stalled_ = pt;
      return std::nullopt;
    }
    if (!r.pair) throw Error(ErrorCode::InternalError, "frontier point has no witness");
    return std::move(r.pair);
  }

  Frontier incomplete(Frontier out, const std::vector<CapacityPair>& settled,
                      std::optional<CapacityPair> at = std::nullopt) {
    out.points = settled;
    out.witnesses.clear();
    out.complete = false;
    out.stalled_at = at ? at : stalled_;
    return out;
  }

  PosetPtr poset_;
  FrontierOptions options_;
  std::map<CapacityPair, FnPair> found_;
  std::optional<CapacityPair> stalled_;
};

}  // namespace

Frontier frontier(const PosetPtr& poset, const FrontierOptions& options) {
  return FrontierWalk(poset, options).run();
}

}  // namespace fnlab
