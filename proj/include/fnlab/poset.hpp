#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fnlab/element_set.hpp"
#include "fnlab/error.hpp"
#include "fnlab/limits.hpp"

namespace fnlab {

using RelationMatrix = std::vector<std::vector<bool>>;

/// First axiom a relation matrix breaks, with the witnessing indices.
struct PosetViolation {
  ErrorCode axiom;  // NotReflexive, NotAntisymmetric or NotTransitive
  std::vector<std::size_t> witness;
};

/// Checks reflexivity, then antisymmetry, then transitivity; returns the
/// lexicographically first failure of the first broken axiom.
std::optional<PosetViolation> find_poset_violation(const RelationMatrix& leq);

/// Finite partial order on the dense indices 0..n-1. The full reflexive
/// transitive closure is stored row-wise as up-sets and down-sets, so leq
/// queries are O(1). Immutable once constructed.
class Poset {
 public:
  Poset() = default;

  /// Throws Error(NotReflexive | NotAntisymmetric | NotTransitive) with the
  /// witness indices, or SizeExceeded.
  static Poset from_relation(const RelationMatrix& leq, std::vector<std::string> labels = {},
                             const Limits& limits = {});

  /// Builds the closure of a Hasse/cover list, then validates it. A cycle in
  /// the covers surfaces as NotAntisymmetric.
  static Poset from_covers(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& covers,
                           std::vector<std::string> labels = {}, const Limits& limits = {});

  static Poset chain(std::size_t n);
  static Poset antichain(std::size_t n);

  std::size_t size() const noexcept { return up_.size(); }
  bool leq(std::size_t x, std::size_t y) const noexcept { return up_[x].contains(y); }
  bool comparable(std::size_t x, std::size_t y) const noexcept { return leq(x, y) || leq(y, x); }

  /// {y : y <= x}
  const ElementSet& down(std::size_t x) const noexcept { return down_[x]; }
  /// {y : x <= y}
  const ElementSet& up(std::size_t x) const noexcept { return up_[x]; }
  ElementSet comparable_set(std::size_t x) const { return up_[x] | down_[x]; }
  /// The closed interval [p, q]; empty unless p <= q.
  ElementSet interval(std::size_t p, std::size_t q) const { return up_[p] & down_[q]; }

  /// Hasse edges (x, y) with x < y and nothing strictly between, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;
  RelationMatrix relation() const;

  const std::vector<std::string>& labels() const noexcept { return labels_; }

  void check_index(std::size_t x) const;

  /// Structural equality; labels are decorative and ignored.
  friend bool operator==(const Poset& a, const Poset& b) { return a.up_ == b.up_; }

 private:
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
  std::vector<std::string> labels_;
};

using PosetPtr = std::shared_ptr<const Poset>;

inline PosetPtr share(Poset p) { return std::make_shared<const Poset>(std::move(p)); }

ElementSet down_set(const Poset& p, std::size_t x);
ElementSet up_set(const Poset& p, std::size_t x);

ElementSet maximal_elements(const Poset& p, const ElementSet& s);
ElementSet minimal_elements(const Poset& p, const ElementSet& s);

/// A subset of a poset carrying the inherited order.
struct SubsetView {
  PosetPtr ambient;
  ElementSet members;

  /// The induced order on the members, re-indexed in ascending member order.
  Poset induced() const;
  /// Member list in ascending order; position i is index i of induced().
  std::vector<std::size_t> member_list() const { return members.members(); }
};

/// Number of maximal elements of A ∩ ↓p (the unique minimum cofinal subset).
std::size_t cofinality_below(const SubsetView& a, std::size_t p);
/// Number of minimal elements of A ∩ ↑p.
std::size_t coinitiality_above(const SubsetView& a, std::size_t p);
/// max over p of the two quantities above. A is a "b-subposet" iff the
/// degree is at most b.
std::size_t subposet_degree(const SubsetView& a);

/// Order-preserving map candidate between two posets. is_monotone() reports
/// whether the invariant actually holds.
struct MonotoneMap {
  PosetPtr dom;
  PosetPtr cod;
  std::vector<std::size_t> image;

  std::size_t operator()(std::size_t x) const { return image[x]; }
  bool is_monotone() const;
  /// Throws MapNotTotal or IndexOutOfRange if image does not fit dom/cod.
  void check_shape() const;
};

/// Throws NotMonotone unless the map is order-preserving.
MonotoneMap make_monotone(PosetPtr dom, PosetPtr cod, std::vector<std::size_t> image);

/// Whether i: P→Q and j: Q→P are monotone with j∘i = id_P. Throws
/// DomainMismatch when the domains and codomains do not line up.
bool check_retraction(const MonotoneMap& i, const MonotoneMap& j);

}  // namespace fnlab
