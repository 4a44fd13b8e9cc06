#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fnlab/limits.hpp"
#include "fnlab/poset.hpp"

namespace fnlab {

/// An element of a finite boolean algebra: a set of ambient atoms, bit i =
/// atom i.
using Mask = std::uint64_t;

inline constexpr unsigned kMaxAmbientAtoms = 64;

inline Mask full_mask(unsigned atoms) {
  return atoms >= 64 ? ~Mask{0} : (Mask{1} << atoms) - 1;
}

/// Finite boolean algebra, either the full powerset of `ambient_atoms` atoms
/// or an explicit subalgebra (carrier) of that powerset. Lattice operations
/// are bitwise; complement is relative to the ambient top.
class BooleanAlgebra {
 public:
  BooleanAlgebra() : BooleanAlgebra(powerset(0)) {}

  /// Throws SizeExceeded when 2^k exceeds limits.max_algebra_elements.
  static BooleanAlgebra powerset(unsigned k, const Limits& limits = {});

  /// Validates that the carrier contains 0 and 1 and is closed under the
  /// operations; throws RelationViolation otherwise.
  static BooleanAlgebra from_carrier(unsigned ambient_atoms, std::vector<Mask> carrier);

  unsigned ambient_atoms() const noexcept { return ambient_atoms_; }
  bool is_powerset() const noexcept { return !carrier_.has_value(); }
  const std::optional<std::vector<Mask>>& carrier() const noexcept { return carrier_; }

  Mask top() const noexcept { return full_mask(ambient_atoms_); }
  Mask meet(Mask a, Mask b) const noexcept { return a & b; }
  Mask join(Mask a, Mask b) const noexcept { return a | b; }
  Mask complement(Mask a) const noexcept { return top() & ~a; }
  static bool leq(Mask a, Mask b) noexcept { return (a & ~b) == 0; }

  std::uint64_t size() const noexcept;
  /// The i-th element in ascending mask order.
  Mask element(std::size_t i) const { return carrier_ ? (*carrier_)[i] : static_cast<Mask>(i); }
  std::optional<std::size_t> index_of(Mask m) const;
  bool contains(Mask m) const { return index_of(m).has_value(); }
  /// All elements in ascending mask order (materialized).
  std::vector<Mask> elements() const;

  /// Minimal nonzero elements; they partition the ambient atom set.
  const std::vector<Mask>& atoms() const noexcept { return atoms_; }
  std::size_t atom_count() const noexcept { return atoms_.size(); }

  /// The element order as a poset whose index i is element(i).
  Poset as_poset(const Limits& limits = {}) const;

  friend bool operator==(const BooleanAlgebra& a, const BooleanAlgebra& b) {
    return a.ambient_atoms_ == b.ambient_atoms_ && a.carrier_ == b.carrier_;
  }

 private:
  BooleanAlgebra(unsigned k, std::optional<std::vector<Mask>> carrier, std::vector<Mask> atoms)
      : ambient_atoms_(k), carrier_(std::move(carrier)), atoms_(std::move(atoms)) {}

  friend BooleanAlgebra generated_subalgebra(const BooleanAlgebra&, std::span<const Mask>, const Limits&);

  unsigned ambient_atoms_ = 0;
  std::optional<std::vector<Mask>> carrier_;
  std::vector<Mask> atoms_;
};

BooleanAlgebra powerset_algebra(unsigned k, const Limits& limits = {});

/// Least subalgebra of B containing gens (plus 0 and 1). Computed by refining
/// the atom partition of B by each generator; the result's atoms are the
/// nonempty cells. Throws BadParams if a generator is not in B.
BooleanAlgebra generated_subalgebra(const BooleanAlgebra& b, std::span<const Mask> gens, const Limits& limits = {});

/// Algebra generated by the half-open intervals [α,β) of {0..n-1}.
struct IntervalAlgebra {
  std::size_t n;
  std::vector<Mask> generators;  // distinct sets [α,β), 0 <= α <= β <= n
  BooleanAlgebra algebra;
};

IntervalAlgebra interval_algebra(std::size_t n, const Limits& limits = {});

/// Sequence-tree algebra: T = sequences over {0..lam-1} of length < kap, D
/// the sets of strict initial segments of finite F ⊆ T, and the algebra
/// generated by Z(I) = {p ∈ ᵀ2 : p is 0 on I} for I ∈ D.
///
/// Points are stored through their restriction to J = ⋃D (every Z(I) only
/// looks at coordinates in J): ambient atom u encodes the function J → 2 whose
/// value at coordinate c is bit c of u.
struct TreeAlgebra {
  std::size_t lam;
  std::size_t kap;
  std::vector<std::vector<std::size_t>> tree;     // T, in length-then-lexicographic order
  std::vector<std::size_t> coordinates;           // J as indices into `tree`
  std::vector<std::vector<std::size_t>> family;   // D, each I as sorted indices into `tree`
  std::vector<Mask> generators;                   // Z(I) for I in `family`, same order
  BooleanAlgebra algebra;
};

TreeAlgebra tree_algebra(std::size_t lam, std::size_t kap, const Limits& limits = {});

}  // namespace fnlab
