#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "fnlab/boolalg.hpp"

namespace fnlab {

/// Free product of finite boolean algebras. The base algebra is the powerset
/// of the cartesian product of the cofactor atom sets. Atom tuple t encodes
/// coordinate i as the mixed-radix digit (t / stride_i) % atom_count_i, with
/// the first cofactor as the least significant digit.
class CoproductAlgebra {
 public:
  /// Throws DegenerateCofactor for a 1-element cofactor, SizeExceeded when
  /// the base would exceed the caps (or 64 atoms).
  static CoproductAlgebra make(std::vector<BooleanAlgebra> cofactors, const Limits& limits = {});

  const std::vector<BooleanAlgebra>& cofactors() const noexcept { return cofactors_; }
  const BooleanAlgebra& base() const noexcept { return base_; }
  std::size_t tuple_count() const noexcept { return tuple_count_; }

  /// Index (into cofactor i's atom list) of coordinate i of atom tuple t.
  std::size_t coordinate(std::size_t t, std::size_t i) const noexcept { return (t / strides_[i]) % radix_[i]; }

  /// e_i(b): the tuples whose i-th coordinate atom lies below b. b is a mask
  /// in cofactor i's ambient representation.
  Mask embed(std::size_t i, Mask b) const;
  /// e_i applied to cofactor atom number u.
  Mask embed_atom(std::size_t i, std::size_t u) const noexcept { return slices_[i][u]; }
  /// Image of every element of cofactor i, in cofactor element order.
  std::vector<Mask> embedding_image(std::size_t i) const;

 private:
  std::vector<BooleanAlgebra> cofactors_;
  BooleanAlgebra base_;
  std::vector<std::size_t> radix_;
  std::vector<std::size_t> strides_;
  std::vector<std::vector<Mask>> slices_;
  std::size_t tuple_count_ = 1;
};

inline CoproductAlgebra coproduct(std::vector<BooleanAlgebra> cofactors, const Limits& limits = {}) {
  return CoproductAlgebra::make(std::move(cofactors), limits);
}

/// A literal of a coproduct normal form: an element of one cofactor (never 0
/// or 1 of that cofactor).
struct Literal {
  std::size_t cofactor;
  Mask element;
  friend bool operator==(const Literal&, const Literal&) = default;
};

/// dnf = ⋁ of ⋀ of embedded literals; cnf = ⋀ of ⋁. An empty meet is 1 and
/// an empty join is 0.
struct LiteralNF {
  std::vector<std::vector<Literal>> dnf;
  std::vector<std::vector<Literal>> cnf;
};

/// Canonical forms: one conjunct per atom tuple in x (the conjunction of its
/// coordinate atoms) and, dually, one clause per atom tuple outside x (the
/// join of the complements of its coordinate atoms). Literals equal to 1 in
/// a conjunct or 0 in a clause are dropped. x = 1 gives dnf = [{}], cnf = []
/// and x = 0 gives dnf = [], cnf = [{}].
LiteralNF literal_normal_forms(const CoproductAlgebra& c, Mask x);

Mask evaluate_dnf(const CoproductAlgebra& c, const LiteralNF& nf);
Mask evaluate_cnf(const CoproductAlgebra& c, const LiteralNF& nf);

/// (x⁺, x⁻) for cofactor j, computed from the canonical forms: x⁺ joins, over
/// the conjuncts, the meet of their cofactor-j literals; x⁻ meets, over the
/// clauses, the join of their cofactor-j literals. They equal min(B_j ∩ ↑x)
/// and max(B_j ∩ ↓x). Throws IndexOutOfRange for a bad j.
std::pair<Mask, Mask> cofactor_projections(const CoproductAlgebra& c, std::size_t j, Mask x);

}  // namespace fnlab
