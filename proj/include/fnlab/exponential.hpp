#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fnlab/boolalg.hpp"

namespace fnlab {

/// exp(B) for a finite B. Every filter of B is principal, so the points of the
/// hyperspace are the nonzero elements of B; exp(B) is the powerset algebra on
/// those points and [a] is the set of points below a.
class ExponentialAlgebra {
 public:
  /// Throws SizeExceeded when |B| exceeds limits.max_exponential_base and
  /// RelationViolation if a defining relation fails to hold.
  static ExponentialAlgebra make(BooleanAlgebra base, const Limits& limits = {});

  const BooleanAlgebra& base() const noexcept { return base_; }
  /// Nonzero elements of the base in ascending order; point i is bit i of an
  /// exp(B) mask.
  const std::vector<Mask>& points() const noexcept { return points_; }
  const BooleanAlgebra& algebra() const noexcept { return algebra_; }

  /// [a] = { nonzero b : b <= a }.
  Mask bracket(Mask a) const;

 private:
  BooleanAlgebra base_;
  std::vector<Mask> points_;
  BooleanAlgebra algebra_;
};

inline ExponentialAlgebra exponential(BooleanAlgebra base, const Limits& limits = {}) {
  return ExponentialAlgebra::make(std::move(base), limits);
}

/// ⟨F⟩ = [⋁F] ∧ ⋀_{f∈F} −[−f]: points below ⋁F meeting every member of F.
/// Throws ZeroMember for a zero member and BadParams for an empty F.
Mask hyperspace_basic_set(const ExponentialAlgebra& e, std::span<const Mask> members);

/// ±[index]; never equal to 0 or 1 in exp(B).
struct BracketLiteral {
  Mask index;
  bool positive;
  friend bool operator==(const BracketLiteral&, const BracketLiteral&) = default;
};

struct BracketNF {
  std::vector<std::vector<BracketLiteral>> dnf;
  std::vector<std::vector<BracketLiteral>> cnf;
};

/// Normal forms of an exp(B) element over the literals ±[i]. The singleton
/// {p} is ⟨atoms below p⟩ = [p] ∧ ⋀_{atom f <= p} −[−f], which gives one
/// conjunct per point of x; clauses are the De Morgan duals for the points
/// outside x. Literals that would be 0 or 1 are dropped; x = 1 and x = 0 use
/// the same conventions as the coproduct forms.
BracketNF bracket_normal_forms(const ExponentialAlgebra& e, Mask x);

Mask evaluate_dnf(const ExponentialAlgebra& e, const BracketNF& nf);
Mask evaluate_cnf(const ExponentialAlgebra& e, const BracketNF& nf);

}  // namespace fnlab
