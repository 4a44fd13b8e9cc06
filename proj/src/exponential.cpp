#include "fnlab/exponential.hpp"

#include <string>

namespace fnlab {

ExponentialAlgebra ExponentialAlgebra::make(BooleanAlgebra base, const Limits& limits) {
  if (base.size() > limits.max_exponential_base)
    throw Error(ErrorCode::SizeExceeded, "exponential of an algebra with " + std::to_string(base.size()) +
                                             " elements exceeds the base cap " +
                                             std::to_string(limits.max_exponential_base));
  ExponentialAlgebra e;
  for (Mask b : base.elements())
    if (b != 0) e.points_.push_back(b);
  e.algebra_ = BooleanAlgebra::powerset(static_cast<unsigned>(e.points_.size()), limits);
  e.base_ = std::move(base);

  const auto els = e.base_.elements();
  const Mask top = e.algebra_.top();
  if (e.bracket(0) != 0 || e.bracket(e.base_.top()) != top)
    throw Error(ErrorCode::RelationViolation, "[0] = 0 or [1] = 1 fails");
  for (Mask a : els) {
    for (Mask b : els) {
      const Mask ba = e.bracket(a);
      const Mask bb = e.bracket(b);
      if (e.bracket(a & b) != (ba & bb)) throw Error(ErrorCode::RelationViolation, "[a∧b] = [a]∧[b] fails");
      if (BooleanAlgebra::leq(a, b) && !BooleanAlgebra::leq(ba, bb))
        throw Error(ErrorCode::RelationViolation, "a <= b but [a] is not below [b]");
    }
  }
  return e;
}

Mask ExponentialAlgebra::bracket(Mask a) const {
  Mask out = 0;
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (BooleanAlgebra::leq(points_[i], a)) out |= Mask{1} << i;
  return out;
}

Mask hyperspace_basic_set(const ExponentialAlgebra& e, std::span<const Mask> members) {
  if (members.empty()) throw Error(ErrorCode::BadParams, "⟨F⟩ needs a nonempty F");
  Mask join = 0;
  for (Mask f : members) {
    if (f == 0) throw Error(ErrorCode::ZeroMember, "⟨F⟩ with a zero member");
    if (!e.base().contains(f)) throw Error(ErrorCode::BadParams, "member " + std::to_string(f) + " is not in B");
    join |= f;
  }
  Mask out = e.bracket(join);
  for (Mask f : members) out &= e.algebra().complement(e.bracket(e.base().complement(f)));
  return out;
}

BracketNF bracket_normal_forms(const ExponentialAlgebra& e, Mask x) {
  BracketNF nf;
  const Mask top = e.algebra().top();
  if (x == top) {
    nf.dnf.emplace_back();
    return nf;
  }
  if (x == 0) {
    nf.cnf.emplace_back();
    return nf;
  }
  const auto& b = e.base();
  for (std::size_t i = 0; i < e.points().size(); ++i) {
    const Mask p = e.points()[i];
    std::vector<BracketLiteral> lits;
    if ((x >> i) & 1U) {
      // {p} = [p] ∧ ⋀ −[−f]; [1] = 1 and −[0] = 1 are dropped.
      if (p != b.top()) lits.push_back({p, true});
      for (Mask f : b.atoms())
        if (BooleanAlgebra::leq(f, p) && b.complement(f) != 0) lits.push_back({b.complement(f), false});
      nf.dnf.push_back(std::move(lits));
    } else {
      // −{p} = −[p] ∨ ⋁ [−f]; −[1] = 0 and [0] = 0 are dropped.
      if (p != b.top()) lits.push_back({p, false});
      for (Mask f : b.atoms())
        if (BooleanAlgebra::leq(f, p) && b.complement(f) != 0) lits.push_back({b.complement(f), true});
      nf.cnf.push_back(std::move(lits));
    }
  }
  return nf;
}

namespace {

Mask literal_value(const ExponentialAlgebra& e, const BracketLiteral& lit) {
  const Mask br = e.bracket(lit.index);
  return lit.positive ? br : e.algebra().complement(br);
}

}  // namespace

Mask evaluate_dnf(const ExponentialAlgebra& e, const BracketNF& nf) {
  Mask out = 0;
  for (const auto& conj : nf.dnf) {
    Mask term = e.algebra().top();
    for (const auto& lit : conj) term &= literal_value(e, lit);
    out |= term;
  }
  return out;
}

Mask evaluate_cnf(const ExponentialAlgebra& e, const BracketNF& nf) {
  Mask out = e.algebra().top();
  for (const auto& clause : nf.cnf) {
    Mask term = 0;
    for (const auto& lit : clause) term |= literal_value(e, lit);
    out &= term;
  }
  return out;
}

}  // namespace fnlab
