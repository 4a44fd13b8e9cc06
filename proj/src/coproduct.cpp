#include "fnlab/coproduct.hpp"

#include <bit>
#include <string>

namespace fnlab {

CoproductAlgebra CoproductAlgebra::make(std::vector<BooleanAlgebra> cofactors, const Limits& limits) {
  CoproductAlgebra c;
  std::size_t tuples = 1;
  for (std::size_t i = 0; i < cofactors.size(); ++i) {
    const std::size_t k = cofactors[i].atom_count();
    if (k == 0) throw Error(ErrorCode::DegenerateCofactor, "cofactor " + std::to_string(i) + " has a single element", {i});
    if (tuples > kMaxAmbientAtoms / k)
      throw Error(ErrorCode::SizeExceeded, "coproduct would have more than 64 atoms");
    c.strides_.push_back(tuples);
    c.radix_.push_back(k);
    tuples *= k;
  }
  c.tuple_count_ = tuples;
  c.base_ = BooleanAlgebra::powerset(static_cast<unsigned>(tuples), limits);
  c.slices_.resize(cofactors.size());
  for (std::size_t i = 0; i < cofactors.size(); ++i) {
    c.slices_[i].assign(c.radix_[i], 0);
    for (std::size_t t = 0; t < tuples; ++t) c.slices_[i][c.coordinate(t, i)] |= Mask{1} << t;
  }
  c.cofactors_ = std::move(cofactors);
  return c;
}

Mask CoproductAlgebra::embed(std::size_t i, Mask b) const {
  if (i >= cofactors_.size()) throw Error(ErrorCode::IndexOutOfRange, "no cofactor " + std::to_string(i), {i});
  const auto& atoms = cofactors_[i].atoms();
  Mask out = 0;
  for (std::size_t u = 0; u < atoms.size(); ++u)
    if (BooleanAlgebra::leq(atoms[u], b)) out |= slices_[i][u];
  return out;
}

std::vector<Mask> CoproductAlgebra::embedding_image(std::size_t i) const {
  std::vector<Mask> out;
  for (Mask b : cofactors_.at(i).elements()) out.push_back(embed(i, b));
  return out;
}

namespace {

// Cofactor-i literal of the conjunct for atom tuple t, if it is not 1.
std::optional<Literal> conjunct_literal(const CoproductAlgebra& c, std::size_t t, std::size_t i) {
  const auto& cof = c.cofactors()[i];
  const Mask atom = cof.atoms()[c.coordinate(t, i)];
  if (atom == cof.top()) return std::nullopt;
  return Literal{i, atom};
}

// Cofactor-i literal of the clause for atom tuple t, if it is not 0.
std::optional<Literal> clause_literal(const CoproductAlgebra& c, std::size_t t, std::size_t i) {
  const auto& cof = c.cofactors()[i];
  const Mask co_atom = cof.complement(cof.atoms()[c.coordinate(t, i)]);
  if (co_atom == 0) return std::nullopt;
  return Literal{i, co_atom};
}

}  // namespace

LiteralNF literal_normal_forms(const CoproductAlgebra& c, Mask x) {
  LiteralNF nf;
  const Mask top = c.base().top();
  if (x == top) {
    nf.dnf.emplace_back();
    return nf;
  }
  if (x == 0) {
    nf.cnf.emplace_back();
    return nf;
  }
  for (std::size_t t = 0; t < c.tuple_count(); ++t) {
    const bool inside = ((x >> t) & 1U) != 0;
    std::vector<Literal> lits;
    for (std::size_t i = 0; i < c.cofactors().size(); ++i) {
      auto lit = inside ? conjunct_literal(c, t, i) : clause_literal(c, t, i);
      if (lit) lits.push_back(*lit);
    }
    (inside ? nf.dnf : nf.cnf).push_back(std::move(lits));
  }
  return nf;
}

Mask evaluate_dnf(const CoproductAlgebra& c, const LiteralNF& nf) {
  Mask out = 0;
  for (const auto& conj : nf.dnf) {
    Mask term = c.base().top();
    for (const auto& lit : conj) term &= c.embed(lit.cofactor, lit.element);
    out |= term;
  }
  return out;
}

Mask evaluate_cnf(const CoproductAlgebra& c, const LiteralNF& nf) {
  Mask out = c.base().top();
  for (const auto& clause : nf.cnf) {
    Mask term = 0;
    for (const auto& lit : clause) term |= c.embed(lit.cofactor, lit.element);
    out &= term;
  }
  return out;
}

std::pair<Mask, Mask> cofactor_projections(const CoproductAlgebra& c, std::size_t j, Mask x) {
  if (j >= c.cofactors().size()) throw Error(ErrorCode::IndexOutOfRange, "no cofactor " + std::to_string(j), {j});
  const Mask top = c.base().top();
  if (x == top) return {top, top};
  if (x == 0) return {0, 0};
  const auto& cof = c.cofactors()[j];
  const bool trivial = cof.atom_count() == 1;  // every cofactor-j literal would be 0 or 1

  // x⁺: each conjunct contributes its cofactor-j literal, or 1 when absent.
  Mask plus = 0;
  for (Mask rest = x; rest != 0; rest &= rest - 1) {
    const auto t = static_cast<std::size_t>(std::countr_zero(rest));
    plus |= trivial ? top : c.embed_atom(j, c.coordinate(t, j));
    if (plus == top) break;
  }
  // x⁻: each clause contributes its cofactor-j literal, or 0 when absent.
  Mask minus = top;
  for (Mask rest = top & ~x; rest != 0; rest &= rest - 1) {
    const auto t = static_cast<std::size_t>(std::countr_zero(rest));
    minus &= trivial ? Mask{0} : top & ~c.embed_atom(j, c.coordinate(t, j));
    if (minus == 0) break;
  }
  return {plus, minus};
}

}  // namespace fnlab
