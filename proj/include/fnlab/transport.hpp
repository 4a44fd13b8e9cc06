#pragma once

#include <vector>

#include "fnlab/coproduct.hpp"
#include "fnlab/exponential.hpp"
#include "fnlab/fnpair.hpp"

namespace fnlab {

/// A constructed pair together with its independent verification. An
/// invalid verdict here is an internal error: the construction is proven
/// sound, so a failure means a defect.
struct Transported {
  FnPair pair;
  Verdict verdict;
};

/// Pulls a pair on Q back to a retract P. With i: P→Q, j: Q→P monotone and
/// j∘i = id_P, F(p) = j[f(i(p))] and G(p) = j[g(i(p))].
/// Throws NotARetraction, InvalidInputPair or DomainMismatch.
Transported transport_retract(const FnPair& pair_q, const MonotoneMap& i, const MonotoneMap& j);

/// Restricts a pair on Q to the subposet A: with L_q the maximal elements of
/// A ∩ ↓q, F(p) = ⋃{L_q : q ∈ f(p)} and G(p) = ⋃{L_q : q ∈ g(p)}. The output
/// lives on A.induced(). Throws InvalidInputPair, EmptySubset or
/// DomainMismatch.
Transported transport_subalgebra(const FnPair& pair_q, const SubsetView& a);

/// Builds a pair on the coproduct base from one pair per cofactor: F(x) is
/// the subalgebra generated by the embedded f_i-images of every literal of
/// x's canonical normal forms, G(x) likewise with g_i.
Transported transport_coproduct(const CoproductAlgebra& c, const std::vector<FnPair>& pairs,
                                const Limits& limits = {});

/// Builds a pair on exp(B) from a pair on B: H(x) is the subalgebra of B
/// generated by the bracket indices in x's normal forms, and F(x) is the
/// subalgebra of exp(B) generated by {[h] : h ∈ ⋃ f[H(x)]} (G(x) with g).
Transported transport_exponential(const ExponentialAlgebra& e, const FnPair& pair_b, const Limits& limits = {});

}  // namespace fnlab
