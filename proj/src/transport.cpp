#include "fnlab/transport.hpp"

#include <algorithm>
#include <string>

namespace fnlab {

namespace {

void require_valid(const FnPair& pair, const std::string& what) {
  auto v = verify_pair(pair);
  if (!v.valid)
    throw Error(ErrorCode::InvalidInputPair, what + " fails at (" + std::to_string(v.violation->p) + "," +
                                                 std::to_string(v.violation->q) + ")",
                {v.violation->p, v.violation->q});
}

void require_same(const Poset& have, const Poset& want, const std::string& what) {
  if (!(have == want)) throw Error(ErrorCode::DomainMismatch, what);
}

Transported finish(FnPair pair) {
  Verdict v = verify_pair(pair);
  return Transported{std::move(pair), std::move(v)};
}

/// Carrier of the subalgebra generated by `gens`, as element indices of `b`.
ElementSet generated_indices(const BooleanAlgebra& b, std::vector<Mask>& gens, std::size_t universe,
                             const Limits& limits) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  const auto sub = generated_subalgebra(b, gens, limits);
  ElementSet out(universe);
  for (Mask m : sub.elements()) out.insert(*b.index_of(m));
  return out;
}

}  // namespace

Transported transport_retract(const FnPair& pair_q, const MonotoneMap& i, const MonotoneMap& j) {
  if (!check_retraction(i, j)) throw Error(ErrorCode::NotARetraction, "need monotone i, j with j∘i = id");
  require_same(*pair_q.poset, *i.cod, "pair must live on the codomain of i");
  require_valid(pair_q, "input pair");
  const std::size_t n = i.dom->size();
  FnPair out{i.dom, SetMap(n, ElementSet(n)), SetMap(n, ElementSet(n))};
  for (std::size_t p = 0; p < n; ++p) {
    pair_q.f[i(p)].for_each([&](std::size_t y) { out.f[p].insert(j(y)); });
    pair_q.g[i(p)].for_each([&](std::size_t y) { out.g[p].insert(j(y)); });
  }
  return finish(std::move(out));
}

Transported transport_subalgebra(const FnPair& pair_q, const SubsetView& a) {
  if (a.members.empty()) throw Error(ErrorCode::EmptySubset, "subposet has no elements");
  require_same(*pair_q.poset, *a.ambient, "pair must live on the ambient poset");
  require_valid(pair_q, "input pair");
  const Poset& q = *a.ambient;
  const auto members = a.member_list();
  std::vector<std::size_t> local(q.size(), SIZE_MAX);
  for (std::size_t k = 0; k < members.size(); ++k) local[members[k]] = k;

  std::vector<ElementSet> cofinal;  // L_q in local indices
  cofinal.reserve(q.size());
  for (std::size_t y = 0; y < q.size(); ++y) {
    ElementSet l(members.size());
    maximal_elements(q, a.members & q.down(y)).for_each([&](std::size_t m) { l.insert(local[m]); });
    cofinal.push_back(std::move(l));
  }
  auto sub = share(a.induced());
  const std::size_t n = members.size();
  FnPair out{sub, SetMap(n, ElementSet(n)), SetMap(n, ElementSet(n))};
  for (std::size_t k = 0; k < n; ++k) {
    pair_q.f[members[k]].for_each([&](std::size_t y) { out.f[k] |= cofinal[y]; });
    pair_q.g[members[k]].for_each([&](std::size_t y) { out.g[k] |= cofinal[y]; });
  }
  return finish(std::move(out));
}

Transported transport_coproduct(const CoproductAlgebra& c, const std::vector<FnPair>& pairs, const Limits& limits) {
  if (pairs.size() != c.cofactors().size())
    throw Error(ErrorCode::BadParams, "need one pair per cofactor");
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    require_same(*pairs[i].poset, c.cofactors()[i].as_poset(limits), "pair " + std::to_string(i) +
                                                                         " must live on its cofactor");
    require_valid(pairs[i], "pair on cofactor " + std::to_string(i));
  }
  const BooleanAlgebra& base = c.base();
  auto poset = share(base.as_poset(limits));
  const std::size_t n = poset->size();
  FnPair out{poset, SetMap(), SetMap()};
  out.f.reserve(n);
  out.g.reserve(n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto nf = literal_normal_forms(c, base.element(x));
    std::vector<Mask> f0, g0;
    auto collect = [&](const std::vector<std::vector<Literal>>& form) {
      for (const auto& group : form) {
        for (const auto& lit : group) {
          const auto& cof = c.cofactors()[lit.cofactor];
          const std::size_t idx = *cof.index_of(lit.element);
          pairs[lit.cofactor].f[idx].for_each([&](std::size_t e) { f0.push_back(c.embed(lit.cofactor, cof.element(e))); });
          pairs[lit.cofactor].g[idx].for_each([&](std::size_t e) { g0.push_back(c.embed(lit.cofactor, cof.element(e))); });
        }
      }
    };
    collect(nf.dnf);
    collect(nf.cnf);
    out.f.push_back(generated_indices(base, f0, n, limits));
    out.g.push_back(generated_indices(base, g0, n, limits));
  }
  return finish(std::move(out));
}

Transported transport_exponential(const ExponentialAlgebra& e, const FnPair& pair_b, const Limits& limits) {
  const BooleanAlgebra& b = e.base();
  require_same(*pair_b.poset, b.as_poset(limits), "pair must live on the base algebra");
  require_valid(pair_b, "input pair");
  const BooleanAlgebra& ex = e.algebra();
  auto poset = share(ex.as_poset(limits));
  const std::size_t n = poset->size();
  FnPair out{poset, SetMap(), SetMap()};
  out.f.reserve(n);
  out.g.reserve(n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto nf = bracket_normal_forms(e, ex.element(x));
    std::vector<Mask> indices;
    for (const auto* form : {&nf.dnf, &nf.cnf})
      for (const auto& group : *form)
        for (const auto& lit : group) indices.push_back(lit.index);
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    const auto support = generated_subalgebra(b, indices, limits);  // H(x)
    std::vector<Mask> f_gens, g_gens;
    for (Mask h : support.elements()) {
      const std::size_t idx = *b.index_of(h);
      pair_b.f[idx].for_each([&](std::size_t u) { f_gens.push_back(e.bracket(b.element(u))); });
      pair_b.g[idx].for_each([&](std::size_t u) { g_gens.push_back(e.bracket(b.element(u))); });
    }
    out.f.push_back(generated_indices(ex, f_gens, n, limits));
    out.g.push_back(generated_indices(ex, g_gens, n, limits));
  }
  return finish(std::move(out));
}

}  // namespace fnlab
