#include "fnlab/poset.hpp"

#include <algorithm>
#include <string>

namespace fnlab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotReflexive: return "NotReflexive";
    case ErrorCode::NotAntisymmetric: return "NotAntisymmetric";
    case ErrorCode::NotTransitive: return "NotTransitive";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::SizeExceeded: return "SizeExceeded";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::MapNotTotal: return "MapNotTotal";
    case ErrorCode::NotPermutation: return "NotPermutation";
    case ErrorCode::NotARetraction: return "NotARetraction";
    case ErrorCode::InvalidInputPair: return "InvalidInputPair";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::DegenerateCofactor: return "DegenerateCofactor";
    case ErrorCode::ZeroMember: return "ZeroMember";
    case ErrorCode::RelationViolation: return "RelationViolation";
    case ErrorCode::NotComparable: return "NotComparable";
    case ErrorCode::NoWitness: return "NoWitness";
    case ErrorCode::NotMonotone: return "NotMonotone";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "Unknown";
}

namespace {

void check_size(std::size_t n, const Limits& limits) {
  if (n > limits.max_poset_elements)
    throw Error(ErrorCode::SizeExceeded,
                "poset with " + std::to_string(n) + " elements exceeds cap " +
                    std::to_string(limits.max_poset_elements));
}

std::vector<ElementSet> rows_of(const RelationMatrix& leq) {
  const std::size_t n = leq.size();
  std::vector<ElementSet> up(n, ElementSet(n));
  for (std::size_t x = 0; x < n; ++x) {
    if (leq[x].size() != n)
      throw Error(ErrorCode::BadParams, "relation matrix is not square (row " + std::to_string(x) + ")");
    for (std::size_t y = 0; y < n; ++y)
      if (leq[x][y]) up[x].insert(y);
  }
  return up;
}

std::optional<PosetViolation> violation_of(const std::vector<ElementSet>& up) {
  const std::size_t n = up.size();
  for (std::size_t x = 0; x < n; ++x)
    if (!up[x].contains(x)) return PosetViolation{ErrorCode::NotReflexive, {x}};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (up[x].contains(y) && up[y].contains(x)) return PosetViolation{ErrorCode::NotAntisymmetric, {x, y}};
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (!up[x].contains(y) || up[y].subset_of(up[x])) continue;
      auto z = (up[y] - up[x]).first();
      return PosetViolation{ErrorCode::NotTransitive, {x, y, *z}};
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<PosetViolation> find_poset_violation(const RelationMatrix& leq) { return violation_of(rows_of(leq)); }

Poset Poset::from_relation(const RelationMatrix& leq, std::vector<std::string> labels, const Limits& limits) {
  check_size(leq.size(), limits);
  auto up = rows_of(leq);
  if (auto v = violation_of(up)) {
    std::string msg = "relation matrix violates the axiom at (";
    for (std::size_t i = 0; i < v->witness.size(); ++i) msg += (i ? "," : "") + std::to_string(v->witness[i]);
    throw Error(v->axiom, msg + ")", v->witness);
  }
  Poset p;
  const std::size_t n = up.size();
  p.down_.assign(n, ElementSet(n));
  for (std::size_t x = 0; x < n; ++x) up[x].for_each([&](std::size_t y) { p.down_[y].insert(x); });
  p.up_ = std::move(up);
  if (!labels.empty() && labels.size() != n)
    throw Error(ErrorCode::BadParams, "label count does not match element count");
  p.labels_ = std::move(labels);
  return p;
}

Poset Poset::from_covers(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& covers,
                         std::vector<std::string> labels, const Limits& limits) {
  check_size(n, limits);
  std::vector<ElementSet> up(n, ElementSet(n));
  for (std::size_t x = 0; x < n; ++x) up[x].insert(x);
  for (auto [lo, hi] : covers) {
    if (lo >= n || hi >= n)
      throw Error(ErrorCode::IndexOutOfRange, "cover edge references element outside 0.." + std::to_string(n),
                  {lo, hi});
    up[lo].insert(hi);
  }
  // Warshall closure on bitset rows.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t x = 0; x < n; ++x)
      if (up[x].contains(k)) up[x] |= up[k];
  RelationMatrix rel(n, std::vector<bool>(n));
  for (std::size_t x = 0; x < n; ++x) up[x].for_each([&](std::size_t y) { rel[x][y] = true; });
  return from_relation(rel, std::move(labels), limits);
}

Poset Poset::chain(std::size_t n) {
  RelationMatrix rel(n, std::vector<bool>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x; y < n; ++y) rel[x][y] = true;
  return from_relation(rel);
}

Poset Poset::antichain(std::size_t n) {
  RelationMatrix rel(n, std::vector<bool>(n));
  for (std::size_t x = 0; x < n; ++x) rel[x][x] = true;
  return from_relation(rel);
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = size();
  for (std::size_t x = 0; x < n; ++x) {
    ElementSet above = up_[x];
    above.erase(x);
    above.for_each([&](std::size_t y) {
      ElementSet between = above & down_[y];
      between.erase(y);
      if (between.empty()) out.emplace_back(x, y);
    });
  }
  return out;
}

RelationMatrix Poset::relation() const {
  const std::size_t n = size();
  RelationMatrix rel(n, std::vector<bool>(n));
  for (std::size_t x = 0; x < n; ++x) up_[x].for_each([&](std::size_t y) { rel[x][y] = true; });
  return rel;
}

void Poset::check_index(std::size_t x) const {
  if (x >= size())
    throw Error(ErrorCode::IndexOutOfRange,
                "element " + std::to_string(x) + " not in poset of size " + std::to_string(size()), {x});
}

ElementSet down_set(const Poset& p, std::size_t x) {
  p.check_index(x);
  return p.down(x);
}

ElementSet up_set(const Poset& p, std::size_t x) {
  p.check_index(x);
  return p.up(x);
}

ElementSet maximal_elements(const Poset& p, const ElementSet& s) {
  ElementSet out = s;
  s.for_each([&](std::size_t x) {
    ElementSet strictly_above = p.up(x) & s;
    strictly_above.erase(x);
    if (!strictly_above.empty()) out.erase(x);
  });
  return out;
}

ElementSet minimal_elements(const Poset& p, const ElementSet& s) {
  ElementSet out = s;
  s.for_each([&](std::size_t x) {
    ElementSet strictly_below = p.down(x) & s;
    strictly_below.erase(x);
    if (!strictly_below.empty()) out.erase(x);
  });
  return out;
}

Poset SubsetView::induced() const {
  auto list = member_list();
  RelationMatrix rel(list.size(), std::vector<bool>(list.size()));
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = 0; j < list.size(); ++j) rel[i][j] = ambient->leq(list[i], list[j]);
  std::vector<std::string> labels;
  if (!ambient->labels().empty())
    for (auto m : list) labels.push_back(ambient->labels()[m]);
  return Poset::from_relation(rel, std::move(labels));
}

std::size_t cofinality_below(const SubsetView& a, std::size_t p) {
  a.ambient->check_index(p);
  return maximal_elements(*a.ambient, a.members & a.ambient->down(p)).size();
}

std::size_t coinitiality_above(const SubsetView& a, std::size_t p) {
  a.ambient->check_index(p);
  return minimal_elements(*a.ambient, a.members & a.ambient->up(p)).size();
}

std::size_t subposet_degree(const SubsetView& a) {
  std::size_t degree = 0;
  for (std::size_t p = 0; p < a.ambient->size(); ++p)
    degree = std::max({degree, cofinality_below(a, p), coinitiality_above(a, p)});
  return degree;
}

void MonotoneMap::check_shape() const {
  if (image.size() != dom->size())
    throw Error(ErrorCode::MapNotTotal, "map defines " + std::to_string(image.size()) + " images for a domain of " +
                                            std::to_string(dom->size()));
  for (std::size_t x = 0; x < image.size(); ++x)
    if (image[x] >= cod->size())
      throw Error(ErrorCode::IndexOutOfRange, "image of " + std::to_string(x) + " lies outside the codomain",
                  {x, image[x]});
}

bool MonotoneMap::is_monotone() const {
  check_shape();
  for (std::size_t x = 0; x < dom->size(); ++x) {
    bool ok = true;
    dom->up(x).for_each([&](std::size_t y) { ok = ok && cod->leq(image[x], image[y]); });
    if (!ok) return false;
  }
  return true;
}

MonotoneMap make_monotone(PosetPtr dom, PosetPtr cod, std::vector<std::size_t> image) {
  MonotoneMap m{std::move(dom), std::move(cod), std::move(image)};
  if (!m.is_monotone()) throw Error(ErrorCode::NotMonotone, "map is not order-preserving");
  return m;
}

bool check_retraction(const MonotoneMap& i, const MonotoneMap& j) {
  if (!(*i.dom == *j.cod) || !(*i.cod == *j.dom))
    throw Error(ErrorCode::DomainMismatch, "expected i: P -> Q and j: Q -> P");
  if (!i.is_monotone() || !j.is_monotone()) return false;
  for (std::size_t p = 0; p < i.dom->size(); ++p)
    if (j(i(p)) != p) return false;
  return true;
}

}  // namespace fnlab
