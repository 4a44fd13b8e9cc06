#include "fnlab/boolalg.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace fnlab {

namespace {

void check_element_count(std::uint64_t count_log2, const Limits& limits, const char* what) {
  if (count_log2 >= 64 || (std::uint64_t{1} << count_log2) > limits.max_algebra_elements)
    throw Error(ErrorCode::SizeExceeded, std::string(what) + " would have 2^" + std::to_string(count_log2) +
                                             " elements, cap is " + std::to_string(limits.max_algebra_elements));
}

/// All unions of the given pairwise disjoint cells, ascending.
std::vector<Mask> unions_of(const std::vector<Mask>& cells) {
  std::vector<Mask> out(std::size_t{1} << cells.size());
  for (std::size_t s = 1; s < out.size(); ++s) {
    auto low = static_cast<std::size_t>(std::countr_zero(s));
    out[s] = out[s & (s - 1)] | cells[low];
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool cells_are_singletons(const std::vector<Mask>& cells, unsigned k) {
  if (cells.size() != k) return false;
  return std::all_of(cells.begin(), cells.end(), [](Mask c) { return std::has_single_bit(c); });
}

}  // namespace

BooleanAlgebra BooleanAlgebra::powerset(unsigned k, const Limits& limits) {
  if (k > kMaxAmbientAtoms) throw Error(ErrorCode::SizeExceeded, "more than 64 atoms");
  check_element_count(k, limits, "powerset algebra");
  std::vector<Mask> atoms;
  for (unsigned i = 0; i < k; ++i) atoms.push_back(Mask{1} << i);
  return BooleanAlgebra(k, std::nullopt, std::move(atoms));
}

BooleanAlgebra BooleanAlgebra::from_carrier(unsigned ambient_atoms, std::vector<Mask> carrier) {
  if (ambient_atoms > kMaxAmbientAtoms) throw Error(ErrorCode::SizeExceeded, "more than 64 atoms");
  std::sort(carrier.begin(), carrier.end());
  carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());
  const Mask top = full_mask(ambient_atoms);
  auto has = [&](Mask m) { return std::binary_search(carrier.begin(), carrier.end(), m); };
  if (!has(0) || !has(top)) throw Error(ErrorCode::RelationViolation, "carrier must contain 0 and 1");
  for (Mask a : carrier) {
    if ((a & ~top) != 0) throw Error(ErrorCode::RelationViolation, "carrier element outside the ambient atoms");
    if (!has(top & ~a)) throw Error(ErrorCode::RelationViolation, "carrier not closed under complement");
  }
  if (carrier.size() <= 4096) {
    for (Mask a : carrier)
      for (Mask b : carrier)
        if (!has(a & b)) throw Error(ErrorCode::RelationViolation, "carrier not closed under meet");
  }
  // Atoms: minimal nonzero elements.
  std::vector<Mask> atoms;
  for (Mask a : carrier) {
    if (a == 0) continue;
    bool minimal = std::none_of(carrier.begin(), carrier.end(), [&](Mask b) { return b != 0 && b != a && leq(b, a); });
    if (minimal) atoms.push_back(a);
  }
  Mask cover = 0;
  for (Mask a : atoms) cover |= a;
  if (cover != top || (std::uint64_t{1} << atoms.size()) != carrier.size())
    throw Error(ErrorCode::RelationViolation, "carrier atoms do not partition the ambient atom set");
  if (cells_are_singletons(atoms, ambient_atoms)) return BooleanAlgebra(ambient_atoms, std::nullopt, std::move(atoms));
  return BooleanAlgebra(ambient_atoms, std::move(carrier), std::move(atoms));
}

std::uint64_t BooleanAlgebra::size() const noexcept {
  if (carrier_) return carrier_->size();
  return std::uint64_t{1} << ambient_atoms_;
}

std::optional<std::size_t> BooleanAlgebra::index_of(Mask m) const {
  if (!carrier_) {
    if ((m & ~top()) != 0) return std::nullopt;
    return static_cast<std::size_t>(m);
  }
  auto it = std::lower_bound(carrier_->begin(), carrier_->end(), m);
  if (it == carrier_->end() || *it != m) return std::nullopt;
  return static_cast<std::size_t>(it - carrier_->begin());
}

std::vector<Mask> BooleanAlgebra::elements() const {
  if (carrier_) return *carrier_;
  std::vector<Mask> out(size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

Poset BooleanAlgebra::as_poset(const Limits& limits) const {
  if (size() > limits.max_poset_elements)
    throw Error(ErrorCode::SizeExceeded, "algebra with " + std::to_string(size()) +
                                             " elements is too large to view as a poset");
  const auto els = elements();
  RelationMatrix rel(els.size(), std::vector<bool>(els.size()));
  for (std::size_t i = 0; i < els.size(); ++i)
    for (std::size_t j = 0; j < els.size(); ++j) rel[i][j] = leq(els[i], els[j]);
  return Poset::from_relation(rel, {}, limits);
}

BooleanAlgebra powerset_algebra(unsigned k, const Limits& limits) { return BooleanAlgebra::powerset(k, limits); }

BooleanAlgebra generated_subalgebra(const BooleanAlgebra& b, std::span<const Mask> gens, const Limits& limits) {
  std::vector<Mask> cells;
  if (b.top() != 0) cells.push_back(b.top());
  for (Mask g : gens) {
    if (!b.contains(g)) throw Error(ErrorCode::BadParams, "generator " + std::to_string(g) + " is not in the algebra");
    std::vector<Mask> next;
    next.reserve(cells.size() * 2);
    for (Mask c : cells) {
      if ((c & g) != 0) next.push_back(c & g);
      if ((c & ~g) != 0) next.push_back(c & ~g);
    }
    cells = std::move(next);
  }
  check_element_count(cells.size(), limits, "generated subalgebra");
  std::sort(cells.begin(), cells.end());
  const unsigned k = b.ambient_atoms();
  if (cells_are_singletons(cells, k)) return BooleanAlgebra(k, std::nullopt, std::move(cells));
  auto carrier = unions_of(cells);
  return BooleanAlgebra(k, std::move(carrier), std::move(cells));
}

IntervalAlgebra interval_algebra(std::size_t n, const Limits& limits) {
  if (n > kMaxAmbientAtoms) throw Error(ErrorCode::SizeExceeded, "interval algebra on more than 64 points");
  auto ambient = BooleanAlgebra::powerset(static_cast<unsigned>(n), limits);
  std::vector<Mask> gens{0};
  for (std::size_t lo = 0; lo < n; ++lo)
    for (std::size_t hi = lo + 1; hi <= n; ++hi) gens.push_back(full_mask(static_cast<unsigned>(hi)) & ~full_mask(static_cast<unsigned>(lo)));
  return IntervalAlgebra{n, gens, generated_subalgebra(ambient, gens, limits)};
}

TreeAlgebra tree_algebra(std::size_t lam, std::size_t kap, const Limits& limits) {
  TreeAlgebra out{lam, kap, {}, {}, {}, {}, BooleanAlgebra{}};
  // T in length-then-lexicographic order.
  if (kap >= 1) out.tree.push_back({});
  for (std::size_t start = 0; start < out.tree.size(); ++start) {
    if (out.tree[start].size() + 1 >= kap) continue;
    for (std::size_t v = 0; v < lam; ++v) {
      auto child = out.tree[start];
      child.push_back(v);
      out.tree.push_back(std::move(child));
      if (out.tree.size() > limits.max_poset_elements)
        throw Error(ErrorCode::SizeExceeded, "tree with more than " + std::to_string(limits.max_poset_elements) +
                                                 " nodes");
    }
  }
  // J: nodes with a proper extension in T, i.e. length < kap - 1.
  std::vector<std::size_t> coord_of(out.tree.size(), SIZE_MAX);
  for (std::size_t t = 0; t < out.tree.size(); ++t) {
    if (lam > 0 && out.tree[t].size() + 1 < kap) {
      coord_of[t] = out.coordinates.size();
      out.coordinates.push_back(t);
    }
  }
  if (out.coordinates.size() > 5)
    throw Error(ErrorCode::SizeExceeded, "tree algebra needs 2^" + std::to_string(out.coordinates.size()) +
                                             " points; at most 32 are supported");
  const auto points = static_cast<unsigned>(std::size_t{1} << out.coordinates.size());

  // D(F) = ⋃_{s ∈ F} strict prefixes of s; closed under finite unions, so
  // build it as the union-closure of the singleton families D({s}).
  auto prefix_index = [&](const std::vector<std::size_t>& seq) {
    return static_cast<std::size_t>(
        std::find(out.tree.begin(), out.tree.end(), seq) - out.tree.begin());
  };
  std::set<Mask> family{0};
  for (const auto& s : out.tree) {
    Mask ds = 0;
    for (std::size_t len = 0; len < s.size(); ++len) {
      std::vector<std::size_t> prefix(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(len));
      ds |= Mask{1} << coord_of[prefix_index(prefix)];
    }
    std::vector<Mask> grown(family.begin(), family.end());
    for (Mask d : grown) family.insert(d | ds);
  }
  for (Mask d : family) {
    std::vector<std::size_t> members;
    Mask point_set = 0;
    for (std::size_t c = 0; c < out.coordinates.size(); ++c)
      if ((d >> c) & 1U) members.push_back(out.coordinates[c]);
    for (unsigned u = 0; u < points; ++u)
      if ((u & d) == 0) point_set |= Mask{1} << u;
    out.family.push_back(std::move(members));
    out.generators.push_back(point_set);
  }
  auto ambient = BooleanAlgebra::powerset(points, Limits{limits.max_poset_elements, ~std::uint64_t{0} >> 1,
                                                         limits.max_exponential_base, limits.node_budget});
  out.algebra = generated_subalgebra(ambient, out.generators, limits);
  return out;
}

}  // namespace fnlab
