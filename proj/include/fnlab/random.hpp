#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "fnlab/fnpair.hpp"

namespace fnlab {

/// Seeded generator with platform-independent draws (the standard
/// distributions are implementation-defined, mt19937_64 itself is not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t v;
    do v = engine_();
    while (v >= limit);
    return v % n;
  }
  /// True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

  std::vector<std::size_t> permutation(std::size_t n) {
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[below(i)]);
    return p;
  }

 private:
  std::mt19937_64 engine_;
};

/// Random labeled poset: each pair ordered by a hidden random linear order
/// becomes a cover candidate with probability num/den; closure applied.
Poset random_poset(std::size_t n, Rng& rng, std::uint64_t num = 1, std::uint64_t den = 3);

/// A valid pair built from a random base construction (trivial pair, its
/// mirror, a well-order map pair or a searched pair), optionally enlarged at
/// random. Always verified before returning.
FnPair random_valid_pair(const PosetPtr& poset, Rng& rng);

/// Random nonempty subset.
ElementSet random_subset(std::size_t n, Rng& rng);

/// A random poset Q with a retract P: i: P→Q, j: Q→P, j∘i = id_P.
struct RetractionInstance {
  MonotoneMap i;
  MonotoneMap j;
};

RetractionInstance random_retraction(std::size_t retract_size, std::size_t extra, Rng& rng);

}  // namespace fnlab
