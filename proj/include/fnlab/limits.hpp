#pragma once

#include <cstddef>
#include <cstdint>

namespace fnlab {

/// Size caps shared by every constructor. Exceeding one raises SizeExceeded.
struct Limits {
  std::size_t max_poset_elements = 4096;
  std::uint64_t max_algebra_elements = std::uint64_t{1} << 20;
  std::size_t max_exponential_base = 16;
  std::uint64_t node_budget = 100'000'000;
};

}  // namespace fnlab
