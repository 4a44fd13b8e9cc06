#pragma once

#include <initializer_list>
#include <vector>

#include "fnlab/boolalg.hpp"
#include "fnlab/fnpair.hpp"
#include "fnlab/oracle.hpp"

namespace fixtures {

using namespace fnlab;

// 0 < a=1, b=2 < 1=3 (mask order of the 2-atom powerset)
inline Poset diamond() { return Poset::from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}); }

inline SetMap set_map(std::size_t n, std::initializer_list<std::initializer_list<std::size_t>> images) {
  SetMap out;
  for (auto img : images) {
    ElementSet s(n);
    for (auto x : img) s.insert(x);
    out.push_back(s);
  }
  return out;
}

inline oracle::ListMap lists(const SetMap& m) {
  oracle::ListMap out;
  for (const auto& s : m) out.push_back(s.members());
  return out;
}

}  // namespace fixtures
