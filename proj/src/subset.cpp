#include "zonograph/subset.hpp"

#include <stdexcept>

namespace zonograph {

std::vector<int> mask_elements(Mask s) {
  std::vector<int> out;
  for (int i = 0; s != 0; ++i, s >>= 1)
    if (s & 1u) out.push_back(i);
  return out;
}

Mask mask_from_elements(const std::vector<int>& elems, int n) {
  Mask s = 0;
  for (int v : elems) {
    if (v < 0 || v > n) throw std::invalid_argument("vertex out of range");
    if (mask_contains(s, v)) throw std::invalid_argument("repeated vertex");
    s |= Mask{1} << v;
  }
  return s;
}

}  // namespace zonograph
