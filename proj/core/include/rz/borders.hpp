#pragma once

#include <cstdint>
#include <vector>

namespace rz {

// Failure function: pi[j] = length of the longest proper border of s[0..j]
// (1-based j in [1, n], pi[0] unused).
inline std::vector<std::uint32_t> prefix_function(const std::vector<std::uint8_t>& s) {
  const std::size_t n = s.size();
  std::vector<std::uint32_t> pi(n + 1, 0);
  for (std::size_t j = 2; j <= n; ++j) {
    std::uint32_t k = pi[j - 1];
    while (k > 0 && s[j - 1] != s[k]) k = pi[k];
    if (s[j - 1] == s[k]) ++k;
    pi[j] = k;
  }
  return pi;
}

}  // namespace rz
