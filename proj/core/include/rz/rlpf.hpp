#pragma once

#include <cstdint>

#include "rz/stree.hpp"

namespace rz {

// RLPF[i]: length of the longest repeating suffix of S[1..i] plus the
// distance i-j to the rightmost previous end j of that suffix. (0,1) when the
// character is fresh.
struct RlpfEntry {
  std::uint64_t len = 0;
  std::uint64_t dist = 1;
  bool operator==(const RlpfEntry&) const = default;
};

class RlpfStream {
 public:
  explicit RlpfStream(int fanout = 16) : tree_(0, fanout) {}

  RlpfEntry push(std::uint8_t c) {
    const ActivePoint ap = tree_.extend(c);
    const std::uint64_t i = tree_.end_pos();  // 1-based position of c
    if (ap.len == 0) return {0, 1};
    // The current suffix of length |lrs| repeats, so it is not a leaf; every
    // other occurrence is one. No exclusion needed.
    auto p = tree_.rightmost_leaf_begin(ap.locus);
    assert(p.has_value());
    const std::uint64_t j = *p + ap.len;  // 1-based end of the rightmost previous occurrence
    return {ap.len, i - j};
  }

  const SuffixTree& tree() const { return tree_; }

 private:
  SuffixTree tree_;
};

}  // namespace rz
