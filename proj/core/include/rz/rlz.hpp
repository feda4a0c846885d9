#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rz/factor.hpp"
#include "rz/stree.hpp"

namespace rz {

// Online rightmost LZ factorization. Bytes go in one at a time; factors come
// out as soon as their right boundary is determined (at most one factor is
// pending at any time). Factor boundaries follow the greedy parse; copy
// distances point at the rightmost previous occurrence.
class RlzStream {
 public:
  explicit RlzStream(int fanout = 16, bool track_leftmost = false)
      : tree_(0, fanout), track_leftmost_(track_leftmost) {}

  const std::vector<Factor>& push(std::uint8_t c);
  std::vector<Factor> finish();

  const SuffixTree& tree() const { return tree_; }
  // Leftmost-reference distance per emitted copy factor, in emission order;
  // filled only when track_leftmost was requested.
  const std::vector<std::uint64_t>& leftmost_dists() const { return leftmost_dists_; }

 private:
  Factor emit_pending(bool at_eof);
  std::optional<std::uint64_t> hidden_rightmost_begin(std::uint64_t len) const;
  std::uint64_t leftmost_begin_scan(std::uint64_t len) const;

  SuffixTree tree_;
  bool track_leftmost_;
  std::uint64_t start_ = 0;    // global start of the pending factor
  std::uint64_t pending_ = 0;  // bytes in the pending factor (0 = none)
  std::vector<Factor> out_;
  std::vector<std::uint64_t> leftmost_dists_;
};

}  // namespace rz
