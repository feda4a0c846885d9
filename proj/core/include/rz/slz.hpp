#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "rz/factor.hpp"
#include "rz/stree.hpp"

namespace rz {

// Sliding-window rightmost LZ factorization in O(d) working space. Copy
// references must begin inside the d-wide window preceding the factor start.
//
// The tree covers exactly [max(0, start-d), cur]; it is rebuilt over the last
// d covered bytes at factor boundaries, which keeps the longest-repeating-
// suffix stopping rule equivalent to window membership. Factors reaching
// length 2d switch to a periodicity fast path that consumes input without
// growing the tree, so coverage stays at most 3d bytes and node count at most
// 8d.
class SlzStream {
 public:
  enum class RebuildPolicy {
    kAuto,    // rebuild only when the base lags the window start
    kAlways,  // force a fresh tree at every factor boundary
  };

  struct Stats {
    std::size_t peak_nodes = 0;
    std::size_t peak_text_bytes = 0;
    std::uint64_t rebuilds = 0;
  };

  explicit SlzStream(std::uint64_t window, int fanout = 16,
                     RebuildPolicy policy = RebuildPolicy::kAuto,
                     bool track_leftmost = false);

  const std::vector<Factor>& push(std::uint8_t c);
  std::vector<Factor> finish();

  std::uint64_t window() const { return d_; }
  const Stats& stats() const { return stats_; }
  const std::vector<std::uint64_t>& leftmost_dists() const { return leftmost_dists_; }

 private:
  void note_tree_size();
  std::uint64_t window_base(std::uint64_t factor_start) const {
    return factor_start > d_ ? factor_start - d_ : 0;
  }
  void rebuild_to(std::uint64_t new_base, const std::vector<std::uint8_t>& bytes);
  void maybe_rebuild_for_boundary(std::uint64_t next_start);
  void handle_factor_start(std::uint8_t c, std::uint64_t q, std::uint64_t lrs_len);
  Factor emit_pending(bool at_eof);
  void enter_periodic();
  void exit_periodic_and_restart(std::uint8_t c);
  std::optional<std::uint64_t> hidden_rightmost_begin(std::uint64_t len) const;
  std::uint64_t leftmost_begin_window_scan(std::uint64_t len) const;
  std::uint64_t periodic_leftmost_shift() const;

  std::uint64_t d_;
  int fanout_;
  RebuildPolicy policy_;
  bool track_leftmost_;
  std::unique_ptr<SuffixTree> tree_;
  std::unique_ptr<SuffixTree::Cursor> track_;
  std::uint64_t cur_ = 0;      // next global position to consume
  std::uint64_t start_ = 0;    // pending factor start
  std::uint64_t pending_ = 0;  // pending factor length (0 = none)
  bool periodic_ = false;
  std::uint64_t period_ = 0;
  std::uint64_t plen_ = 0;  // factor length while in the periodic path
  std::vector<Factor> out_;
  std::vector<std::uint64_t> leftmost_dists_;
  Stats stats_;
};

}  // namespace rz
