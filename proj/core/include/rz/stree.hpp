#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <utility>
#include <vector>

#include "rz/bp_tree.hpp"

namespace rz {

// Append-only byte sequence addressed by global 0-based positions. The front
// can be dropped so a sliding consumer keeps O(window) bytes.
class SText {
 public:
  explicit SText(std::uint64_t base = 0) : base_(base) {}

  void append(std::uint8_t b) {
    buf_.push_back(b);
    if (buf_.size() > peak_) peak_ = buf_.size();
  }
  std::uint8_t at(std::uint64_t pos) const {
    assert(pos >= base_ && pos - base_ < buf_.size());
    return buf_[pos - base_];
  }
  std::uint64_t base() const { return base_; }
  std::uint64_t end_pos() const { return base_ + buf_.size(); }
  std::size_t bytes_held() const { return buf_.size(); }
  std::size_t peak_bytes_held() const { return peak_; }
  void reserve(std::size_t n) { buf_.reserve(n); }

 private:
  std::vector<std::uint8_t> buf_;
  std::uint64_t base_;
  std::size_t peak_ = 0;
};

struct STNode {
  STNode* parent = nullptr;
  STNode* slink = nullptr;
  std::uint64_t edge_start = 0;
  std::uint64_t edge_end = 0;  // kOpenEnd for leaves
  std::uint64_t depth = 0;     // string depth; meaningful for internal nodes
  std::uint64_t leaf_begin = 0;
  BpTree::Node* bp = nullptr;
  std::vector<std::pair<std::uint8_t, STNode*>> children;  // sorted by byte

  bool is_leaf() const { return edge_end == static_cast<std::uint64_t>(-1); }
};

// Position in the suffix tree: the string of length `depth` spelled from the
// root that ends on the edge into `node` (or at `node` itself). `depth` is
// invariant under edge splits; `node` is re-resolved lazily, so a Locus stays
// valid while the tree grows.
struct Locus {
  STNode* node = nullptr;
  std::uint64_t depth = 0;
};

struct ActivePoint {
  Locus locus;
  std::uint64_t len = 0;  // |lrs| of the current string
};

// Online suffix tree (Ukkonen) over an appendable byte sequence, mirrored
// into a BP-linked tree: leaves weigh their suffix begin position, everything
// else is neutral, so rightmost/leftmost occurrence queries are subtree
// max/min on the BP side.
class SuffixTree {
 public:
  static constexpr std::uint64_t kOpenEnd = static_cast<std::uint64_t>(-1);

  explicit SuffixTree(std::uint64_t base = 0, int fanout = 16);
  SuffixTree(const SuffixTree&) = delete;
  SuffixTree& operator=(const SuffixTree&) = delete;

  // Appends c, updates the tree to the implicit suffix tree of the extended
  // string and returns the locus of its longest repeating suffix.
  ActivePoint extend(std::uint8_t c);

  const SText& text() const { return text_; }
  std::uint64_t base() const { return text_.base(); }
  std::uint64_t end_pos() const { return text_.end_pos(); }
  std::size_t node_count() const { return node_count_; }
  std::uint64_t lrs_len() const { return active_node_->depth + active_len_; }
  ActivePoint active() const;
  Locus root_locus() const { return {root_, 0}; }
  STNode* root() const { return root_; }

  // Greatest (resp. least) leaf begin position in the subtree at l, skipping
  // the unique leaf whose begin equals exclude_begin if present. nullopt if
  // no qualifying leaf. Exclusion re-queries the two BP subranges flanking
  // the excluded leaf's parens.
  std::optional<std::uint64_t> rightmost_leaf_begin(
      Locus l, std::optional<std::uint64_t> exclude_begin = std::nullopt) const;
  std::optional<std::uint64_t> leftmost_leaf_begin(
      Locus l, std::optional<std::uint64_t> exclude_begin = std::nullopt) const;

  // Locus spelling text[begin, begin+len), or nullopt if that string does not
  // occur. O(len + edges * log sigma).
  std::optional<Locus> locus_of(std::uint64_t begin, std::uint64_t len) const;

  // Locus of str(l) with its first character removed; pre: depth(l) >= 1.
  Locus suffix_link_step(Locus l) const;

  // Second cursor tracking one growing string through the live tree.
  class Cursor {
   public:
    explicit Cursor(const SuffixTree* t) : tree_(t) { reset(); }
    void reset() { loc_ = {tree_->root_, 0}; }
    // Extends the tracked string by c; false if absent from the tree.
    bool advance(std::uint8_t c);
    Locus locus() const { return loc_; }
    std::uint64_t depth() const { return loc_.depth; }

   private:
    const SuffixTree* tree_;
    Locus loc_;
  };

  // Tests / instrumentation.
  BpTree& bp() { return bp_; }
  const BpTree& bp() const { return bp_; }
  std::uint64_t locus_depth(const Locus& l) const { return l.depth; }
  STNode* resolve(Locus& l) const;

 private:
  STNode* new_node();
  STNode* find_child(const STNode* n, std::uint8_t b) const;
  void set_child(STNode* n, std::uint8_t b, STNode* child);
  std::uint64_t edge_len(const STNode* n) const {
    return (n->is_leaf() ? text_.end_pos() : n->edge_end) - n->edge_start;
  }
  std::uint64_t bottom_depth(const STNode* n) const {
    return n->is_leaf() ? text_.end_pos() - n->leaf_begin : n->depth;
  }
  STNode* add_leaf(STNode* parent, std::uint64_t pos);
  STNode* split(STNode* child, std::uint64_t offset);
  Locus descend(STNode* from, std::uint64_t pos, std::uint64_t len) const;
  template <bool kMax>
  std::optional<std::uint64_t> extreme_leaf_begin(Locus l,
                                                  std::optional<std::uint64_t> exclude) const;

  SText text_;
  BpTree bp_;
  std::deque<STNode> pool_;
  STNode* root_;
  STNode* active_node_;
  std::uint64_t active_edge_ = 0;
  std::uint64_t active_len_ = 0;
  std::uint64_t remainder_ = 0;
  std::size_t node_count_ = 0;
};

}  // namespace rz
