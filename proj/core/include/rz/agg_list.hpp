#pragma once

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <utility>

namespace rz {

using Weight = std::int64_t;

// Reserved sentinels. Application weights must lie strictly between the two;
// the sentinels themselves are used as neutral values that can never win a
// range query against a real weight.
inline constexpr Weight kNegInf = std::numeric_limits<Weight>::min();
inline constexpr Weight kPosInf = std::numeric_limits<Weight>::max();

// Dynamic ordered sequence of weighted elements: neighbor links, insertion
// after an element, deletion, weight update and range min/max between two
// elements. Backed by a height-balanced tree over sequence order with fanout
// between ceil(B/2) and B; internal nodes keep (min,max) aggregates plus the
// leftmost child attaining each, so queries are O(B log n / log B) via a
// leaf-to-root walk from both ends.
//
// Every element carries one weight per view (min view / max view). The
// single-weight entry points set both views; the two-weight overloads let an
// element act as a neutral filler in one view (see bp_tree).
class AggList {
  struct Node;
  struct Elem;
  struct Inner;

 public:
  class Handle {
   public:
    Handle() = default;
    explicit operator bool() const { return e_ != nullptr; }
    bool operator==(const Handle&) const = default;

   private:
    friend class AggList;
    explicit Handle(Elem* e) : e_(e) {}
    Elem* e_ = nullptr;
  };

  struct Stats {
    std::uint64_t inserts = 0;
    std::uint64_t deletes = 0;
  };

  explicit AggList(int fanout = 16);
  ~AggList();
  AggList(const AggList&) = delete;
  AggList& operator=(const AggList&) = delete;

  // prev = null handle inserts at the front.
  Handle insert_after(Handle prev, Weight w, void* tag = nullptr);
  Handle insert_after(Handle prev, Weight wmin, Weight wmax, void* tag);
  void erase(Handle e);
  void update_weight(Handle e, Weight w);
  void update_weight(Handle e, Weight wmin, Weight wmax);

  // Inclusive span [l, r]; l must not come after r. Ties resolve to the
  // leftmost extreme element.
  std::pair<Handle, Weight> range_min(Handle l, Handle r) const;
  std::pair<Handle, Weight> range_max(Handle l, Handle r) const;

  Handle next(Handle e) const;  // null handle = END
  Handle prev(Handle e) const;  // null handle = FRONT
  Handle front() const;

  Weight weight_min_view(Handle e) const;
  Weight weight_max_view(Handle e) const;
  void* tag(Handle e) const;

  std::size_t size() const { return size_; }
  int fanout() const { return fanout_; }
  const Stats& stats() const { return stats_; }

  // Recomputes every aggregate from scratch and checks structure; used by
  // tests, never on the hot path.
  bool audit() const;

 private:
  template <bool kMax>
  std::pair<Handle, Weight> range_extreme(Handle l, Handle r) const;

  void pull_up(Inner* x);
  void fix_to_root(Inner* x);
  static std::size_t index_of(const Inner* parent, const Node* child);
  std::size_t min_kids() const { return (static_cast<std::size_t>(fanout_) + 1) / 2; }

  Inner* root_ = nullptr;
  Elem* first_ = nullptr;
  Elem* last_ = nullptr;
  std::size_t size_ = 0;
  int fanout_;
  Stats stats_;
};

}  // namespace rz
