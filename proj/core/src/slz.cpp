#include "rz/slz.hpp"

#include <algorithm>
#include <cassert>

#include "rz/borders.hpp"

namespace rz {

SlzStream::SlzStream(std::uint64_t window, int fanout, RebuildPolicy policy, bool track_leftmost)
    : d_(window), fanout_(fanout), policy_(policy), track_leftmost_(track_leftmost) {
  assert(d_ >= 1);
  tree_ = std::make_unique<SuffixTree>(0, fanout_);
  track_ = std::make_unique<SuffixTree::Cursor>(tree_.get());
}

void SlzStream::note_tree_size() {
  stats_.peak_nodes = std::max(stats_.peak_nodes, tree_->node_count());
  stats_.peak_text_bytes = std::max(stats_.peak_text_bytes, tree_->text().bytes_held());
}

void SlzStream::rebuild_to(std::uint64_t new_base, const std::vector<std::uint8_t>& bytes) {
  tree_ = std::make_unique<SuffixTree>(new_base, fanout_);
  for (std::uint8_t b : bytes) {
    tree_->extend(b);
    note_tree_size();
  }
  track_ = std::make_unique<SuffixTree::Cursor>(tree_.get());
  ++stats_.rebuilds;
}

// At a factor boundary the tree must cover exactly [max(0, start-d), start);
// otherwise text older than the window leaks into the repeating-suffix rule.
void SlzStream::maybe_rebuild_for_boundary(std::uint64_t next_start) {
  const std::uint64_t target = window_base(next_start);
  if (tree_->base() == target && policy_ != RebuildPolicy::kAlways) return;
  if (tree_->base() > target) return;  // cannot happen; keep the invariant visible
  std::vector<std::uint8_t> bytes;
  bytes.reserve(static_cast<std::size_t>(next_start - target));
  for (std::uint64_t p = target; p < next_start; ++p) bytes.push_back(tree_->text().at(p));
  rebuild_to(target, bytes);
}

const std::vector<Factor>& SlzStream::push(std::uint8_t c) {
  out_.clear();
  if (periodic_) {
    // Compare against the periodic continuation; the ring is frozen.
    const std::uint64_t phase = plen_ % period_;
    if (tree_->text().at(start_ + phase) == c) {
      ++plen_;
      ++cur_;
      return out_;
    }
    out_.push_back(Factor::copy(plen_, period_));
    if (track_leftmost_) leftmost_dists_.push_back(periodic_leftmost_shift());
    exit_periodic_and_restart(c);
    return out_;
  }

  const std::uint64_t q = cur_;
  if (pending_ == 0) maybe_rebuild_for_boundary(q);
  const ActivePoint ap = tree_->extend(c);
  note_tree_size();
  ++cur_;

  if (pending_ == 0) {
    handle_factor_start(c, q, ap.len);
    return out_;
  }
  if (ap.len >= pending_ + 1) {
    ++pending_;
    const bool ok = track_->advance(c);
    assert(ok);
    (void)ok;
    if (pending_ == 2 * d_) enter_periodic();
    return out_;
  }
  // Stopping rule fired: emit S[start..q-1], restart at q.
  out_.push_back(emit_pending(false));
  pending_ = 0;
  start_ = q;
  maybe_rebuild_for_boundary(q);
  if (tree_->end_pos() == q) {
    // the boundary rebuild dropped the byte at q; re-extend
    const ActivePoint ap2 = tree_->extend(c);
    note_tree_size();
    handle_factor_start(c, q, ap2.len);
  } else {
    handle_factor_start(c, q, ap.len);
  }
  return out_;
}

void SlzStream::handle_factor_start(std::uint8_t c, std::uint64_t q, std::uint64_t lrs_len) {
  if (lrs_len == 0) {
    out_.push_back(Factor::literal(c));
    pending_ = 0;
    return;
  }
  start_ = q;
  pending_ = 1;
  track_->reset();
  const bool ok = track_->advance(c);
  assert(ok);
  (void)ok;
}

std::vector<Factor> SlzStream::finish() {
  std::vector<Factor> out;
  if (periodic_) {
    out.push_back(Factor::copy(plen_, period_));
    if (track_leftmost_) leftmost_dists_.push_back(periodic_leftmost_shift());
    periodic_ = false;
    return out;
  }
  if (pending_ > 0) {
    out.push_back(emit_pending(true));
    pending_ = 0;
  }
  return out;
}

std::optional<std::uint64_t> SlzStream::hidden_rightmost_begin(std::uint64_t len) const {
  const std::uint64_t lrs = tree_->lrs_len();
  if (lrs <= len) return std::nullopt;
  const std::uint64_t q_last = tree_->end_pos() - 1;
  std::vector<std::uint8_t> rev(static_cast<std::size_t>(lrs));
  for (std::uint64_t k = 0; k < lrs; ++k) rev[k] = tree_->text().at(q_last - k);
  const auto pi = prefix_function(rev);
  for (std::uint64_t j = len + 1; j <= lrs; ++j)
    if (pi[j] == len) {
      const std::uint64_t end = q_last - (j - len);
      return end - len + 1;
    }
  return std::nullopt;
}

Factor SlzStream::emit_pending(bool at_eof) {
  const std::uint64_t len = pending_;
  Locus locus = track_->locus();
  std::optional<std::uint64_t> p;
  if (at_eof) {
    // The pending factor is the text suffix; occurrences may hide as
    // repeating suffixes, so combine the leaf route with the border route.
    p = tree_->rightmost_leaf_begin(locus, start_);
    auto hid = hidden_rightmost_begin(len);
    if (hid && (!p || *hid > *p)) p = hid;
  } else {
    // Mid-stream the rule just failed: |lrs| <= len, so every previous
    // occurrence is a leaf. The tracked cursor still sits at the pattern
    // locus (the failing byte never advanced it).
    p = tree_->rightmost_leaf_begin(locus, start_);
  }
  assert(p.has_value() && *p < start_ && *p >= window_base(start_));
  if (track_leftmost_) {
    std::optional<std::uint64_t> lm = tree_->leftmost_leaf_begin(locus, start_);
    std::uint64_t lx = (at_eof || !lm) ? leftmost_begin_window_scan(len) : *lm;
    leftmost_dists_.push_back(start_ - std::min(lx, *p));
  }
  return Factor::copy(len, start_ - *p);
}

// Entered when the pending factor reaches 2d: its length-2d prefix g' has an
// occurrence beginning in the window, the minimal such shift p <= d is a
// period of g', and the factor is the longest p-periodic extension.
void SlzStream::enter_periodic() {
  assert(pending_ == 2 * d_);
  std::optional<std::uint64_t> rb = tree_->rightmost_leaf_begin(track_->locus(), start_);
  auto hid = hidden_rightmost_begin(pending_);
  if (hid && (!rb || *hid > *rb)) rb = hid;
  assert(rb.has_value() && *rb < start_ && *rb >= window_base(start_));
  period_ = start_ - *rb;
  assert(period_ >= 1 && period_ <= d_);
  plen_ = pending_;
  pending_ = 0;
  periodic_ = true;
}

void SlzStream::exit_periodic_and_restart(std::uint8_t c) {
  // The factor ran [start_, start_+plen_); the next one starts at cur_. Its
  // window lies inside the periodic region, so reconstruct those d bytes from
  // one period and rebuild.
  const std::uint64_t q = cur_;
  const std::uint64_t target = window_base(q);
  assert(target >= start_);
  std::vector<std::uint8_t> bytes;
  bytes.reserve(static_cast<std::size_t>(q - target));
  for (std::uint64_t p = target; p < q; ++p)
    bytes.push_back(tree_->text().at(start_ + (p - start_) % period_));
  periodic_ = false;
  rebuild_to(target, bytes);
  const ActivePoint ap = tree_->extend(c);
  note_tree_size();
  ++cur_;
  handle_factor_start(c, q, ap.len);
}

std::uint64_t SlzStream::leftmost_begin_window_scan(std::uint64_t len) const {
  const SText& t = tree_->text();
  for (std::uint64_t x = window_base(start_);; ++x) {
    assert(x < start_);
    std::uint64_t k = 0;
    while (k < len && t.at(x + k) == t.at(start_ + k)) ++k;
    if (k == len) return x;
  }
}

// Valid shifts of a periodic factor are multiples of its minimal valid
// period; the leftmost reference is the largest multiple whose source block
// really occurs.
std::uint64_t SlzStream::periodic_leftmost_shift() const {
  const SText& t = tree_->text();
  std::uint64_t best = period_;
  for (std::uint64_t q = 2 * period_; q <= d_ && q <= start_ - t.base(); q += period_) {
    bool match = true;
    for (std::uint64_t k = 0; k < period_ && match; ++k)
      match = t.at(start_ - q + k) == t.at(start_ - period_ + k);
    if (!match) break;
    best = q;
  }
  return best;
}

}  // namespace rz
