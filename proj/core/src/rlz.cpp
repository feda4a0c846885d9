#include "rz/rlz.hpp"

#include <algorithm>
#include <cassert>

#include "rz/borders.hpp"

namespace rz {

const std::vector<Factor>& RlzStream::push(std::uint8_t c) {
  out_.clear();
  const std::uint64_t q = tree_.end_pos();
  const ActivePoint ap = tree_.extend(c);
  if (pending_ == 0) {
    if (ap.len == 0) {
      out_.push_back(Factor::literal(c));
    } else {
      start_ = q;
      pending_ = 1;
    }
    return out_;
  }
  if (ap.len >= pending_ + 1) {
    ++pending_;
    return out_;
  }
  // Stopping rule fired: S[start..q-1] is the factor; the byte at q starts
  // the next one.
  out_.push_back(emit_pending(false));
  if (ap.len == 0) {
    out_.push_back(Factor::literal(c));
    pending_ = 0;
  } else {
    start_ = q;
    pending_ = 1;
  }
  return out_;
}

std::vector<Factor> RlzStream::finish() {
  std::vector<Factor> out;
  if (pending_ > 0) {
    out.push_back(emit_pending(true));
    pending_ = 0;
  }
  return out;
}

// Occurrences of the pending factor that are repeating suffixes of the whole
// string have no leaf; they live inside the lrs window and are recovered from
// its border structure: the rightmost such occurrence of the length-m suffix
// ends (j - m) positions before the text end, where j is minimal with
// pi[j] == m.
std::optional<std::uint64_t> RlzStream::hidden_rightmost_begin(std::uint64_t len) const {
  const std::uint64_t lrs = tree_.lrs_len();
  if (lrs <= len) return std::nullopt;
  const std::uint64_t q_last = tree_.end_pos() - 1;
  std::vector<std::uint8_t> rev(lrs);
  for (std::uint64_t k = 0; k < lrs; ++k) rev[k] = tree_.text().at(q_last - k);
  const auto pi = prefix_function(rev);
  std::uint64_t best_j = 0;
  for (std::uint64_t j = len + 1; j <= lrs; ++j)
    if (pi[j] == len) {
      best_j = j;
      break;
    }
  if (best_j == 0) return std::nullopt;
  const std::uint64_t end = q_last - (best_j - len);
  return end - len + 1;
}

std::uint64_t RlzStream::leftmost_begin_scan(std::uint64_t len) const {
  // EOF-only path: first occurrence by direct text comparison.
  const SText& t = tree_.text();
  for (std::uint64_t x = 0;; ++x) {
    assert(x < start_);
    std::uint64_t k = 0;
    while (k < len && t.at(x + k) == t.at(start_ + k)) ++k;
    if (k == len) return x;
  }
}

Factor RlzStream::emit_pending(bool at_eof) {
  const std::uint64_t len = pending_;
  auto locus = tree_.locus_of(start_, len);
  assert(locus.has_value());
  // The factor's own suffix leaf (begin == start_) must not win the query.
  auto p = tree_.rightmost_leaf_begin(*locus, start_);
  if (at_eof) {
    // At end of stream the stopping rule has not fired, so occurrences may
    // hide as repeating suffixes; take the better of both routes.
    auto hid = hidden_rightmost_begin(len);
    if (hid && (!p || *hid > *p)) p = hid;
  }
  assert(p.has_value() && *p < start_);
  if (track_leftmost_) {
    std::optional<std::uint64_t> lm = tree_.leftmost_leaf_begin(*locus, start_);
    std::uint64_t lx = (at_eof || !lm) ? leftmost_begin_scan(len) : *lm;
    leftmost_dists_.push_back(start_ - std::min(lx, *p));
  }
  return Factor::copy(len, start_ - *p);
}

}  // namespace rz
