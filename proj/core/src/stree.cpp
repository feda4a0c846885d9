#include "rz/stree.hpp"

#include <algorithm>
#include <cassert>

namespace rz {

SuffixTree::SuffixTree(std::uint64_t base, int fanout) : text_(base), bp_(fanout) {
  root_ = new_node();
  root_->depth = 0;
  root_->edge_end = 0;  // not a leaf
  root_->bp = bp_.insert_root(kPosInf, kNegInf);
  root_->bp->user = root_;
  active_node_ = root_;
  active_edge_ = base;
}

STNode* SuffixTree::new_node() {
  pool_.emplace_back();
  ++node_count_;
  return &pool_.back();
}

STNode* SuffixTree::find_child(const STNode* n, std::uint8_t b) const {
  auto it = std::lower_bound(n->children.begin(), n->children.end(), b,
                             [](const auto& e, std::uint8_t key) { return e.first < key; });
  if (it != n->children.end() && it->first == b) return it->second;
  return nullptr;
}

void SuffixTree::set_child(STNode* n, std::uint8_t b, STNode* child) {
  auto it = std::lower_bound(n->children.begin(), n->children.end(), b,
                             [](const auto& e, std::uint8_t key) { return e.first < key; });
  if (it != n->children.end() && it->first == b)
    it->second = child;
  else
    n->children.insert(it, {b, child});
}

STNode* SuffixTree::add_leaf(STNode* parent, std::uint64_t pos) {
  STNode* leaf = new_node();
  leaf->parent = parent;
  leaf->edge_start = pos;
  leaf->edge_end = kOpenEnd;
  leaf->leaf_begin = pos - parent->depth;
  set_child(parent, text_.at(pos), leaf);
  leaf->bp = bp_.insert_leaf(parent->bp, nullptr, static_cast<Weight>(leaf->leaf_begin),
                             static_cast<Weight>(leaf->leaf_begin));
  leaf->bp->user = leaf;
  return leaf;
}

STNode* SuffixTree::split(STNode* child, std::uint64_t offset) {
  STNode* u = child->parent;
  STNode* mid = new_node();
  mid->parent = u;
  mid->edge_start = child->edge_start;
  mid->edge_end = child->edge_start + offset;
  mid->depth = u->depth + offset;
  set_child(u, text_.at(mid->edge_start), mid);
  child->edge_start += offset;
  child->parent = mid;
  mid->children.push_back({text_.at(child->edge_start), child});
  mid->bp = bp_.split_edge(child->bp, kPosInf, kNegInf);
  mid->bp->user = mid;
  return mid;
}

ActivePoint SuffixTree::extend(std::uint8_t c) {
  const std::uint64_t pos = text_.end_pos();
  text_.append(c);
  ++remainder_;
  STNode* pending = nullptr;
  auto link_pending = [&](STNode* target) {
    if (pending) pending->slink = target;
    pending = nullptr;
  };

  while (remainder_ > 0) {
    if (active_len_ == 0) active_edge_ = pos;
    STNode* child = find_child(active_node_, text_.at(active_edge_));
    if (!child) {
      add_leaf(active_node_, pos);
      link_pending(active_node_);
      if (active_node_ != root_) pending = active_node_;
    } else {
      const std::uint64_t el = edge_len(child);
      if (active_len_ >= el) {
        active_node_ = child;
        active_edge_ += el;
        active_len_ -= el;
        continue;
      }
      if (text_.at(child->edge_start + active_len_) == c) {
        link_pending(active_node_);
        ++active_len_;
        break;
      }
      STNode* mid = split(child, active_len_);
      add_leaf(mid, pos);
      link_pending(mid);
      pending = mid;
    }
    --remainder_;
    if (active_node_ == root_ && active_len_ > 0) {
      --active_len_;
      active_edge_ = pos - remainder_ + 1;
    } else if (active_node_ != root_) {
      active_node_ = active_node_->slink ? active_node_->slink : root_;
    }
  }
  return active();
}

ActivePoint SuffixTree::active() const {
  Locus l;
  if (active_len_ == 0) {
    l = {active_node_, active_node_->depth};
  } else {
    STNode* child = find_child(active_node_, text_.at(active_edge_));
    assert(child);
    l = {child, active_node_->depth + active_len_};
  }
  return {l, active_node_->depth + active_len_};
}

STNode* SuffixTree::resolve(Locus& l) const {
  // Splits insert nodes above the locus point; climb until the parent is
  // strictly shallower.
  while (l.node->parent && l.node->parent->depth >= l.depth) l.node = l.node->parent;
  return l.node;
}

template <bool kMax>
std::optional<std::uint64_t> SuffixTree::extreme_leaf_begin(
    Locus l, std::optional<std::uint64_t> exclude) const {
  STNode* v = resolve(l);
  const AggList& ls = bp_.list();
  auto query = [&](AggList::Handle a, AggList::Handle b) -> std::pair<AggList::Handle, Weight> {
    return kMax ? ls.range_max(a, b) : ls.range_min(a, b);
  };
  const Weight neutral = kMax ? kNegInf : kPosInf;
  auto [h, w] = query(v->bp->open, v->bp->close);
  if (w == neutral) return std::nullopt;
  if (!exclude || static_cast<std::uint64_t>(w) != *exclude) return static_cast<std::uint64_t>(w);

  BpTree::Node* x = bp_.node_of(h);
  if (x == v->bp) return std::nullopt;  // v itself is the excluded leaf
  const Weight w1 = query(v->bp->open, ls.prev(x->open)).second;
  const Weight w2 = query(ls.next(x->close), v->bp->close).second;
  const Weight best = kMax ? std::max(w1, w2) : std::min(w1, w2);
  if (best == neutral) return std::nullopt;
  return static_cast<std::uint64_t>(best);
}

std::optional<std::uint64_t> SuffixTree::rightmost_leaf_begin(
    Locus l, std::optional<std::uint64_t> exclude_begin) const {
  return extreme_leaf_begin<true>(l, exclude_begin);
}

std::optional<std::uint64_t> SuffixTree::leftmost_leaf_begin(
    Locus l, std::optional<std::uint64_t> exclude_begin) const {
  return extreme_leaf_begin<false>(l, exclude_begin);
}

std::optional<Locus> SuffixTree::locus_of(std::uint64_t begin, std::uint64_t len) const {
  assert(begin >= text_.base() && begin + len <= text_.end_pos());
  STNode* x = root_;
  std::uint64_t matched = 0;
  while (matched < len) {
    STNode* ch = find_child(x, text_.at(begin + matched));
    if (!ch) return std::nullopt;
    const std::uint64_t el = edge_len(ch);
    const std::uint64_t take = std::min<std::uint64_t>(el, len - matched);
    for (std::uint64_t k = 1; k < take; ++k)  // first byte matched via find_child
      if (text_.at(ch->edge_start + k) != text_.at(begin + matched + k)) return std::nullopt;
    matched += take;
    if (take == el && matched < len)
      x = ch;
    else if (matched == len)
      return Locus{ch, len};
  }
  return Locus{x, len};  // len == 0: root
}

Locus SuffixTree::descend(STNode* from, std::uint64_t pos, std::uint64_t len) const {
  const std::uint64_t target = from->depth + len;
  STNode* x = from;
  std::uint64_t consumed = 0;
  while (consumed < len) {
    STNode* ch = find_child(x, text_.at(pos + consumed));
    assert(ch && "descend over a string known to be present");
    const std::uint64_t el = edge_len(ch);
    if (len - consumed <= el) return {ch, target};
    consumed += el;
    x = ch;
  }
  return {x, target};
}

Locus SuffixTree::suffix_link_step(Locus l) const {
  STNode* n = resolve(l);
  assert(l.depth >= 1);
  if (!n->is_leaf() && l.depth == n->depth) {
    assert(n != root_);
    STNode* s = n->slink ? n->slink : root_;
    return {s, l.depth - 1};
  }
  STNode* u = n->parent;
  const std::uint64_t span = l.depth - u->depth;
  if (u == root_) {
    if (span <= 1) return root_locus();
    return descend(root_, n->edge_start + 1, span - 1);
  }
  STNode* s = u->slink ? u->slink : root_;
  return descend(s, n->edge_start, span);
}

bool SuffixTree::Cursor::advance(std::uint8_t c) {
  const SuffixTree& t = *tree_;
  t.resolve(loc_);
  STNode* n = loc_.node;
  const bool at_node = (n == t.root_ && loc_.depth == 0) ||
                       (!n->is_leaf() && loc_.depth == n->depth);
  if (at_node) {
    STNode* ch = t.find_child(n, c);
    if (!ch) return false;
    loc_ = {ch, loc_.depth + 1};
    return true;
  }
  const std::uint64_t off = loc_.depth - n->parent->depth;
  if (off < t.edge_len(n) && t.text_.at(n->edge_start + off) == c) {
    ++loc_.depth;
    return true;
  }
  return false;
}

}  // namespace rz
