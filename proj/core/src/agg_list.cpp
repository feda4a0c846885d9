#include "rz/agg_list.hpp"

#include <vector>

namespace rz {

struct AggList::Node {
  Inner* parent = nullptr;
  bool leaf = false;
  Weight mn = kPosInf;  // min-view aggregate (elements: the min-view weight)
  Weight mx = kNegInf;  // max-view aggregate
};

struct AggList::Elem : AggList::Node {
  Elem* prv = nullptr;
  Elem* nxt = nullptr;
  void* tag = nullptr;
};

struct AggList::Inner : AggList::Node {
  std::vector<Node*> kid;
  int argmin = 0;  // leftmost child attaining mn
  int argmax = 0;
};

AggList::AggList(int fanout) : fanout_(fanout) {
  assert(fanout_ >= 2);
  root_ = new Inner();
}

AggList::~AggList() {
  for (Elem* e = first_; e;) {
    Elem* nx = e->nxt;
    delete e;
    e = nx;
  }
  std::vector<Inner*> stack{root_};
  while (!stack.empty()) {
    Inner* x = stack.back();
    stack.pop_back();
    for (Node* k : x->kid)
      if (!k->leaf) stack.push_back(static_cast<Inner*>(k));
    delete x;
  }
}

std::size_t AggList::index_of(const Inner* parent, const Node* child) {
  for (std::size_t i = 0; i < parent->kid.size(); ++i)
    if (parent->kid[i] == child) return i;
  assert(false && "child not found in parent");
  return 0;
}

void AggList::pull_up(Inner* x) {
  x->mn = kPosInf;
  x->mx = kNegInf;
  x->argmin = 0;
  x->argmax = 0;
  for (std::size_t i = 0; i < x->kid.size(); ++i) {
    const Node* k = x->kid[i];
    if (k->mn < x->mn) {
      x->mn = k->mn;
      x->argmin = static_cast<int>(i);
    }
    if (k->mx > x->mx) {
      x->mx = k->mx;
      x->argmax = static_cast<int>(i);
    }
  }
}

void AggList::fix_to_root(Inner* x) {
  for (; x; x = x->parent) pull_up(x);
}

AggList::Handle AggList::insert_after(Handle prev, Weight w, void* tag) {
  return insert_after(prev, w, w, tag);
}

AggList::Handle AggList::insert_after(Handle prev, Weight wmin, Weight wmax, void* tag) {
  Elem* e = new Elem();
  e->leaf = true;
  e->mn = wmin;
  e->mx = wmax;
  e->tag = tag;
  ++stats_.inserts;
  ++size_;

  Elem* left = prev.e_;
  Inner* parent;
  std::size_t idx;
  if (left) {
    parent = left->parent;
    idx = index_of(parent, left) + 1;
  } else if (first_) {
    parent = first_->parent;
    idx = 0;
  } else {
    parent = root_;
    idx = 0;
  }

  e->prv = left;
  e->nxt = left ? left->nxt : first_;
  if (e->prv)
    e->prv->nxt = e;
  else
    first_ = e;
  if (e->nxt)
    e->nxt->prv = e;
  else
    last_ = e;

  parent->kid.insert(parent->kid.begin() + static_cast<std::ptrdiff_t>(idx), e);
  e->parent = parent;

  Inner* x = parent;
  while (x->kid.size() > static_cast<std::size_t>(fanout_)) {
    Inner* rhs = new Inner();
    const std::size_t keep = x->kid.size() - x->kid.size() / 2;
    rhs->kid.assign(x->kid.begin() + static_cast<std::ptrdiff_t>(keep), x->kid.end());
    x->kid.resize(keep);
    for (Node* k : rhs->kid) k->parent = rhs;
    pull_up(x);
    pull_up(rhs);
    if (x == root_) {
      Inner* nr = new Inner();
      nr->kid = {x, rhs};
      x->parent = nr;
      rhs->parent = nr;
      root_ = nr;
      break;
    }
    Inner* p = x->parent;
    const std::size_t xi = index_of(p, x);
    p->kid.insert(p->kid.begin() + static_cast<std::ptrdiff_t>(xi) + 1, rhs);
    rhs->parent = p;
    x = p;
  }
  fix_to_root(e->parent);
  return Handle(e);
}

void AggList::erase(Handle h) {
  Elem* e = h.e_;
  assert(e);
  if (e->prv)
    e->prv->nxt = e->nxt;
  else
    first_ = e->nxt;
  if (e->nxt)
    e->nxt->prv = e->prv;
  else
    last_ = e->prv;

  Inner* x = e->parent;
  x->kid.erase(x->kid.begin() + static_cast<std::ptrdiff_t>(index_of(x, e)));
  delete e;
  --size_;
  ++stats_.deletes;

  // deepest surviving node whose ancestor chain still needs recomputation
  Inner* fix_from = x;
  while (x != root_ && x->kid.size() < min_kids()) {
    Inner* p = x->parent;
    const std::size_t xi = index_of(p, x);
    Inner* ls = xi > 0 ? static_cast<Inner*>(p->kid[xi - 1]) : nullptr;
    Inner* rs = xi + 1 < p->kid.size() ? static_cast<Inner*>(p->kid[xi + 1]) : nullptr;
    if (ls && ls->kid.size() > min_kids()) {
      Node* moved = ls->kid.back();
      ls->kid.pop_back();
      x->kid.insert(x->kid.begin(), moved);
      moved->parent = x;
      pull_up(ls);
      fix_from = x;
      break;
    }
    if (rs && rs->kid.size() > min_kids()) {
      Node* moved = rs->kid.front();
      rs->kid.erase(rs->kid.begin());
      x->kid.push_back(moved);
      moved->parent = x;
      pull_up(rs);
      fix_from = x;
      break;
    }
    if (ls) {
      ls->kid.insert(ls->kid.end(), x->kid.begin(), x->kid.end());
      for (Node* k : x->kid) k->parent = ls;
      p->kid.erase(p->kid.begin() + static_cast<std::ptrdiff_t>(xi));
      delete x;
      pull_up(ls);
      fix_from = ls;
      x = p;
      continue;
    }
    if (rs) {
      x->kid.insert(x->kid.end(), rs->kid.begin(), rs->kid.end());
      for (Node* k : rs->kid) k->parent = x;
      p->kid.erase(p->kid.begin() + static_cast<std::ptrdiff_t>(xi) + 1);
      delete rs;
      pull_up(x);
      fix_from = x;
      x = p;
      continue;
    }
    break;  // lone child of the root; the shrink below handles it
  }
  while (root_->kid.size() == 1 && !root_->kid[0]->leaf) {
    Inner* nr = static_cast<Inner*>(root_->kid[0]);
    nr->parent = nullptr;
    root_->kid.clear();
    if (fix_from == root_) fix_from = nr;
    delete root_;
    root_ = nr;
  }
  fix_to_root(fix_from);
}

void AggList::update_weight(Handle e, Weight w) { update_weight(e, w, w); }

void AggList::update_weight(Handle h, Weight wmin, Weight wmax) {
  Elem* e = h.e_;
  assert(e);
  e->mn = wmin;
  e->mx = wmax;
  fix_to_root(e->parent);
}

std::pair<AggList::Handle, Weight> AggList::range_min(Handle l, Handle r) const {
  return range_extreme<false>(l, r);
}

std::pair<AggList::Handle, Weight> AggList::range_max(Handle l, Handle r) const {
  return range_extreme<true>(l, r);
}

template <bool kMax>
std::pair<AggList::Handle, Weight> AggList::range_extreme(Handle hl, Handle hr) const {
  Elem* l = hl.e_;
  Elem* r = hr.e_;
  assert(l && r);
  auto view = [](const Node* n) { return kMax ? n->mx : n->mn; };
  if (l == r) return {hl, view(l)};

  std::vector<Node*> pl{l}, pr{r};
  for (Inner* a = l->parent; a; a = a->parent) pl.push_back(a);
  for (Inner* a = r->parent; a; a = a->parent) pr.push_back(a);
  assert(pl.back() == pr.back());

  std::size_t i = pl.size() - 1, j = pr.size() - 1;
  while (i > 0 && j > 0 && pl[i - 1] == pr[j - 1]) {
    --i;
    --j;
  }
  assert(i > 0 && j > 0);
  Inner* lca = static_cast<Inner*>(pl[i]);
  const std::size_t il = index_of(lca, pl[i - 1]);
  const std::size_t ir = index_of(lca, pr[j - 1]);
  assert(il < ir && "range_min/max called with l after r");

  Node* best = nullptr;
  Weight bw = kMax ? kNegInf : kPosInf;
  auto consider = [&](Node* s) {
    const Weight w = view(s);
    if (!best || (kMax ? w > bw : w < bw)) {
      best = s;
      bw = w;
    }
  };

  // Visit contributions in sequence order so strict improvement keeps the
  // leftmost winner.
  consider(l);
  for (std::size_t k = 0; pl[k + 1] != static_cast<Node*>(lca); ++k) {
    Inner* par = static_cast<Inner*>(pl[k + 1]);
    for (std::size_t c = index_of(par, pl[k]) + 1; c < par->kid.size(); ++c)
      consider(par->kid[c]);
  }
  for (std::size_t c = il + 1; c < ir; ++c) consider(lca->kid[c]);
  for (std::size_t k = j - 1; k >= 1; --k) {
    Inner* par = static_cast<Inner*>(pr[k]);
    const std::size_t stop = index_of(par, pr[k - 1]);
    for (std::size_t c = 0; c < stop; ++c) consider(par->kid[c]);
  }
  consider(r);

  Node* n = best;
  while (!n->leaf) {
    Inner* in = static_cast<Inner*>(n);
    n = in->kid[static_cast<std::size_t>(kMax ? in->argmax : in->argmin)];
  }
  return {Handle(static_cast<Elem*>(n)), bw};
}

AggList::Handle AggList::next(Handle e) const {
  assert(e.e_);
  return Handle(e.e_->nxt);
}

AggList::Handle AggList::prev(Handle e) const {
  assert(e.e_);
  return Handle(e.e_->prv);
}

AggList::Handle AggList::front() const { return Handle(first_); }

Weight AggList::weight_min_view(Handle e) const {
  assert(e.e_);
  return e.e_->mn;
}

Weight AggList::weight_max_view(Handle e) const {
  assert(e.e_);
  return e.e_->mx;
}

void* AggList::tag(Handle e) const {
  assert(e.e_);
  return e.e_->tag;
}

bool AggList::audit() const {
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  struct Rec {
    const AggList* self;
    bool ok = true;
    std::size_t elems = 0;
    std::size_t leaf_depth = kUnset;
    std::pair<Weight, Weight> walk(const Node* n, const Inner* expect_parent, std::size_t depth) {
      if (n->parent != expect_parent) ok = false;
      if (n->leaf) {
        ++elems;
        if (leaf_depth == kUnset)
          leaf_depth = depth;
        else if (leaf_depth != depth)
          ok = false;
        return {n->mn, n->mx};
      }
      const Inner* in = static_cast<const Inner*>(n);
      if (in != self->root_ && (in->kid.size() < self->min_kids() ||
                                in->kid.size() > static_cast<std::size_t>(self->fanout_)))
        ok = false;
      Weight mn = kPosInf, mx = kNegInf;
      int amn = 0, amx = 0;
      for (std::size_t i = 0; i < in->kid.size(); ++i) {
        auto [kmn, kmx] = walk(in->kid[i], in, depth + 1);
        if (kmn < mn) {
          mn = kmn;
          amn = static_cast<int>(i);
        }
        if (kmx > mx) {
          mx = kmx;
          amx = static_cast<int>(i);
        }
      }
      if (mn != in->mn || mx != in->mx || amn != in->argmin || amx != in->argmax) ok = false;
      return {mn, mx};
    }
  } rec{this};
  rec.walk(root_, nullptr, 0);
  if (rec.elems != size_) return false;
  std::size_t seen = 0;
  const Elem* prev = nullptr;
  for (const Elem* e = first_; e; e = e->nxt) {
    if (e->prv != prev) return false;
    prev = e;
    ++seen;
  }
  if (prev != last_ || seen != size_) return false;
  return rec.ok;
}

}  // namespace rz
