#include "rz/bp_tree.hpp"

#include <cassert>
#include <vector>

namespace rz {

BpTree::BpTree(int fanout) : list_(fanout) {}

BpTree::~BpTree() {
  if (!root_) return;
  std::vector<Node*> stack{root_};
  while (!stack.empty()) {
    Node* n = stack.back();
    stack.pop_back();
    for (Node* c = n->first_child; c;) {
      Node* nx = c->next_sib;
      stack.push_back(c);
      c = nx;
    }
    delete n;
  }
}

BpTree::Node* BpTree::insert_root(Weight wmin, Weight wmax) {
  Node* r = new Node();
  Node* old = root_;
  r->open = list_.insert_after(AggList::Handle(), wmin, wmax, r);
  // the close paren goes after everything: after the old root's close, or
  // right after the new open for an empty tree
  AggList::Handle tail = old ? old->close : r->open;
  r->close = list_.insert_after(tail, kPosInf, kNegInf, r);
  if (old) {
    old->parent = r;
    r->first_child = r->last_child = old;
  }
  root_ = r;
  ++count_;
  return r;
}

BpTree::Node* BpTree::insert_leaf(Node* parent, Node* after_sibling, Weight wmin, Weight wmax) {
  assert(parent);
  assert(!after_sibling || after_sibling->parent == parent);
  Node* v = new Node();
  v->parent = parent;
  AggList::Handle anchor = after_sibling ? after_sibling->close : parent->open;
  v->open = list_.insert_after(anchor, wmin, wmax, v);
  v->close = list_.insert_after(v->open, kPosInf, kNegInf, v);

  if (after_sibling) {
    v->prev_sib = after_sibling;
    v->next_sib = after_sibling->next_sib;
    after_sibling->next_sib = v;
  } else {
    v->next_sib = parent->first_child;
    parent->first_child = v;
  }
  if (v->next_sib)
    v->next_sib->prev_sib = v;
  else
    parent->last_child = v;
  ++count_;
  return v;
}

BpTree::Node* BpTree::split_edge(Node* child, Weight wmin, Weight wmax) {
  assert(child && child->parent);
  Node* u = child->parent;
  Node* v = new Node();
  v->open = list_.insert_after(list_.prev(child->open), wmin, wmax, v);
  v->close = list_.insert_after(child->close, kPosInf, kNegInf, v);

  v->parent = u;
  v->prev_sib = child->prev_sib;
  v->next_sib = child->next_sib;
  if (v->prev_sib)
    v->prev_sib->next_sib = v;
  else
    u->first_child = v;
  if (v->next_sib)
    v->next_sib->prev_sib = v;
  else
    u->last_child = v;

  v->first_child = v->last_child = child;
  child->parent = v;
  child->prev_sib = child->next_sib = nullptr;
  ++count_;
  return v;
}

void BpTree::delete_node(Node* v) {
  assert(v && v != root_ && "cannot delete the root");
  Node* u = v->parent;
  Node* head = v->first_child;
  Node* tail = v->last_child;
  for (Node* c = head; c; c = c->next_sib) c->parent = u;

  Node* left = v->prev_sib;
  Node* right = v->next_sib;
  Node* after_left = head ? head : right;
  Node* before_right = tail ? tail : left;
  if (head) head->prev_sib = left;
  if (tail) tail->next_sib = right;
  if (left)
    left->next_sib = after_left;
  else
    u->first_child = after_left;
  if (right)
    right->prev_sib = before_right;
  else
    u->last_child = before_right;

  list_.erase(v->open);
  list_.erase(v->close);
  delete v;
  --count_;
}

std::pair<BpTree::Node*, Weight> BpTree::subtree_min(Node* v) const {
  auto [h, w] = list_.range_min(v->open, v->close);
  return {node_of(h), w};
}

std::pair<BpTree::Node*, Weight> BpTree::subtree_max(Node* v) const {
  auto [h, w] = list_.range_max(v->open, v->close);
  return {node_of(h), w};
}

std::string BpTree::bp_string() const {
  std::string s;
  s.reserve(list_.size());
  for (AggList::Handle h = list_.front(); h; h = list_.next(h)) {
    Node* n = node_of(h);
    s.push_back(h == n->open ? '(' : ')');
  }
  return s;
}

}  // namespace rz
