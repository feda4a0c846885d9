#pragma once

#include <cstddef>
#include <string>
#include <utility>

#include "rz/agg_list.hpp"

namespace rz {

// Explicit rooted ordered tree whose balanced-parentheses serialization is
// kept in an AggList, one element per parenthesis. Structural edits touch at
// most two list elements; subtree min/max reduce to range queries over the
// node's paren span (close parens and unweighted nodes hold neutral
// sentinels, so they never win).
class BpTree {
 public:
  struct Node {
    Node* parent = nullptr;
    Node* first_child = nullptr;
    Node* last_child = nullptr;
    Node* prev_sib = nullptr;
    Node* next_sib = nullptr;
    AggList::Handle open;
    AggList::Handle close;
    void* user = nullptr;  // embedder back-pointer (suffix tree node etc.)
  };

  explicit BpTree(int fanout = 16);
  ~BpTree();
  BpTree(const BpTree&) = delete;
  BpTree& operator=(const BpTree&) = delete;

  Node* root() const { return root_; }
  std::size_t node_count() const { return count_; }

  // New root; an existing root becomes its only child.
  Node* insert_root(Weight wmin, Weight wmax);
  // New leaf under parent, positioned after after_sibling (nullptr = first).
  Node* insert_leaf(Node* parent, Node* after_sibling, Weight wmin, Weight wmax);
  // New node between child and its parent; child becomes its only child.
  Node* split_edge(Node* child, Weight wmin, Weight wmax);
  // Children of v are spliced into v's position among its siblings.
  void delete_node(Node* v);

  void update_weight(Node* v, Weight w) { list_.update_weight(v->open, w, w); }
  void update_weight(Node* v, Weight wmin, Weight wmax) {
    list_.update_weight(v->open, wmin, wmax);
  }
  Weight weight_min_view(Node* v) const { return list_.weight_min_view(v->open); }
  Weight weight_max_view(Node* v) const { return list_.weight_max_view(v->open); }

  // Node of extreme weight in v's subtree (v included), leftmost-in-BP on
  // ties. A sentinel weight in the result means the subtree holds no
  // weighted node in that view.
  std::pair<Node*, Weight> subtree_min(Node* v) const;
  std::pair<Node*, Weight> subtree_max(Node* v) const;

  const AggList& list() const { return list_; }
  Node* node_of(AggList::Handle h) const { return static_cast<Node*>(list_.tag(h)); }

  // ASCII dump of the paren sequence, tests only.
  std::string bp_string() const;

 private:
  AggList list_;
  Node* root_ = nullptr;
  std::size_t count_ = 0;
};

}  // namespace rz
