#pragma once

#include <vector>

#include "meccount/bigint.hpp"
#include "meccount/graph.hpp"

namespace meccount {

/// Rooted counting state of the tree recursion for a tree H with root r:
///   n1   = number of MECs of H with an edge incoming to r
///   c[i] = number of MECs with no edge into r and exactly i undirected
///          edges at r, for i in [0, degree(r)]
struct TreeCountVector {
  BigInt n1;
  std::vector<BigInt> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  BigInt total() const;
};

/// Combines the vectors of the two subtrees obtained by cutting the edge
/// (r1, r2): left describes (G1, r1), right describes (G2, r2); the result
/// describes (G, r1) and gains one degree at the root.
TreeCountVector merge_counts(const TreeCountVector& left,
                             const TreeCountVector& right);

/// Counting state of the whole tree rooted at `root`. The recursion is run
/// as an iterative fold over a rooted traversal, so arbitrarily deep trees
/// are fine.
TreeCountVector count_tree_rooted(const UndirectedGraph& g, NodeId root);

/// Number of MECs whose skeleton is the tree g: n1 + sum of c.
BigInt count_tree_total(const UndirectedGraph& g, NodeId root);

}  // namespace meccount
