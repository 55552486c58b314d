#include "meccount/tree_count.hpp"

#include <algorithm>
#include <string>

namespace meccount {

BigInt TreeCountVector::total() const {
  BigInt sum = n1;
  for (const BigInt& x : c) sum += x;
  return sum;
}

TreeCountVector merge_counts(const TreeCountVector& left,
                             const TreeCountVector& right) {
  const int d1 = left.degree();
  const int d2 = right.degree();
  // Right-side aggregates: N = sum_j c2[j], wsum = sum_j j*c2[j].
  BigInt big_n = 0, wsum = 0;
  for (int j = 0; j <= d2; ++j) {
    big_n += right.c[j];
    wsum += j * right.c[j];
  }

  TreeCountVector out;
  // n1(G,r1) = n1(G1)*[2*n1(G2) + sum_j (j+2)*c2^j]
  //          + sum_i c1^i*[(i+1)*n1(G2) + i*n0(G2)]
  out.n1 = left.n1 * (2 * right.n1 + wsum + 2 * big_n);
  for (int i = 0; i <= d1; ++i)
    out.n1 += left.c[i] * ((i + 1) * right.n1 + i * big_n);

  // c[i](G,r1) = c1^i*[n1(G2) + sum_j j*c2^j] + c1^{i-1}*n0(G2)
  const BigInt base = right.n1 + wsum;
  out.c.resize(d1 + 2);
  out.c[0] = left.c[0] * base;
  for (int i = 1; i <= d1 + 1; ++i) {
    out.c[i] = left.c[i - 1] * big_n;
    if (i <= d1) out.c[i] += left.c[i] * base;
  }
  return out;
}

namespace {

TreeCountVector leaf_vector() {
  TreeCountVector v;
  v.n1 = 0;
  v.c = {BigInt(1)};
  return v;
}

}  // namespace

TreeCountVector count_tree_rooted(const UndirectedGraph& g, NodeId root) {
  g.check_vertex(root);
  if (!g.is_connected()) throw NotConnected("graph is not connected");
  if (g.edge_count() != g.node_count() - 1)
    throw NotATree("graph has a cycle");

  const int n = g.node_count();
  // Rooted orientation via BFS; children kept in increasing id order so the
  // fold below (which walks them in reverse) mirrors the recursive algorithm
  // that always cuts the edge to the smallest-id neighbor first.
  std::vector<NodeId> parent(n, -1), bfs_order;
  std::vector<char> seen(n, 0);
  bfs_order.reserve(n);
  bfs_order.push_back(root);
  seen[root] = 1;
  for (size_t head = 0; head < bfs_order.size(); ++head) {
    NodeId v = bfs_order[head];
    for (NodeId u : g.neighbors(v))
      if (!seen[u]) {
        seen[u] = 1;
        parent[u] = v;
        bfs_order.push_back(u);
      }
  }
  std::vector<std::vector<NodeId>> children(n);
  for (NodeId v : bfs_order)
    if (parent[v] >= 0) children[parent[v]].push_back(v);

  std::vector<TreeCountVector> acc(n);
  for (auto it = bfs_order.rbegin(); it != bfs_order.rend(); ++it) {
    NodeId v = *it;
    acc[v] = leaf_vector();
    for (auto ch = children[v].rbegin(); ch != children[v].rend(); ++ch) {
      acc[v] = merge_counts(acc[v], acc[*ch]);
      acc[*ch] = TreeCountVector{};  // free subtree state early
    }
  }
  return std::move(acc[root]);
}

BigInt count_tree_total(const UndirectedGraph& g, NodeId root) {
  return count_tree_rooted(g, root).total();
}

}  // namespace meccount
