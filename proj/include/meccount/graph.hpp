#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "meccount/errors.hpp"

namespace meccount {

using NodeId = std::int32_t;
using Edge = std::pair<NodeId, NodeId>;

/// Undirected simple graph over dense zero-based vertex ids. Immutable after
/// construction. Neighbor lists and the edge list are kept sorted, so edge
/// indices are canonical (lexicographic on normalized (min,max) pairs).
class UndirectedGraph {
 public:
  explicit UndirectedGraph(int n = 0);

  /// Builds a graph from an edge list. Edges are normalized to (min,max);
  /// self-loops and duplicates are rejected.
  static UndirectedGraph from_edges(int n, std::vector<Edge> edges);

  int node_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<NodeId>& neighbors(NodeId v) const;
  int degree(NodeId v) const;
  bool has_edge(NodeId u, NodeId v) const;
  /// Position of {u,v} in edges(), or -1 when the vertices are not adjacent.
  int edge_index(NodeId u, NodeId v) const;
  const std::vector<Edge>& edges() const { return edges_; }

  bool is_connected() const;
  bool is_tree() const;
  std::vector<std::vector<NodeId>> components() const;

  void check_vertex(NodeId v) const;

 private:
  int n_ = 0;
  std::vector<std::vector<NodeId>> adj_;
  std::vector<Edge> edges_;
};

/// Orientation mark of a skeleton edge (a,b) with a < b.
enum class Mark : std::uint8_t {
  Undirected = 0,
  Forward = 1,   // a -> b
  Backward = 2,  // b -> a
};

/// Partially directed graph: an undirected skeleton plus one mark per edge.
/// Represents DAGs, MECs, partial MECs and plain skeletons uniformly.
class MixedGraph {
 public:
  MixedGraph() = default;
  explicit MixedGraph(UndirectedGraph skeleton);
  MixedGraph(UndirectedGraph skeleton, std::vector<Mark> marks);

  /// All-undirected skeleton with the listed edges made directed (from,to).
  static MixedGraph with_directed(UndirectedGraph skeleton,
                                  const std::vector<Edge>& directed);

  const UndirectedGraph& skeleton() const { return skel_; }
  int node_count() const { return skel_.node_count(); }
  int edge_count() const { return skel_.edge_count(); }
  const std::vector<Mark>& marks() const { return marks_; }
  Mark mark(int edge_idx) const { return marks_[edge_idx]; }

  bool is_adjacent(NodeId u, NodeId v) const { return skel_.has_edge(u, v); }
  /// True iff the edge exists and is directed u -> v.
  bool has_directed(NodeId u, NodeId v) const;
  bool has_undirected(NodeId u, NodeId v) const;

  std::vector<Edge> directed_edges() const;  // as (from, to)
  std::vector<Edge> undirected_edges() const;
  std::vector<NodeId> parents(NodeId v) const;
  std::vector<NodeId> undirected_neighbors(NodeId v) const;

  bool fully_undirected() const;
  bool fully_directed() const;

  bool operator==(const MixedGraph& other) const;

 private:
  UndirectedGraph skel_;
  std::vector<Mark> marks_;
};

/// A mixed graph over local ids 0..k-1 together with the sorted original
/// vertex ids it was cut from; labels[i] is the original id of local node i.
struct LabeledMixedGraph {
  MixedGraph graph;
  std::vector<NodeId> labels;
};

/// Induced sub-mixed-graph on x (marks preserved). The relabeling map is the
/// sorted, deduplicated copy of x returned in .labels.
LabeledMixedGraph induced_subgraph(const MixedGraph& g,
                                   const std::vector<NodeId>& x);

UndirectedGraph induced_undirected(const UndirectedGraph& g,
                                   const std::vector<NodeId>& x);

/// N(X,G): every node adjacent to at least one node of x. May intersect x;
/// callers wanting the closed neighborhood union x back in explicitly.
std::vector<NodeId> neighborhood(const UndirectedGraph& g,
                                 const std::vector<NodeId>& x);

/// Canonical byte encoding of the marks: one byte per skeleton edge in
/// lexicographic edge order. Two mixed graphs over the same skeleton encode
/// equal iff they carry identical marks.
std::string encode_marks(const MixedGraph& g);
MixedGraph decode_marks(const UndirectedGraph& skeleton,
                        const std::string& key);

}  // namespace meccount
