#include "meccount/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace meccount {

UndirectedGraph::UndirectedGraph(int n) : n_(n), adj_(n) {
  if (n < 0) throw VertexOutOfRange("negative node count");
}

UndirectedGraph UndirectedGraph::from_edges(int n, std::vector<Edge> edges) {
  UndirectedGraph g(n);
  for (auto& [u, v] : edges) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v)
      throw VertexOutOfRange("self-loop at node " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw VertexOutOfRange("duplicate edge");
  g.edges_ = std::move(edges);
  for (const auto& [u, v] : g.edges_) {
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

const std::vector<NodeId>& UndirectedGraph::neighbors(NodeId v) const {
  check_vertex(v);
  return adj_[v];
}

int UndirectedGraph::degree(NodeId v) const {
  check_vertex(v);
  return static_cast<int>(adj_[v].size());
}

bool UndirectedGraph::has_edge(NodeId u, NodeId v) const {
  check_vertex(u);
  check_vertex(v);
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

int UndirectedGraph::edge_index(NodeId u, NodeId v) const {
  check_vertex(u);
  check_vertex(v);
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
  if (it == edges_.end() || *it != Edge{u, v}) return -1;
  return static_cast<int>(it - edges_.begin());
}

bool UndirectedGraph::is_connected() const {
  if (n_ <= 1) return true;
  return static_cast<int>(components().front().size()) == n_;
}

bool UndirectedGraph::is_tree() const {
  return is_connected() && edge_count() == node_count() - 1;
}

std::vector<std::vector<NodeId>> UndirectedGraph::components() const {
  std::vector<std::vector<NodeId>> result;
  std::vector<char> seen(n_, 0);
  for (NodeId s = 0; s < n_; ++s) {
    if (seen[s]) continue;
    std::vector<NodeId> comp;
    std::queue<NodeId> bfs;
    bfs.push(s);
    seen[s] = 1;
    while (!bfs.empty()) {
      NodeId v = bfs.front();
      bfs.pop();
      comp.push_back(v);
      for (NodeId u : adj_[v]) {
        if (!seen[u]) {
          seen[u] = 1;
          bfs.push(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    result.push_back(std::move(comp));
  }
  return result;
}

void UndirectedGraph::check_vertex(NodeId v) const {
  if (v < 0 || v >= n_)
    throw VertexOutOfRange("vertex " + std::to_string(v) + " out of [0, " +
                           std::to_string(n_) + ")");
}

MixedGraph::MixedGraph(UndirectedGraph skeleton)
    : skel_(std::move(skeleton)), marks_(skel_.edge_count(), Mark::Undirected) {}

MixedGraph::MixedGraph(UndirectedGraph skeleton, std::vector<Mark> marks)
    : skel_(std::move(skeleton)), marks_(std::move(marks)) {
  if (static_cast<int>(marks_.size()) != skel_.edge_count())
    throw WindowMismatch("mark vector does not match the edge count");
}

MixedGraph MixedGraph::with_directed(UndirectedGraph skeleton,
                                     const std::vector<Edge>& directed) {
  std::vector<Mark> marks(skeleton.edge_count(), Mark::Undirected);
  for (const auto& [from, to] : directed) {
    int idx = skeleton.edge_index(from, to);
    if (idx < 0)
      throw VertexOutOfRange("directed edge not in skeleton");
    Mark want = from < to ? Mark::Forward : Mark::Backward;
    if (marks[idx] != Mark::Undirected && marks[idx] != want)
      throw WindowMismatch("edge directed both ways");
    marks[idx] = want;
  }
  return MixedGraph(std::move(skeleton), std::move(marks));
}

bool MixedGraph::has_directed(NodeId u, NodeId v) const {
  int idx = skel_.edge_index(u, v);
  if (idx < 0) return false;
  return marks_[idx] == (u < v ? Mark::Forward : Mark::Backward);
}

bool MixedGraph::has_undirected(NodeId u, NodeId v) const {
  int idx = skel_.edge_index(u, v);
  return idx >= 0 && marks_[idx] == Mark::Undirected;
}

std::vector<Edge> MixedGraph::directed_edges() const {
  std::vector<Edge> out;
  const auto& es = skel_.edges();
  for (int i = 0; i < skel_.edge_count(); ++i) {
    if (marks_[i] == Mark::Forward) out.push_back(es[i]);
    if (marks_[i] == Mark::Backward) out.emplace_back(es[i].second, es[i].first);
  }
  return out;
}

std::vector<Edge> MixedGraph::undirected_edges() const {
  std::vector<Edge> out;
  const auto& es = skel_.edges();
  for (int i = 0; i < skel_.edge_count(); ++i)
    if (marks_[i] == Mark::Undirected) out.push_back(es[i]);
  return out;
}

std::vector<NodeId> MixedGraph::parents(NodeId v) const {
  std::vector<NodeId> out;
  for (NodeId u : skel_.neighbors(v))
    if (has_directed(u, v)) out.push_back(u);
  return out;
}

std::vector<NodeId> MixedGraph::undirected_neighbors(NodeId v) const {
  std::vector<NodeId> out;
  for (NodeId u : skel_.neighbors(v))
    if (has_undirected(u, v)) out.push_back(u);
  return out;
}

bool MixedGraph::fully_undirected() const {
  return std::all_of(marks_.begin(), marks_.end(),
                     [](Mark m) { return m == Mark::Undirected; });
}

bool MixedGraph::fully_directed() const {
  return std::none_of(marks_.begin(), marks_.end(),
                      [](Mark m) { return m == Mark::Undirected; });
}

bool MixedGraph::operator==(const MixedGraph& other) const {
  return skel_.node_count() == other.skel_.node_count() &&
         skel_.edges() == other.skel_.edges() && marks_ == other.marks_;
}

namespace {

std::vector<NodeId> sorted_unique(std::vector<NodeId> x) {
  std::sort(x.begin(), x.end());
  x.erase(std::unique(x.begin(), x.end()), x.end());
  return x;
}

}  // namespace

LabeledMixedGraph induced_subgraph(const MixedGraph& g,
                                   const std::vector<NodeId>& x) {
  std::vector<NodeId> labels = sorted_unique(x);
  for (NodeId v : labels) g.skeleton().check_vertex(v);
  const int k = static_cast<int>(labels.size());
  std::vector<Edge> edges;
  std::vector<Mark> marks;
  // labels are ascending, so local order agrees with original order and
  // Forward/Backward codes carry over unchanged.
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      int idx = g.skeleton().edge_index(labels[i], labels[j]);
      if (idx >= 0) {
        edges.emplace_back(i, j);
        marks.push_back(g.mark(idx));
      }
    }
  }
  UndirectedGraph skel = UndirectedGraph::from_edges(k, std::move(edges));
  return LabeledMixedGraph{MixedGraph(std::move(skel), std::move(marks)),
                           std::move(labels)};
}

UndirectedGraph induced_undirected(const UndirectedGraph& g,
                                   const std::vector<NodeId>& x) {
  std::vector<NodeId> labels = sorted_unique(x);
  for (NodeId v : labels) g.check_vertex(v);
  const int k = static_cast<int>(labels.size());
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.has_edge(labels[i], labels[j])) edges.emplace_back(i, j);
  return UndirectedGraph::from_edges(k, std::move(edges));
}

std::vector<NodeId> neighborhood(const UndirectedGraph& g,
                                 const std::vector<NodeId>& x) {
  std::vector<char> hit(g.node_count(), 0);
  for (NodeId v : x) {
    g.check_vertex(v);
    for (NodeId u : g.neighbors(v)) hit[u] = 1;
  }
  std::vector<NodeId> out;
  for (NodeId v = 0; v < g.node_count(); ++v)
    if (hit[v]) out.push_back(v);
  return out;
}

std::string encode_marks(const MixedGraph& g) {
  std::string key(g.edge_count(), '0');
  for (int i = 0; i < g.edge_count(); ++i)
    key[i] = static_cast<char>('0' + static_cast<int>(g.mark(i)));
  return key;
}

MixedGraph decode_marks(const UndirectedGraph& skeleton,
                        const std::string& key) {
  if (static_cast<int>(key.size()) != skeleton.edge_count())
    throw WindowMismatch("encoded key does not match the edge count");
  std::vector<Mark> marks(key.size());
  for (size_t i = 0; i < key.size(); ++i) {
    int m = key[i] - '0';
    if (m < 0 || m > 2) throw WindowMismatch("bad mark byte in key");
    marks[i] = static_cast<Mark>(m);
  }
  return MixedGraph(skeleton, std::move(marks));
}

}  // namespace meccount
