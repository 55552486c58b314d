#include "meccount/pdag.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <string>

#include "meccount/chordal.hpp"

namespace meccount {

namespace {

bool directed_in(const UndirectedGraph& skel, const std::vector<Mark>& marks,
                 NodeId from, NodeId to) {
  int idx = skel.edge_index(from, to);
  if (idx < 0) return false;
  return marks[idx] == (from < to ? Mark::Forward : Mark::Backward);
}

}  // namespace

std::vector<VStructure> v_structures(const UndirectedGraph& skeleton,
                                     const std::vector<Mark>& marks) {
  std::vector<VStructure> out;
  for (NodeId b = 0; b < skeleton.node_count(); ++b) {
    std::vector<NodeId> in;
    for (NodeId u : skeleton.neighbors(b))
      if (directed_in(skeleton, marks, u, b)) in.push_back(u);
    for (size_t i = 0; i < in.size(); ++i)
      for (size_t j = i + 1; j < in.size(); ++j) {
        NodeId a = std::min(in[i], in[j]);
        NodeId c = std::max(in[i], in[j]);
        if (!skeleton.has_edge(a, c)) out.push_back({a, b, c});
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VStructure> v_structures(const MixedGraph& m) {
  return v_structures(m.skeleton(), m.marks());
}

namespace {

// Per-vertex successors under semi-directed traversal: undirected edges both
// ways, directed edges forward.
std::vector<std::vector<NodeId>> semi_directed_out(const MixedGraph& m) {
  std::vector<std::vector<NodeId>> out(m.node_count());
  const auto& es = m.skeleton().edges();
  for (int i = 0; i < m.edge_count(); ++i) {
    auto [a, b] = es[i];
    switch (m.mark(i)) {
      case Mark::Undirected:
        out[a].push_back(b);
        out[b].push_back(a);
        break;
      case Mark::Forward:
        out[a].push_back(b);
        break;
      case Mark::Backward:
        out[b].push_back(a);
        break;
    }
  }
  return out;
}

bool reaches(const std::vector<std::vector<NodeId>>& out, NodeId from,
             NodeId to) {
  std::vector<char> seen(out.size(), 0);
  std::queue<NodeId> q;
  q.push(from);
  seen[from] = 1;
  while (!q.empty()) {
    NodeId v = q.front();
    q.pop();
    if (v == to) return true;
    for (NodeId u : out[v])
      if (!seen[u]) {
        seen[u] = 1;
        q.push(u);
      }
  }
  return false;
}

// Induced a -> b - c: a directed edge into b together with an undirected edge
// at b whose far endpoint is non-adjacent to a.
bool has_directed_undirected_pattern(const MixedGraph& m) {
  for (NodeId b = 0; b < m.node_count(); ++b) {
    std::vector<NodeId> in = m.parents(b);
    if (in.empty()) continue;
    for (NodeId c : m.undirected_neighbors(b))
      for (NodeId a : in)
        if (a != c && !m.is_adjacent(a, c)) return true;
  }
  return false;
}

}  // namespace

bool is_chain_graph(const MixedGraph& m) {
  auto out = semi_directed_out(m);
  for (const auto& [u, v] : m.directed_edges())
    if (reaches(out, v, u)) return false;
  return true;
}

ChainComponents chain_components(const MixedGraph& m) {
  const int n = m.node_count();
  ChainComponents cc;
  cc.component.assign(n, -1);
  for (NodeId s = 0; s < n; ++s) {
    if (cc.component[s] >= 0) continue;
    int tag = cc.count();
    std::vector<NodeId> comp;
    std::queue<NodeId> q;
    q.push(s);
    cc.component[s] = tag;
    while (!q.empty()) {
      NodeId v = q.front();
      q.pop();
      comp.push_back(v);
      for (NodeId u : m.undirected_neighbors(v))
        if (cc.component[u] < 0) {
          cc.component[u] = tag;
          q.push(u);
        }
    }
    std::sort(comp.begin(), comp.end());
    cc.members.push_back(std::move(comp));
  }
  return cc;
}

bool is_strongly_protected(const UndirectedGraph& skel,
                           const std::vector<Mark>& marks, NodeId u,
                           NodeId v) {
  if (!directed_in(skel, marks, u, v))
    throw NotADirectedEdge("edge " + std::to_string(u) + "->" +
                           std::to_string(v) + " is not directed");
  // (a) w -> u -> v, w and v non-adjacent
  for (NodeId w : skel.neighbors(u))
    if (w != v && directed_in(skel, marks, w, u) && !skel.has_edge(w, v))
      return true;
  // (b) u -> v <- w, u and w non-adjacent
  for (NodeId w : skel.neighbors(v))
    if (w != u && directed_in(skel, marks, w, v) && !skel.has_edge(w, u))
      return true;
  // (c) u -> w -> v
  for (NodeId w : skel.neighbors(u))
    if (directed_in(skel, marks, u, w) && directed_in(skel, marks, w, v))
      return true;
  // (d) w - u - w' with w -> v, w' -> v, and w, w' non-adjacent
  std::vector<NodeId> candidates;
  for (NodeId w : skel.neighbors(u)) {
    int idx = skel.edge_index(w, u);
    if (marks[idx] == Mark::Undirected && directed_in(skel, marks, w, v))
      candidates.push_back(w);
  }
  for (size_t i = 0; i < candidates.size(); ++i)
    for (size_t j = i + 1; j < candidates.size(); ++j)
      if (!skel.has_edge(candidates[i], candidates[j])) return true;
  return false;
}

bool is_strongly_protected(const MixedGraph& m, NodeId u, NodeId v) {
  return is_strongly_protected(m.skeleton(), m.marks(), u, v);
}

bool is_partial_mec(const MixedGraph& m) {
  if (!is_chain_graph(m)) return false;
  if (has_directed_undirected_pattern(m)) return false;
  // In a chain graph every chain component induces an undirected subgraph;
  // each must be chordal.
  ChainComponents cc = chain_components(m);
  for (const auto& comp : cc.members) {
    if (comp.size() <= 2) continue;
    if (!is_chordal(induced_undirected(m.skeleton(), comp))) return false;
  }
  return true;
}

bool is_mec(const MixedGraph& m) {
  if (!is_partial_mec(m)) return false;
  for (const auto& [u, v] : m.directed_edges())
    if (!is_strongly_protected(m, u, v)) return false;
  return true;
}

bool are_synchronous(const LabeledMixedGraph& g, const LabeledMixedGraph& h) {
  // shared vertices = common labels; only edges present in both can conflict
  std::map<NodeId, NodeId> h_local;
  for (size_t i = 0; i < h.labels.size(); ++i)
    h_local[h.labels[i]] = static_cast<NodeId>(i);
  const auto& es = g.graph.skeleton().edges();
  for (int i = 0; i < g.graph.edge_count(); ++i) {
    auto [a, b] = es[i];
    auto ita = h_local.find(g.labels[a]);
    auto itb = h_local.find(g.labels[b]);
    if (ita == h_local.end() || itb == h_local.end()) continue;
    NodeId ha = ita->second, hb = itb->second;
    if (g.graph.has_directed(a, b) && h.graph.has_directed(hb, ha))
      return false;
    if (g.graph.has_directed(b, a) && h.graph.has_directed(ha, hb))
      return false;
  }
  return true;
}

MixedGraph markov_union(std::span<const LabeledMixedGraph> graphs,
                        int universe_n) {
  for (size_t i = 0; i < graphs.size(); ++i)
    for (size_t j = i + 1; j < graphs.size(); ++j)
      if (!are_synchronous(graphs[i], graphs[j]))
        throw NotSynchronous("inputs are not pairwise synchronous");

  // 0: unseen, 1: undirected somewhere, 2: directed low->high, 3: high->low
  std::map<Edge, int> state;
  for (const auto& lg : graphs) {
    for (NodeId v : lg.labels)
      if (v < 0 || v >= universe_n)
        throw VertexOutOfRange("label outside the common universe");
    const auto& es = lg.graph.skeleton().edges();
    for (int i = 0; i < lg.graph.edge_count(); ++i) {
      NodeId a = lg.labels[es[i].first];
      NodeId b = lg.labels[es[i].second];
      bool flip = a > b;
      if (flip) std::swap(a, b);
      Edge key{a, b};
      int& s = state[key];
      Mark mk = lg.graph.mark(i);
      if (mk == Mark::Undirected) {
        if (s == 0) s = 1;
      } else {
        bool low_to_high = (mk == Mark::Forward) != flip;
        s = low_to_high ? 2 : 3;
      }
    }
  }
  std::vector<Edge> edges;
  std::vector<Mark> marks_by_edge;
  for (const auto& [e, s] : state) {
    edges.push_back(e);
    marks_by_edge.push_back(s == 1   ? Mark::Undirected
                            : s == 2 ? Mark::Forward
                                     : Mark::Backward);
  }
  // map keys are already sorted, matching from_edges order
  UndirectedGraph skel = UndirectedGraph::from_edges(universe_n, edges);
  return MixedGraph(std::move(skel), std::move(marks_by_edge));
}

}  // namespace meccount
