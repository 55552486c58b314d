#include "meccount/chordal_count.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "meccount/pdag.hpp"

namespace meccount {

PartialMecKey encode_partial_mec(const MixedGraph& o) {
  return encode_marks(o);
}

MixedGraph decode_partial_mec(const UndirectedGraph& skeleton,
                              const PartialMecKey& key) {
  return decode_marks(skeleton, key);
}

void PartialMecTable::add(const PartialMecKey& key, const BigInt& value) {
  if (value == 0) return;
  entries_[key] += value;
}

BigInt PartialMecTable::count_for(const PartialMecKey& key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? BigInt(0) : it->second;
}

BigInt PartialMecTable::total() const {
  BigInt sum = 0;
  for (const auto& [key, value] : entries_) sum += value;
  return sum;
}

namespace {

std::vector<NodeId> sorted_union(std::vector<NodeId> a,
                                 const std::vector<NodeId>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

std::vector<NodeId> intersect_sorted(const std::vector<NodeId>& a,
                                     const std::vector<NodeId>& b) {
  std::vector<NodeId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

// Backtracking search over edge marks. Assigns edges in lexicographic order,
// pruning a completed induced a -> b - c and a completed directed cycle the
// moment the second offending edge receives its mark. Both prunes are exact
// at full assignment, so the only condition left to check on emission is
// chordality of the chain components, which is automatic when the window
// skeleton itself is chordal.
class PartialMecSearch {
 public:
  explicit PartialMecSearch(const UndirectedGraph& skel)
      : skel_(skel),
        marks_(skel.edge_count(), Mark::Undirected),
        und_(skel.node_count()),
        in_(skel.node_count()),
        out_dir_(skel.node_count()),
        skeleton_chordal_(is_chordal(skel)) {}

  std::vector<std::vector<Mark>> run() {
    results_.clear();
    descend(0);
    return std::move(results_);
  }

 private:
  void descend(int k) {
    if (k == skel_.edge_count()) {
      if (skeleton_chordal_ || chain_components_chordal()) {
        results_.push_back(marks_);
      }
      return;
    }
    auto [a, b] = skel_.edges()[k];
    // Undirected first, then a->b, then b->a: the emitted keys come out in
    // ascending encoded order.
    marks_[k] = Mark::Undirected;
    if (try_undirected(a, b)) {
      descend(k + 1);
      undo_undirected(a, b);
    }
    marks_[k] = Mark::Forward;
    if (try_directed(a, b)) {
      descend(k + 1);
      undo_directed(a, b);
    }
    marks_[k] = Mark::Backward;
    if (try_directed(b, a)) {
      descend(k + 1);
      undo_directed(b, a);
    }
    marks_[k] = Mark::Undirected;
  }

  bool try_directed(NodeId u, NodeId v) {
    // completed u -> v - c
    for (NodeId c : und_[v])
      if (c != u && !skel_.has_edge(u, c)) return false;
    out_dir_[u].push_back(v);
    in_[v].push_back(u);
    if (reaches(v, u)) {
      out_dir_[u].pop_back();
      in_[v].pop_back();
      return false;
    }
    return true;
  }

  void undo_directed(NodeId u, NodeId v) {
    out_dir_[u].pop_back();
    in_[v].pop_back();
  }

  bool try_undirected(NodeId a, NodeId b) {
    // completed w -> a - b or w -> b - a
    for (NodeId w : in_[a])
      if (w != b && !skel_.has_edge(w, b)) return false;
    for (NodeId w : in_[b])
      if (w != a && !skel_.has_edge(w, a)) return false;
    und_[a].push_back(b);
    und_[b].push_back(a);
    // A directed cycle through a - b needs a semi-directed path between its
    // endpoints carrying at least one directed edge.
    if (reaches_with_directed(a, b) || reaches_with_directed(b, a)) {
      und_[a].pop_back();
      und_[b].pop_back();
      return false;
    }
    return true;
  }

  void undo_undirected(NodeId a, NodeId b) {
    und_[a].pop_back();
    und_[b].pop_back();
  }

  // Plain semi-directed reachability over assigned edges.
  bool reaches(NodeId from, NodeId to) const {
    const int n = skel_.node_count();
    std::vector<char> seen(n, 0);
    std::vector<NodeId> stack = {from};
    seen[from] = 1;
    while (!stack.empty()) {
      NodeId v = stack.back();
      stack.pop_back();
      if (v == to) return true;
      for (NodeId u : und_[v])
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
      for (NodeId u : out_dir_[v])
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
    }
    return false;
  }

  // Reachability that must use at least one directed edge. State doubles the
  // vertex set with a "crossed a directed edge yet" flag.
  bool reaches_with_directed(NodeId from, NodeId to) const {
    const int n = skel_.node_count();
    std::vector<char> seen(2 * n, 0);
    std::vector<int> stack = {from};  // state = vertex + n * flag
    seen[from] = 1;
    while (!stack.empty()) {
      int state = stack.back();
      stack.pop_back();
      NodeId v = state % n;
      bool flag = state >= n;
      if (flag && v == to) return true;
      for (NodeId u : und_[v]) {
        int next = u + (flag ? n : 0);
        if (!seen[next]) {
          seen[next] = 1;
          stack.push_back(next);
        }
      }
      for (NodeId u : out_dir_[v]) {
        int next = u + n;
        if (!seen[next]) {
          seen[next] = 1;
          stack.push_back(next);
        }
      }
    }
    return false;
  }

  bool chain_components_chordal() const {
    const int n = skel_.node_count();
    std::vector<int> comp(n, -1);
    for (NodeId s = 0; s < n; ++s) {
      if (comp[s] >= 0) continue;
      std::vector<NodeId> members;
      std::vector<NodeId> stack = {s};
      comp[s] = s;
      while (!stack.empty()) {
        NodeId v = stack.back();
        stack.pop_back();
        members.push_back(v);
        for (NodeId u : und_[v])
          if (comp[u] < 0) {
            comp[u] = s;
            stack.push_back(u);
          }
      }
      if (members.size() > 2 &&
          !is_chordal(induced_undirected(skel_, members)))
        return false;
    }
    return true;
  }

  const UndirectedGraph& skel_;
  std::vector<Mark> marks_;
  std::vector<std::vector<NodeId>> und_;      // assigned undirected neighbors
  std::vector<std::vector<NodeId>> in_;       // assigned directed parents
  std::vector<std::vector<NodeId>> out_dir_;  // assigned directed successors
  bool skeleton_chordal_;
  std::vector<std::vector<Mark>> results_;
};

std::vector<std::vector<Mark>> enumerate_partial_mec_marks(
    const UndirectedGraph& window_skeleton) {
  return PartialMecSearch(window_skeleton).run();
}

}  // namespace

std::vector<LabeledMixedGraph> enumerate_partial_mecs(
    const UndirectedGraph& g, const std::vector<NodeId>& window) {
  std::vector<NodeId> labels = sorted_union(window, {});
  UndirectedGraph skel = induced_undirected(g, labels);
  std::vector<LabeledMixedGraph> out;
  for (auto& marks : enumerate_partial_mec_marks(skel))
    out.push_back(LabeledMixedGraph{MixedGraph(skel, std::move(marks)), labels});
  return out;
}

LabeledMixedGraph restrict_partial_mec(const LabeledMixedGraph& o,
                                       const std::vector<NodeId>& x_prime) {
  std::vector<NodeId> want = sorted_union(x_prime, {});
  std::vector<NodeId> local;
  local.reserve(want.size());
  for (NodeId v : want) {
    auto it = std::lower_bound(o.labels.begin(), o.labels.end(), v);
    if (it == o.labels.end() || *it != v)
      throw VertexOutOfRange("restriction vertex not in the window");
    local.push_back(static_cast<NodeId>(it - o.labels.begin()));
  }
  LabeledMixedGraph sub = induced_subgraph(o.graph, local);
  sub.labels = std::move(want);
  return sub;
}

namespace {

// Positions of the (sorted) subset within the (sorted) superset.
std::vector<int> embed(const std::vector<NodeId>& subset,
                       const std::vector<NodeId>& superset) {
  std::vector<int> pos;
  pos.reserve(subset.size());
  for (NodeId v : subset) {
    auto it = std::lower_bound(superset.begin(), superset.end(), v);
    if (it == superset.end() || *it != v)
      throw WindowMismatch("window is not contained in the merged window");
    pos.push_back(static_cast<int>(it - superset.begin()));
  }
  return pos;
}

// For each edge of the sub-window skeleton, the index of the same edge in the
// merged-window skeleton. Monotone embeddings preserve mark codes.
std::vector<int> edge_embedding(const UndirectedGraph& sub_skel,
                                const std::vector<int>& vertex_pos,
                                const UndirectedGraph& big_skel) {
  std::vector<int> map(sub_skel.edge_count());
  const auto& es = sub_skel.edges();
  for (int e = 0; e < sub_skel.edge_count(); ++e) {
    int idx = big_skel.edge_index(vertex_pos[es[e].first],
                                  vertex_pos[es[e].second]);
    if (idx < 0) throw WindowMismatch("sub-window edge missing upstream");
    map[e] = idx;
  }
  return map;
}

bool side_satisfies_extension(const MixedGraph& o_graph,
                              const std::vector<int>& vertex_pos,
                              const LabeledMixedGraph& oa) {
  const UndirectedGraph& sub_skel = oa.graph.skeleton();
  std::vector<int> emap =
      edge_embedding(sub_skel, vertex_pos, o_graph.skeleton());
  std::vector<Mark> restricted(sub_skel.edge_count());
  for (int e = 0; e < sub_skel.edge_count(); ++e)
    restricted[e] = o_graph.mark(emap[e]);
  for (int e = 0; e < sub_skel.edge_count(); ++e) {
    Mark ma = oa.graph.mark(e);
    Mark mo = restricted[e];
    if (ma != Mark::Undirected && mo != ma) return false;  // item 1
    if (ma == Mark::Undirected && mo != Mark::Undirected) {
      auto [x, y] = sub_skel.edges()[e];
      NodeId from = mo == Mark::Forward ? x : y;
      NodeId to = mo == Mark::Forward ? y : x;
      if (!is_strongly_protected(o_graph.skeleton(), o_graph.marks(),
                                 vertex_pos[from], vertex_pos[to]))
        return false;  // item 3
    }
  }
  return v_structures(sub_skel, oa.graph.marks()) ==
         v_structures(sub_skel, restricted);  // item 2
}

}  // namespace

bool is_extension(const LabeledMixedGraph& o, const LabeledMixedGraph& o1,
                  const LabeledMixedGraph& o2, const ExtensionWindow& w) {
  if (o.labels != w.x || o1.labels != w.x1 || o2.labels != w.x2)
    throw WindowMismatch("graph labels disagree with the extension window");
  std::vector<int> pos1 = embed(w.x1, w.x);
  std::vector<int> pos2 = embed(w.x2, w.x);
  return side_satisfies_extension(o.graph, pos1, o1) &&
         side_satisfies_extension(o.graph, pos2, o2);
}

namespace {

// Decoded table entry, ready for compatibility checks in the merge loop.
struct SideEntry {
  std::vector<Mark> marks;
  std::vector<VStructure> vstructs;
  const BigInt* count;
};

struct SidePrep {
  std::vector<NodeId> window;           // X_a
  UndirectedGraph skel;                 // skeleton of G[X_a]
  std::vector<int> vertex_pos;          // X_a -> X positions
  std::vector<int> edge_map;            // X_a edges -> X edge indices
  std::vector<SideEntry> entries;
  std::unordered_map<std::string, BigInt> memo;  // key: marks|spmask
};

SidePrep prepare_side(const UndirectedGraph& master,
                      const PartialMecTable& table,
                      const std::vector<NodeId>& x,
                      const UndirectedGraph& skel_x) {
  SidePrep side;
  side.window = table.window();
  side.skel = induced_undirected(master, side.window);
  side.vertex_pos = embed(side.window, x);
  side.edge_map = edge_embedding(side.skel, side.vertex_pos, skel_x);
  side.entries.reserve(table.entries().size());
  for (const auto& [key, count] : table.entries()) {
    SideEntry entry;
    entry.marks.resize(key.size());
    for (size_t i = 0; i < key.size(); ++i)
      entry.marks[i] = static_cast<Mark>(key[i] - '0');
    entry.vstructs = v_structures(side.skel, entry.marks);
    entry.count = &count;
    side.entries.push_back(std::move(entry));
  }
  return side;
}

// Sum of table counts compatible with the restriction of O to this side.
// Restriction marks and the strong-protection mask determine the predicate,
// so the sum is memoized on them.
const BigInt& side_sum(SidePrep& side, const UndirectedGraph& skel_x,
                       const std::vector<Mark>& o_marks) {
  const int ne = side.skel.edge_count();
  std::string memo_key(2 * ne, '0');
  std::vector<Mark> restricted(ne);
  for (int e = 0; e < ne; ++e) {
    restricted[e] = o_marks[side.edge_map[e]];
    memo_key[e] = static_cast<char>('0' + static_cast<int>(restricted[e]));
  }
  for (int e = 0; e < ne; ++e) {
    if (restricted[e] == Mark::Undirected) continue;
    auto [x, y] = side.skel.edges()[e];
    NodeId from = restricted[e] == Mark::Forward ? x : y;
    NodeId to = restricted[e] == Mark::Forward ? y : x;
    bool prot = is_strongly_protected(skel_x, o_marks, side.vertex_pos[from],
                                      side.vertex_pos[to]);
    memo_key[ne + e] = prot ? '1' : '0';
  }
  auto found = side.memo.find(memo_key);
  if (found != side.memo.end()) return found->second;

  std::vector<VStructure> r_vstructs = v_structures(side.skel, restricted);
  BigInt sum = 0;
  for (const SideEntry& entry : side.entries) {
    bool ok = true;
    for (int e = 0; e < ne && ok; ++e) {
      Mark ma = entry.marks[e];
      Mark mo = restricted[e];
      if (ma != Mark::Undirected) {
        ok = mo == ma;
      } else if (mo != Mark::Undirected) {
        ok = memo_key[ne + e] == '1';
      }
    }
    if (ok && entry.vstructs == r_vstructs) sum += *entry.count;
  }
  return side.memo.emplace(std::move(memo_key), std::move(sum)).first->second;
}

std::vector<NodeId> clique_window(const UndirectedGraph& master,
                                  const std::vector<NodeId>& clique,
                                  const std::vector<NodeId>& vertex_set) {
  std::vector<NodeId> nbrs =
      intersect_sorted(neighborhood(master, clique), vertex_set);
  return sorted_union(nbrs, clique);
}

PartialMecTable count_rooted_impl(const UndirectedGraph& master,
                                  const CliqueTree& t, int r1) {
  std::vector<NodeId> vertex_set;
  for (const auto& c : t.cliques) vertex_set = sorted_union(vertex_set, c);
  std::vector<NodeId> x_out = clique_window(master, t.cliques[r1], vertex_set);
  PartialMecTable table(x_out);

  if (t.clique_count() == 1) {
    // Single maximal clique: the only MEC of a complete graph is the fully
    // undirected graph itself.
    UndirectedGraph skel = induced_undirected(master, vertex_set);
    table.add(PartialMecKey(skel.edge_count(), '0'), 1);
    return table;
  }

  int r2 = -1;
  for (const auto& [a, b] : t.tree_edges) {
    if (a == r1) r2 = r2 < 0 ? b : std::min(r2, b);
    if (b == r1) r2 = r2 < 0 ? a : std::min(r2, a);
  }
  CliqueTreeCut cut = cut_clique_tree_edge(t, {r1, r2});
  int r1_new = static_cast<int>(
      std::find(cut.orig1.begin(), cut.orig1.end(), r1) - cut.orig1.begin());
  int r2_new = static_cast<int>(
      std::find(cut.orig2.begin(), cut.orig2.end(), r2) - cut.orig2.begin());

  PartialMecTable f1 = count_rooted_impl(master, cut.side1, r1_new);
  PartialMecTable f2 = count_rooted_impl(master, cut.side2, r2_new);

  std::vector<NodeId> both = sorted_union(t.cliques[r1], t.cliques[r2]);
  std::vector<NodeId> x = clique_window(master, both, vertex_set);
  UndirectedGraph skel_x = induced_undirected(master, x);

  SidePrep side1 = prepare_side(master, f1, x, skel_x);
  SidePrep side2 = prepare_side(master, f2, x, skel_x);
  std::vector<int> out_pos = embed(x_out, x);
  UndirectedGraph skel_out = induced_undirected(master, x_out);
  std::vector<int> out_edges = edge_embedding(skel_out, out_pos, skel_x);

  for (const auto& o_marks : enumerate_partial_mec_marks(skel_x)) {
    const BigInt& s1 = side_sum(side1, skel_x, o_marks);
    if (s1 == 0) continue;
    const BigInt& s2 = side_sum(side2, skel_x, o_marks);
    if (s2 == 0) continue;
    PartialMecKey out_key(out_edges.size(), '0');
    for (size_t e = 0; e < out_edges.size(); ++e)
      out_key[e] =
          static_cast<char>('0' + static_cast<int>(o_marks[out_edges[e]]));
    table.add(out_key, s1 * s2);
  }
  return table;
}

}  // namespace

PartialMecTable count_rooted(const UndirectedGraph& g, const CliqueTree& t,
                             int r1) {
  if (r1 < 0 || r1 >= t.clique_count())
    throw InvalidCliqueTree("root clique index out of range");
  if (!g.is_connected()) throw NotConnected("graph is not connected");
  if (!is_chordal(g)) throw NotChordal("graph is not chordal");
  if (!clique_tree_is_valid(g, t))
    throw InvalidCliqueTree("not a clique tree of the graph");
  return count_rooted_impl(g, t, r1);
}

BigInt count_mec_chordal(const UndirectedGraph& g) {
  if (g.node_count() == 0) throw VertexOutOfRange("empty graph");
  if (!g.is_connected()) throw NotConnected("graph is not connected");
  if (g.node_count() == 1) return 1;
  if (!is_chordal(g)) throw NotChordal("graph is not chordal");
  CliqueTree t = build_clique_tree(g);
  return count_rooted_impl(g, t, 0).total();
}

}  // namespace meccount
