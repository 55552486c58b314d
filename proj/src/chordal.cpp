#include "meccount/chordal.hpp"

#include <algorithm>
#include <list>
#include <numeric>
#include <queue>
#include <string>

namespace meccount {

namespace {

// Maximum-cardinality search. Returns the visit order plus, for each vertex,
// the set of already-visited neighbors at the moment it was selected.
struct McsResult {
  std::vector<NodeId> visit_order;
  std::vector<std::vector<NodeId>> visited_neighbors;  // by vertex
};

McsResult mcs(const UndirectedGraph& g) {
  const int n = g.node_count();
  McsResult res;
  res.visit_order.reserve(n);
  res.visited_neighbors.resize(n);
  std::vector<int> weight(n, 0);
  std::vector<char> visited(n, 0);
  // Lazy buckets: an entry (v) in bucket[w] is stale once weight[v] != w.
  std::vector<std::vector<NodeId>> bucket(n + 1);
  for (NodeId v = 0; v < n; ++v) bucket[0].push_back(v);
  int maxw = 0;
  for (int step = 0; step < n; ++step) {
    NodeId v = -1;
    while (true) {
      while (maxw > 0 && bucket[maxw].empty()) --maxw;
      if (bucket[maxw].empty()) {
        // all remaining vertices have weight 0 but bucket 0 may hold stale
        // entries; it cannot be empty while unvisited vertices remain
        break;
      }
      NodeId cand = bucket[maxw].back();
      bucket[maxw].pop_back();
      if (!visited[cand] && weight[cand] == maxw) {
        v = cand;
        break;
      }
    }
    if (v < 0) throw Error(ErrorCode::Generic, "internal: mcs ran dry");
    visited[v] = 1;
    res.visit_order.push_back(v);
    for (NodeId u : g.neighbors(v)) {
      if (visited[u]) {
        res.visited_neighbors[v].push_back(u);
      } else {
        ++weight[u];
        bucket[weight[u]].push_back(u);
        maxw = std::max(maxw, weight[u]);
      }
    }
    std::sort(res.visited_neighbors[v].begin(), res.visited_neighbors[v].end());
  }
  return res;
}

// The reverse of an MCS visit order is a perfect elimination ordering iff the
// graph is chordal. Verification: for each vertex, its earlier-visited
// neighbors minus the latest one must all be adjacent to that latest one.
bool verify_peo_from_mcs(const UndirectedGraph& g, const McsResult& m,
                         const std::vector<int>& visit_pos) {
  for (NodeId v : m.visit_order) {
    const auto& pred = m.visited_neighbors[v];
    if (pred.size() <= 1) continue;
    NodeId latest = pred[0];
    for (NodeId u : pred)
      if (visit_pos[u] > visit_pos[latest]) latest = u;
    for (NodeId u : pred) {
      if (u == latest) continue;
      if (!g.has_edge(u, latest)) return false;
    }
  }
  return true;
}

std::vector<int> positions(const std::vector<NodeId>& order, int n) {
  std::vector<int> pos(n, -1);
  for (int i = 0; i < static_cast<int>(order.size()); ++i) pos[order[i]] = i;
  return pos;
}

}  // namespace

bool is_chordal(const UndirectedGraph& g) {
  if (g.node_count() <= 2) return true;
  McsResult m = mcs(g);
  std::vector<int> pos = positions(m.visit_order, g.node_count());
  return verify_peo_from_mcs(g, m, pos);
}

std::optional<std::vector<NodeId>> perfect_elimination_ordering(
    const UndirectedGraph& g) {
  McsResult m = mcs(g);
  std::vector<int> pos = positions(m.visit_order, g.node_count());
  if (!verify_peo_from_mcs(g, m, pos)) return std::nullopt;
  std::vector<NodeId> peo(m.visit_order.rbegin(), m.visit_order.rend());
  return peo;
}

LbfsOrder lbfs_from_clique(const UndirectedGraph& g,
                           const std::vector<NodeId>& seed) {
  const int n = g.node_count();
  for (NodeId v : seed) g.check_vertex(v);
  for (size_t i = 0; i < seed.size(); ++i)
    for (size_t j = i + 1; j < seed.size(); ++j)
      if (seed[i] == seed[j] || !g.has_edge(seed[i], seed[j]))
        throw SeedNotClique("seed vertices are not a clique");
  if (!g.is_connected()) throw NotConnected("lbfs requires a connected graph");
  if (!is_chordal(g)) throw NotChordal("lbfs requires a chordal graph");

  // Partition refinement. While seed vertices remain unvisited, the front
  // bucket always contains one (they are pairwise adjacent, so each carries a
  // maximal label); prefer it to force the seed prefix.
  std::vector<char> in_seed(n, 0);
  for (NodeId v : seed) in_seed[v] = 1;
  std::list<std::vector<NodeId>> buckets;
  {
    std::vector<NodeId> all(n);
    std::iota(all.begin(), all.end(), 0);
    buckets.push_back(std::move(all));
  }
  LbfsOrder result;
  result.rank.assign(n, -1);
  size_t seed_left = seed.size();
  while (!buckets.empty()) {
    auto& front = buckets.front();
    NodeId v = -1;
    if (seed_left > 0) {
      for (NodeId cand : front)
        if (in_seed[cand]) {
          v = cand;
          break;
        }
      if (v < 0)
        throw SeedNotClique("internal: seed vertex missing from front bucket");
      --seed_left;
    } else {
      v = *std::min_element(front.begin(), front.end());
    }
    front.erase(std::find(front.begin(), front.end(), v));
    if (front.empty()) buckets.pop_front();
    result.rank[v] = static_cast<int>(result.order.size());
    result.order.push_back(v);
    // Split every bucket into (neighbors of v, rest), neighbors first.
    for (auto it = buckets.begin(); it != buckets.end(); ++it) {
      std::vector<NodeId> hit, miss;
      for (NodeId u : *it)
        (g.has_edge(u, v) ? hit : miss).push_back(u);
      if (hit.empty() || miss.empty()) continue;
      *it = std::move(miss);
      buckets.insert(it, std::move(hit));
    }
  }
  // Def-style sanity: earlier neighbors of every vertex form a clique.
  for (NodeId v = 0; v < n; ++v) {
    std::vector<NodeId> earlier;
    for (NodeId u : g.neighbors(v))
      if (result.rank[u] < result.rank[v]) earlier.push_back(u);
    for (size_t i = 0; i < earlier.size(); ++i)
      for (size_t j = i + 1; j < earlier.size(); ++j)
        if (!g.has_edge(earlier[i], earlier[j]))
          throw NotChordal("lbfs invariant violated");
  }
  return result;
}

std::vector<std::vector<int>> CliqueTree::adjacency() const {
  std::vector<std::vector<int>> adj(cliques.size());
  for (const auto& [a, b] : tree_edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
  return adj;
}

CliqueTree build_clique_tree(const UndirectedGraph& g) {
  if (!g.is_connected())
    throw NotConnected("clique tree requires a connected graph");
  const int n = g.node_count();
  McsResult m = mcs(g);
  std::vector<int> pos = positions(m.visit_order, n);
  if (!verify_peo_from_mcs(g, m, pos))
    throw NotChordal("clique tree requires a chordal graph");

  CliqueTree t;
  if (n == 0) return t;

  // Blair-Peyton style construction along the MCS visit order: a vertex whose
  // visited neighborhood does not cover the clique under construction starts
  // a new maximal clique, attached to the clique of its latest visited
  // neighbor.
  std::vector<int> clique_of(n, -1);
  std::vector<NodeId> current = {m.visit_order[0]};
  clique_of[m.visit_order[0]] = 0;
  int current_index = 0;
  auto finalize = [&](std::vector<NodeId> clique) {
    std::sort(clique.begin(), clique.end());
    t.cliques.push_back(std::move(clique));
  };
  for (int i = 1; i < n; ++i) {
    NodeId v = m.visit_order[i];
    const auto& pred = m.visited_neighbors[v];
    // In MCS on a chordal graph the visited neighborhood never exceeds the
    // clique under construction; v extends it exactly when the two coincide.
    bool extends = pred.size() == current.size() &&
                   std::all_of(current.begin(), current.end(), [&](NodeId u) {
                     return std::binary_search(pred.begin(), pred.end(), u);
                   });
    if (extends) {
      current.push_back(v);
      clique_of[v] = current_index;
      continue;
    }
    finalize(current);
    NodeId latest = pred.empty() ? -1 : pred[0];
    for (NodeId u : pred)
      if (pos[u] > pos[latest]) latest = u;
    if (latest < 0)
      throw NotConnected("internal: empty visited neighborhood mid-search");
    current.assign(pred.begin(), pred.end());
    current.push_back(v);
    current_index = static_cast<int>(t.cliques.size());
    clique_of[v] = current_index;
    t.tree_edges.emplace_back(clique_of[latest], current_index);
  }
  finalize(current);
  return t;
}

CliqueTreeCut cut_clique_tree_edge(const CliqueTree& t, std::pair<int, int> e) {
  const int k = t.clique_count();
  auto in_range = [&](int c) { return c >= 0 && c < k; };
  bool found = false;
  for (const auto& [a, b] : t.tree_edges)
    if ((a == e.first && b == e.second) || (a == e.second && b == e.first))
      found = true;
  if (!in_range(e.first) || !in_range(e.second) || !found)
    throw EdgeNotInTree("edge is not a clique tree edge");

  auto adj = t.adjacency();
  std::vector<int> side(k, -1);
  auto flood = [&](int start, int banned, int tag) {
    std::queue<int> q;
    q.push(start);
    side[start] = tag;
    while (!q.empty()) {
      int c = q.front();
      q.pop();
      for (int d : adj[c]) {
        if ((c == start && d == banned) || (d == start && c == banned))
          continue;
        if ((c == e.first && d == e.second) || (c == e.second && d == e.first))
          continue;
        if (side[d] < 0) {
          side[d] = tag;
          q.push(d);
        }
      }
    }
  };
  flood(e.first, e.second, 0);
  flood(e.second, e.first, 1);

  CliqueTreeCut cut;
  std::vector<int> new_index(k, -1);
  for (int c = 0; c < k; ++c) {
    if (side[c] == 0) {
      new_index[c] = static_cast<int>(cut.side1.cliques.size());
      cut.side1.cliques.push_back(t.cliques[c]);
      cut.orig1.push_back(c);
    } else {
      new_index[c] = static_cast<int>(cut.side2.cliques.size());
      cut.side2.cliques.push_back(t.cliques[c]);
      cut.orig2.push_back(c);
    }
  }
  for (const auto& [a, b] : t.tree_edges) {
    if ((a == e.first && b == e.second) || (a == e.second && b == e.first))
      continue;
    if (side[a] == 0)
      cut.side1.tree_edges.emplace_back(new_index[a], new_index[b]);
    else
      cut.side2.tree_edges.emplace_back(new_index[a], new_index[b]);
  }
  auto union_of = [](const CliqueTree& sub) {
    std::vector<NodeId> vs;
    for (const auto& c : sub.cliques) vs.insert(vs.end(), c.begin(), c.end());
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
  };
  cut.vertices1 = union_of(cut.side1);
  cut.vertices2 = union_of(cut.side2);
  return cut;
}

bool clique_tree_is_valid(const UndirectedGraph& g, const CliqueTree& t) {
  const int k = t.clique_count();
  const int n = g.node_count();
  if (k == 0) return n == 0;
  if (static_cast<int>(t.tree_edges.size()) != k - 1) return false;

  // spanning tree over clique indices
  std::vector<std::vector<int>> adj = t.adjacency();
  std::vector<char> seen(k, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int reached = 0;
  while (!q.empty()) {
    int c = q.front();
    q.pop();
    ++reached;
    for (int d : adj[c])
      if (!seen[d]) {
        seen[d] = 1;
        q.push(d);
      }
  }
  if (reached != k) return false;

  std::vector<char> covered(n, 0);
  for (const auto& c : t.cliques) {
    for (size_t i = 0; i < c.size(); ++i) {
      if (c[i] < 0 || c[i] >= n) return false;
      covered[c[i]] = 1;
      for (size_t j = i + 1; j < c.size(); ++j)
        if (!g.has_edge(c[i], c[j])) return false;
    }
  }
  if (std::count(covered.begin(), covered.end(), 1) != n) return false;

  // maximality: no vertex adjacent to every member of a clique
  for (const auto& c : t.cliques) {
    for (NodeId v = 0; v < n; ++v) {
      if (std::binary_search(c.begin(), c.end(), v)) continue;
      bool all = true;
      for (NodeId u : c)
        if (!g.has_edge(u, v)) {
          all = false;
          break;
        }
      if (all) return false;
    }
  }

  // clique intersection property, checked along tree paths from every root
  for (int x = 0; x < k; ++x) {
    // BFS from x recording parents
    std::vector<int> parent(k, -2);
    std::queue<int> bq;
    bq.push(x);
    parent[x] = -1;
    while (!bq.empty()) {
      int c = bq.front();
      bq.pop();
      for (int d : adj[c])
        if (parent[d] == -2) {
          parent[d] = c;
          bq.push(d);
        }
    }
    for (int y = 0; y < k; ++y) {
      if (y == x) continue;
      std::vector<NodeId> inter;
      std::set_intersection(t.cliques[x].begin(), t.cliques[x].end(),
                            t.cliques[y].begin(), t.cliques[y].end(),
                            std::back_inserter(inter));
      for (int z = parent[y]; z > -1 && z != x; z = parent[z]) {
        if (!std::includes(t.cliques[z].begin(), t.cliques[z].end(),
                           inter.begin(), inter.end()))
          return false;
      }
    }
  }
  return true;
}

}  // namespace meccount
