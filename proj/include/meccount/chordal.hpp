#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "meccount/graph.hpp"

namespace meccount {

/// True iff g has no chordless cycle of length >= 4. Disconnected inputs are
/// fine; chordality is component-local.
bool is_chordal(const UndirectedGraph& g);

/// Perfect elimination ordering (eliminate order[0] first), or nullopt when
/// g is not chordal. Computed by maximum-cardinality search.
std::optional<std::vector<NodeId>> perfect_elimination_ordering(
    const UndirectedGraph& g);

struct LbfsOrder {
  std::vector<NodeId> order;  // visit sequence
  std::vector<int> rank;      // rank[v] = position of v in order
};

/// LBFS ordering of a connected chordal graph that starts with the vertices
/// of `seed` (which must be a clique). Every vertex's earlier neighbors form
/// a clique in the returned order.
LbfsOrder lbfs_from_clique(const UndirectedGraph& g,
                           const std::vector<NodeId>& seed);

/// Tree on the maximal cliques of a chordal graph satisfying the clique
/// intersection property.
struct CliqueTree {
  std::vector<std::vector<NodeId>> cliques;    // each sorted
  std::vector<std::pair<int, int>> tree_edges; // pairs of clique indices

  int clique_count() const { return static_cast<int>(cliques.size()); }
  std::vector<std::vector<int>> adjacency() const;
};

CliqueTree build_clique_tree(const UndirectedGraph& g);

struct CliqueTreeCut {
  CliqueTree side1, side2;
  std::vector<int> orig1, orig2;      // new clique index -> old clique index
  std::vector<NodeId> vertices1, vertices2;  // sorted unions of clique members
};

/// Splits t at tree edge e. side1 holds the cliques reachable from e.first,
/// side2 those reachable from e.second. vertices1 ∩ vertices2 equals the
/// separator cliques[e.first] ∩ cliques[e.second].
CliqueTreeCut cut_clique_tree_edge(const CliqueTree& t, std::pair<int, int> e);

/// Full structural validation: spanning tree over the cliques, every clique
/// maximal in g, union covers V, and the clique intersection property holds.
bool clique_tree_is_valid(const UndirectedGraph& g, const CliqueTree& t);

}  // namespace meccount
