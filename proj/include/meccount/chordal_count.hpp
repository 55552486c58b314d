#pragma once

#include <map>
#include <string>
#include <vector>

#include "meccount/bigint.hpp"
#include "meccount/chordal.hpp"
#include "meccount/graph.hpp"

namespace meccount {

/// Canonical byte encoding of a partial MEC over a fixed, sorted vertex
/// window: one mark byte per edge in lexicographic edge order.
using PartialMecKey = std::string;

PartialMecKey encode_partial_mec(const MixedGraph& o);
MixedGraph decode_partial_mec(const UndirectedGraph& skeleton,
                              const PartialMecKey& key);

/// All partial MECs of G[window]: every assignment of {undirected, ->, <-}
/// to the window edges that is a chain graph with chordal chain components
/// and no induced a -> b - c. Deterministic order, sorted by encoded key.
/// Enumeration backtracks edge by edge, pruning completed directed cycles
/// and completed a -> b - c patterns as soon as they appear.
std::vector<LabeledMixedGraph> enumerate_partial_mecs(
    const UndirectedGraph& g, const std::vector<NodeId>& window);

/// The three vertex windows of a clique tree cut plus the separator:
/// x1 = r1 ∪ N(r1,G1), x2 = r2 ∪ N(r2,G2), x = r1 ∪ r2 ∪ N(r1∪r2,G),
/// separator = r1 ∩ r2.
struct ExtensionWindow {
  std::vector<NodeId> x1, x2, x, separator;
};

/// Whether o extends (o1, o2): every directed edge of o1/o2 is directed
/// identically in o, the v-structure sets of o1/o2 match those of o's
/// restrictions, and every edge undirected in some o_a but directed in o is
/// strongly protected in o.
bool is_extension(const LabeledMixedGraph& o, const LabeledMixedGraph& o1,
                  const LabeledMixedGraph& o2, const ExtensionWindow& w);

/// Induced sub-mixed-graph of a labeled window graph on x_prime (original
/// labels, must be a subset of o.labels).
LabeledMixedGraph restrict_partial_mec(const LabeledMixedGraph& o,
                                       const std::vector<NodeId>& x_prime);

/// Table from canonically encoded partial MECs of G[window] to exact counts.
/// Keys absent from the table count zero.
class PartialMecTable {
 public:
  explicit PartialMecTable(std::vector<NodeId> window)
      : window_(std::move(window)) {}

  const std::vector<NodeId>& window() const { return window_; }
  void add(const PartialMecKey& key, const BigInt& value);
  BigInt count_for(const PartialMecKey& key) const;
  const std::map<PartialMecKey, BigInt>& entries() const { return entries_; }
  BigInt total() const;

 private:
  std::vector<NodeId> window_;
  std::map<PartialMecKey, BigInt> entries_;
};

/// The recursive clique tree dynamic program: for every partial MEC O of
/// G[r1 ∪ N(r1,G)], table[O] = |MEC(G, O)|. t must be a valid clique tree
/// of g and r1 one of its clique indices.
PartialMecTable count_rooted(const UndirectedGraph& g, const CliqueTree& t,
                             int r1);

/// Number of MECs whose skeleton is the connected chordal graph g.
BigInt count_mec_chordal(const UndirectedGraph& g);

}  // namespace meccount
