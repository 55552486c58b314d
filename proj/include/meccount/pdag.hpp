#pragma once

#include <span>
#include <vector>

#include "meccount/graph.hpp"

namespace meccount {

/// Induced a -> b <- c with a and c non-adjacent; canonical form has a < c.
struct VStructure {
  NodeId a, b, c;
  friend auto operator<=>(const VStructure&, const VStructure&) = default;
};

/// All v-structures of m, sorted canonically.
std::vector<VStructure> v_structures(const MixedGraph& m);

/// Raw-marks overload over a shared skeleton; avoids materializing a
/// MixedGraph in hot loops.
std::vector<VStructure> v_structures(const UndirectedGraph& skeleton,
                                     const std::vector<Mark>& marks);

/// True iff m has no cycle containing a directed edge, where a cycle may
/// traverse undirected edges either way and directed edges forward only.
bool is_chain_graph(const MixedGraph& m);

/// Partition of V into undirected connected components.
struct ChainComponents {
  std::vector<int> component;               // component index per node
  std::vector<std::vector<NodeId>> members; // sorted members per component
  int count() const { return static_cast<int>(members.size()); }
};

ChainComponents chain_components(const MixedGraph& m);

/// True iff the directed edge u -> v takes part in one of the four protecting
/// induced configurations:
///   (a) w -> u -> v with w, v non-adjacent
///   (b) u -> v <- w with u, w non-adjacent
///   (c) u -> w -> v alongside u -> v
///   (d) w - u - w' with w -> v, w' -> v and w, w' non-adjacent
bool is_strongly_protected(const MixedGraph& m, NodeId u, NodeId v);
bool is_strongly_protected(const UndirectedGraph& skeleton,
                           const std::vector<Mark>& marks, NodeId u, NodeId v);

/// Necessary and sufficient MEC conditions: chain graph, chordal chain
/// components, no induced a -> b - c, and every directed edge strongly
/// protected.
bool is_mec(const MixedGraph& m);

/// First three MEC conditions only; strong protection is not required.
bool is_partial_mec(const MixedGraph& m);

/// True iff no vertex pair shared between the two labeled graphs is directed
/// one way in g and the opposite way in h.
bool are_synchronous(const LabeledMixedGraph& g, const LabeledMixedGraph& h);

/// Markov union over a common vertex universe [0, universe_n). The skeleton
/// is the union of skeletons; an edge is directed u -> v iff some input
/// directs it so, and undirected iff present somewhere and directed nowhere.
MixedGraph markov_union(std::span<const LabeledMixedGraph> graphs,
                        int universe_n);

}  // namespace meccount
