#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "meccount/bigint.hpp"
#include "meccount/graph.hpp"
#include "meccount/pdag.hpp"

namespace meccount {

/// One Markov equivalence class found by brute force: every member DAG has
/// the same skeleton and v-structure set; the CPDAG is the edge-wise union
/// of all members (directed iff every member agrees on the direction).
struct MecClass {
  MixedGraph representative_dag;
  std::vector<VStructure> vstructs;
  MixedGraph cpdag;
  std::int64_t size = 0;
};

inline constexpr int kDefaultBruteEdgeLimit = 24;

/// Partitions all acyclic orientations of g by v-structure set. Classes are
/// sorted canonically by v-structure list. Guarded: throws TooLarge when
/// g has more than edge_limit edges.
std::vector<MecClass> enumerate_mecs(const UndirectedGraph& g,
                                     int edge_limit = kDefaultBruteEdgeLimit);

BigInt count_mecs_bruteforce(const UndirectedGraph& g,
                             int edge_limit = kDefaultBruteEdgeLimit);

/// |MEC(G, O)|: number of classes whose CPDAG restricted to image.labels
/// equals image exactly, marks included.
BigInt count_mecs_with_image(const UndirectedGraph& g,
                             const LabeledMixedGraph& image,
                             int edge_limit = kDefaultBruteEdgeLimit);

/// Batched form of count_mecs_with_image: one enumeration, tallied by the
/// encoded marks of every class CPDAG restricted to window. Images absent
/// from the map have count zero.
std::map<std::string, BigInt> image_histogram(
    const UndirectedGraph& g, const std::vector<NodeId>& window,
    int edge_limit = kDefaultBruteEdgeLimit);

/// The unique MEC of skeleton(m)[y] whose v-structures equal those of m[y],
/// found by searching the enumeration of the induced skeleton's MECs.
LabeledMixedGraph projection(const MixedGraph& mec_cpdag,
                             const std::vector<NodeId>& y,
                             int edge_limit = kDefaultBruteEdgeLimit);

}  // namespace meccount
