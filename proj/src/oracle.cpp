#include "meccount/oracle.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace meccount {

namespace {

struct ClassAccum {
  std::uint32_t first_mask = 0;
  std::int64_t size = 0;
  // Direction agreement across members, per edge: bit stays set while every
  // member orients the edge that way.
  std::uint32_t all_low_to_high = 0;
  std::uint32_t all_high_to_low = 0;
};

// Candidate v-structure triple: edges ea=(a,b), ec=(c,b) meeting at b with
// a, c non-adjacent. into_b_* give the orientation bit value that means
// "points at b".
struct TripleCandidate {
  NodeId a, b, c;
  int ea, ec;
  std::uint32_t into_b_ea, into_b_ec;
};

bool orientation_is_acyclic(const UndirectedGraph& g, std::uint32_t mask,
                            std::vector<int>& indeg,
                            std::vector<NodeId>& queue_buf) {
  const int n = g.node_count();
  const auto& es = g.edges();
  std::fill(indeg.begin(), indeg.end(), 0);
  for (int i = 0; i < static_cast<int>(es.size()); ++i) {
    NodeId head = (mask >> i) & 1 ? es[i].first : es[i].second;
    ++indeg[head];
  }
  queue_buf.clear();
  for (NodeId v = 0; v < n; ++v)
    if (indeg[v] == 0) queue_buf.push_back(v);
  size_t head = 0;
  int removed = 0;
  while (head < queue_buf.size()) {
    NodeId v = queue_buf[head++];
    ++removed;
    for (NodeId u : g.neighbors(v)) {
      int idx = g.edge_index(v, u);
      bool v_to_u = ((mask >> idx) & 1) ? (es[idx].first == u)
                                        : (es[idx].second == u);
      if (v_to_u && --indeg[u] == 0) queue_buf.push_back(u);
    }
  }
  return removed == n;
}

MixedGraph orientation_to_graph(const UndirectedGraph& g, std::uint32_t mask) {
  std::vector<Mark> marks(g.edge_count());
  for (int i = 0; i < g.edge_count(); ++i)
    marks[i] = (mask >> i) & 1 ? Mark::Backward : Mark::Forward;
  return MixedGraph(g, std::move(marks));
}

}  // namespace

std::vector<MecClass> enumerate_mecs(const UndirectedGraph& g,
                                     int edge_limit) {
  const int m = g.edge_count();
  if (m > edge_limit)
    throw TooLarge("brute force limited to " + std::to_string(edge_limit) +
                   " edges, got " + std::to_string(m));

  // Candidate triples, fixed by the skeleton; a triple is a v-structure of an
  // orientation iff both its edges point at the middle vertex.
  std::vector<TripleCandidate> triples;
  for (NodeId b = 0; b < g.node_count(); ++b) {
    const auto& nbrs = g.neighbors(b);
    for (size_t i = 0; i < nbrs.size(); ++i)
      for (size_t j = i + 1; j < nbrs.size(); ++j) {
        NodeId a = nbrs[i], c = nbrs[j];
        if (g.has_edge(a, c)) continue;
        TripleCandidate t;
        t.a = a;
        t.b = b;
        t.c = c;
        t.ea = g.edge_index(a, b);
        t.ec = g.edge_index(c, b);
        // mask bit 0 means low->high on edge (low, high)
        t.into_b_ea = g.edges()[t.ea].second == b ? 0u : 1u;
        t.into_b_ec = g.edges()[t.ec].second == b ? 0u : 1u;
        triples.push_back(t);
      }
  }
  std::sort(triples.begin(), triples.end(),
            [](const TripleCandidate& x, const TripleCandidate& y) {
              return std::tie(x.a, x.b, x.c) < std::tie(y.a, y.b, y.c);
            });

  std::map<std::vector<int>, ClassAccum> classes;
  std::vector<int> indeg(g.node_count());
  std::vector<NodeId> queue_buf;
  std::vector<int> active;
  const std::uint64_t total = 1ull << m;
  for (std::uint64_t mask64 = 0; mask64 < total; ++mask64) {
    auto mask = static_cast<std::uint32_t>(mask64);
    if (!orientation_is_acyclic(g, mask, indeg, queue_buf)) continue;
    active.clear();
    for (int t = 0; t < static_cast<int>(triples.size()); ++t) {
      const TripleCandidate& tr = triples[t];
      if (((mask >> tr.ea) & 1) == tr.into_b_ea &&
          ((mask >> tr.ec) & 1) == tr.into_b_ec)
        active.push_back(t);
    }
    auto [it, inserted] = classes.try_emplace(active);
    ClassAccum& acc = it->second;
    if (inserted) {
      acc.first_mask = mask;
      acc.all_low_to_high = ~mask;
      acc.all_high_to_low = mask;
    } else {
      acc.all_low_to_high &= ~mask;
      acc.all_high_to_low &= mask;
    }
    ++acc.size;
  }

  std::vector<MecClass> out;
  out.reserve(classes.size());
  for (const auto& [key, acc] : classes) {
    MecClass cls;
    cls.size = acc.size;
    cls.representative_dag = orientation_to_graph(g, acc.first_mask);
    for (int t : key)
      cls.vstructs.push_back({triples[t].a, triples[t].b, triples[t].c});
    std::vector<Mark> marks(m, Mark::Undirected);
    for (int i = 0; i < m; ++i) {
      if ((acc.all_low_to_high >> i) & 1)
        marks[i] = Mark::Forward;
      else if ((acc.all_high_to_low >> i) & 1)
        marks[i] = Mark::Backward;
    }
    cls.cpdag = MixedGraph(g, std::move(marks));
    out.push_back(std::move(cls));
  }
  // map iteration already sorts by v-structure key; triples are in canonical
  // order so the key order is the canonical class order
  return out;
}

BigInt count_mecs_bruteforce(const UndirectedGraph& g, int edge_limit) {
  return BigInt(static_cast<long>(enumerate_mecs(g, edge_limit).size()));
}

BigInt count_mecs_with_image(const UndirectedGraph& g,
                             const LabeledMixedGraph& image, int edge_limit) {
  for (NodeId v : image.labels) g.check_vertex(v);
  long matches = 0;
  for (const MecClass& cls : enumerate_mecs(g, edge_limit)) {
    LabeledMixedGraph restricted = induced_subgraph(cls.cpdag, image.labels);
    if (restricted.graph == image.graph) ++matches;
  }
  return BigInt(matches);
}

std::map<std::string, BigInt> image_histogram(const UndirectedGraph& g,
                                              const std::vector<NodeId>& window,
                                              int edge_limit) {
  std::map<std::string, BigInt> hist;
  for (const MecClass& cls : enumerate_mecs(g, edge_limit)) {
    LabeledMixedGraph restricted = induced_subgraph(cls.cpdag, window);
    hist[encode_marks(restricted.graph)] += 1;
  }
  return hist;
}

LabeledMixedGraph projection(const MixedGraph& mec_cpdag,
                             const std::vector<NodeId>& y, int edge_limit) {
  LabeledMixedGraph restricted = induced_subgraph(mec_cpdag, y);
  std::vector<VStructure> want = v_structures(restricted.graph);
  const UndirectedGraph& skel_y = restricted.graph.skeleton();
  for (const MecClass& cls : enumerate_mecs(skel_y, edge_limit))
    if (cls.vstructs == want)
      return LabeledMixedGraph{cls.cpdag, restricted.labels};
  throw NoMatch("no MEC of the induced skeleton matches the v-structures");
}

}  // namespace meccount
