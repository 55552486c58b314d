#include "meccount/generators.hpp"

#include <algorithm>
#include <random>

#include "meccount/chordal.hpp"

namespace meccount {

Family family_from_string(const std::string& name) {
  if (name == "path") return Family::Path;
  if (name == "star") return Family::Star;
  if (name == "caterpillar") return Family::Caterpillar;
  if (name == "complete") return Family::Complete;
  if (name == "random_tree") return Family::RandomTree;
  if (name == "random_chordal") return Family::RandomChordal;
  throw InfeasibleSpec("unknown family: " + name);
}

const char* family_name(Family f) {
  switch (f) {
    case Family::Path: return "path";
    case Family::Star: return "star";
    case Family::Caterpillar: return "caterpillar";
    case Family::Complete: return "complete";
    case Family::RandomTree: return "random_tree";
    case Family::RandomChordal: return "random_chordal";
  }
  return "?";
}

namespace {

// Bounded draw with our own reduction so outputs do not depend on the
// standard library's distribution implementation.
int draw(std::mt19937_64& rng, int bound) {
  return static_cast<int>(rng() % static_cast<std::uint64_t>(bound));
}

std::vector<Edge> path_edges(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return edges;
}

std::vector<Edge> random_tree_edges(int n, std::mt19937_64& rng) {
  if (n == 1) return {};
  if (n == 2) return {{0, 1}};
  // Prüfer decode: uniform over labeled trees. degree 0 marks a used leaf.
  std::vector<int> pruefer(n - 2);
  for (int& x : pruefer) x = draw(rng, n);
  std::vector<int> degree(n, 1);
  for (int x : pruefer) ++degree[x];
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  int ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int x : pruefer) {
    edges.emplace_back(leaf, x);
    degree[leaf] = 0;
    if (--degree[x] == 1 && x < ptr) {
      leaf = x;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  int a = -1, b = -1;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) (a < 0 ? a : b) = v;
  edges.emplace_back(a, b);
  return edges;
}

std::vector<Edge> caterpillar_edges(int n, std::mt19937_64& rng) {
  if (n <= 2) return path_edges(n);
  int spine = (n + 1) / 2;
  std::vector<Edge> edges = path_edges(spine);
  for (int v = spine; v < n; ++v)
    edges.emplace_back(draw(rng, spine), v);
  return edges;
}

std::vector<Edge> random_chordal_edges(int n, int max_clique,
                                       std::mt19937_64& rng) {
  std::vector<Edge> edges;
  std::vector<std::vector<NodeId>> cliques = {{0}};
  for (NodeId v = 1; v < n; ++v) {
    const auto& base = cliques[draw(rng, static_cast<int>(cliques.size()))];
    int cap = std::min<int>(static_cast<int>(base.size()), max_clique - 1);
    int take = 1 + draw(rng, cap);
    std::vector<NodeId> attach(base);
    for (int i = 0; i < take; ++i) {
      int j = i + draw(rng, static_cast<int>(attach.size()) - i);
      std::swap(attach[i], attach[j]);
    }
    attach.resize(take);
    for (NodeId u : attach) edges.emplace_back(u, v);
    attach.push_back(v);
    cliques.push_back(std::move(attach));
  }
  return edges;
}

void enforce_degree(const UndirectedGraph& g, int bound) {
  for (NodeId v = 0; v < g.node_count(); ++v)
    if (g.degree(v) > bound)
      throw InfeasibleSpec("degree bound exceeded");
}

}  // namespace

UndirectedGraph generate(const GenSpec& spec) {
  if (spec.n < 1) throw InfeasibleSpec("n must be at least 1");
  if (spec.max_degree && *spec.max_degree < 1)
    throw InfeasibleSpec("max_degree must be positive");
  if (spec.max_clique && *spec.max_clique < 2 && spec.n > 1)
    throw InfeasibleSpec("max_clique must be at least 2");
  std::mt19937_64 rng(spec.seed);
  const int n = spec.n;

  switch (spec.family) {
    case Family::Path: {
      if (spec.max_degree && n >= 3 && *spec.max_degree < 2)
        throw InfeasibleSpec("a path of n >= 3 needs degree 2");
      auto g = UndirectedGraph::from_edges(n, path_edges(n));
      if (spec.max_degree) enforce_degree(g, *spec.max_degree);
      return g;
    }
    case Family::Star: {
      std::vector<Edge> edges;
      for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
      auto g = UndirectedGraph::from_edges(n, std::move(edges));
      if (spec.max_degree) enforce_degree(g, *spec.max_degree);
      return g;
    }
    case Family::Complete: {
      std::vector<Edge> edges;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      auto g = UndirectedGraph::from_edges(n, std::move(edges));
      if (spec.max_degree) enforce_degree(g, *spec.max_degree);
      if (spec.max_clique && n > *spec.max_clique)
        throw InfeasibleSpec("complete graph exceeds the clique bound");
      return g;
    }
    case Family::Caterpillar: {
      auto g = UndirectedGraph::from_edges(n, caterpillar_edges(n, rng));
      if (spec.max_degree) enforce_degree(g, *spec.max_degree);
      return g;
    }
    case Family::RandomTree: {
      constexpr int kRetries = 5000;
      for (int attempt = 0; attempt < kRetries; ++attempt) {
        auto g = UndirectedGraph::from_edges(n, random_tree_edges(n, rng));
        if (!spec.max_degree) return g;
        bool ok = true;
        for (NodeId v = 0; v < n && ok; ++v)
          ok = g.degree(v) <= *spec.max_degree;
        if (ok) return g;
      }
      throw InfeasibleSpec("no tree within the degree bound after retries");
    }
    case Family::RandomChordal: {
      int max_clique = spec.max_clique.value_or(std::max(2, n));
      constexpr int kRetries = 5000;
      for (int attempt = 0; attempt < kRetries; ++attempt) {
        auto g = UndirectedGraph::from_edges(
            n, random_chordal_edges(n, max_clique, rng));
        if (!spec.max_degree) return g;
        bool ok = true;
        for (NodeId v = 0; v < n && ok; ++v)
          ok = g.degree(v) <= *spec.max_degree;
        if (ok) return g;
      }
      throw InfeasibleSpec("no chordal graph within the bounds after retries");
    }
  }
  throw InfeasibleSpec("unhandled family");
}

FamilyStats family_stats(const UndirectedGraph& g) {
  FamilyStats s;
  s.n = g.node_count();
  s.m = g.edge_count();
  for (NodeId v = 0; v < g.node_count(); ++v)
    s.degree = std::max(s.degree, g.degree(v));
  if (g.node_count() > 0 && is_chordal(g)) {
    // clique number from a perfect elimination ordering
    auto peo = perfect_elimination_ordering(g);
    std::vector<int> pos(g.node_count());
    for (int i = 0; i < g.node_count(); ++i) pos[(*peo)[i]] = i;
    int best = 1;
    for (NodeId v = 0; v < g.node_count(); ++v) {
      int later = 0;
      for (NodeId u : g.neighbors(v))
        if (pos[u] > pos[v]) ++later;
      best = std::max(best, later + 1);
    }
    s.k = best - 1;
  }
  return s;
}

}  // namespace meccount
