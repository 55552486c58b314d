#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "meccount/graph.hpp"

namespace meccount {

enum class Family {
  Path,
  Star,
  Caterpillar,
  Complete,
  RandomTree,
  RandomChordal,
};

Family family_from_string(const std::string& name);
const char* family_name(Family f);

struct GenSpec {
  Family family = Family::Path;
  int n = 1;
  std::optional<int> max_degree;
  std::optional<int> max_clique;
  std::uint64_t seed = 0;
};

/// Instance generation. Deterministic given the spec (including seed):
/// random trees come from Prüfer sequences, random chordal graphs from
/// incremental perfect-elimination insertion (each new vertex attaches to a
/// clique subset of an existing clique), which keeps them chordal and
/// connected by construction.
UndirectedGraph generate(const GenSpec& spec);

struct FamilyStats {
  int n = 0;
  int m = 0;
  int degree = 0;
  std::optional<int> k;  // clique number minus one; chordal inputs only
};

FamilyStats family_stats(const UndirectedGraph& g);

}  // namespace meccount
