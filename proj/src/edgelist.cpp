#include "meccount/edgelist.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace meccount {

namespace {

// Returns the next data line's tokens; skips blank and comment lines.
bool next_tokens(std::istream& in, std::vector<std::string>& tokens) {
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream split(line);
    tokens.clear();
    std::string tok;
    while (split >> tok) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (tokens.front()[0] == '#') continue;
    return true;
  }
  return false;
}

long parse_nonnegative(const std::string& tok, const char* what) {
  size_t used = 0;
  long value = 0;
  try {
    value = std::stol(tok, &used);
  } catch (const std::exception&) {
    throw ParseError(std::string("bad ") + what + ": '" + tok + "'");
  }
  if (used != tok.size() || value < 0)
    throw ParseError(std::string("bad ") + what + ": '" + tok + "'");
  return value;
}

}  // namespace

UndirectedGraph parse_edge_list(std::istream& in) {
  std::vector<std::string> tokens;
  if (!next_tokens(in, tokens)) throw ParseError("missing header line");
  if (tokens.size() != 2)
    throw ParseError("header must be 'n m'");
  long n = parse_nonnegative(tokens[0], "node count");
  long m = parse_nonnegative(tokens[1], "edge count");
  if (n < 1) throw ParseError("node count must be at least 1");

  std::vector<Edge> edges;
  edges.reserve(m);
  for (long i = 0; i < m; ++i) {
    if (!next_tokens(in, tokens))
      throw ParseError("expected " + std::to_string(m) + " edges, got " +
                       std::to_string(i));
    if (tokens.size() != 2) throw ParseError("edge line must be 'u v'");
    long u = parse_nonnegative(tokens[0], "vertex");
    long v = parse_nonnegative(tokens[1], "vertex");
    if (u >= n || v >= n)
      throw ParseError("vertex out of range on edge line " +
                       std::to_string(i + 1));
    if (u == v)
      throw ParseError("self-loop on edge line " + std::to_string(i + 1));
    edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
  }
  if (next_tokens(in, tokens)) throw ParseError("trailing data after edges");
  try {
    return UndirectedGraph::from_edges(static_cast<int>(n), std::move(edges));
  } catch (const VertexOutOfRange& e) {
    throw ParseError(e.what());  // duplicate edges land here
  }
}

UndirectedGraph parse_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  return parse_edge_list(in);
}

void write_edge_list(const UndirectedGraph& g, std::ostream& out) {
  out << g.node_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace meccount
