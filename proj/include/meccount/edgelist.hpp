#pragma once

#include <iosfwd>
#include <string>

#include "meccount/graph.hpp"

namespace meccount {

/// Edge-list format: first data line "n m", then m lines "u v" with
/// 0 <= u,v < n and u != v, whitespace separated. Lines whose first
/// non-blank character is '#' are comments. LF and CRLF both accepted.
/// Self-loops, duplicates and count mismatches are ParseErrors.
UndirectedGraph parse_edge_list(std::istream& in);
UndirectedGraph parse_edge_list_file(const std::string& path);

void write_edge_list(const UndirectedGraph& g, std::ostream& out);

}  // namespace meccount
