#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "gcensus/graph.hpp"

namespace gcensus {

// Canonical-order graph6 bytes for g (no header prefix, no newline).
std::string graph6_encode(const Graph& g);

// Strict decoder: one graph6 record, optionally prefixed by ">>graph6<<".
// Rejects stray bytes, bad lengths, and nonzero padding, reporting the byte
// offset of the first problem.
Graph graph6_decode(std::string_view bytes);

// One record per line; blank lines are skipped, a header line is allowed.
std::vector<Graph> graph6_read_lines(std::istream& in);
void graph6_write_line(std::ostream& out, const Graph& g);

}  // namespace gcensus
