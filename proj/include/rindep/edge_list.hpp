#pragma once

#include <string>
#include <vector>

#include "rindep/graph.hpp"

namespace rindep {

// Whitespace-separated "u v" lines; '#' starts a comment line. Labels are
// arbitrary tokens, mapped to dense ids in first-appearance order.
struct ParsedGraph {
    Graph graph;
    std::vector<std::string> labels; // dense id -> input token
    int duplicate_edges = 0;         // dropped with a counted warning
    int self_loops = 0;              // likewise

    int vertex_by_label(const std::string& label) const; // -1 if absent
};

ParsedGraph parse_edge_list(const std::string& text);

// One "u v" line per edge, ordered by (max endpoint, min endpoint). With that
// order, re-parsing reproduces the same dense labeling whenever every vertex
// above 0 has a smaller neighbor (true for all generated families here, up to
// chance in the random ones). Labels default to the numeric ids.
std::string write_edge_list(const Graph& g, const std::vector<std::string>* labels = nullptr);

} // namespace rindep
