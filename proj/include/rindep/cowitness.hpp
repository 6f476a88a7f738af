#pragma once

#include <optional>
#include <vector>

#include "rindep/graph.hpp"
#include "rindep/splitter.hpp"
#include "rindep/vertex_set.hpp"

namespace rindep {

struct CowitnessOptions {
    SplitterStrategy strategy = SplitterStrategy::BfsCenter;
    bool memoize = true;
    // Surface a top-level greedy packing of size k+1 instead of recursing.
    // Off by default; the certificate stays valid either way.
    bool early_independent = false;
    int depth_guard = -1; // -1: default to |V(g)|
};

struct CowitnessCertificate {
    VertexSet q;
    int depth_reached = 0;
    long long branch_count = 0;
    std::vector<int> level_separator_sizes; // |S| at each recursion level
    std::optional<VertexSet> early_independent;
};

// Recursive bounded-size cowitness construction. The returned set Q always
// contains the separator S, and its size obeys
//   |Q| <= (d+s) * (k+1)^d * (r+1)^(2sd + d(d-1))
// for the observed recursion depth d (checked at runtime).
CowitnessCertificate build_cowitness_ext(const Graph& g, const VertexSet& s,
                                         const VertexSet& a, int r, int k,
                                         const CowitnessOptions& options = {});

// Entry point with an empty separator.
CowitnessCertificate build_cowitness(const Graph& g, const VertexSet& a, int r, int k,
                                     const CowitnessOptions& options = {});

} // namespace rindep
