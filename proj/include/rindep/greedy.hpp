#pragma once

#include "rindep/graph.hpp"
#include "rindep/vertex_set.hpp"

namespace rindep {

// Outcome of the greedy packing/covering dichotomy: either a 2r-separated
// family of k+1 vertices drawn from the target, or a set of at most k
// vertices whose 2r-balls cover the whole target.
struct GreedyOutcome {
    enum class Tag { Independent, Cover };
    Tag tag;
    VertexSet set; // Y when Independent (size k+1), Z when Cover (size <= k)

    bool independent() const { return tag == Tag::Independent; }
};

// Grows the candidate family by the smallest-id vertex of X outside the
// current 2r-ball union, stopping at size k+1 or full coverage. Runs in
// O((k+1) * |G|) via one bounded BFS per selection.
GreedyOutcome greedy_dichotomy(const Graph& g, const VertexSet& x, int r, int k);

} // namespace rindep
