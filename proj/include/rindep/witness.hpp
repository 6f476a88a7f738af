#pragma once

#include <vector>

#include "rindep/graph.hpp"
#include "rindep/profiles.hpp"
#include "rindep/vertex_set.hpp"

namespace rindep {

// Verdict of the profile-multiset witness check. When Q fails, carries a
// concrete uncaptured k-set together with the profile multiset realizing it.
struct WitnessCheckResult {
    bool is_witness = false;
    VertexSet uncaptured;                           // empty when is_witness
    std::vector<std::vector<int>> profile_multiset; // value vectors over Q
    int distinct_profiles = 0;

    explicit operator bool() const { return is_witness; }
};

// Decides whether every k-subset of V(g) is captured by Q, enumerating
// multisets of realized profiles instead of vertex subsets. Counterexamples
// are deterministic: first uncaptured multiset in lexicographic order over
// canonically sorted profiles, realized by ascending vertex ids.
WitnessCheckResult check_witness(const Graph& g, const VertexSet& q, int r, int k);

// Number of members of X that have another member within distance r.
// Zero exactly when X is r-independent.
int conflict_count(const Graph& g, const VertexSet& x, int r);

struct RefineStats {
    int iterations = 0;
    std::vector<int> conflict_trace; // conflict count at the start of each pass
};

// Conflict-reduction loop: swap the smallest-id conflicted vertex for the
// smallest vertex outside ball(X - {w}, r). Requires Q to be a (k-1, r)-
// cowitness for (V(g), g) and X uncaptured by Q; throws PromiseViolation if
// the swap target space is empty, which falsifies that promise. At most k
// passes, each strictly decreasing the conflict count.
VertexSet refine_to_independent(const Graph& g, const VertexSet& q, VertexSet x, int r,
                                int k, RefineStats* stats = nullptr);

} // namespace rindep
