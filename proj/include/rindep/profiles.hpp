#pragma once

#include <vector>

#include "rindep/graph.hpp"
#include "rindep/vertex_set.hpp"

namespace rindep {

// Truncated distance vector relative to a reference set. Entry i is the
// distance to reference[i], capped at radius+1 (which stands for "further
// than radius"). Profiles over different references never compare equal.
struct Profile {
    VertexSet reference;
    int radius = 0;
    std::vector<int> values; // aligned with reference, each in 0..radius+1

    friend bool operator==(const Profile&, const Profile&) = default;
    friend auto operator<=>(const Profile& a, const Profile& b) {
        if (auto c = a.reference <=> b.reference; c != 0) return c;
        if (auto c = a.radius <=> b.radius; c != 0) return c;
        return a.values <=> b.values;
    }
};

// Profiles of every vertex against one reference set, stored as a dense
// matrix. row(v) is vertex v's value vector in reference order.
struct ProfileTable {
    VertexSet reference;
    int radius = 0;
    std::vector<std::vector<int>> rows; // vertex -> values

    const std::vector<int>& row(int v) const { return rows[v]; }
    Profile profile_of(int v) const { return Profile{reference, radius, rows[v]}; }
};

Profile vertex_profile(const Graph& g, const VertexSet& s, int v, int r);

// One bounded BFS per reference vertex; O(|S| * |G|) total.
ProfileTable all_profiles(const Graph& g, const VertexSet& s, int r);

// Pointwise minimum of the member profiles; all entries r+1 for empty X.
Profile set_profile(const Graph& g, const VertexSet& s, const VertexSet& x, int r);

// Union of balls N_{radii[i]}(s[i]); negative radii contribute nothing.
VertexSet trace(const Graph& g, const VertexSet& s, const std::vector<int>& radii);

// Vertices a for which Q captures the pair (X, a): the trace of
// r - set_profile(Q, X).
VertexSet captured_region(const Graph& g, const VertexSet& q, const VertexSet& x, int r);

} // namespace rindep
