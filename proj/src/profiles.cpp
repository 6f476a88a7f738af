#include "rindep/profiles.hpp"

#include <algorithm>

#include "rindep/errors.hpp"

namespace rindep {

Profile vertex_profile(const Graph& g, const VertexSet& s, int v, int r) {
    if (v < 0 || v >= g.vertex_count())
        throw InputError("profile vertex out of range: " + std::to_string(v));
    Profile p{s, r, std::vector<int>(s.size(), r + 1)};
    auto bfs = bounded_bfs(g, v, r);
    for (int i = 0; i < s.size(); ++i) {
        int d = bfs.dist_of(s[i]);
        if (d >= 0) p.values[i] = d;
    }
    return p;
}

ProfileTable all_profiles(const Graph& g, const VertexSet& s, int r) {
    ProfileTable table{s, r, {}};
    table.rows.assign(g.vertex_count(), std::vector<int>(s.size(), r + 1));
    for (int i = 0; i < s.size(); ++i) {
        auto bfs = bounded_bfs(g, s[i], r);
        for (int v : bfs.reached) table.rows[v][i] = bfs.dist_of(v);
    }
    return table;
}

Profile set_profile(const Graph& g, const VertexSet& s, const VertexSet& x, int r) {
    Profile p{s, r, std::vector<int>(s.size(), r + 1)};
    if (x.empty()) return p;
    auto bfs = multi_source_bfs(g, x, r);
    for (int i = 0; i < s.size(); ++i) {
        int d = bfs.dist[s[i]];
        if (d >= 0) p.values[i] = d;
    }
    return p;
}

VertexSet trace(const Graph& g, const VertexSet& s, const std::vector<int>& radii) {
    if (static_cast<int>(radii.size()) != s.size())
        throw InputError("trace radii must align with the reference set");
    std::vector<int> out;
    for (int i = 0; i < s.size(); ++i) {
        if (radii[i] < 0) continue;
        auto bfs = bounded_bfs(g, s[i], radii[i]);
        out.insert(out.end(), bfs.reached.begin(), bfs.reached.end());
    }
    return VertexSet(std::move(out));
}

VertexSet captured_region(const Graph& g, const VertexSet& q, const VertexSet& x, int r) {
    Profile p = set_profile(g, q, x, r);
    std::vector<int> radii(p.values.size());
    for (size_t i = 0; i < p.values.size(); ++i) radii[i] = r - p.values[i];
    return trace(g, q, radii);
}

} // namespace rindep
