#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "rindep/vertex_set.hpp"

namespace rindep {

// Immutable simple undirected graph. Vertices are dense ids 0..n-1, adjacency
// lists are sorted. Construction deduplicates edges and drops self-loops, so
// every instance satisfies the symmetry/simplicity invariants.
class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    std::span<const int> neighbors(int v) const {
        return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
    }
    int degree(int v) const { return offsets_[v + 1] - offsets_[v]; }
    bool has_edge(int u, int v) const;

    // Edges as (u, v) pairs with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    VertexSet all_vertices() const;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<int> offsets_{0};
    std::vector<int> neighbors_;
};

// Result of a radius-bounded BFS: `reached` lists vertices at distance
// <= radius in discovery order; `dist` is n-sized with -1 for unreached.
struct BfsResult {
    std::vector<int> reached;
    std::vector<int> dist;

    int dist_of(int v) const { return dist[v]; }
};

// Multi-source variant; `nearest_source[v]` is the source realizing dist[v]
// (smallest source id on ties).
struct MultiSourceBfs {
    std::vector<int> reached;
    std::vector<int> dist;
    std::vector<int> nearest_source;
};

// A short walk from endpoint_a to endpoint_b through `through`, with
// dist(endpoint_a, through) + dist(through, endpoint_b) = length.
struct CaptureEvidence {
    int through;
    int endpoint_a;
    int endpoint_b;
    int length;
};

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_original; // local id -> original id, ascending

    int to_local(int original) const; // -1 if absent
};

BfsResult bounded_bfs(const Graph& g, int source, int radius);
MultiSourceBfs multi_source_bfs(const Graph& g, const VertexSet& sources, int radius);

// Reusable buffers for tight BFS loops; the returned distance view is
// invalidated by the next call on the same workspace.
class BfsWorkspace {
public:
    std::span<const int> bounded(const Graph& g, int source, int radius);
    std::span<const int> multi_source(const Graph& g, std::span<const int> sources,
                                      int radius);
    const std::vector<int>& reached() const { return reached_; }

private:
    std::vector<int> dist_;
    std::vector<int> reached_;
};

// Vertices within `radius` hops of X. Empty X or negative radius give the
// empty set.
VertexSet ball(const Graph& g, const VertexSet& x, int radius);

// True iff all distinct members of X are at mutual distance > r.
bool is_r_independent(const Graph& g, const VertexSet& x, int r);

// Evidence that some short path between two distinct members of Y passes
// through Q, or nullopt. Deterministic: smallest q first, then nearest
// endpoints by (distance, id).
std::optional<CaptureEvidence> captures_set(const Graph& g, const VertexSet& q,
                                            const VertexSet& y, int r);

// Evidence that a connects to some member of X by a walk of length <= r
// through Q. Degenerate walks (a == x, q == a) count.
std::optional<CaptureEvidence> captures_pair(const Graph& g, const VertexSet& q,
                                             const VertexSet& x, int a, int r);

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);

} // namespace rindep
