#include "rindep/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "rindep/errors.hpp"

namespace rindep {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
    if (n < 0) throw InputError("vertex count must be nonnegative");
    std::vector<std::pair<int, int>> clean;
    clean.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InputError("edge endpoint out of range: " + std::to_string(u) + " " +
                             std::to_string(v));
        if (u == v) continue;
        clean.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(clean.begin(), clean.end());
    clean.erase(std::unique(clean.begin(), clean.end()), clean.end());
    m_ = static_cast<int>(clean.size());

    std::vector<int> deg(n, 0);
    for (auto [u, v] : clean) {
        ++deg[u];
        ++deg[v];
    }
    offsets_.assign(n + 1, 0);
    for (int v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
    neighbors_.resize(2 * static_cast<size_t>(m_));
    std::vector<int> cursor(offsets_.begin(), offsets_.end() - 1);
    for (auto [u, v] : clean) {
        neighbors_[cursor[u]++] = v;
        neighbors_[cursor[v]++] = u;
    }
    for (int v = 0; v < n; ++v)
        std::sort(neighbors_.begin() + offsets_[v], neighbors_.begin() + offsets_[v + 1]);
}

bool Graph::has_edge(int u, int v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

VertexSet Graph::all_vertices() const {
    std::vector<int> ids(n_);
    for (int v = 0; v < n_; ++v) ids[v] = v;
    return VertexSet::from_sorted(std::move(ids));
}

BfsResult bounded_bfs(const Graph& g, int source, int radius) {
    if (source < 0 || source >= g.vertex_count())
        throw InputError("bfs source out of range: " + std::to_string(source));
    if (radius < 0) throw InputError("bfs radius must be nonnegative");

    BfsResult res;
    res.dist.assign(g.vertex_count(), -1);
    res.dist[source] = 0;
    res.reached.push_back(source);
    size_t head = 0;
    while (head < res.reached.size()) {
        int v = res.reached[head++];
        if (res.dist[v] == radius) continue;
        for (int w : g.neighbors(v)) {
            if (res.dist[w] < 0) {
                res.dist[w] = res.dist[v] + 1;
                res.reached.push_back(w);
            }
        }
    }
    return res;
}

MultiSourceBfs multi_source_bfs(const Graph& g, const VertexSet& sources, int radius) {
    MultiSourceBfs res;
    res.dist.assign(g.vertex_count(), -1);
    res.nearest_source.assign(g.vertex_count(), -1);
    if (radius < 0) return res;
    for (int s : sources) {
        if (s < 0 || s >= g.vertex_count())
            throw InputError("bfs source out of range: " + std::to_string(s));
        res.dist[s] = 0;
        res.nearest_source[s] = s;
        res.reached.push_back(s);
    }
    size_t head = 0;
    while (head < res.reached.size()) {
        int v = res.reached[head++];
        if (res.dist[v] == radius) continue;
        for (int w : g.neighbors(v)) {
            if (res.dist[w] < 0) {
                res.dist[w] = res.dist[v] + 1;
                res.nearest_source[w] = res.nearest_source[v];
                res.reached.push_back(w);
            }
        }
    }
    return res;
}

std::span<const int> BfsWorkspace::bounded(const Graph& g, int source, int radius) {
    if (source < 0 || source >= g.vertex_count())
        throw InputError("bfs source out of range: " + std::to_string(source));
    dist_.assign(g.vertex_count(), -1);
    reached_.clear();
    if (radius < 0) return dist_;
    dist_[source] = 0;
    reached_.push_back(source);
    size_t head = 0;
    while (head < reached_.size()) {
        int v = reached_[head++];
        if (dist_[v] == radius) continue;
        for (int w : g.neighbors(v)) {
            if (dist_[w] < 0) {
                dist_[w] = dist_[v] + 1;
                reached_.push_back(w);
            }
        }
    }
    return dist_;
}

std::span<const int> BfsWorkspace::multi_source(const Graph& g,
                                                std::span<const int> sources,
                                                int radius) {
    dist_.assign(g.vertex_count(), -1);
    reached_.clear();
    if (radius < 0) return dist_;
    for (int s : sources) {
        if (s < 0 || s >= g.vertex_count())
            throw InputError("bfs source out of range: " + std::to_string(s));
        dist_[s] = 0;
        reached_.push_back(s);
    }
    size_t head = 0;
    while (head < reached_.size()) {
        int v = reached_[head++];
        if (dist_[v] == radius) continue;
        for (int w : g.neighbors(v)) {
            if (dist_[w] < 0) {
                dist_[w] = dist_[v] + 1;
                reached_.push_back(w);
            }
        }
    }
    return dist_;
}

VertexSet ball(const Graph& g, const VertexSet& x, int radius) {
    if (radius < 0 || x.empty()) return {};
    auto bfs = multi_source_bfs(g, x, radius);
    return VertexSet(std::move(bfs.reached));
}

bool is_r_independent(const Graph& g, const VertexSet& x, int r) {
    if (x.size() <= 1) return true;
    for (int v : x) {
        auto bfs = bounded_bfs(g, v, r);
        for (int u : x)
            if (u != v && bfs.dist_of(u) >= 0) return false;
    }
    return true;
}

std::optional<CaptureEvidence> captures_set(const Graph& g, const VertexSet& q,
                                            const VertexSet& y, int r) {
    for (int qv : q) {
        auto bfs = bounded_bfs(g, qv, r);
        // two nearest distinct members of Y, ordered by (distance, id)
        int best1 = -1, best2 = -1;
        for (int yv : y) {
            int d = bfs.dist_of(yv);
            if (d < 0) continue;
            if (best1 < 0 || d < bfs.dist_of(best1)) {
                best2 = best1;
                best1 = yv;
            } else if (best2 < 0 || d < bfs.dist_of(best2)) {
                best2 = yv;
            }
        }
        if (best2 >= 0) {
            int len = bfs.dist_of(best1) + bfs.dist_of(best2);
            if (len <= r) return CaptureEvidence{qv, best1, best2, len};
        }
    }
    return std::nullopt;
}

std::optional<CaptureEvidence> captures_pair(const Graph& g, const VertexSet& q,
                                             const VertexSet& x, int a, int r) {
    if (a < 0 || a >= g.vertex_count())
        throw InputError("pair vertex out of range: " + std::to_string(a));
    if (q.empty() || x.empty() || r < 0) return std::nullopt;
    auto from_a = bounded_bfs(g, a, r);
    auto from_x = multi_source_bfs(g, x, r);
    for (int qv : q) {
        int da = from_a.dist_of(qv);
        int dx = from_x.dist[qv];
        if (da >= 0 && dx >= 0 && da + dx <= r)
            return CaptureEvidence{qv, a, from_x.nearest_source[qv], da + dx};
    }
    return std::nullopt;
}

int InducedSubgraph::to_local(int original) const {
    auto it = std::lower_bound(to_original.begin(), to_original.end(), original);
    if (it == to_original.end() || *it != original) return -1;
    return static_cast<int>(it - to_original.begin());
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
    InducedSubgraph out;
    out.to_original = keep.ids();
    std::vector<std::pair<int, int>> edges;
    for (int lu = 0; lu < keep.size(); ++lu) {
        int u = keep[lu];
        if (u < 0 || u >= g.vertex_count())
            throw InputError("induced vertex out of range: " + std::to_string(u));
        for (int v : g.neighbors(u)) {
            if (v <= u) continue;
            int lv = out.to_local(v);
            if (lv >= 0) edges.emplace_back(lu, lv);
        }
    }
    out.graph = Graph(keep.size(), edges);
    return out;
}

} // namespace rindep
