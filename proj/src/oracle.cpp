#include "rindep/oracle.hpp"

#include <algorithm>
#include <string>

#include "rindep/errors.hpp"

namespace rindep::oracle {

namespace {

void check_vertices(const Graph& g, const Budget& budget) {
    if (g.vertex_count() > budget.max_vertices)
        throw BudgetExceeded("oracle vertex budget exceeded: " +
                             std::to_string(g.vertex_count()) + " > " +
                             std::to_string(budget.max_vertices));
}

struct SubsetMeter {
    long long used = 0;
    long long cap;

    explicit SubsetMeter(const Budget& b) : cap(b.max_subsets) {}
    void tick() {
        if (++used > cap)
            throw BudgetExceeded("oracle subset budget exceeded: " + std::to_string(cap));
    }
};

// Enumerates k-subsets of 0..n-1 in lexicographic order; `fn` returns true to
// stop. Returns whether a subset was accepted.
template <typename Fn>
bool for_each_subset(int n, int k, SubsetMeter& meter, Fn&& fn) {
    if (k < 0 || k > n) return false;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        meter.tick();
        if (fn(idx)) return true;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

using DistTable = std::vector<std::vector<int>>;

bool pair_in_distance(const DistTable& d, const std::vector<int>& xs, int r) {
    for (size_t i = 0; i < xs.size(); ++i)
        for (size_t j = i + 1; j < xs.size(); ++j)
            if (d[xs[i]][xs[j]] <= r) return true;
    return false;
}

bool set_captured(const DistTable& d, const VertexSet& q, const std::vector<int>& xs,
                  int r) {
    for (int qv : q)
        for (size_t i = 0; i < xs.size(); ++i)
            for (size_t j = i + 1; j < xs.size(); ++j)
                if (d[xs[i]][qv] + d[qv][xs[j]] <= r) return true;
    return false;
}

bool pair_captured(const DistTable& d, const VertexSet& q, const std::vector<int>& xs,
                   int a, int r) {
    for (int qv : q)
        for (int x : xs)
            if (d[a][qv] + d[qv][x] <= r) return true;
    return false;
}

bool dominates(const DistTable& d, const std::vector<int>& xs, const VertexSet& a, int r) {
    for (int av : a) {
        bool hit = false;
        for (int x : xs)
            if (d[av][x] <= r) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

// Shared core of the cowitness checks: first (X, a) counterexample against a
// fixed candidate Q, or nullopt.
std::optional<std::pair<VertexSet, int>> cowitness_counterexample(
    const DistTable& d, const VertexSet& a, const std::vector<int>& q_ids, int r, int k,
    SubsetMeter& meter) {
    VertexSet q(q_ids);
    std::optional<std::pair<VertexSet, int>> found;
    for (int size = 0; size <= std::min(k, a.size()) && !found; ++size) {
        for_each_subset(a.size(), size, meter, [&](const std::vector<int>& idx) {
            std::vector<int> xs;
            xs.reserve(idx.size());
            for (int i : idx) xs.push_back(a[i]);
            if (!dominates(d, xs, a, r)) return false;
            for (int av : a) {
                if (!pair_captured(d, q, xs, av, r)) {
                    found = {VertexSet(xs), av};
                    return true;
                }
            }
            return false;
        });
    }
    return found;
}

} // namespace

DistTable all_pairs_distances(const Graph& g) {
    int n = g.vertex_count();
    DistTable d(n, std::vector<int>(n, kInfinity));
    for (int v = 0; v < n; ++v) {
        d[v][v] = 0;
        for (int w : g.neighbors(v)) d[v][w] = 1;
    }
    for (int m = 0; m < n; ++m)
        for (int u = 0; u < n; ++u) {
            if (d[u][m] >= kInfinity) continue;
            for (int v = 0; v < n; ++v)
                d[u][v] = std::min(d[u][v], d[u][m] + d[m][v]);
        }
    return d;
}

std::optional<VertexSet> brute_independent(const Graph& g, int r, int k,
                                           const Budget& budget) {
    check_vertices(g, budget);
    auto d = all_pairs_distances(g);
    SubsetMeter meter(budget);
    std::optional<VertexSet> found;
    for_each_subset(g.vertex_count(), k, meter, [&](const std::vector<int>& xs) {
        if (pair_in_distance(d, xs, r)) return false;
        found = VertexSet(xs);
        return true;
    });
    return found;
}

std::optional<VertexSet> brute_check_witness(const Graph& g, const VertexSet& q, int r,
                                             int k, const Budget& budget) {
    check_vertices(g, budget);
    auto d = all_pairs_distances(g);
    SubsetMeter meter(budget);
    std::optional<VertexSet> found;
    for_each_subset(g.vertex_count(), k, meter, [&](const std::vector<int>& xs) {
        if (set_captured(d, q, xs, r)) return false;
        found = VertexSet(xs);
        return true;
    });
    return found;
}

std::optional<std::pair<VertexSet, int>> brute_check_cowitness(const Graph& g,
                                                               const VertexSet& a,
                                                               const VertexSet& q, int r,
                                                               int k,
                                                               const Budget& budget) {
    check_vertices(g, budget);
    auto d = all_pairs_distances(g);
    SubsetMeter meter(budget);
    return cowitness_counterexample(d, a, q.ids(), r, k, meter);
}

int brute_min_cowitness_size(const Graph& g, const VertexSet& a, int r, int k,
                             const Budget& budget) {
    check_vertices(g, budget);
    auto d = all_pairs_distances(g);
    SubsetMeter meter(budget);
    int n = g.vertex_count();
    for (int size = 0; size <= n; ++size) {
        int best = -1;
        for_each_subset(n, size, meter, [&](const std::vector<int>& q_ids) {
            if (cowitness_counterexample(d, a, q_ids, r, k, meter)) return false;
            best = size;
            return true;
        });
        if (best >= 0) return best;
    }
    throw InternalInvariantError("full vertex set failed as a cowitness");
}

} // namespace rindep::oracle
