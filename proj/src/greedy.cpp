#include "rindep/greedy.hpp"

#include <string>

#include "rindep/errors.hpp"

namespace rindep {

GreedyOutcome greedy_dichotomy(const Graph& g, const VertexSet& x, int r, int k) {
    if (r < 0 || k < 0) throw InputError("greedy parameters must be nonnegative");
    for (int v : x)
        if (v < 0 || v >= g.vertex_count())
            throw InputError("greedy target vertex out of range: " + std::to_string(v));

    std::vector<char> covered(g.vertex_count(), 0);
    std::vector<int> picked;
    int scan = 0; // coverage only grows, so the scan never moves backwards
    while (true) {
        while (scan < x.size() && covered[x[scan]]) ++scan;
        if (scan == x.size())
            return {GreedyOutcome::Tag::Cover, VertexSet(std::move(picked))};
        int v = x[scan];
        picked.push_back(v);
        if (static_cast<int>(picked.size()) == k + 1)
            return {GreedyOutcome::Tag::Independent, VertexSet(std::move(picked))};
        for (int w : bounded_bfs(g, v, 2 * r).reached) covered[w] = 1;
    }
}

} // namespace rindep
