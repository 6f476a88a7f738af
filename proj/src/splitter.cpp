#include "rindep/splitter.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

#include "rindep/errors.hpp"

namespace rindep {

namespace {

// Max distance to any reachable vertex.
int eccentricity(const Graph& g, int v) {
    int ecc = 0;
    auto bfs = bounded_bfs(g, v, g.vertex_count());
    for (int w : bfs.reached) ecc = std::max(ecc, bfs.dist_of(w));
    return ecc;
}

int max_eccentricity_vertex(const Graph& g) {
    int best = 0, best_ecc = -1;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int e = eccentricity(g, v);
        if (e > best_ecc) {
            best_ecc = e;
            best = v;
        }
    }
    return best;
}

constexpr int kExhaustiveLimit = 20;

// Minimax over connector moves against a fixed splitter strategy. Arenas are
// vertex subsets of the starting graph, memoized as bitmasks.
struct WorstCaseConnector {
    const Graph& g;
    int radius;
    SplitterStrategy strategy;
    std::unordered_map<std::uint64_t, std::pair<int, int>> memo; // mask -> depth, move

    std::pair<int, int> solve(std::uint64_t mask) {
        if (mask == 0) return {0, -1};
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;

        std::vector<int> verts;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (mask >> v & 1) verts.push_back(v);
        auto sub = induced_subgraph(g, VertexSet::from_sorted(verts));

        int best_depth = -1, best_move = -1;
        for (int lv = 0; lv < static_cast<int>(verts.size()); ++lv) {
            int w_local = splitter_respond(strategy, sub.graph, lv, radius);
            std::uint64_t next = 0;
            for (int u : bounded_bfs(sub.graph, lv, radius).reached)
                if (u != w_local) next |= std::uint64_t{1} << sub.to_original[u];
            int depth = 1 + solve(next).first;
            if (depth > best_depth) {
                best_depth = depth;
                best_move = verts[lv];
            }
        }
        memo[mask] = {best_depth, best_move};
        return {best_depth, best_move};
    }
};

} // namespace

SplitterStrategy parse_splitter_strategy(const std::string& name) {
    if (name == "connector-echo") return SplitterStrategy::ConnectorEcho;
    if (name == "max-degree") return SplitterStrategy::MaxDegree;
    if (name == "bfs-center") return SplitterStrategy::BfsCenter;
    throw InputError("unknown splitter strategy '" + name + "'");
}

std::string to_string(SplitterStrategy s) {
    switch (s) {
        case SplitterStrategy::ConnectorEcho: return "connector-echo";
        case SplitterStrategy::MaxDegree: return "max-degree";
        case SplitterStrategy::BfsCenter: return "bfs-center";
    }
    return "?";
}

int splitter_respond(SplitterStrategy strategy, const Graph& arena, int v, int radius) {
    if (v < 0 || v >= arena.vertex_count())
        throw InputError("connector vertex out of range: " + std::to_string(v));
    if (strategy == SplitterStrategy::ConnectorEcho) return v;

    VertexSet reach = ball(arena, {v}, radius);
    if (strategy == SplitterStrategy::MaxDegree) {
        int best = v, best_deg = -1;
        for (int u : reach)
            if (arena.degree(u) > best_deg) {
                best_deg = arena.degree(u);
                best = u;
            }
        return best;
    }

    // BfsCenter: minimize eccentricity inside the ball's induced subgraph.
    auto sub = induced_subgraph(arena, reach);
    int best = -1, best_ecc = arena.vertex_count() + 1;
    for (int lu = 0; lu < sub.graph.vertex_count(); ++lu) {
        int e = eccentricity(sub.graph, lu);
        if (e < best_ecc) {
            best_ecc = e;
            best = sub.to_original[lu];
        }
    }
    return best;
}

SplitterTrace play_splitter_game(const Graph& g, int radius, SplitterStrategy strategy,
                                 const ConnectorPolicy& connector) {
    if (g.vertex_count() == 0) throw InputError("splitter game needs a nonempty graph");
    if (radius < 0) throw InputError("splitter radius must be nonnegative");

    SplitterTrace trace;
    trace.radius = radius;

    std::mt19937_64 rng(connector.seed);
    WorstCaseConnector worst{g, radius, strategy, {}};
    if (connector.kind == ConnectorPolicy::Kind::ExhaustiveWorst &&
        g.vertex_count() > kExhaustiveLimit)
        throw InputError("exhaustive-worst connector supports at most " +
                         std::to_string(kExhaustiveLimit) + " vertices");

    Graph arena = g;
    std::vector<int> to_orig(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) to_orig[v] = v;

    while (arena.vertex_count() > 0) {
        int v_local = 0;
        switch (connector.kind) {
            case ConnectorPolicy::Kind::RandomSeeded: {
                std::uniform_int_distribution<int> pick(0, arena.vertex_count() - 1);
                v_local = pick(rng);
                break;
            }
            case ConnectorPolicy::Kind::MaxEccentricity:
                v_local = max_eccentricity_vertex(arena);
                break;
            case ConnectorPolicy::Kind::ExhaustiveWorst: {
                std::uint64_t mask = 0;
                for (int u : to_orig) mask |= std::uint64_t{1} << u;
                int move = worst.solve(mask).second;
                v_local = static_cast<int>(
                    std::lower_bound(to_orig.begin(), to_orig.end(), move) -
                    to_orig.begin());
                break;
            }
        }
        int w_local = splitter_respond(strategy, arena, v_local, radius);

        std::vector<int> next;
        for (int u : bounded_bfs(arena, v_local, radius).reached)
            if (u != w_local) next.push_back(u);
        std::sort(next.begin(), next.end());
        auto sub = induced_subgraph(arena, VertexSet::from_sorted(next));

        trace.rounds.push_back(SplitterRound{to_orig[v_local], to_orig[w_local],
                                             sub.graph.vertex_count()});
        std::vector<int> new_orig(sub.graph.vertex_count());
        for (int u = 0; u < sub.graph.vertex_count(); ++u)
            new_orig[u] = to_orig[sub.to_original[u]];
        arena = std::move(sub.graph);
        to_orig = std::move(new_orig);
    }
    return trace;
}

} // namespace rindep
