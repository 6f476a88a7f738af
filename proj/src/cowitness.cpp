#include "rindep/cowitness.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <tuple>

#include "rindep/errors.hpp"
#include "rindep/greedy.hpp"
#include "rindep/profiles.hpp"

namespace rindep {

namespace {

// All recursion state lives in root-graph vertex ids; each call materializes
// its local graph from the root. Memo keys are the full (vertices, separator,
// target) triples; values carry the subtree depth so deduplicated branches
// still report it.
using MemoKey = std::tuple<std::vector<int>, std::vector<int>, std::vector<int>>;

struct Builder {
    const Graph& root;
    int r;
    int k;
    CowitnessOptions opt;
    int depth_guard;
    std::map<MemoKey, std::pair<VertexSet, int>> memo;
    long long branches = 0;
    std::vector<int> level_sizes;
    std::optional<VertexSet> early_independent;

    // Returns (Q, subtree depth), both in root ids.
    std::pair<VertexSet, int> build(const VertexSet& vertices, const VertexSet& s,
                                    const VertexSet& a, int level) {
        if (level > depth_guard)
            throw InputError(
                "cowitness recursion exceeded its depth guard; non-sparse input?");
        if (static_cast<int>(level_sizes.size()) <= level)
            level_sizes.resize(level + 1, 0);
        level_sizes[level] = std::max(level_sizes[level], s.size());

        if (vertices == s) return {s, 0}; // base case: nothing left outside S

        auto sub = induced_subgraph(root, vertices);
        const Graph& g = sub.graph;
        auto local = [&](const VertexSet& set) {
            std::vector<int> ids;
            ids.reserve(set.size());
            for (int v : set) {
                int lv = sub.to_local(v);
                if (lv >= 0) ids.push_back(lv);
            }
            return VertexSet::from_sorted(std::move(ids));
        };
        auto to_root = [&](const VertexSet& set) {
            std::vector<int> ids;
            ids.reserve(set.size());
            for (int lv : set) ids.push_back(sub.to_original[lv]);
            return VertexSet::from_sorted(std::move(ids));
        };

        VertexSet s_local = local(s);
        VertexSet a_local = local(a);
        auto g_prime = induced_subgraph(g, g.all_vertices().minus(s_local));
        auto lift = [&](int prime_id) { return g_prime.to_original[prime_id]; };

        // Split the target by profile on S and run the greedy dichotomy in G'
        // per realized profile; covered profiles contribute their cover to Z.
        auto profile_table = all_profiles(g, s_local, r);
        std::map<std::vector<int>, std::vector<int>> targets;
        for (int v : a_local.minus(s_local)) targets[profile_table.row(v)].push_back(v);

        std::vector<int> z_ids;
        for (auto& [profile_values, members] : targets) {
            std::vector<int> members_prime;
            members_prime.reserve(members.size());
            for (int v : members) members_prime.push_back(g_prime.to_local(v));
            auto outcome =
                greedy_dichotomy(g_prime.graph, VertexSet(std::move(members_prime)), r, k);
            if (outcome.independent()) {
                if (opt.early_independent && level == 0 && s.empty() &&
                    !early_independent) {
                    std::vector<int> ids;
                    for (int pv : outcome.set) ids.push_back(lift(pv));
                    early_independent = to_root(VertexSet(std::move(ids)));
                }
                continue; // uncovered profile
            }
            for (int pv : outcome.set) z_ids.push_back(lift(pv));
        }
        VertexSet z(std::move(z_ids));

        // Per-coordinate reach within r of each separator vertex, for the
        // A_{z,p} trace subtractions below.
        std::vector<BfsResult> sep_reach;
        sep_reach.reserve(s_local.size());
        for (int sv : s_local) sep_reach.push_back(bounded_bfs(g, sv, r));

        VertexSet q = s;
        int depth = 0;
        for (int zv : z) {
            int z_prime = g_prime.to_local(zv);
            int w = lift(splitter_respond(opt.strategy, g_prime.graph, z_prime, 3 * r));

            auto prime_ball = [&](int radius) {
                std::vector<int> ids;
                for (int pv : bounded_bfs(g_prime.graph, z_prime, radius).reached)
                    ids.push_back(lift(pv));
                return VertexSet(std::move(ids));
            };
            VertexSet gz_verts = to_root(prime_ball(3 * r).unioned(s_local));
            VertexSet s_child = to_root(s_local.with(w));
            VertexSet az = a_local.intersect(prime_ball(2 * r));

            // Distinct nonempty A_{z,p} = A_z - [r - p] over all profiles p
            // on S, folded one coordinate at a time with deduplication.
            std::set<VertexSet> partial{az};
            for (int i = 0; i < s_local.size(); ++i) {
                std::set<VertexSet> next;
                for (const auto& t : partial) {
                    for (int value = 0; value <= r + 1; ++value) {
                        int radius = r - value;
                        if (radius < 0) {
                            next.insert(t);
                            continue;
                        }
                        std::vector<int> kept;
                        for (int v : t) {
                            int d = sep_reach[i].dist_of(v);
                            if (d < 0 || d > radius) kept.push_back(v);
                        }
                        next.insert(VertexSet::from_sorted(std::move(kept)));
                    }
                }
                partial = std::move(next);
            }

            for (const auto& a_zp_local : partial) {
                if (a_zp_local.empty()) continue; // contributes only its separator
                VertexSet a_child = to_root(a_zp_local);
                ++branches;
                MemoKey key{gz_verts.ids(), s_child.ids(), a_child.ids()};
                std::pair<VertexSet, int> child;
                auto hit = opt.memoize ? memo.find(key) : memo.end();
                if (opt.memoize && hit != memo.end()) {
                    child = hit->second;
                } else {
                    child = build(gz_verts, s_child, a_child, level + 1);
                    if (opt.memoize) memo.emplace(std::move(key), child);
                }
                q = q.unioned(child.first);
                depth = std::max(depth, 1 + child.second);
            }
        }
        return {q, depth};
    }
};

// (d+s) * (k+1)^d * (r+1)^(2sd + d(d-1)), in long double to survive the
// exponents; the comparison only matters while the bound is near |V|.
long double size_bound(int r, int k, int d, int s) {
    return (static_cast<long double>(d) + s) *
           std::pow(static_cast<long double>(k) + 1, d) *
           std::pow(static_cast<long double>(r) + 1,
                    2.0L * s * d + static_cast<long double>(d) * (d - 1));
}

} // namespace

CowitnessCertificate build_cowitness_ext(const Graph& g, const VertexSet& s,
                                         const VertexSet& a, int r, int k,
                                         const CowitnessOptions& options) {
    if (r < 1 || k < 0) throw InputError("cowitness needs r >= 1 and k >= 0");
    for (int v : s)
        if (v < 0 || v >= g.vertex_count())
            throw InputError("separator vertex out of range: " + std::to_string(v));
    for (int v : a)
        if (v < 0 || v >= g.vertex_count())
            throw InputError("target vertex out of range: " + std::to_string(v));

    Builder builder{g,  r,  k, options,
                    options.depth_guard >= 0 ? options.depth_guard : g.vertex_count(),
                    {}, 0, {}, {}};
    auto [q, depth] = builder.build(g.all_vertices(), s, a, 0);

    CowitnessCertificate cert;
    cert.q = q;
    cert.depth_reached = depth;
    cert.branch_count = builder.branches;
    cert.level_separator_sizes = builder.level_sizes;
    cert.early_independent = builder.early_independent;

    if (!s.is_subset_of(cert.q))
        throw InternalInvariantError("cowitness lost its separator");
    if (static_cast<long double>(cert.q.size()) > size_bound(r, k, depth, s.size()))
        throw InternalInvariantError(
            "cowitness size bound violated: |Q|=" + std::to_string(cert.q.size()) +
            " depth=" + std::to_string(depth));
    return cert;
}

CowitnessCertificate build_cowitness(const Graph& g, const VertexSet& a, int r, int k,
                                     const CowitnessOptions& options) {
    return build_cowitness_ext(g, {}, a, r, k, options);
}

} // namespace rindep
