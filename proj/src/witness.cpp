#include "rindep/witness.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "rindep/errors.hpp"

namespace rindep {

namespace {

// A multiset of chosen profile classes is captured iff at some q-coordinate
// the two smallest chosen values sum to <= r. Duplicated classes supply both
// values themselves.
bool multiset_captured(const std::vector<const std::vector<int>*>& chosen, int q_len,
                       int r) {
    for (int j = 0; j < q_len; ++j) {
        int best1 = -1, best2 = -1;
        for (const auto* values : chosen) {
            int d = (*values)[j];
            if (best1 < 0 || d < best1) {
                best2 = best1;
                best1 = d;
            } else if (best2 < 0 || d < best2) {
                best2 = d;
            }
        }
        if (best2 >= 0 && best1 + best2 <= r) return true;
    }
    return false;
}

// Lexicographic enumeration of size-k multisets over classes 0..c-1 with
// per-class multiplicity caps; `fn` returns true to stop.
template <typename Fn>
void for_each_multiset(int classes, int k, const std::vector<int>& caps, Fn&& fn) {
    std::vector<int> pick;
    pick.reserve(k);
    auto rec = [&](auto&& self, int from) -> bool {
        if (static_cast<int>(pick.size()) == k) return fn(pick);
        for (int c = from; c < classes; ++c) {
            int used = 0;
            for (int i = static_cast<int>(pick.size()) - 1; i >= 0 && pick[i] == c; --i)
                ++used;
            if (used >= caps[c]) continue;
            pick.push_back(c);
            if (self(self, c)) return true;
            pick.pop_back();
        }
        return false;
    };
    rec(rec, 0);
}

} // namespace

WitnessCheckResult check_witness(const Graph& g, const VertexSet& q, int r, int k) {
    if (k < 1) throw InputError("witness check needs k >= 1");
    for (int v : q)
        if (v < 0 || v >= g.vertex_count())
            throw InputError("witness vertex out of range: " + std::to_string(v));

    WitnessCheckResult res;
    if (k > g.vertex_count()) { // no k-subset exists
        res.is_witness = true;
        return res;
    }

    auto table = all_profiles(g, q, r);
    std::map<std::vector<int>, std::vector<int>> classes; // values -> vertices asc
    for (int v = 0; v < g.vertex_count(); ++v) classes[table.row(v)].push_back(v);
    res.distinct_profiles = static_cast<int>(classes.size());

    std::vector<const std::vector<int>*> class_values;
    std::vector<const std::vector<int>*> class_members;
    std::vector<int> caps;
    for (const auto& [values, members] : classes) {
        class_values.push_back(&values);
        class_members.push_back(&members);
        caps.push_back(std::min<int>(static_cast<int>(members.size()), k));
    }

    bool found = false;
    for_each_multiset(static_cast<int>(classes.size()), k, caps,
                      [&](const std::vector<int>& pick) {
                          std::vector<const std::vector<int>*> chosen;
                          chosen.reserve(k);
                          for (int c : pick) chosen.push_back(class_values[c]);
                          if (multiset_captured(chosen, q.size(), r)) return false;
                          std::vector<int> xs;
                          for (size_t i = 0; i < pick.size();) {
                              size_t j = i;
                              while (j < pick.size() && pick[j] == pick[i]) ++j;
                              const auto& members = *class_members[pick[i]];
                              for (size_t m = 0; m < j - i; ++m)
                                  xs.push_back(members[m]);
                              i = j;
                          }
                          res.uncaptured = VertexSet(std::move(xs));
                          for (const auto* values : chosen)
                              res.profile_multiset.push_back(*values);
                          found = true;
                          return true;
                      });
    res.is_witness = !found;
    return res;
}

int conflict_count(const Graph& g, const VertexSet& x, int r) {
    int count = 0;
    for (int w : x) {
        auto bfs = bounded_bfs(g, w, r);
        for (int v : x)
            if (v != w && bfs.dist_of(v) >= 0) {
                ++count;
                break;
            }
    }
    return count;
}

VertexSet refine_to_independent(const Graph& g, const VertexSet& q, VertexSet x, int r,
                                int k, RefineStats* stats) {
    if (x.size() != k) throw InputError("refinement needs |X| = k");
    if (auto ev = captures_set(g, q, x, r))
        throw PromiseViolation(x.ids(), ev->through,
                               "refinement was handed a set already captured by Q");
    BfsWorkspace ws;
    std::vector<int> ids = x.ids(); // kept sorted, edited in place
    int previous = -1;
    while (true) {
        // Conflict count and its smallest-id member in one pass.
        int f = 0, w = -1;
        for (int cand : ids) {
            auto dist = ws.bounded(g, cand, r);
            for (int v : ids)
                if (v != cand && dist[v] >= 0) {
                    ++f;
                    if (w < 0) w = cand;
                    break;
                }
        }
        if (stats) stats->conflict_trace.push_back(f);
        if (previous >= 0 && f >= previous)
            throw InternalInvariantError("refinement conflict count failed to decrease");
        previous = f;
        if (f == 0) return VertexSet::from_sorted(std::move(ids));
        if (stats) ++stats->iterations;

        ids.erase(std::find(ids.begin(), ids.end(), w));
        auto dist = ws.multi_source(g, ids, r);
        int replacement = -1;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (dist[v] < 0) {
                replacement = v;
                break;
            }
        if (replacement < 0) {
            ids.insert(std::lower_bound(ids.begin(), ids.end(), w), w);
            throw PromiseViolation(
                std::move(ids), w,
                "refinement found ball(X - {w}, r) = V(g); the supplied set was not a "
                "cowitness");
        }
        ids.insert(std::lower_bound(ids.begin(), ids.end(), replacement), replacement);
    }
}

} // namespace rindep
