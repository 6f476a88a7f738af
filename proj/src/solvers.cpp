#include "rindep/solvers.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <map>

#include "rindep/errors.hpp"
#include "rindep/profiles.hpp"
#include "rindep/witness.hpp"

namespace rindep {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Bitset over ladder rows; row counts are unbounded on adversarial inputs.
struct RowMask {
    std::vector<std::uint64_t> blocks;

    explicit RowMask(size_t rows = 0) : blocks((rows + 63) / 64, 0) {}
    void set(size_t i) { blocks[i / 64] |= std::uint64_t{1} << (i % 64); }
    bool any() const {
        for (auto b : blocks)
            if (b) return true;
        return false;
    }
    void merge(const RowMask& other) {
        for (size_t i = 0; i < blocks.size(); ++i) blocks[i] |= other.blocks[i];
    }
    bool covers(const RowMask& full) const {
        for (size_t i = 0; i < blocks.size(); ++i)
            if ((blocks[i] & full.blocks[i]) != full.blocks[i]) return false;
        return true;
    }
    int gain_over(const RowMask& covered) const {
        int g = 0;
        for (size_t i = 0; i < blocks.size(); ++i)
            g += std::popcount(blocks[i] & ~covered.blocks[i]);
        return g;
    }
};

// Captures row X iff some pair of row members' profile entries sums to <= r.
bool profile_captures_row(const std::vector<int>& values, const std::vector<int>& row_idx,
                          int r) {
    for (size_t i = 0; i < row_idx.size(); ++i)
        for (size_t j = i + 1; j < row_idx.size(); ++j)
            if (values[row_idx[i]] + values[row_idx[j]] <= r) return true;
    return false;
}

// First subset of exactly `size` classes (lexicographic over class order)
// whose masks jointly cover `full`.
std::optional<std::vector<int>> cover_of_size(const std::vector<RowMask>& masks,
                                              const RowMask& full, int size) {
    int n = static_cast<int>(masks.size());
    std::vector<int> idx;
    std::optional<std::vector<int>> found;
    auto rec = [&](auto&& self, int from, const RowMask& covered) -> bool {
        if (static_cast<int>(idx.size()) == size) {
            if (!covered.covers(full)) return false;
            found = idx;
            return true;
        }
        int slack = size - static_cast<int>(idx.size());
        for (int c = from; c + slack <= n; ++c) {
            idx.push_back(c);
            RowMask next = covered;
            next.merge(masks[c]);
            if (self(self, c + 1, next)) return true;
            idx.pop_back();
        }
        return false;
    };
    rec(rec, 0, RowMask(full.blocks.size() * 64));
    return found;
}

} // namespace

YStepResult y_step(const Graph& g, const std::vector<VertexSet>& xs, int r,
                   int exact_cover_budget) {
    YStepResult res;
    for (const auto& row : xs)
        if (is_r_independent(g, row, r)) {
            res.independent_row = row;
            return res;
        }

    VertexSet w;
    for (const auto& row : xs) w = w.unioned(row);
    auto table = all_profiles(g, w, r);

    std::vector<std::vector<int>> row_idx(xs.size());
    for (size_t i = 0; i < xs.size(); ++i)
        for (int v : xs[i]) {
            auto it = std::lower_bound(w.begin(), w.end(), v);
            row_idx[i].push_back(static_cast<int>(it - w.begin()));
        }

    // Distinct realized profiles in canonical order, each with its capture
    // mask and smallest realizing vertex. Profiles capturing no row cannot
    // help a cover and are dropped up front.
    std::map<std::vector<int>, int> representative;
    for (int v = 0; v < g.vertex_count(); ++v)
        representative.try_emplace(table.row(v), v);
    res.distinct_profiles = static_cast<int>(representative.size());

    std::vector<RowMask> masks;
    std::vector<int> reps;
    for (const auto& [values, rep] : representative) {
        RowMask mask(xs.size());
        for (size_t i = 0; i < xs.size(); ++i)
            if (profile_captures_row(values, row_idx[i], r)) mask.set(i);
        if (mask.any()) {
            masks.push_back(std::move(mask));
            reps.push_back(rep);
        }
    }
    RowMask full(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) full.set(i);

    std::vector<int> chosen;
    if (static_cast<int>(masks.size()) <= exact_cover_budget) {
        for (int size = 1; size <= static_cast<int>(masks.size()) && chosen.empty();
             ++size)
            if (auto cover = cover_of_size(masks, full, size)) chosen = *cover;
        if (chosen.empty() && !xs.empty())
            throw InternalInvariantError(
                "no profile cover exists although every row is conflicted");
    } else {
        res.exact_cover = false;
        RowMask covered(xs.size());
        while (!covered.covers(full)) {
            int best = -1, best_gain = 0;
            for (int c = 0; c < static_cast<int>(masks.size()); ++c) {
                int gain = masks[c].gain_over(covered);
                if (gain > best_gain) {
                    best_gain = gain;
                    best = c;
                }
            }
            if (best < 0)
                throw InternalInvariantError(
                    "no profile cover exists although every row is conflicted");
            covered.merge(masks[best]);
            chosen.push_back(best);
        }
    }

    std::vector<int> picks;
    picks.reserve(chosen.size());
    for (int c : chosen) picks.push_back(reps[c]);
    res.witness = VertexSet(std::move(picks));
    return res;
}

XStepResult x_step(const Graph& g, const VertexSet& a, int r, int k) {
    auto check = check_witness(g, a, r, k);
    XStepResult res;
    res.distinct_profiles = check.distinct_profiles;
    if (!check.is_witness) res.candidate = check.uncaptured;
    return res;
}

std::pair<SolveOutcome, LadderTranscript> solve_ladder(const Graph& g, int r, int k,
                                                       int exact_cover_budget) {
    if (r < 1 || k < 1) throw InputError("solver needs r >= 1 and k >= 1");
    auto start = Clock::now();

    SolveOutcome out;
    out.stats.algorithm = "ladder";
    LadderTranscript transcript;

    VertexSet accumulated;
    int round_cap = g.vertex_count() + 2;
    while (true) {
        if (out.stats.rounds >= round_cap)
            throw InternalInvariantError("ladder exceeded its round cap");
        ++out.stats.rounds;

        auto xs = x_step(g, accumulated, r, k);
        out.stats.distinct_profiles =
            std::max(out.stats.distinct_profiles, xs.distinct_profiles);
        if (!xs.candidate) {
            out.decision = Decision::NoSolution;
            out.set = accumulated;
            out.stats.witness_size = accumulated.size();
            break;
        }
        transcript.x_rows.push_back(*xs.candidate);

        auto ys = y_step(g, transcript.x_rows, r, exact_cover_budget);
        transcript.cover_non_minimal |= !ys.exact_cover;
        out.stats.distinct_profiles =
            std::max(out.stats.distinct_profiles, ys.distinct_profiles);
        if (ys.independent_row) {
            out.decision = Decision::Independent;
            out.set = *ys.independent_row;
            break;
        }
        transcript.y_rows.push_back(ys.witness);
        VertexSet grown = accumulated.unioned(ys.witness);
        if (grown == accumulated)
            throw InternalInvariantError("ladder accumulator failed to grow");
        accumulated = std::move(grown);
        transcript.accumulated.push_back(accumulated);
    }

    out.stats.cover_non_minimal = transcript.cover_non_minimal;
    out.stats.wall_ms = elapsed_ms(start);
    if (out.decision == Decision::Independent &&
        (!is_r_independent(g, out.set, r) || out.set.size() != k))
        throw InternalInvariantError("ladder produced an invalid independent set");
    return {std::move(out), std::move(transcript)};
}

SolveOutcome solve_direct(const Graph& g, int r, int k, SplitterStrategy strategy) {
    if (r < 1 || k < 1) throw InputError("solver needs r >= 1 and k >= 1");
    auto start = Clock::now();

    SolveOutcome out;
    out.stats.algorithm = "direct";

    CowitnessOptions opts;
    opts.strategy = strategy;
    auto cert = build_cowitness(g, g.all_vertices(), r, k - 1, opts);
    out.stats.cowitness_size = cert.q.size();
    out.stats.splitter_depth = cert.depth_reached;

    auto check = check_witness(g, cert.q, r, k);
    out.stats.distinct_profiles = check.distinct_profiles;
    if (check.is_witness) {
        out.decision = Decision::NoSolution;
        out.set = cert.q;
        out.stats.witness_size = cert.q.size();
    } else {
        RefineStats refine;
        out.set = refine_to_independent(g, cert.q, check.uncaptured, r, k, &refine);
        out.decision = Decision::Independent;
        out.stats.refine_iterations = refine.iterations;
        if (!is_r_independent(g, out.set, r) || out.set.size() != k)
            throw InternalInvariantError("refinement produced an invalid set");
    }
    out.stats.wall_ms = elapsed_ms(start);
    return out;
}

SolveOutcome solve_brute(const Graph& g, int r, int k, const oracle::Budget& budget) {
    if (r < 1 || k < 1) throw InputError("solver needs r >= 1 and k >= 1");
    auto start = Clock::now();

    SolveOutcome out;
    out.stats.algorithm = "brute";
    if (auto found = oracle::brute_independent(g, r, k, budget)) {
        out.decision = Decision::Independent;
        out.set = *found;
    } else {
        out.decision = Decision::NoSolution;
        out.set = g.all_vertices();
        out.stats.witness_size = out.set.size();
    }
    out.stats.wall_ms = elapsed_ms(start);
    return out;
}

} // namespace rindep
