#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rindep/graph.hpp"
#include "rindep/vertex_set.hpp"

namespace rindep::oracle {

// Hard limits for the exhaustive reference implementations. Exceeding a
// budget raises BudgetExceeded; the oracles never truncate silently.
struct Budget {
    int max_vertices = 18;
    long long max_subsets = 10'000'000;
};

// Dense all-pairs hop distances via Floyd-Warshall, kept independent of the
// BFS code the oracles are used to validate. Unreachable pairs get kInfinity.
inline constexpr int kInfinity = 1 << 28;
std::vector<std::vector<int>> all_pairs_distances(const Graph& g);

// Lexicographically first r-independent k-subset, or nullopt.
std::optional<VertexSet> brute_independent(const Graph& g, int r, int k,
                                           const Budget& budget = {});

// Lexicographically first k-subset not captured by Q, or nullopt when Q is a
// witness.
std::optional<VertexSet> brute_check_witness(const Graph& g, const VertexSet& q, int r,
                                             int k, const Budget& budget = {});

// First (X, a) violating the cowitness condition for (A, g), enumerating X by
// size then lexicographically, or nullopt when Q is a cowitness.
std::optional<std::pair<VertexSet, int>> brute_check_cowitness(const Graph& g,
                                                               const VertexSet& a,
                                                               const VertexSet& q, int r,
                                                               int k,
                                                               const Budget& budget = {});

// Size of the smallest cowitness for (A, g), by increasing-size enumeration
// of candidate sets. V(g) always qualifies, so this terminates.
int brute_min_cowitness_size(const Graph& g, const VertexSet& a, int r, int k,
                             const Budget& budget = {});

} // namespace rindep::oracle
