#pragma once

#include <random>
#include <vector>

#include "rindep/generators.hpp"
#include "rindep/graph.hpp"
#include "rindep/vertex_set.hpp"

namespace testsupport {

using rindep::Graph;
using rindep::VertexSet;

// Seeded Erdos-Renyi style graph for property tests.
inline Graph random_graph(std::mt19937_64& rng, int n, double edge_prob) {
    std::bernoulli_distribution flip(edge_prob);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (flip(rng)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

inline VertexSet random_subset(std::mt19937_64& rng, int n, double member_prob) {
    std::bernoulli_distribution flip(member_prob);
    std::vector<int> ids;
    for (int v = 0; v < n; ++v)
        if (flip(rng)) ids.push_back(v);
    return VertexSet::from_sorted(std::move(ids));
}

// The desk-scale graphs most tests sweep over.
inline std::vector<Graph> small_corpus() {
    std::vector<Graph> out;
    for (int n : {1, 2, 4, 5, 7}) out.push_back(rindep::generate("path:" + std::to_string(n)));
    for (int n : {3, 5, 6, 8}) out.push_back(rindep::generate("cycle:" + std::to_string(n)));
    out.push_back(rindep::generate("grid:2:3"));
    out.push_back(rindep::generate("grid:3:3"));
    out.push_back(rindep::generate("star:4"));
    out.push_back(rindep::generate("star:7"));
    out.push_back(rindep::generate("clique:4"));
    out.push_back(rindep::generate("tree:n=9,seed=5"));
    out.push_back(rindep::generate("rbd:n=10,d=3,seed=11"));
    out.push_back(rindep::generate("subdiv:clique:4:r=1"));
    return out;
}

} // namespace testsupport
