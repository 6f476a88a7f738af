#pragma once

#include <cstdint>
#include <string>

#include "rindep/graph.hpp"

namespace rindep {

// Deterministic graph families, selectable from a compact spec string:
//   path:N  cycle:N  grid:R:C  star:LEAVES  clique:N
//   tree:n=N,seed=S  rbd:n=N,d=D,seed=S  subdiv:<base spec>:r=R
// Same spec always yields the same graph.
struct FamilySpec {
    enum class Kind { Path, Cycle, Grid, Star, Clique, Tree, RandomBoundedDegree, Subdivision };
    Kind kind;
    int n = 0;
    int rows = 0, cols = 0;
    int degree = 0;
    int subdivision_r = 0;
    std::uint64_t seed = 0;
    std::string base; // inner spec for subdivisions
    std::string text; // the original spec string
};

FamilySpec parse_family_spec(const std::string& spec, std::uint64_t default_seed = 0);
Graph generate(const FamilySpec& spec);
Graph generate(const std::string& spec, std::uint64_t default_seed = 0);

// Replaces every edge by a path with r interior vertices (length r+1).
// Original vertices keep their ids; interior vertices are appended in edge
// order, so distances between original vertices scale by exactly r+1.
Graph subdivide(const Graph& g, int r);

} // namespace rindep
