#pragma once

#include <cstdint>
#include <string>

#include "rindep/graph.hpp"
#include "rindep/vertex_set.hpp"

namespace rindep {

// One solver invocation as configured from the outside world. `input_name`
// is only echoed into the result record.
struct RunConfig {
    std::string input_name;
    int r = 1;
    int k = 1;
    std::string algorithm = "ladder"; // ladder | direct | brute
    std::string strategy = "bfs-center";
    std::uint64_t seed = 0;
    std::string verify = "fast"; // none | fast | oracle
};

// A finished run with both serializations baked in. The JSON layout is
// stable; see README for the published schemas.
struct RunRecord {
    enum class Kind { Independent, NoSolution, IsWitness, Uncaptured, Cowitness };
    Kind kind;
    VertexSet set; // independent set / witness / counterexample / cowitness
    double wall_ms = 0.0;
    std::string json;
    std::string plain;
};

// Solves, verifies per config.verify, and assembles the record. Verification
// mismatches raise InternalInvariantError; oracle verification on inputs
// beyond the default budget raises BudgetExceeded.
RunRecord run_solve(const Graph& g, const RunConfig& config);

RunRecord run_witness_check(const Graph& g, const VertexSet& q, const RunConfig& config);

RunRecord run_cowitness(const Graph& g, const RunConfig& config);

} // namespace rindep
