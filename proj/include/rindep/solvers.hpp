#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rindep/cowitness.hpp"
#include "rindep/graph.hpp"
#include "rindep/oracle.hpp"
#include "rindep/splitter.hpp"
#include "rindep/vertex_set.hpp"

namespace rindep {

enum class Decision { Independent, NoSolution };

struct SolveStats {
    std::string algorithm;
    int rounds = 0;            // ladder: completed candidate steps
    int witness_size = 0;      // size of the returned witness, 0 otherwise
    int cowitness_size = 0;    // direct: |Q|
    int splitter_depth = 0;    // direct: cowitness recursion depth
    int distinct_profiles = 0; // max distinct profile count seen in a check
    int refine_iterations = 0; // direct: conflict-reduction passes
    bool cover_non_minimal = false; // ladder: exact cover budget tripped
    double wall_ms = 0.0;
};

// Certified result: Independent carries an r-independent set of size k,
// NoSolution carries a witness that passed check_witness.
struct SolveOutcome {
    Decision decision;
    VertexSet set;
    SolveStats stats;
};

// Ordered record of the ladder rows. x_rows[i] has ladder index 2i+1,
// y_rows[j] index 2j+2; accumulated[j] is the union of the first j+1 y-rows.
struct LadderTranscript {
    std::vector<VertexSet> x_rows;
    std::vector<VertexSet> y_rows;
    std::vector<VertexSet> accumulated;
    bool cover_non_minimal = false;
};

struct YStepResult {
    std::optional<VertexSet> independent_row; // set when some row already won
    VertexSet witness;                        // otherwise: captures every row
    bool exact_cover = true;
    int distinct_profiles = 0;
};

struct XStepResult {
    std::optional<VertexSet> candidate; // nullopt: A is a witness
    int distinct_profiles = 0;
};

// Witness search over the accumulated rows: early-exits on an r-independent
// row, otherwise returns representatives of a minimum-cardinality set of
// realized profiles capturing every row. Exact set cover is enumerated while
// the distinct-profile count stays within `exact_cover_budget`; beyond that a
// greedy cover is used and flagged.
YStepResult y_step(const Graph& g, const std::vector<VertexSet>& xs, int r,
                   int exact_cover_budget = 20);

// Candidate search: the first k-set not captured by A, or confirmation that A
// is a witness.
XStepResult x_step(const Graph& g, const VertexSet& a, int r, int k);

std::pair<SolveOutcome, LadderTranscript> solve_ladder(const Graph& g, int r, int k,
                                                       int exact_cover_budget = 20);

SolveOutcome solve_direct(const Graph& g, int r, int k,
                          SplitterStrategy strategy = SplitterStrategy::BfsCenter);

// Reference solver: exhaustive search wrapped in the same outcome type.
// NoSolution outcomes carry V(g), which is always a valid witness then.
SolveOutcome solve_brute(const Graph& g, int r, int k,
                         const oracle::Budget& budget = {});

} // namespace rindep
