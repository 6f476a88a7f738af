#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rindep/graph.hpp"

namespace rindep {

// How the splitter answers a connector move: echo the move back, delete the
// highest-degree vertex of the ball, or delete a ball center (minimum
// eccentricity in the ball's induced subgraph). All break ties by smallest id.
enum class SplitterStrategy { ConnectorEcho, MaxDegree, BfsCenter };

SplitterStrategy parse_splitter_strategy(const std::string& name);
std::string to_string(SplitterStrategy s);

// Built-in adversaries for standalone games: seeded uniform choice, the
// arena vertex of maximum eccentricity, or exhaustive minimax over connector
// moves (small arenas only).
struct ConnectorPolicy {
    enum class Kind { RandomSeeded, MaxEccentricity, ExhaustiveWorst };
    Kind kind = Kind::MaxEccentricity;
    std::uint64_t seed = 0;
};

struct SplitterRound {
    int connector; // original vertex id
    int response;  // original vertex id
    int arena_size_after;
};

struct SplitterTrace {
    int radius = 0;
    std::vector<SplitterRound> rounds;

    int depth() const { return static_cast<int>(rounds.size()); }
};

// One splitter move: a vertex within `radius` of v in the arena, chosen per
// strategy. v must be an arena vertex.
int splitter_respond(SplitterStrategy strategy, const Graph& arena, int v, int radius);

// Plays rounds until the arena is empty: the connector picks a vertex, the
// splitter responds, and the arena shrinks to the ball minus the response.
SplitterTrace play_splitter_game(const Graph& g, int radius, SplitterStrategy strategy,
                                 const ConnectorPolicy& connector);

} // namespace rindep
