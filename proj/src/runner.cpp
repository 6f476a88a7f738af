#include "rindep/runner.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "rindep/cowitness.hpp"
#include "rindep/errors.hpp"
#include "rindep/solvers.hpp"
#include "rindep/witness.hpp"

namespace rindep {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json config_json(const RunConfig& c) {
    return ordered_json{{"input", c.input_name}, {"r", c.r},
                        {"k", c.k},              {"algo", c.algorithm},
                        {"strategy", c.strategy},{"seed", c.seed},
                        {"verify", c.verify}};
}

std::string join_ids(const VertexSet& set) {
    std::ostringstream out;
    for (int i = 0; i < set.size(); ++i) {
        if (i) out << ' ';
        out << set[i];
    }
    return out.str();
}

// Rounded to microseconds so records stay short.
double round_ms(double ms) { return std::round(ms * 1000.0) / 1000.0; }

std::string verify_solve(const Graph& g, const RunConfig& config,
                         const SolveOutcome& outcome) {
    if (config.verify == "none") return "none";
    if (config.verify == "fast") {
        bool ok = outcome.decision == Decision::Independent
                      ? outcome.set.size() == config.k &&
                            is_r_independent(g, outcome.set, config.r)
                      : check_witness(g, outcome.set, config.r, config.k).is_witness;
        if (!ok)
            throw InternalInvariantError("fast verification rejected the outcome");
        return "fast-ok";
    }
    if (config.verify == "oracle") {
        oracle::Budget budget; // default desk-scale budget
        auto reference = oracle::brute_independent(g, config.r, config.k, budget);
        bool ok;
        if (outcome.decision == Decision::Independent)
            ok = reference.has_value() && outcome.set.size() == config.k &&
                 is_r_independent(g, outcome.set, config.r);
        else
            ok = !reference.has_value() &&
                 !oracle::brute_check_witness(g, outcome.set, config.r, config.k, budget);
        if (!ok)
            throw InternalInvariantError("oracle verification rejected the outcome");
        return "oracle-ok";
    }
    throw InputError("unknown verification level '" + config.verify + "'");
}

} // namespace

RunRecord run_solve(const Graph& g, const RunConfig& config) {
    SolveOutcome outcome;
    if (config.algorithm == "ladder") {
        outcome = solve_ladder(g, config.r, config.k).first;
    } else if (config.algorithm == "direct") {
        outcome = solve_direct(g, config.r, config.k,
                               parse_splitter_strategy(config.strategy));
    } else if (config.algorithm == "brute") {
        outcome = solve_brute(g, config.r, config.k);
    } else {
        throw InputError("unknown algorithm '" + config.algorithm + "'");
    }

    std::string verification = verify_solve(g, config, outcome);
    bool independent = outcome.decision == Decision::Independent;

    RunRecord rec;
    rec.kind = independent ? RunRecord::Kind::Independent : RunRecord::Kind::NoSolution;
    rec.set = outcome.set;
    rec.wall_ms = outcome.stats.wall_ms;

    ordered_json j;
    j["schema"] = "rindep-result-v1";
    j["decision"] = independent ? "independent" : "no-solution";
    j["set"] = independent ? outcome.set.ids() : std::vector<int>{};
    j["witness"] = independent ? std::vector<int>{} : outcome.set.ids();
    j["stats"] = ordered_json{{"rounds", outcome.stats.rounds},
                              {"witness_size", outcome.stats.witness_size},
                              {"cowitness_size", outcome.stats.cowitness_size},
                              {"splitter_depth", outcome.stats.splitter_depth},
                              {"distinct_profiles", outcome.stats.distinct_profiles},
                              {"refine_iterations", outcome.stats.refine_iterations},
                              {"cover_non_minimal", outcome.stats.cover_non_minimal},
                              {"wall_ms", round_ms(outcome.stats.wall_ms)}};
    j["config"] = config_json(config);
    j["verification"] = verification;
    rec.json = j.dump();

    std::ostringstream plain;
    plain << "decision: " << (independent ? "independent" : "no-solution") << '\n'
          << "set: " << (independent ? join_ids(outcome.set) : "") << '\n'
          << "witness: " << (independent ? "" : join_ids(outcome.set)) << '\n'
          << "rounds: " << outcome.stats.rounds << '\n'
          << "witness_size: " << outcome.stats.witness_size << '\n'
          << "cowitness_size: " << outcome.stats.cowitness_size << '\n'
          << "splitter_depth: " << outcome.stats.splitter_depth << '\n'
          << "distinct_profiles: " << outcome.stats.distinct_profiles << '\n'
          << "refine_iterations: " << outcome.stats.refine_iterations << '\n'
          << "wall_ms: " << round_ms(outcome.stats.wall_ms) << '\n'
          << "verification: " << verification << '\n';
    rec.plain = plain.str();
    return rec;
}

RunRecord run_witness_check(const Graph& g, const VertexSet& q,
                            const RunConfig& config) {
    auto start = std::chrono::steady_clock::now();
    auto result = check_witness(g, q, config.r, config.k);
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();

    RunRecord rec;
    rec.kind = result.is_witness ? RunRecord::Kind::IsWitness
                                 : RunRecord::Kind::Uncaptured;
    rec.set = result.uncaptured;
    rec.wall_ms = ms;

    ordered_json j;
    j["schema"] = "rindep-witness-check-v1";
    j["result"] = result.is_witness ? "is-witness" : "uncaptured";
    j["counterexample"] = result.uncaptured.ids();
    j["witness_size"] = q.size();
    j["distinct_profiles"] = result.distinct_profiles;
    j["wall_ms"] = round_ms(ms);
    j["config"] = config_json(config);
    rec.json = j.dump();

    std::ostringstream plain;
    plain << "result: " << (result.is_witness ? "is-witness" : "uncaptured") << '\n'
          << "counterexample: " << join_ids(result.uncaptured) << '\n'
          << "witness_size: " << q.size() << '\n'
          << "distinct_profiles: " << result.distinct_profiles << '\n'
          << "wall_ms: " << round_ms(ms) << '\n';
    rec.plain = plain.str();
    return rec;
}

RunRecord run_cowitness(const Graph& g, const RunConfig& config) {
    auto start = std::chrono::steady_clock::now();
    CowitnessOptions opts;
    opts.strategy = parse_splitter_strategy(config.strategy);
    auto cert = build_cowitness(g, g.all_vertices(), config.r, config.k, opts);
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();

    RunRecord rec;
    rec.kind = RunRecord::Kind::Cowitness;
    rec.set = cert.q;
    rec.wall_ms = ms;

    ordered_json j;
    j["schema"] = "rindep-cowitness-v1";
    j["cowitness"] = cert.q.ids();
    j["size"] = cert.q.size();
    j["depth"] = cert.depth_reached;
    j["branches"] = cert.branch_count;
    j["level_separator_sizes"] = cert.level_separator_sizes;
    j["wall_ms"] = round_ms(ms);
    j["config"] = config_json(config);
    rec.json = j.dump();

    std::ostringstream plain;
    plain << "cowitness: " << join_ids(cert.q) << '\n'
          << "size: " << cert.q.size() << '\n'
          << "depth: " << cert.depth_reached << '\n'
          << "branches: " << cert.branch_count << '\n'
          << "wall_ms: " << round_ms(ms) << '\n';
    rec.plain = plain.str();
    return rec;
}

} // namespace rindep
