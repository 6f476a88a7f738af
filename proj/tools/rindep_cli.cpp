// Command-line front end. Everything goes through the C interface in
// rindep.h; this translation unit never touches the C++ core directly.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rindep.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;
constexpr int kExitBudget = 4;

int exit_code_for(int status) {
    switch (status) {
        case RINDEP_OK: return kExitOk;
        case RINDEP_ERR_ARGUMENT:
        case RINDEP_ERR_PARSE: return kExitInput;
        case RINDEP_ERR_BUDGET: return kExitBudget;
        default: return kExitInternal;
    }
}

struct CliError {
    int exit_code;
    std::string message;
};

[[noreturn]] void fail(int status) {
    throw CliError{exit_code_for(status), rindep_error_message()};
}

[[noreturn]] void fail_input(const std::string& message) {
    throw CliError{kExitInput, message};
}

using GraphHandle = std::unique_ptr<rindep_graph, decltype(&rindep_graph_free)>;
using ResultHandle = std::unique_ptr<rindep_result, decltype(&rindep_result_free)>;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail_input("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string owned_string(char* s) {
    std::string out = s ? s : "";
    rindep_string_free(s);
    return out;
}

// Shared --input/--gen handling; returns the graph and its display name.
struct InputOptions {
    std::string file;
    std::string spec;
    std::uint64_t seed = 0;

    void attach(CLI::App* cmd) {
        auto* in = cmd->add_option("--input", file, "edge-list file");
        auto* gen = cmd->add_option("--gen", spec, "generator spec, e.g. cycle:6");
        in->excludes(gen);
        gen->excludes(in);
    }

    std::pair<GraphHandle, std::string> load() const {
        rindep_graph* g = nullptr;
        if (!spec.empty()) {
            if (int rc = rindep_graph_generate(spec.c_str(), seed, &g)) fail(rc);
            return {GraphHandle(g, rindep_graph_free), spec};
        }
        if (file.empty()) fail_input("one of --input or --gen is required");
        std::string text = read_file(file);
        if (int rc = rindep_graph_parse(text.c_str(), &g)) fail(rc);
        if (int dups = rindep_graph_duplicate_warnings(g))
            std::cerr << "warning: " << dups << " duplicate edge(s) dropped\n";
        if (int loops = rindep_graph_loop_warnings(g))
            std::cerr << "warning: " << loops << " self-loop(s) dropped\n";
        return {GraphHandle(g, rindep_graph_free), file};
    }
};

std::uint64_t seed_from_env(std::uint64_t fallback) {
    if (const char* env = std::getenv("RINDEP_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            fail_input("RINDEP_SEED is not a number");
        }
    }
    return fallback;
}

ResultHandle solve_one(rindep_graph* g, int r, int k, const std::string& algo,
                       const std::string& strategy, std::uint64_t seed,
                       const std::string& verify, const std::string& name) {
    rindep_result* res = nullptr;
    if (int rc = rindep_solve(g, r, k, algo.c_str(), strategy.c_str(), seed,
                              verify.c_str(), name.c_str(), &res))
        fail(rc);
    return {res, rindep_result_free};
}

void print_result(const ResultHandle& res, const std::string& format) {
    std::string text = owned_string(rindep_result_render(res.get(), format.c_str()));
    std::cout << text;
    if (format == "json") std::cout << '\n';
}

// Parses "r=1,2;k=2,3;algo=ladder,direct" style grids.
struct BenchGrid {
    std::vector<int> rs{2};
    std::vector<int> ks{2};
    std::vector<std::string> algos{"ladder"};
    std::vector<std::string> strategies{"bfs-center"};
    std::string verify = "none";

    static BenchGrid parse(const std::string& text) {
        BenchGrid grid;
        std::stringstream dims(text);
        std::string dim;
        while (std::getline(dims, dim, ';')) {
            if (dim.empty()) continue;
            auto eq = dim.find('=');
            if (eq == std::string::npos) fail_input("grid dimension needs key=values");
            std::string key = dim.substr(0, eq);
            std::vector<std::string> values;
            std::stringstream vals(dim.substr(eq + 1));
            std::string val;
            while (std::getline(vals, val, ',')) values.push_back(val);
            if (values.empty()) fail_input("grid dimension '" + key + "' has no values");
            auto to_ints = [&] {
                std::vector<int> out;
                for (const auto& v : values) {
                    try {
                        out.push_back(std::stoi(v));
                    } catch (const std::exception&) {
                        fail_input("grid value '" + v + "' is not a number");
                    }
                }
                return out;
            };
            if (key == "r")
                grid.rs = to_ints();
            else if (key == "k")
                grid.ks = to_ints();
            else if (key == "algo")
                grid.algos = values;
            else if (key == "strategy")
                grid.strategies = values;
            else if (key == "verify")
                grid.verify = values.front();
            else
                fail_input("unknown grid key '" + key + "'");
        }
        return grid;
    }
};

int run_bench(const std::string& corpus_path, const std::string& grid_text,
              const std::string& out_path, std::uint64_t seed) {
    BenchGrid grid = BenchGrid::parse(grid_text);

    std::vector<std::string> entries;
    {
        std::istringstream corpus(read_file(corpus_path));
        std::string line;
        while (std::getline(corpus, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
                line.pop_back();
            if (line.empty() || line[0] == '#') continue;
            entries.push_back(line);
        }
    }

    std::ofstream out(out_path);
    if (!out) fail_input("cannot write '" + out_path + "'");

    struct FamilyStats {
        std::string name;
        std::vector<double> times;
        int errors = 0;
    };
    std::vector<FamilyStats> families;

    for (const auto& entry : entries) {
        FamilyStats fam;
        fam.name = entry;
        GraphHandle g(nullptr, rindep_graph_free);
        std::string load_error;
        try {
            InputOptions input;
            if (entry.rfind("gen:", 0) == 0)
                input.spec = entry.substr(4);
            else
                input.file = entry;
            input.seed = seed;
            g = input.load().first;
        } catch (const CliError& e) {
            load_error = e.message;
        }

        for (int r : grid.rs)
            for (int k : grid.ks)
                for (const auto& algo : grid.algos)
                    for (const auto& strategy : grid.strategies) {
                        nlohmann::ordered_json config{{"input", entry}, {"r", r},
                                                      {"k", k},         {"algo", algo},
                                                      {"strategy", strategy},
                                                      {"seed", seed},
                                                      {"verify", grid.verify}};
                        if (!load_error.empty()) {
                            out << nlohmann::ordered_json{{"error", load_error},
                                                          {"config", config}}
                                       .dump()
                                << '\n';
                            ++fam.errors;
                            continue;
                        }
                        rindep_result* raw = nullptr;
                        int rc = rindep_solve(g.get(), r, k, algo.c_str(),
                                              strategy.c_str(), seed,
                                              grid.verify.c_str(), entry.c_str(), &raw);
                        if (rc != RINDEP_OK) {
                            out << nlohmann::ordered_json{
                                       {"error", rindep_error_message()},
                                       {"config", config}}
                                       .dump()
                                << '\n';
                            ++fam.errors;
                            continue;
                        }
                        ResultHandle res(raw, rindep_result_free);
                        out << owned_string(
                                   rindep_result_render(res.get(), "json"))
                            << '\n';
                        fam.times.push_back(rindep_result_wall_ms(res.get()));
                    }
        families.push_back(std::move(fam));
    }

    std::cout << "rows written to " << out_path << "\n";
    std::cout << "family\truns\terrors\tmedian_ms\n";
    for (auto& fam : families) {
        double median = 0.0;
        if (!fam.times.empty()) {
            std::sort(fam.times.begin(), fam.times.end());
            median = fam.times[fam.times.size() / 2];
        }
        std::cout << fam.name << '\t' << fam.times.size() << '\t' << fam.errors << '\t'
                  << median << '\n';
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"distance-r independent set solver"};
    app.require_subcommand(1);

    // solve
    auto* solve = app.add_subcommand("solve", "decide and certify one instance");
    InputOptions solve_input;
    solve_input.attach(solve);
    int r = 2, k = 2;
    std::string algo = "ladder", strategy = "bfs-center", verify = "fast";
    std::string format = "json";
    std::uint64_t seed = 0;
    solve->add_option("--r", r, "independence radius")->required();
    solve->add_option("--k", k, "target set size")->required();
    solve->add_option("--algo", algo, "ladder | direct | brute");
    solve->add_option("--strategy", strategy,
                      "bfs-center | max-degree | connector-echo");
    solve->add_option("--verify", verify, "none | fast | oracle");
    solve->add_option("--format", format, "json | plain");
    solve->add_option("--seed", seed, "seed for seeded generator specs");

    // witness-check
    auto* wcheck = app.add_subcommand("witness-check", "test a witness candidate");
    InputOptions wcheck_input;
    wcheck_input.attach(wcheck);
    std::string witness_path;
    int wr = 2, wk = 2;
    std::string wformat = "json";
    wcheck->add_option("--witness", witness_path, "file of vertex labels")->required();
    wcheck->add_option("--r", wr, "independence radius")->required();
    wcheck->add_option("--k", wk, "target set size")->required();
    wcheck->add_option("--format", wformat, "json | plain");

    // cowitness
    auto* cow = app.add_subcommand("cowitness", "build a cowitness certificate");
    InputOptions cow_input;
    cow_input.attach(cow);
    int cr = 2, ck = 2;
    std::string cstrategy = "bfs-center", cformat = "json";
    cow->add_option("--r", cr, "independence radius")->required();
    cow->add_option("--k", ck, "cowitness parameter")->required();
    cow->add_option("--strategy", cstrategy,
                    "bfs-center | max-degree | connector-echo");
    cow->add_option("--format", cformat, "json | plain");

    // bench
    auto* bench = app.add_subcommand("bench", "run a corpus across a parameter grid");
    std::string corpus_path, grid_text = "r=2;k=2;algo=ladder", bench_out;
    std::uint64_t bench_seed = 0;
    bench->add_option("--corpus", corpus_path, "file of gen:<spec> or path lines")
        ->required();
    bench->add_option("--grid", grid_text, "e.g. r=1,2;k=2,3;algo=ladder,direct");
    bench->add_option("--out", bench_out, "output path for JSON rows")->required();
    bench->add_option("--seed", bench_seed, "seed for seeded generator specs");

    // gen
    auto* gen = app.add_subcommand("gen", "emit a generated graph as an edge list");
    std::string gen_spec, gen_out;
    std::uint64_t gen_seed = 0;
    gen->add_option("spec", gen_spec, "generator spec")->required();
    gen->add_option("--out", gen_out, "output path (stdout if omitted)");
    gen->add_option("--seed", gen_seed, "seed for seeded generator specs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInput;
    }

    try {
        if (solve->parsed()) {
            solve_input.seed = seed_from_env(seed);
            auto [g, name] = solve_input.load();
            auto res = solve_one(g.get(), r, k, algo, strategy, solve_input.seed,
                                 verify, name);
            print_result(res, format);
            return kExitOk;
        }
        if (wcheck->parsed()) {
            wcheck_input.seed = seed_from_env(0);
            auto [g, name] = wcheck_input.load();
            std::vector<int> q;
            std::istringstream tokens(read_file(witness_path));
            std::string token;
            while (tokens >> token) {
                int v = rindep_graph_vertex_by_label(g.get(), token.c_str());
                if (v < 0) fail_input("witness label '" + token + "' not in the graph");
                q.push_back(v);
            }
            rindep_result* raw = nullptr;
            if (int rc = rindep_witness_check(g.get(), q.data(),
                                              static_cast<int>(q.size()), wr, wk,
                                              name.c_str(), &raw))
                fail(rc);
            ResultHandle res(raw, rindep_result_free);
            print_result(res, wformat);
            return kExitOk;
        }
        if (cow->parsed()) {
            cow_input.seed = seed_from_env(0);
            auto [g, name] = cow_input.load();
            rindep_result* raw = nullptr;
            if (int rc = rindep_cowitness(g.get(), cr, ck, cstrategy.c_str(),
                                          name.c_str(), &raw))
                fail(rc);
            ResultHandle res(raw, rindep_result_free);
            print_result(res, cformat);
            return kExitOk;
        }
        if (bench->parsed())
            return run_bench(corpus_path, grid_text, bench_out,
                             seed_from_env(bench_seed));
        if (gen->parsed()) {
            rindep_graph* raw = nullptr;
            if (int rc = rindep_graph_generate(gen_spec.c_str(), seed_from_env(gen_seed),
                                               &raw))
                fail(rc);
            GraphHandle g(raw, rindep_graph_free);
            std::string text = owned_string(rindep_graph_edge_list(g.get()));
            if (gen_out.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(gen_out);
                if (!out) fail_input("cannot write '" + gen_out + "'");
                out << text;
                std::cout << "n=" << rindep_graph_order(g.get())
                          << " m=" << rindep_graph_size(g.get()) << " -> " << gen_out
                          << '\n';
            }
            return kExitOk;
        }
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << '\n';
        return e.exit_code;
    }
    return kExitInput;
}
