#include "rindep.h"

#include <cstring>
#include <string>

#include "rindep/edge_list.hpp"
#include "rindep/errors.hpp"
#include "rindep/generators.hpp"
#include "rindep/runner.hpp"

namespace {

thread_local std::string g_last_error;

int record_error(int code, const char* what) {
    g_last_error = what;
    return code;
}

// Translates the library's exception taxonomy into status codes. Every API
// entry point funnels through this.
template <typename Fn>
int guarded(Fn&& fn) {
    try {
        fn();
        return RINDEP_OK;
    } catch (const rindep::ParseError& e) {
        return record_error(RINDEP_ERR_PARSE, e.what());
    } catch (const rindep::BudgetExceeded& e) {
        return record_error(RINDEP_ERR_BUDGET, e.what());
    } catch (const rindep::InternalInvariantError& e) {
        return record_error(RINDEP_ERR_INTERNAL, e.what());
    } catch (const rindep::InputError& e) {
        return record_error(RINDEP_ERR_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return record_error(RINDEP_ERR_INTERNAL, e.what());
    }
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

} // namespace

struct rindep_graph_s {
    rindep::ParsedGraph parsed;
};

struct rindep_result_s {
    rindep::RunRecord record;
};

extern "C" {

const char* rindep_error_message(void) { return g_last_error.c_str(); }

int rindep_graph_parse(const char* text, rindep_graph** out) {
    return guarded([&] {
        if (!text || !out) throw rindep::InputError("null argument");
        auto parsed = rindep::parse_edge_list(text);
        *out = new rindep_graph_s{std::move(parsed)};
    });
}

int rindep_graph_generate(const char* spec, uint64_t default_seed, rindep_graph** out) {
    return guarded([&] {
        if (!spec || !out) throw rindep::InputError("null argument");
        rindep::ParsedGraph parsed;
        parsed.graph = rindep::generate(spec, default_seed);
        parsed.labels.reserve(parsed.graph.vertex_count());
        for (int v = 0; v < parsed.graph.vertex_count(); ++v)
            parsed.labels.push_back(std::to_string(v));
        *out = new rindep_graph_s{std::move(parsed)};
    });
}

void rindep_graph_free(rindep_graph* g) { delete g; }

int rindep_graph_order(const rindep_graph* g) {
    return g ? g->parsed.graph.vertex_count() : 0;
}

int rindep_graph_size(const rindep_graph* g) {
    return g ? g->parsed.graph.edge_count() : 0;
}

int rindep_graph_duplicate_warnings(const rindep_graph* g) {
    return g ? g->parsed.duplicate_edges : 0;
}

int rindep_graph_loop_warnings(const rindep_graph* g) {
    return g ? g->parsed.self_loops : 0;
}

const char* rindep_graph_label(const rindep_graph* g, int v) {
    if (!g || v < 0 || v >= static_cast<int>(g->parsed.labels.size())) return nullptr;
    return g->parsed.labels[v].c_str();
}

int rindep_graph_vertex_by_label(const rindep_graph* g, const char* label) {
    if (!g || !label) return -1;
    return g->parsed.vertex_by_label(label);
}

char* rindep_graph_edge_list(const rindep_graph* g) {
    if (!g) return nullptr;
    return copy_string(rindep::write_edge_list(g->parsed.graph, &g->parsed.labels));
}

int rindep_solve(const rindep_graph* g, int r, int k, const char* algorithm,
                 const char* strategy, uint64_t seed, const char* verify,
                 const char* input_name, rindep_result** out) {
    return guarded([&] {
        if (!g || !algorithm || !strategy || !verify || !out)
            throw rindep::InputError("null argument");
        rindep::RunConfig config;
        config.input_name = input_name ? input_name : "";
        config.r = r;
        config.k = k;
        config.algorithm = algorithm;
        config.strategy = strategy;
        config.seed = seed;
        config.verify = verify;
        *out = new rindep_result_s{rindep::run_solve(g->parsed.graph, config)};
    });
}

int rindep_witness_check(const rindep_graph* g, const int* q, int q_len, int r, int k,
                         const char* input_name, rindep_result** out) {
    return guarded([&] {
        if (!g || (!q && q_len > 0) || q_len < 0 || !out)
            throw rindep::InputError("null argument");
        rindep::RunConfig config;
        config.input_name = input_name ? input_name : "";
        config.r = r;
        config.k = k;
        config.algorithm = "witness-check";
        rindep::VertexSet set(std::vector<int>(q, q + q_len));
        *out = new rindep_result_s{rindep::run_witness_check(g->parsed.graph, set, config)};
    });
}

int rindep_cowitness(const rindep_graph* g, int r, int k, const char* strategy,
                     const char* input_name, rindep_result** out) {
    return guarded([&] {
        if (!g || !strategy || !out) throw rindep::InputError("null argument");
        rindep::RunConfig config;
        config.input_name = input_name ? input_name : "";
        config.r = r;
        config.k = k;
        config.algorithm = "cowitness";
        config.strategy = strategy;
        *out = new rindep_result_s{rindep::run_cowitness(g->parsed.graph, config)};
    });
}

int rindep_result_kind(const rindep_result* res) {
    using Kind = rindep::RunRecord::Kind;
    switch (res->record.kind) {
        case Kind::NoSolution: return RINDEP_RESULT_NO_SOLUTION;
        case Kind::Independent: return RINDEP_RESULT_INDEPENDENT;
        case Kind::IsWitness: return RINDEP_RESULT_IS_WITNESS;
        case Kind::Uncaptured: return RINDEP_RESULT_UNCAPTURED;
        case Kind::Cowitness: return RINDEP_RESULT_COWITNESS;
    }
    return RINDEP_RESULT_NO_SOLUTION;
}

int rindep_result_set_len(const rindep_result* res) { return res->record.set.size(); }

int rindep_result_set_get(const rindep_result* res, int index) {
    if (index < 0 || index >= res->record.set.size()) return -1;
    return res->record.set[index];
}

double rindep_result_wall_ms(const rindep_result* res) { return res->record.wall_ms; }

char* rindep_result_render(const rindep_result* res, const char* format) {
    if (!res || !format) return nullptr;
    std::string f = format;
    if (f == "json") return copy_string(res->record.json);
    if (f == "plain") return copy_string(res->record.plain);
    return nullptr;
}

void rindep_result_free(rindep_result* res) { delete res; }

void rindep_string_free(char* s) { delete[] s; }

} // extern "C"
