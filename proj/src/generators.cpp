#include "rindep/generators.hpp"

#include <random>
#include <sstream>
#include <vector>

#include "rindep/errors.hpp"

namespace rindep {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    if (!s.empty() && s.back() == sep) out.push_back("");
    return out;
}

long long parse_int(const std::string& s, const std::string& spec) {
    try {
        size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw InputError("bad number '" + s + "' in generator spec '" + spec + "'");
    }
}

// Parses "n=30,d=3,seed=7" style parameter lists.
void parse_kv(const std::string& body, const std::string& spec, FamilySpec& out) {
    for (const auto& part : split(body, ',')) {
        auto eq = part.find('=');
        if (eq == std::string::npos)
            throw InputError("expected key=value in generator spec '" + spec + "'");
        std::string key = part.substr(0, eq);
        long long val = parse_int(part.substr(eq + 1), spec);
        if (key == "n")
            out.n = static_cast<int>(val);
        else if (key == "d")
            out.degree = static_cast<int>(val);
        else if (key == "seed")
            out.seed = static_cast<std::uint64_t>(val);
        else
            throw InputError("unknown key '" + key + "' in generator spec '" + spec + "'");
    }
}

Graph make_tree(int n, std::uint64_t seed) {
    if (n < 0) throw InputError("tree size must be nonnegative");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        edges.emplace_back(pick(rng), v);
    }
    return Graph(n, edges);
}

Graph make_rbd(int n, int d, std::uint64_t seed) {
    if (n < 0 || d < 0) throw InputError("rbd parameters must be nonnegative");
    std::mt19937_64 rng(seed);
    std::vector<int> deg(n, 0);
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<char>> present(n);
    for (auto& row : present) row.assign(n, 0);
    if (n > 1) {
        std::uniform_int_distribution<int> pick(0, n - 1);
        long long attempts = 2LL * n * std::max(d, 1);
        for (long long t = 0; t < attempts; ++t) {
            int u = pick(rng), v = pick(rng);
            if (u == v || present[u][v] || deg[u] >= d || deg[v] >= d) continue;
            present[u][v] = present[v][u] = 1;
            ++deg[u];
            ++deg[v];
            edges.emplace_back(u, v);
        }
    }
    return Graph(n, edges);
}

} // namespace

FamilySpec parse_family_spec(const std::string& spec, std::uint64_t default_seed) {
    FamilySpec out;
    out.text = spec;
    out.seed = default_seed;

    if (spec.rfind("subdiv:", 0) == 0) {
        auto r_pos = spec.rfind(":r=");
        if (r_pos == std::string::npos || r_pos <= 7)
            throw InputError("subdivision spec needs ':r=<int>' suffix: '" + spec + "'");
        out.kind = FamilySpec::Kind::Subdivision;
        out.base = spec.substr(7, r_pos - 7);
        out.subdivision_r = static_cast<int>(parse_int(spec.substr(r_pos + 3), spec));
        if (out.subdivision_r < 0) throw InputError("subdivision r must be nonnegative");
        return out;
    }

    auto parts = split(spec, ':');
    if (parts.empty()) throw InputError("empty generator spec");
    const std::string& name = parts[0];

    auto positional = [&](size_t count) {
        if (parts.size() != count + 1)
            throw InputError("generator spec '" + spec + "' expects " +
                             std::to_string(count) + " parameter(s)");
    };

    if (name == "path") {
        positional(1);
        out.kind = FamilySpec::Kind::Path;
        out.n = static_cast<int>(parse_int(parts[1], spec));
    } else if (name == "cycle") {
        positional(1);
        out.kind = FamilySpec::Kind::Cycle;
        out.n = static_cast<int>(parse_int(parts[1], spec));
        if (out.n != 0 && out.n < 3)
            throw InputError("cycle needs at least 3 vertices: '" + spec + "'");
    } else if (name == "grid") {
        positional(2);
        out.kind = FamilySpec::Kind::Grid;
        out.rows = static_cast<int>(parse_int(parts[1], spec));
        out.cols = static_cast<int>(parse_int(parts[2], spec));
    } else if (name == "star") {
        positional(1);
        out.kind = FamilySpec::Kind::Star;
        out.n = static_cast<int>(parse_int(parts[1], spec)); // leaf count
    } else if (name == "clique") {
        positional(1);
        out.kind = FamilySpec::Kind::Clique;
        out.n = static_cast<int>(parse_int(parts[1], spec));
    } else if (name == "tree") {
        positional(1);
        out.kind = FamilySpec::Kind::Tree;
        parse_kv(parts[1], spec, out);
    } else if (name == "rbd") {
        positional(1);
        out.kind = FamilySpec::Kind::RandomBoundedDegree;
        parse_kv(parts[1], spec, out);
    } else {
        throw InputError("unknown generator family '" + name + "'");
    }
    if (out.n < 0 || out.rows < 0 || out.cols < 0)
        throw InputError("generator sizes must be nonnegative: '" + spec + "'");
    return out;
}

Graph generate(const FamilySpec& spec) {
    using Kind = FamilySpec::Kind;
    std::vector<std::pair<int, int>> edges;
    switch (spec.kind) {
        case Kind::Path:
            for (int v = 0; v + 1 < spec.n; ++v) edges.emplace_back(v, v + 1);
            return Graph(spec.n, edges);
        case Kind::Cycle:
            for (int v = 0; v + 1 < spec.n; ++v) edges.emplace_back(v, v + 1);
            if (spec.n >= 3) edges.emplace_back(spec.n - 1, 0);
            return Graph(spec.n, edges);
        case Kind::Grid: {
            int n = spec.rows * spec.cols;
            auto id = [&](int r, int c) { return r * spec.cols + c; };
            for (int r = 0; r < spec.rows; ++r)
                for (int c = 0; c < spec.cols; ++c) {
                    if (c + 1 < spec.cols) edges.emplace_back(id(r, c), id(r, c + 1));
                    if (r + 1 < spec.rows) edges.emplace_back(id(r, c), id(r + 1, c));
                }
            return Graph(n, edges);
        }
        case Kind::Star:
            for (int leaf = 1; leaf <= spec.n; ++leaf) edges.emplace_back(0, leaf);
            return Graph(spec.n + 1, edges);
        case Kind::Clique:
            for (int u = 0; u < spec.n; ++u)
                for (int v = u + 1; v < spec.n; ++v) edges.emplace_back(u, v);
            return Graph(spec.n, edges);
        case Kind::Tree:
            return make_tree(spec.n, spec.seed);
        case Kind::RandomBoundedDegree:
            return make_rbd(spec.n, spec.degree, spec.seed);
        case Kind::Subdivision:
            return subdivide(generate(spec.base, spec.seed), spec.subdivision_r);
    }
    throw InputError("unhandled generator kind");
}

Graph generate(const std::string& spec, std::uint64_t default_seed) {
    return generate(parse_family_spec(spec, default_seed));
}

Graph subdivide(const Graph& g, int r) {
    if (r < 0) throw InputError("subdivision r must be nonnegative");
    if (r == 0) return g;
    std::vector<std::pair<int, int>> edges;
    int next = g.vertex_count();
    for (auto [u, v] : g.edges()) {
        int prev = u;
        for (int i = 0; i < r; ++i) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
        edges.emplace_back(prev, v);
    }
    return Graph(next, edges);
}

} // namespace rindep
