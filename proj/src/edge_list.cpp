#include "rindep/edge_list.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "rindep/errors.hpp"

namespace rindep {

int ParsedGraph::vertex_by_label(const std::string& label) const {
    for (size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return static_cast<int>(i);
    return -1;
}

ParsedGraph parse_edge_list(const std::string& text) {
    ParsedGraph out;
    std::map<std::string, int> ids;
    std::vector<std::pair<int, int>> edges;
    std::map<std::pair<int, int>, bool> seen;

    auto intern = [&](const std::string& token) {
        auto [it, fresh] = ids.emplace(token, static_cast<int>(out.labels.size()));
        if (fresh) out.labels.push_back(token);
        return it->second;
    };

    std::istringstream stream(text);
    std::string line;
    int line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        std::istringstream words(line);
        std::string a, b, extra;
        if (!(words >> a)) continue; // blank line
        if (a[0] == '#') continue;
        if (!(words >> b)) throw ParseError("expected two tokens, got one", line_no);
        if (words >> extra) throw ParseError("expected two tokens, got more", line_no);

        int u = intern(a);
        int v = intern(b);
        if (u == v) {
            ++out.self_loops;
            continue;
        }
        auto key = std::minmax(u, v);
        if (seen[key]) {
            ++out.duplicate_edges;
            continue;
        }
        seen[key] = true;
        edges.push_back(key);
    }
    out.graph = Graph(static_cast<int>(out.labels.size()), edges);
    return out;
}

std::string write_edge_list(const Graph& g, const std::vector<std::string>* labels) {
    auto edges = g.edges();
    std::sort(edges.begin(), edges.end(), [](auto a, auto b) {
        return std::pair(a.second, a.first) < std::pair(b.second, b.first);
    });
    std::ostringstream out;
    for (auto [u, v] : edges) {
        if (labels)
            out << (*labels)[u] << ' ' << (*labels)[v] << '\n';
        else
            out << u << ' ' << v << '\n';
    }
    return out.str();
}

} // namespace rindep
