#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"

namespace aimkit {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what) {}
};

// Text format:
//   c <anything>        comment, ignored
//   p aim <n> <m>       header, exactly once, before any edge
//   e <u> <v>           0-based undirected edge
inline Graph read_graph(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    bool have_header = false;
    std::size_t n = 0, m = 0;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "p") {
            std::string kind;
            long long nn = -1, mm = -1;
            if (have_header) throw ParseError(lineno, "duplicate header");
            if (!(ls >> kind >> nn >> mm) || kind != "aim" || nn < 0 || mm < 0)
                throw ParseError(lineno, "expected 'p aim <n> <m>'");
            n = static_cast<std::size_t>(nn);
            m = static_cast<std::size_t>(mm);
            have_header = true;
        } else if (tag == "e") {
            if (!have_header) throw ParseError(lineno, "edge before header");
            long long u = -1, v = -1;
            if (!(ls >> u >> v) || u < 0 || v < 0) throw ParseError(lineno, "expected 'e <u> <v>'");
            if (static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
                throw ParseError(lineno, "vertex id out of range");
            if (u == v) throw ParseError(lineno, "self-loop");
            edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        } else {
            throw ParseError(lineno, "unknown line tag '" + tag + "'");
        }
        std::string extra;
        if (ls >> extra) throw ParseError(lineno, "trailing token '" + extra + "'");
    }
    if (!have_header) throw ParseError(lineno, "missing 'p aim' header");
    if (edges.size() != m)
        throw ParseError(lineno, "header announces " + std::to_string(m) + " edges, found " +
                                     std::to_string(edges.size()));
    return Graph::from_edges(n, edges);
}

inline Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return read_graph(in);
}

/// Writes a graph whose ids are exactly 0..n-1. If some ids below capacity()
/// are dead, the live vertices are renumbered densely in id order and one
/// `c v <new> <old>` comment per vertex records the mapping.
inline void write_graph(std::ostream& out, const Graph& g) {
    auto live = g.live_vertices();
    const bool dense = live.size() == g.capacity();
    std::vector<Vertex> dense_id(g.capacity(), 0);
    for (std::size_t i = 0; i < live.size(); ++i) dense_id[live[i]] = static_cast<Vertex>(i);
    out << "p aim " << live.size() << ' ' << g.num_edges() << '\n';
    if (!dense)
        for (std::size_t i = 0; i < live.size(); ++i) out << "c v " << i << ' ' << live[i] << '\n';
    for (auto [u, v] : g.edges()) out << "e " << dense_id[u] << ' ' << dense_id[v] << '\n';
}

inline std::string format_graph(const Graph& g) {
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

/// Space-separated ids, ascending.
inline std::string format_ids(const VertexSet& s) {
    std::string out;
    for (Vertex v : s) {
        if (!out.empty()) out += ' ';
        out += std::to_string(v);
    }
    return out;
}

/// Reads whitespace-separated vertex ids. An optional leading `S:` token is
/// skipped so that `solve --witness` output can be fed back in.
inline VertexSet read_vertex_set(std::istream& in) {
    std::vector<Vertex> ids;
    std::string tok;
    bool first = true;
    while (in >> tok) {
        if (first && tok == "S:") {
            first = false;
            continue;
        }
        first = false;
        std::size_t pos = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(tok, &pos);
        } catch (const std::exception&) {
            throw ParseError(0, "bad vertex id '" + tok + "'");
        }
        if (pos != tok.size() || tok.front() == '-') throw ParseError(0, "bad vertex id '" + tok + "'");
        ids.push_back(static_cast<Vertex>(v));
    }
    return VertexSet(std::move(ids));
}

} // namespace aimkit
