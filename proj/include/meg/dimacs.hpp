#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "meg/graph.hpp"
#include "meg/reduction.hpp"  // ParseError

namespace meg {

/// DIMACS-edge text plus the comment lines that rode along with it.
struct GraphDocument {
    Graph graph;
    std::vector<std::string> comments;  // text after "c ", in input order
};

/// Canonical DIMACS-edge output: comments, `p edge n m`, sorted 1-based
/// `e u v` lines, then `l <v> <text>` label lines when labels exist.
inline std::string write_graph(const Graph& g,
                               const std::vector<std::string>& comments = {}) {
    std::ostringstream out;
    for (const auto& c : comments) out << "c " << c << "\n";
    out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const auto& e : g.edges()) out << "e " << e.u + 1 << " " << e.v + 1 << "\n";
    if (g.has_labels())
        for (int v = 0; v < g.vertex_count(); ++v)
            out << "l " << v + 1 << " " << g.raw_labels()[static_cast<size_t>(v)] << "\n";
    return out.str();
}

/// Whitespace-tolerant, order-independent parse of the format above.
inline GraphDocument read_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool header_seen = false;
    int n = 0, declared_m = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::pair<int, std::string>> labels;
    std::vector<std::string> comments;
    auto fail = [&](const std::string& what) -> ParseError {
        return ParseError("line " + std::to_string(lineno) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "c") {
            std::string rest;
            std::getline(ls, rest);
            if (!rest.empty() && rest.front() == ' ') rest.erase(0, 1);
            comments.push_back(rest);
        } else if (tok == "p") {
            std::string kind;
            if (header_seen) throw fail("duplicate header");
            if (!(ls >> kind >> n >> declared_m) || kind != "edge" || n < 0 || declared_m < 0)
                throw fail("bad edge header");
            header_seen = true;
        } else if (tok == "e") {
            int u, v;
            if (!(ls >> u >> v)) throw fail("bad edge line");
            edges.emplace_back(u - 1, v - 1);
        } else if (tok == "l") {
            int v;
            if (!(ls >> v)) throw fail("bad label line");
            std::string rest;
            std::getline(ls, rest);
            if (!rest.empty() && rest.front() == ' ') rest.erase(0, 1);
            labels.emplace_back(v - 1, rest);
        } else {
            throw fail("unknown line type '" + tok + "'");
        }
    }
    if (!header_seen) throw ParseError("missing 'p edge' header");
    if (static_cast<int>(edges.size()) != declared_m)
        throw ParseError("edge count mismatch: header says " + std::to_string(declared_m) +
                         ", found " + std::to_string(edges.size()));
    std::vector<std::string> label_vec;
    if (!labels.empty()) {
        label_vec.assign(static_cast<size_t>(n), "");
        for (auto& [v, text] : labels) {
            if (v < 0 || v >= n) throw ParseError("label vertex out of range");
            label_vec[static_cast<size_t>(v)] = std::move(text);
        }
    }
    try {
        return {Graph::build(n, edges, std::move(label_vec)), std::move(comments)};
    } catch (const GraphError& e) {
        throw ParseError(std::string("invalid graph: ") + e.what());
    }
}

}  // namespace meg
