#pragma once

#include <algorithm>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace meg {

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct LoopEdgeError : GraphError {
    using GraphError::GraphError;
};
struct DuplicateEdgeError : GraphError {
    using GraphError::GraphError;
};
struct IndexOutOfRangeError : GraphError {
    using GraphError::GraphError;
};
struct UnknownEdgeError : GraphError {
    using GraphError::GraphError;
};
struct BadParameterError : GraphError {
    using GraphError::GraphError;
};

/// Canonical unordered edge: u < v always.
struct EdgeId {
    int u;
    int v;

    EdgeId(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {
        if (a == b) throw LoopEdgeError("loop edge " + std::to_string(a));
    }

    friend auto operator<=>(const EdgeId&, const EdgeId&) = default;
};

/// Immutable finite simple undirected graph. Vertices are 0..n-1; edges are
/// kept sorted in canonical order. Labels are optional display names.
class Graph {
public:
    static Graph build(int n, const std::vector<std::pair<int, int>>& edges,
                       std::vector<std::string> labels = {}) {
        if (n < 0) throw BadParameterError("negative vertex count");
        if (!labels.empty() && static_cast<int>(labels.size()) != n)
            throw BadParameterError("label count does not match vertex count");
        Graph g;
        g.n_ = n;
        g.labels_ = std::move(labels);
        g.edges_.reserve(edges.size());
        for (auto [a, b] : edges) {
            if (a < 0 || a >= n || b < 0 || b >= n)
                throw IndexOutOfRangeError("edge endpoint out of range: " +
                                           std::to_string(a) + "," + std::to_string(b));
            g.edges_.emplace_back(a, b);
        }
        std::sort(g.edges_.begin(), g.edges_.end());
        if (std::adjacent_find(g.edges_.begin(), g.edges_.end()) != g.edges_.end())
            throw DuplicateEdgeError("duplicate edge");
        g.adj_.assign(n, {});
        for (const auto& e : g.edges_) {
            g.adj_[e.u].push_back(e.v);
            g.adj_[e.v].push_back(e.u);
        }
        for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
        return g;
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<EdgeId>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }

    bool has_edge(const EdgeId& e) const {
        return std::binary_search(edges_.begin(), edges_.end(), e);
    }

    int edge_index(const EdgeId& e) const {
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
        if (it == edges_.end() || *it != e)
            throw UnknownEdgeError("edge {" + std::to_string(e.u) + "," +
                                   std::to_string(e.v) + "} not in graph");
        return static_cast<int>(it - edges_.begin());
    }

    bool has_labels() const { return !labels_.empty(); }

    /// Display name: the label if present, the index otherwise.
    std::string label(int v) const {
        if (v < 0 || v >= n_) throw IndexOutOfRangeError("vertex out of range");
        if (labels_.empty() || labels_[static_cast<size_t>(v)].empty())
            return std::to_string(v);
        return labels_[static_cast<size_t>(v)];
    }

    const std::vector<std::string>& raw_labels() const { return labels_; }

    /// Index of the vertex carrying the given label, -1 if absent.
    int find_label(const std::string& name) const {
        for (int v = 0; v < n_; ++v)
            if (!labels_.empty() && labels_[static_cast<size_t>(v)] == name) return v;
        return -1;
    }

private:
    int n_ = 0;
    std::vector<EdgeId> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::string> labels_;
};

}  // namespace meg
