#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <deque>
#include <tuple>
#include <vector>

#include "meg/graph.hpp"

namespace meg {

using BigInt = boost::multiprecision::cpp_int;

/// Sentinel for disconnected pairs. Never a large finite stand-in, so that
/// "distance changed" comparisons involving disconnection stay exact.
inline constexpr int kUnreachable = -1;

/// All-pairs hop distances plus exact shortest-path counts. Counts are
/// arbitrary precision: they grow exponentially on product-like graphs and
/// the monitoring criterion needs exact equality.
class DistanceOracle {
public:
    DistanceOracle(int n, std::vector<int> dist, std::vector<BigInt> sigma)
        : n_(n), dist_(std::move(dist)), sigma_(std::move(sigma)) {}

    int size() const { return n_; }

    int dist(int u, int v) const { return dist_[static_cast<size_t>(u) * n_ + v]; }

    const BigInt& sigma(int u, int v) const {
        return sigma_[static_cast<size_t>(u) * n_ + v];
    }

private:
    int n_;
    std::vector<int> dist_;
    std::vector<BigInt> sigma_;
};

/// BFS from every vertex, accumulating distances and shortest-path counts.
inline DistanceOracle apsp(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> dist(static_cast<size_t>(n) * n, kUnreachable);
    std::vector<BigInt> sigma(static_cast<size_t>(n) * n, 0);
    std::deque<int> queue;
    for (int s = 0; s < n; ++s) {
        int* d = dist.data() + static_cast<size_t>(s) * n;
        BigInt* sg = sigma.data() + static_cast<size_t>(s) * n;
        d[s] = 0;
        sg[s] = 1;
        queue.clear();
        queue.push_back(s);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(u)) {
                if (d[w] == kUnreachable) {
                    d[w] = d[u] + 1;
                    queue.push_back(w);
                }
                if (d[w] == d[u] + 1) sg[w] += sg[u];
            }
        }
    }
    return DistanceOracle(n, std::move(dist), std::move(sigma));
}

/// Distance from u to v with edge e deleted; targeted BFS, g is not mutated.
inline int dist_without_edge(const Graph& g, const EdgeId& e, int u, int v) {
    if (!g.has_edge(e))
        throw UnknownEdgeError("edge {" + std::to_string(e.u) + "," +
                               std::to_string(e.v) + "} not in graph");
    const int n = g.vertex_count();
    if (u < 0 || u >= n || v < 0 || v >= n)
        throw IndexOutOfRangeError("vertex out of range");
    if (u == v) return 0;
    std::vector<int> d(static_cast<size_t>(n), kUnreachable);
    std::deque<int> queue;
    d[u] = 0;
    queue.push_back(u);
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(x)) {
            if (EdgeId(std::min(x, w), std::max(x, w)) == e) continue;
            if (d[w] != kUnreachable) continue;
            d[w] = d[x] + 1;
            if (w == v) return d[w];
            queue.push_back(w);
        }
    }
    return kUnreachable;
}

struct GraphMetrics {
    int diameter = 0;  // max over reachable pairs; 0 when no such pair
    int leaf_count = 0;
    bool connected = true;
    std::vector<int> component;  // component id per vertex
    int component_count = 0;
};

/// Component id per vertex (BFS labeling); returns (ids, count).
inline std::pair<std::vector<int>, int> components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> comp(static_cast<size_t>(n), -1);
    int count = 0;
    std::deque<int> queue;
    for (int s = 0; s < n; ++s) {
        if (comp[static_cast<size_t>(s)] != -1) continue;
        int id = count++;
        comp[static_cast<size_t>(s)] = id;
        queue.clear();
        queue.push_back(s);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(u)) {
                if (comp[static_cast<size_t>(w)] == -1) {
                    comp[static_cast<size_t>(w)] = id;
                    queue.push_back(w);
                }
            }
        }
    }
    return {std::move(comp), count};
}

inline GraphMetrics graph_metrics(const Graph& g) {
    const int n = g.vertex_count();
    GraphMetrics m;
    std::tie(m.component, m.component_count) = components(g);
    m.connected = m.component_count <= 1;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 1) ++m.leaf_count;
    auto oracle = apsp(g);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (oracle.dist(u, v) != kUnreachable)
                m.diameter = std::max(m.diameter, oracle.dist(u, v));
    return m;
}

}  // namespace meg
