#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "meg/distance.hpp"
#include "meg/graph.hpp"

namespace meg {

/// Edge-removal criterion: {u,v} monitors e iff deleting e changes
/// dist(u,v). A pair unreachable both before and after does not monitor.
inline bool pair_monitors_edge(const Graph& g, const DistanceOracle& oracle, int u,
                               int v, const EdgeId& e) {
    int before = oracle.dist(u, v);
    int after = dist_without_edge(g, e, u, v);
    return before != after;
}

/// Path-count criterion: {u,v} monitors e={x,y} iff dist(u,v) is finite and
/// every shortest u-v path traverses e, i.e. sigma(u,v) equals the number of
/// shortest paths through e in either orientation.
inline bool pair_monitors_edge_counting(const DistanceOracle& oracle, int u, int v,
                                        const EdgeId& e) {
    int d = oracle.dist(u, v);
    if (d == kUnreachable) return false;
    auto through = [&](int a, int p, int q, int b) -> BigInt {
        int dap = oracle.dist(a, p);
        int dqb = oracle.dist(q, b);
        if (dap == kUnreachable || dqb == kUnreachable) return 0;
        if (dap + 1 + dqb != d) return 0;
        return oracle.sigma(a, p) * oracle.sigma(q, b);
    };
    return oracle.sigma(u, v) == through(u, e.u, e.v, v) + through(u, e.v, e.u, v);
}

/// All unordered pairs {u,v} (u < v) that monitor e, in lexicographic order.
inline std::vector<std::pair<int, int>> monitoring_pairs(const Graph& g,
                                                         const DistanceOracle& oracle,
                                                         const EdgeId& e) {
    g.edge_index(e);  // UnknownEdge check
    std::vector<std::pair<int, int>> pairs;
    const int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (pair_monitors_edge_counting(oracle, u, v, e)) pairs.emplace_back(u, v);
    return pairs;
}

inline std::vector<std::pair<int, int>> monitoring_pairs(const Graph& g,
                                                         const EdgeId& e) {
    auto oracle = apsp(g);
    return monitoring_pairs(g, oracle, e);
}

/// Monitoring pairs for every edge, indexed like g.edges().
inline std::vector<std::vector<std::pair<int, int>>> monitoring_pair_table(
    const Graph& g, const DistanceOracle& oracle) {
    std::vector<std::vector<std::pair<int, int>>> table;
    table.reserve(g.edges().size());
    for (const auto& e : g.edges()) table.push_back(monitoring_pairs(g, oracle, e));
    return table;
}

struct MegVerdict {
    bool is_meg = false;
    std::vector<EdgeId> unmonitored;
    // per monitored edge, the lexicographically smallest witnessing pair in S
    std::map<EdgeId, std::pair<int, int>> certificate;
};

/// Verdict for "S is a MEG-set", with certificates drawn from S.
inline MegVerdict is_meg_set(const Graph& g, const DistanceOracle& oracle,
                             std::vector<int> s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (int v : s)
        if (v < 0 || v >= g.vertex_count())
            throw IndexOutOfRangeError("set vertex out of range");
    MegVerdict verdict;
    const int k = static_cast<int>(s.size());
    for (const auto& e : g.edges()) {
        std::optional<std::pair<int, int>> hit;
        for (int i = 0; i < k && !hit; ++i)
            for (int j = i + 1; j < k; ++j)
                if (pair_monitors_edge_counting(oracle, s[i], s[j], e)) {
                    hit = {s[i], s[j]};
                    break;
                }
        if (hit)
            verdict.certificate.emplace(e, *hit);
        else
            verdict.unmonitored.push_back(e);
    }
    verdict.is_meg = verdict.unmonitored.empty();
    return verdict;
}

inline MegVerdict is_meg_set(const Graph& g, const std::vector<int>& s) {
    auto oracle = apsp(g);
    return is_meg_set(g, oracle, s);
}

/// Vertices contained in every MEG-set: v is forced iff V\{v} is not a
/// MEG-set, i.e. some edge's monitoring pairs all contain v.
inline std::vector<int> forced_vertices(const Graph& g, const DistanceOracle& oracle) {
    const int n = g.vertex_count();
    std::vector<char> forced(static_cast<size_t>(n), 0);
    for (const auto& e : g.edges()) {
        auto pairs = monitoring_pairs(g, oracle, e);
        // intersection of all pairs of this edge
        std::vector<char> in_all(static_cast<size_t>(n), 1);
        std::vector<char> cur(static_cast<size_t>(n), 0);
        for (auto [u, v] : pairs) {
            std::fill(cur.begin(), cur.end(), 0);
            cur[static_cast<size_t>(u)] = cur[static_cast<size_t>(v)] = 1;
            for (int w = 0; w < n; ++w) in_all[static_cast<size_t>(w)] &= cur[static_cast<size_t>(w)];
        }
        for (int w = 0; w < n; ++w)
            if (in_all[static_cast<size_t>(w)]) forced[static_cast<size_t>(w)] = 1;
    }
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (forced[static_cast<size_t>(v)]) out.push_back(v);
    return out;
}

inline std::vector<int> forced_vertices(const Graph& g) {
    auto oracle = apsp(g);
    return forced_vertices(g, oracle);
}

struct UniqueMinimalResult {
    bool has_unique = false;
    std::vector<int> witness;  // set when has_unique
};

/// A unique minimal MEG-set exists iff the forced set is itself a MEG-set.
inline UniqueMinimalResult unique_minimal_meg(const Graph& g) {
    auto oracle = apsp(g);
    auto forced = forced_vertices(g, oracle);
    if (is_meg_set(g, oracle, forced).is_meg) return {true, std::move(forced)};
    return {false, {}};
}

}  // namespace meg
