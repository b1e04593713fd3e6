#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "meg/products.hpp"

namespace meg {

enum class Family {
    path,
    cycle,
    complete,
    multipartite,
    grid,
    king,
    torus,
    toroidal_king,
    pendant_cycle,
};

struct FamilySpec {
    Family tag;
    std::vector<int> params;
};

inline std::string to_string(Family f) {
    switch (f) {
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::complete: return "complete";
        case Family::multipartite: return "multipartite";
        case Family::grid: return "grid";
        case Family::king: return "king";
        case Family::torus: return "torus";
        case Family::toroidal_king: return "toroidal_king";
        case Family::pendant_cycle: return "pendant_cycle";
    }
    return "?";
}

inline Graph make_path(int m) {
    if (m < 1) throw BadParameterError("path needs m >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < m; ++i) edges.emplace_back(i, i + 1);
    return Graph::build(m, edges);
}

inline Graph make_cycle(int m) {
    if (m < 3) throw BadParameterError("cycle needs m >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i) edges.emplace_back(i, (i + 1) % m);
    return Graph::build(m, edges);
}

inline Graph make_complete(int r) {
    if (r < 1) throw BadParameterError("complete graph needs r >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) edges.emplace_back(i, j);
    return Graph::build(r, edges);
}

inline Graph make_multipartite(const std::vector<int>& parts) {
    if (parts.size() < 2) throw BadParameterError("multipartite needs >= 2 parts");
    for (int p : parts)
        if (p < 1) throw BadParameterError("multipartite part sizes must be >= 1");
    int n = std::accumulate(parts.begin(), parts.end(), 0);
    std::vector<int> part_of;
    for (size_t i = 0; i < parts.size(); ++i)
        part_of.insert(part_of.end(), static_cast<size_t>(parts[i]), static_cast<int>(i));
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[static_cast<size_t>(u)] != part_of[static_cast<size_t>(v)])
                edges.emplace_back(u, v);
    return Graph::build(n, edges);
}

/// The 5-cycle abcde with pendant edges aa' and bb'.
/// Vertices: a=0, b=1, c=2, d=3, e=4, a'=5, b'=6.
inline Graph pendant_cycle_example() {
    return Graph::build(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}},
                        {"a", "b", "c", "d", "e", "a'", "b'"});
}

inline Graph generate(const FamilySpec& spec) {
    auto need = [&](size_t count) {
        if (spec.params.size() != count)
            throw BadParameterError(to_string(spec.tag) + " expects " +
                                    std::to_string(count) + " parameter(s)");
    };
    switch (spec.tag) {
        case Family::path:
            need(1);
            return make_path(spec.params[0]);
        case Family::cycle:
            need(1);
            return make_cycle(spec.params[0]);
        case Family::complete:
            need(1);
            return make_complete(spec.params[0]);
        case Family::multipartite:
            return make_multipartite(spec.params);
        case Family::grid:
        case Family::king: {
            if (spec.params.empty())
                throw BadParameterError("grid/king needs at least one side length");
            std::vector<Graph> factors;
            for (int m : spec.params) factors.push_back(make_path(m));
            std::vector<ProductKind> ops(factors.size() - 1,
                                         spec.tag == Family::grid ? ProductKind::cartesian
                                                                  : ProductKind::strong);
            return product_fold(factors, ops);
        }
        case Family::torus:
            need(1);
            return cartesian(make_cycle(spec.params[0]), make_cycle(spec.params[0])).graph;
        case Family::toroidal_king:
            need(1);
            return strong(make_cycle(spec.params[0]), make_cycle(spec.params[0])).graph;
        case Family::pendant_cycle:
            need(0);
            return pendant_cycle_example();
    }
    throw BadParameterError("unknown family");
}

/// Diagonal MEG-set of C_m [] C_m: all (i,j) with (i+j) mod m in a fixed
/// 3-element MEG-set of C_m; size 3m. Row-major indices i*m+j. The base set
/// is {0, floor(m/2), m-1} for odd m. For even m an antipodal pair monitors
/// nothing (the two arcs between it tie), so the set shifts to
/// {0, m/2-1, m-2}, whose three gaps (m/2-1, m/2-1, 2) all stay below m/2.
inline std::vector<int> torus_witness(int m) {
    if (m < 5) throw BadParameterError("torus witness needs m >= 5");
    std::vector<char> in_s(static_cast<size_t>(m), 0);
    if (m % 2 == 0) {
        in_s[0] = in_s[static_cast<size_t>(m / 2 - 1)] = in_s[static_cast<size_t>(m - 2)] = 1;
    } else {
        in_s[0] = in_s[static_cast<size_t>(m / 2)] = in_s[static_cast<size_t>(m - 1)] = 1;
    }
    std::vector<int> out;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (in_s[static_cast<size_t>((i + j) % m)]) out.push_back(i * m + j);
    return out;
}

/// The 20-vertex MEG-set of C_5 [x] C_5: everything except the independent
/// set {(0,0),(1,2),(2,4),(3,1),(4,3)}.
inline std::vector<int> king_torus_witness_c5() {
    std::vector<char> omit(25, 0);
    for (auto [i, j] : {std::pair{0, 0}, {1, 2}, {2, 4}, {3, 1}, {4, 3}})
        omit[static_cast<size_t>(i * 5 + j)] = 1;
    std::vector<int> out;
    for (int v = 0; v < 25; ++v)
        if (!omit[static_cast<size_t>(v)]) out.push_back(v);
    return out;
}

}  // namespace meg
