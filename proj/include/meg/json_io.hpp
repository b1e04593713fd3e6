#pragma once

#include <json.hpp>

#include "meg/monitor.hpp"
#include "meg/products.hpp"
#include "meg/reduction.hpp"
#include "meg/solver.hpp"

namespace meg {

inline nlohmann::json to_json(const MegVerdict& verdict) {
    nlohmann::json j;
    j["is_meg"] = verdict.is_meg;
    j["unmonitored"] = nlohmann::json::array();
    for (const auto& e : verdict.unmonitored) j["unmonitored"].push_back({e.u, e.v});
    j["certificate"] = nlohmann::json::object();
    for (const auto& [e, pair] : verdict.certificate)
        j["certificate"][std::to_string(e.u) + "-" + std::to_string(e.v)] = {pair.first,
                                                                             pair.second};
    return j;
}

inline nlohmann::json to_json(const SolveResult& result) {
    return {{"meg", result.meg},
            {"xmeg", result.xmeg},
            {"witness", result.witness},
            {"nodes_explored", result.nodes_explored}};
}

inline nlohmann::json to_json(const BoundsReport& r) {
    nlohmann::json j{{"n_g", r.n_g},
                     {"n_h", r.n_h},
                     {"meg_g", r.meg_g},
                     {"meg_h", r.meg_h},
                     {"unique_g", r.unique_g},
                     {"unique_h", r.unique_h},
                     {"lower", r.lower},
                     {"upper", r.upper}};
    auto put = [&](const char* key, const std::optional<ProductValue>& v) {
        if (v)
            j[key] = {{"meg", v->meg}, {"provenance", to_string(v->provenance)}};
        else
            j[key] = nullptr;
    };
    put("cartesian", r.cartesian_value);
    put("strong", r.strong_value);
    return j;
}

/// Sidecar for a reduction graph: target k, counts, and the role of every
/// vertex (its gadget label).
inline nlohmann::json layout_sidecar(const ReductionLayout& layout) {
    nlohmann::json roles = nlohmann::json::object();
    for (int v = 0; v < layout.graph.vertex_count(); ++v)
        roles[std::to_string(v)] = layout.graph.label(v);
    return {{"k", layout.k},
            {"m", layout.m},
            {"n", layout.n},
            {"t", layout.t},
            {"roles", roles}};
}

}  // namespace meg
