#pragma once

#include <optional>
#include <string>
#include <vector>

#include "meg/solver.hpp"

namespace meg {

struct EmptyFactorError : GraphError {
    using GraphError::GraphError;
};

enum class ProductKind { cartesian, strong };

inline std::string to_string(ProductKind k) {
    return k == ProductKind::cartesian ? "cartesian" : "strong";
}

/// Product of two graphs with the row-major vertex indexing (a,b) -> a*|H|+b.
struct ProductGraph {
    Graph graph;
    Graph factor_g;
    Graph factor_h;
    ProductKind kind;

    int index(int a, int b) const { return a * factor_h.vertex_count() + b; }
    std::pair<int, int> coords(int idx) const {
        int nh = factor_h.vertex_count();
        return {idx / nh, idx % nh};
    }
};

namespace detail {

inline ProductGraph make_product(const Graph& g, const Graph& h, ProductKind kind) {
    const int ng = g.vertex_count();
    const int nh = h.vertex_count();
    if (ng == 0 || nh == 0) throw EmptyFactorError("product factor is empty");
    std::vector<std::pair<int, int>> edges;
    auto idx = [nh](int a, int b) { return a * nh + b; };
    for (const auto& e : g.edges())
        for (int b = 0; b < nh; ++b) edges.emplace_back(idx(e.u, b), idx(e.v, b));
    for (const auto& f : h.edges())
        for (int a = 0; a < ng; ++a) edges.emplace_back(idx(a, f.u), idx(a, f.v));
    if (kind == ProductKind::strong)
        for (const auto& e : g.edges())
            for (const auto& f : h.edges()) {
                edges.emplace_back(idx(e.u, f.u), idx(e.v, f.v));
                edges.emplace_back(idx(e.u, f.v), idx(e.v, f.u));
            }
    std::vector<std::string> labels(static_cast<size_t>(ng) * nh);
    for (int a = 0; a < ng; ++a)
        for (int b = 0; b < nh; ++b)
            labels[static_cast<size_t>(idx(a, b))] = "(" + g.label(a) + "," + h.label(b) + ")";
    return ProductGraph{Graph::build(ng * nh, edges, std::move(labels)), g, h, kind};
}

}  // namespace detail

inline ProductGraph cartesian(const Graph& g, const Graph& h) {
    return detail::make_product(g, h, ProductKind::cartesian);
}

inline ProductGraph strong(const Graph& g, const Graph& h) {
    return detail::make_product(g, h, ProductKind::strong);
}

/// Left fold of a factor list: ((f0 op0 f1) op1 f2) ...
inline Graph product_fold(const std::vector<Graph>& factors,
                          const std::vector<ProductKind>& ops) {
    if (factors.empty()) throw EmptyFactorError("no factors");
    if (ops.size() + 1 != factors.size())
        throw BadParameterError("need one product operator per extra factor");
    Graph acc = factors[0];
    for (size_t i = 0; i + 1 < factors.size(); ++i)
        acc = detail::make_product(acc, factors[i + 1], ops[i]).graph;
    return acc;
}

/// S v T = {(a,b) : a in S or b in T}, as sorted product indices.
inline std::vector<int> join_set(int ng, int nh, const std::vector<int>& s,
                                 const std::vector<int>& t) {
    std::vector<char> in_s(static_cast<size_t>(ng), 0), in_t(static_cast<size_t>(nh), 0);
    for (int a : s) {
        if (a < 0 || a >= ng) throw IndexOutOfRangeError("join: S vertex out of range");
        in_s[static_cast<size_t>(a)] = 1;
    }
    for (int b : t) {
        if (b < 0 || b >= nh) throw IndexOutOfRangeError("join: T vertex out of range");
        in_t[static_cast<size_t>(b)] = 1;
    }
    std::vector<int> out;
    for (int a = 0; a < ng; ++a)
        for (int b = 0; b < nh; ++b)
            if (in_s[static_cast<size_t>(a)] || in_t[static_cast<size_t>(b)])
                out.push_back(a * nh + b);
    return out;
}

inline std::vector<int> join_set(const ProductGraph& p, const std::vector<int>& s,
                                 const std::vector<int>& t) {
    return join_set(p.factor_g.vertex_count(), p.factor_h.vertex_count(), s, t);
}

/// Row/column decomposition of a product vertex set:
/// rows[x] = S_{x,*}, cols[y] = S_{*,y}.
struct SliceView {
    std::vector<std::vector<int>> rows;
    std::vector<std::vector<int>> cols;
};

inline SliceView slices(const ProductGraph& p, const std::vector<int>& s) {
    SliceView view;
    view.rows.assign(static_cast<size_t>(p.factor_g.vertex_count()), {});
    view.cols.assign(static_cast<size_t>(p.factor_h.vertex_count()), {});
    for (int idx : s) {
        if (idx < 0 || idx >= p.graph.vertex_count())
            throw IndexOutOfRangeError("slice: vertex out of range");
        auto [a, b] = p.coords(idx);
        view.rows[static_cast<size_t>(a)].push_back(b);
        view.cols[static_cast<size_t>(b)].push_back(a);
    }
    for (auto& r : view.rows) std::sort(r.begin(), r.end());
    for (auto& c : view.cols) std::sort(c.begin(), c.end());
    return view;
}

enum class BoundProvenance { formula, solved, theorem };

inline std::string to_string(BoundProvenance p) {
    switch (p) {
        case BoundProvenance::formula: return "formula";
        case BoundProvenance::solved: return "solved";
        case BoundProvenance::theorem: return "theorem";
    }
    return "?";
}

struct ProductValue {
    long long meg;
    BoundProvenance provenance;
};

struct BoundsReport {
    int n_g = 0, n_h = 0;
    int meg_g = 0, meg_h = 0;
    bool unique_g = false, unique_h = false;
    long long lower = 0;  // max{meg(G)|H|, meg(H)|G|}
    long long upper = 0;  // meg(G)|H| + meg(H)|G| - meg(G)meg(H)
    std::optional<ProductValue> cartesian_value;
    std::optional<ProductValue> strong_value;
};

/// Instantiates the product bounds for a factor pair. Factor invariants are
/// always solved exactly; the products themselves are solved only within
/// budget. A factor with a unique minimal MEG-set pins the Cartesian value at
/// the upper formula without a search. No such collapse exists for the strong
/// product: its row/column edges are monitored only by their own endpoints
/// (diagonal detours restore any other distance), so meg(G x H) is |V(G)||V(H)|
/// whenever both factors are connected with >= 2 vertices, which can exceed
/// the formula upper bound. The strong value is therefore always solved.
inline BoundsReport bounds_report(const Graph& g, const Graph& h,
                                  const SearchBudget& budget = {},
                                  bool solve_products = true) {
    BoundsReport r;
    r.n_g = g.vertex_count();
    r.n_h = h.vertex_count();
    if (r.n_g == 0 || r.n_h == 0) throw EmptyFactorError("product factor is empty");
    r.meg_g = meg_min(g, budget).meg;
    r.meg_h = meg_min(h, budget).meg;
    r.unique_g = unique_minimal_meg(g).has_unique;
    r.unique_h = unique_minimal_meg(h).has_unique;
    r.lower = std::max(static_cast<long long>(r.meg_g) * r.n_h,
                       static_cast<long long>(r.meg_h) * r.n_g);
    r.upper = static_cast<long long>(r.meg_g) * r.n_h +
              static_cast<long long>(r.meg_h) * r.n_g -
              static_cast<long long>(r.meg_g) * r.meg_h;
    if (r.unique_g || r.unique_h)
        r.cartesian_value = ProductValue{r.upper, BoundProvenance::theorem};
    if (!solve_products) return r;
    try {
        long long mc;
        if (r.cartesian_value) {
            mc = r.cartesian_value->meg;
        } else {
            auto pc = cartesian(g, h);
            mc = meg_min(pc.graph, budget).meg;
            r.cartesian_value = ProductValue{mc, BoundProvenance::solved};
        }
        auto ps = strong(g, h);
        long long ms = meg_min(ps.graph, budget).meg;
        r.strong_value = ProductValue{ms, BoundProvenance::solved};
        if (mc < r.lower || mc > r.upper || ms < mc)
            throw GraphError("internal: product bound violated");
    } catch (const BudgetExhausted&) {
        // formula bounds stand on their own; solved values stay unset
    }
    return r;
}

}  // namespace meg
