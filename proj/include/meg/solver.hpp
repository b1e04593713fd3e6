#pragma once

#include <chrono>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "meg/monitor.hpp"

namespace meg {

struct SearchBudget {
    std::uint64_t node_limit = 10'000'000;
    double time_limit_seconds = 0;  // 0 = none
    int upper_bound_seed = -1;      // -1 = none

    void validate() const {
        if (node_limit == 0) throw BadParameterError("node limit must be positive");
        if (time_limit_seconds < 0) throw BadParameterError("time limit must be positive");
    }
};

/// Search gave up; carries the bound interval established so far.
struct BudgetExhausted : GraphError {
    int lower;
    int upper;
    BudgetExhausted(int lo, int hi)
        : GraphError("search budget exhausted; meg in [" + std::to_string(lo) + "," +
                     std::to_string(hi) + "]"),
          lower(lo),
          upper(hi) {}
};

struct SolveResult {
    int meg = 0;
    std::vector<int> witness;  // lexicographically smallest minimum MEG-set
    int xmeg = 0;
    std::uint64_t nodes_explored = 0;
};

namespace detail {

// Exact search on one connected piece (or any graph treated whole).
//
// Works over complements: X is "feasible" iff V\X is a MEG-set. Monitoring is
// monotone, so feasibility is antitone in X and a DFS that grows X in index
// order visits each feasible set once. meg = n - max |X|.
class ComplementSearch {
public:
    ComplementSearch(const Graph& g, const SearchBudget& budget)
        : g_(g), budget_(budget), start_(std::chrono::steady_clock::now()) {
        oracle_.emplace(apsp(g));
        const int n = g.vertex_count();
        pair_table_ = monitoring_pair_table(g, *oracle_);
        occurrences_.assign(static_cast<size_t>(n), {});
        alive_.resize(pair_table_.size());
        hits_.resize(pair_table_.size());
        for (size_t e = 0; e < pair_table_.size(); ++e) {
            alive_[e] = static_cast<int>(pair_table_[e].size());
            hits_[e].assign(pair_table_[e].size(), 0);
            for (size_t p = 0; p < pair_table_[e].size(); ++p) {
                auto [u, v] = pair_table_[e][p];
                occurrences_[static_cast<size_t>(u)].push_back({e, p});
                occurrences_[static_cast<size_t>(v)].push_back({e, p});
            }
        }
        // forced vertex: some edge's pairs all contain it; it can never join X
        std::vector<char> forced(static_cast<size_t>(n), 0);
        for (size_t e = 0; e < pair_table_.size(); ++e) {
            for (int cand : {pair_table_[e][0].first, pair_table_[e][0].second}) {
                bool in_all = true;
                for (auto [u, v] : pair_table_[e])
                    if (u != cand && v != cand) {
                        in_all = false;
                        break;
                    }
                if (in_all) forced[static_cast<size_t>(cand)] = 1;
            }
        }
        for (int v = 0; v < n; ++v)
            if (forced[static_cast<size_t>(v)])
                forced_.push_back(v);
            else
                candidates_.push_back(v);
        leaf_count_ = 0;
        for (int v = 0; v < n; ++v)
            if (g.degree(v) == 1) ++leaf_count_;
    }

    std::uint64_t nodes() const { return nodes_; }
    int lower_bound() const {
        return std::max(leaf_count_, static_cast<int>(forced_.size()));
    }

    // Returns (meg, lexicographically smallest witness). stop_at_meg: if the
    // search proves meg <= stop_at_meg it may return early with any witness
    // of that quality (used by the decision variant).
    SolveResult solve(int stop_at_meg = -1) {
        const int n = g_.vertex_count();
        best_x_ = 0;
        stop_x_ = stop_at_meg < 0 ? -1 : n - stop_at_meg;
        if (stop_x_ != -1 && stop_x_ <= 0) stop_x_ = 0;  // trivially reached
        stopped_ = false;
        x_.clear();
        dfs_max(0);
        SolveResult result;
        result.meg = n - best_x_;
        result.nodes_explored = nodes_;
        result.xmeg = best_x_;
        if (stopped_) {
            result.witness = best_witness_;
            return result;
        }
        // second pass: lexicographically smallest minimum MEG-set, built by
        // preferring to keep each vertex (skip it from X) in ascending order
        x_.clear();
        witness_x_.clear();
        if (!dfs_lex(0))
            throw GraphError("internal: optimum not reproducible");  // unreachable
        std::vector<char> in_x(static_cast<size_t>(n), 0);
        for (int v : witness_x_) in_x[static_cast<size_t>(v)] = 1;
        for (int v = 0; v < n; ++v)
            if (!in_x[static_cast<size_t>(v)]) result.witness.push_back(v);
        result.nodes_explored = nodes_;
        return result;
    }

private:
    void tick() {
        if (++nodes_ >= budget_.node_limit) throw_budget();
        if (budget_.time_limit_seconds > 0 && (nodes_ & 1023) == 0) {
            auto elapsed = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start_)
                               .count();
            if (elapsed > budget_.time_limit_seconds) throw_budget();
        }
    }

    [[noreturn]] void throw_budget() {
        throw BudgetExhausted(lower_bound(), g_.vertex_count() - best_x_);
    }

    bool push(int v) {
        for (auto [e, p] : occurrences_[static_cast<size_t>(v)])
            if (hits_[e][p]++ == 0) --alive_[e];
        for (auto [e, p] : occurrences_[static_cast<size_t>(v)])
            if (alive_[e] == 0) {
                pop(v);
                return false;
            }
        return true;
    }

    void pop(int v) {
        for (auto [e, p] : occurrences_[static_cast<size_t>(v)])
            if (--hits_[e][p] == 0) ++alive_[e];
    }

    void dfs_max(size_t from) {
        tick();
        if (static_cast<int>(x_.size()) > best_x_) {
            best_x_ = static_cast<int>(x_.size());
            if (stop_x_ != -1 && best_x_ >= stop_x_) {
                record_stop_witness();
                return;
            }
        }
        for (size_t i = from; i < candidates_.size() && !stopped_; ++i) {
            if (static_cast<int>(x_.size() + candidates_.size() - i) <= best_x_) break;
            int v = candidates_[i];
            if (!push(v)) continue;
            x_.push_back(v);
            dfs_max(i + 1);
            x_.pop_back();
            pop(v);
        }
    }

    void record_stop_witness() {
        stopped_ = true;
        const int n = g_.vertex_count();
        std::vector<char> in_x(static_cast<size_t>(n), 0);
        for (int v : x_) in_x[static_cast<size_t>(v)] = 1;
        best_witness_.clear();
        for (int v = 0; v < n; ++v)
            if (!in_x[static_cast<size_t>(v)]) best_witness_.push_back(v);
    }

    // Find the first X of size best_x_ when deciding candidates in ascending
    // order with "keep in S" tried before "move to X". The first solution
    // yields the lexicographically smallest minimum MEG-set.
    bool dfs_lex(size_t i) {
        tick();
        if (static_cast<int>(x_.size()) == best_x_) {
            witness_x_ = x_;
            return true;
        }
        if (static_cast<int>(x_.size() + candidates_.size() - i) < best_x_) return false;
        if (i >= candidates_.size()) return false;
        if (dfs_lex(i + 1)) return true;  // keep candidates_[i] in S
        int v = candidates_[i];
        if (!push(v)) return false;
        x_.push_back(v);
        bool ok = dfs_lex(i + 1);
        if (!ok) {
            x_.pop_back();
            pop(v);
        }
        return ok;
    }

    const Graph& g_;
    SearchBudget budget_;
    std::chrono::steady_clock::time_point start_;
    std::optional<DistanceOracle> oracle_;
    std::vector<std::vector<std::pair<int, int>>> pair_table_;
    std::vector<std::vector<std::pair<size_t, size_t>>> occurrences_;
    std::vector<int> alive_;
    std::vector<std::vector<int>> hits_;
    std::vector<int> forced_;
    std::vector<int> candidates_;
    std::vector<int> x_;
    std::vector<int> witness_x_;
    std::vector<int> best_witness_;
    int leaf_count_ = 0;
    int best_x_ = 0;
    int stop_x_ = -1;
    bool stopped_ = false;
    std::uint64_t nodes_ = 0;
};

inline Graph induced_subgraph(const Graph& g, const std::vector<int>& verts,
                              std::vector<int>& local_to_global) {
    local_to_global = verts;
    std::vector<int> global_to_local(static_cast<size_t>(g.vertex_count()), -1);
    for (size_t i = 0; i < verts.size(); ++i)
        global_to_local[static_cast<size_t>(verts[i])] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : g.edges()) {
        int a = global_to_local[static_cast<size_t>(e.u)];
        int b = global_to_local[static_cast<size_t>(e.v)];
        if (a != -1 && b != -1) edges.emplace_back(a, b);
    }
    return Graph::build(static_cast<int>(verts.size()), edges);
}

}  // namespace detail

/// Exact minimum MEG-set. Disconnected graphs are solved per component and
/// summed; an edgeless component contributes nothing.
inline SolveResult meg_min(const Graph& g, const SearchBudget& budget = {}) {
    budget.validate();
    auto [comp, count] = components(g);
    SolveResult total;
    if (count <= 1) {
        if (g.edge_count() == 0) {
            total.xmeg = g.vertex_count();
            return total;
        }
        detail::ComplementSearch search(g, budget);
        total = search.solve();
        return total;
    }
    std::uint64_t nodes = 0;
    std::vector<int> witness;
    int meg_sum = 0;
    for (int c = 0; c < count; ++c) {
        std::vector<int> verts;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (comp[static_cast<size_t>(v)] == c) verts.push_back(v);
        std::vector<int> back;
        Graph sub = detail::induced_subgraph(g, verts, back);
        if (sub.edge_count() == 0) continue;
        SearchBudget local = budget;
        if (local.node_limit > nodes)
            local.node_limit -= nodes;
        else
            throw BudgetExhausted(meg_sum, g.vertex_count());
        detail::ComplementSearch search(sub, local);
        SolveResult r;
        try {
            r = search.solve();
        } catch (const BudgetExhausted& ex) {
            throw BudgetExhausted(meg_sum + ex.lower, g.vertex_count());
        }
        nodes += r.nodes_explored;
        meg_sum += r.meg;
        for (int v : r.witness) witness.push_back(back[static_cast<size_t>(v)]);
    }
    std::sort(witness.begin(), witness.end());
    total.meg = meg_sum;
    total.xmeg = g.vertex_count() - meg_sum;
    total.witness = std::move(witness);
    total.nodes_explored = nodes;
    return total;
}

/// True iff a MEG-set of size <= k exists.
inline bool meg_decision(const Graph& g, int k, const SearchBudget& budget = {}) {
    if (k < 0) throw BadParameterError("k must be nonnegative");
    budget.validate();
    if (k >= g.vertex_count()) return true;  // V itself is a MEG-set
    auto [comp, count] = components(g);
    if (count <= 1) {
        if (g.edge_count() == 0) return true;
        detail::ComplementSearch search(g, budget);
        return search.solve(k).meg <= k;
    }
    return meg_min(g, budget).meg <= k;
}

struct MinimalSetsResult {
    std::vector<std::vector<int>> sets;  // sorted lexicographically
    bool complete = true;
};

/// All inclusion-minimal MEG-sets, up to `limit` of them. Intended for small
/// graphs; enumeration walks every complement whose removal keeps a MEG-set.
inline MinimalSetsResult enumerate_minimal_meg_sets(const Graph& g, int limit) {
    if (limit <= 0) throw BadParameterError("limit must be positive");
    const int n = g.vertex_count();
    if (n > 20) throw BadParameterError("enumeration limited to 20 vertices");
    auto oracle = apsp(g);
    auto table = monitoring_pair_table(g, oracle);
    const size_t m = table.size();
    // bitmask per pair; edge covered by S=V\X iff some pair misses X entirely
    std::vector<std::vector<std::uint32_t>> masks(m);
    for (size_t e = 0; e < m; ++e)
        for (auto [u, v] : table[e])
            masks[e].push_back((1u << u) | (1u << v));
    auto feasible = [&](std::uint32_t x) {
        for (size_t e = 0; e < m; ++e) {
            bool covered = false;
            for (std::uint32_t pm : masks[e])
                if ((pm & x) == 0) {
                    covered = true;
                    break;
                }
            if (!covered) return false;
        }
        return true;
    };
    MinimalSetsResult out;
    // DFS over feasible X in index order; record complements of maximal X.
    auto rec = [&](auto&& self, std::uint32_t x, int from) -> bool {
        bool maximal = true;
        for (int v = 0; v < n; ++v) {
            if (x & (1u << v)) continue;
            std::uint32_t ext = x | (1u << v);
            if (!feasible(ext)) continue;
            maximal = false;
            if (v >= from && !self(self, ext, v + 1)) return false;
        }
        if (maximal) {
            if (static_cast<int>(out.sets.size()) >= limit) {
                out.complete = false;
                return false;
            }
            std::vector<int> s;
            for (int v = 0; v < n; ++v)
                if (!(x & (1u << v))) s.push_back(v);
            out.sets.push_back(std::move(s));
        }
        return true;
    };
    rec(rec, 0, 0);
    std::sort(out.sets.begin(), out.sets.end());
    out.sets.erase(std::unique(out.sets.begin(), out.sets.end()), out.sets.end());
    return out;
}

}  // namespace meg
