#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "meg/monitor.hpp"
#include "meg/solver.hpp"

namespace meg {

struct ParseError : GraphError {
    using GraphError::GraphError;
};
struct AssumptionViolatedError : GraphError {
    using GraphError::GraphError;
};

/// CNF with literals as signed 1-based variable indices. Clauses are literal
/// sets: sorted by variable then sign, duplicates collapsed.
struct CnfFormula {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;

    int num_clauses() const { return static_cast<int>(clauses.size()); }
};

namespace detail {

inline void canonicalize_clause(std::vector<int>& clause) {
    std::sort(clause.begin(), clause.end(), [](int a, int b) {
        if (std::abs(a) != std::abs(b)) return std::abs(a) < std::abs(b);
        return a > b;  // positive literal first
    });
    clause.erase(std::unique(clause.begin(), clause.end()), clause.end());
}

}  // namespace detail

/// Standard DIMACS cnf: `c` comments, `p cnf <vars> <clauses>` header,
/// zero-terminated literal lists (which may span lines).
inline CnfFormula parse_dimacs_cnf(const std::string& text) {
    CnfFormula f;
    bool header_seen = false;
    int declared_clauses = 0;
    std::vector<int> current;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "c") continue;
        if (tok == "p") {
            std::string kind;
            if (header_seen) throw ParseError("line " + std::to_string(lineno) + ": duplicate header");
            if (!(ls >> kind >> f.num_vars >> declared_clauses) || kind != "cnf" ||
                f.num_vars < 0 || declared_clauses < 0)
                throw ParseError("line " + std::to_string(lineno) + ": bad cnf header");
            header_seen = true;
            continue;
        }
        if (!header_seen)
            throw ParseError("line " + std::to_string(lineno) + ": clause before header");
        ls.clear();
        ls.str(line);
        int lit;
        while (ls >> lit) {
            if (lit == 0) {
                detail::canonicalize_clause(current);
                f.clauses.push_back(std::move(current));
                current.clear();
            } else if (std::abs(lit) > f.num_vars) {
                throw ParseError("line " + std::to_string(lineno) + ": literal " +
                                 std::to_string(lit) + " out of range");
            } else {
                current.push_back(lit);
            }
        }
        if (!ls.eof())
            throw ParseError("line " + std::to_string(lineno) + ": bad token");
    }
    if (!header_seen) throw ParseError("missing cnf header");
    if (!current.empty()) throw ParseError("unterminated clause at end of input");
    if (f.num_clauses() != declared_clauses)
        throw ParseError("clause count mismatch: header says " +
                         std::to_string(declared_clauses) + ", found " +
                         std::to_string(f.num_clauses()));
    return f;
}

enum class Resolution { sat_equivalent, trivially_sat, trivially_unsat };

inline std::string to_string(Resolution r) {
    switch (r) {
        case Resolution::sat_equivalent: return "SAT_EQUIVALENT";
        case Resolution::trivially_sat: return "TRIVIALLY_SAT";
        case Resolution::trivially_unsat: return "TRIVIALLY_UNSAT";
    }
    return "?";
}

struct PreprocessResult {
    CnfFormula reduced;  // meaningful only for sat_equivalent
    Resolution resolution = Resolution::sat_equivalent;
    std::map<int, bool> fixed;        // original variable -> forced value
    std::map<int, int> renumbering;   // original variable -> reduced variable
};

/// Iterated simplification to a fixpoint: drop tautological clauses, fix
/// pure literals (ascending variable index), and propagate unit clauses
/// (an exposed empty clause settles unsatisfiability). The surviving
/// formula has every variable in both polarities, no tautologies and
/// n >= 2, and is renumbered densely.
inline PreprocessResult preprocess(const CnfFormula& f) {
    PreprocessResult out;
    std::vector<std::vector<int>> clauses = f.clauses;
    for (auto& c : clauses) detail::canonicalize_clause(c);

    auto is_tautology = [](const std::vector<int>& c) {
        for (int lit : c)
            for (int other : c)
                if (lit == -other) return true;
        return false;
    };
    auto fix = [&](int var, bool value) {
        out.fixed[var] = value;
        int sat_lit = value ? var : -var;
        std::vector<std::vector<int>> next;
        for (auto& c : clauses) {
            if (std::find(c.begin(), c.end(), sat_lit) != c.end()) continue;
            std::vector<int> reduced_clause;
            for (int lit : c)
                if (lit != -sat_lit) reduced_clause.push_back(lit);
            next.push_back(std::move(reduced_clause));
        }
        clauses = std::move(next);
    };

    bool changed = true;
    while (changed) {
        changed = false;
        std::erase_if(clauses, is_tautology);
        for (const auto& c : clauses)
            if (c.empty()) {
                out.resolution = Resolution::trivially_unsat;
                return out;
            }
        // unit propagation, smallest variable first
        int unit = 0;
        for (const auto& c : clauses)
            if (c.size() == 1 && (unit == 0 || std::abs(c[0]) < std::abs(unit)))
                unit = c[0];
        if (unit != 0) {
            fix(std::abs(unit), unit > 0);
            changed = true;
            continue;
        }
        // pure literals, smallest variable first
        for (int var = 1; var <= f.num_vars && !changed; ++var) {
            bool pos = false, neg = false;
            for (const auto& c : clauses)
                for (int lit : c) {
                    if (lit == var) pos = true;
                    if (lit == -var) neg = true;
                }
            if (pos != neg) {
                fix(var, pos);
                changed = true;
            }
        }
    }
    if (clauses.size() < 2) {
        // zero clauses: vacuously satisfiable; a lone non-tautological,
        // non-empty clause: satisfiable by any of its literals
        if (clauses.size() == 1) out.fixed[std::abs(clauses[0][0])] = clauses[0][0] > 0;
        out.resolution = Resolution::trivially_sat;
        return out;
    }
    // dense renumbering of surviving variables
    for (const auto& c : clauses)
        for (int lit : c) out.renumbering.emplace(std::abs(lit), 0);
    int next_var = 0;
    for (auto& [var, id] : out.renumbering) id = ++next_var;
    out.reduced.num_vars = next_var;
    for (auto& c : clauses) {
        std::vector<int> mapped;
        for (int lit : c) {
            int v = out.renumbering.at(std::abs(lit));
            mapped.push_back(lit > 0 ? v : -v);
        }
        detail::canonicalize_clause(mapped);
        out.reduced.clauses.push_back(std::move(mapped));
    }
    out.resolution = Resolution::sat_equivalent;
    return out;
}

/// Vertex ids of one variable gadget F_i: the cycle r+ s+ s- r- t with
/// pendant paths p+ q+ r+ and p- q- r-.
struct VariableGadget {
    int p_pos, q_pos, r_pos, s_pos, s_neg, r_neg, q_neg, p_neg, t;
};

/// Vertex ids of one clause gadget H_j: triangle u v w, pendants v-x, w-y.
struct ClauseGadget {
    int u, v, w, x, y;
};

struct ReductionLayout {
    Graph graph;
    int k = 0;  // 3m + 2n
    int m = 0;  // variables
    int n = 0;  // clauses
    int t = 0;  // total literal occurrences
    std::vector<VariableGadget> vars;
    std::vector<ClauseGadget> clause_gadgets;
    int z1 = 0, z2 = 0;
};

/// The SAT gadget graph. Vertex numbering is deterministic: variable
/// gadgets, then clause gadgets, then connector paths (by variable, then
/// clause), then z1 and z2.
inline ReductionLayout build_reduction(const CnfFormula& f) {
    const int m = f.num_vars;
    const int n = f.num_clauses();
    if (n < 2) throw AssumptionViolatedError("need n >= 2 clauses");
    std::vector<std::vector<int>> clauses = f.clauses;
    for (auto& c : clauses) detail::canonicalize_clause(c);
    int t = 0;
    std::vector<bool> seen_pos(static_cast<size_t>(m) + 1, false);
    std::vector<bool> seen_neg(static_cast<size_t>(m) + 1, false);
    for (const auto& c : clauses) {
        if (c.empty()) throw AssumptionViolatedError("empty clause");
        for (int lit : c) {
            if (std::find(c.begin(), c.end(), -lit) != c.end())
                throw AssumptionViolatedError("clause contains a variable in both polarities");
            (lit > 0 ? seen_pos : seen_neg)[static_cast<size_t>(std::abs(lit))] = true;
            ++t;
        }
    }
    for (int i = 1; i <= m; ++i)
        if (!seen_pos[static_cast<size_t>(i)] || !seen_neg[static_cast<size_t>(i)])
            throw AssumptionViolatedError("variable " + std::to_string(i) +
                                          " does not appear in both polarities");

    ReductionLayout layout;
    layout.m = m;
    layout.n = n;
    layout.t = t;
    layout.k = 3 * m + 2 * n;

    const int total = 9 * m + 5 * n + 3 * t + 2;
    std::vector<std::string> labels(static_cast<size_t>(total));
    std::vector<std::pair<int, int>> edges;

    for (int i = 0; i < m; ++i) {
        int b = 9 * i;
        VariableGadget v{b, b + 1, b + 2, b + 3, b + 4, b + 5, b + 6, b + 7, b + 8};
        std::string s = std::to_string(i + 1);
        labels[static_cast<size_t>(v.p_pos)] = "p+_" + s;
        labels[static_cast<size_t>(v.q_pos)] = "q+_" + s;
        labels[static_cast<size_t>(v.r_pos)] = "r+_" + s;
        labels[static_cast<size_t>(v.s_pos)] = "s+_" + s;
        labels[static_cast<size_t>(v.s_neg)] = "s-_" + s;
        labels[static_cast<size_t>(v.r_neg)] = "r-_" + s;
        labels[static_cast<size_t>(v.q_neg)] = "q-_" + s;
        labels[static_cast<size_t>(v.p_neg)] = "p-_" + s;
        labels[static_cast<size_t>(v.t)] = "t_" + s;
        edges.insert(edges.end(), {{v.p_pos, v.q_pos},
                                   {v.q_pos, v.r_pos},
                                   {v.r_pos, v.s_pos},
                                   {v.s_pos, v.s_neg},
                                   {v.s_neg, v.r_neg},
                                   {v.r_neg, v.t},
                                   {v.t, v.r_pos},
                                   {v.r_neg, v.q_neg},
                                   {v.q_neg, v.p_neg}});
        layout.vars.push_back(v);
    }
    for (int j = 0; j < n; ++j) {
        int b = 9 * m + 5 * j;
        ClauseGadget c{b, b + 1, b + 2, b + 3, b + 4};
        std::string s = std::to_string(j + 1);
        labels[static_cast<size_t>(c.u)] = "u_" + s;
        labels[static_cast<size_t>(c.v)] = "v_" + s;
        labels[static_cast<size_t>(c.w)] = "w_" + s;
        labels[static_cast<size_t>(c.x)] = "x_" + s;
        labels[static_cast<size_t>(c.y)] = "y_" + s;
        edges.insert(edges.end(),
                     {{c.u, c.v}, {c.v, c.w}, {c.w, c.u}, {c.v, c.x}, {c.w, c.y}});
        layout.clause_gadgets.push_back(c);
    }
    int next = 9 * m + 5 * n;
    for (int i = 0; i < m; ++i) {
        const auto& vg = layout.vars[static_cast<size_t>(i)];
        for (int j = 0; j < n; ++j) {
            bool pos = std::find(clauses[static_cast<size_t>(j)].begin(),
                                 clauses[static_cast<size_t>(j)].end(),
                                 i + 1) != clauses[static_cast<size_t>(j)].end();
            bool neg = std::find(clauses[static_cast<size_t>(j)].begin(),
                                 clauses[static_cast<size_t>(j)].end(),
                                 -(i + 1)) != clauses[static_cast<size_t>(j)].end();
            if (!pos && !neg) continue;
            const auto& cg = layout.clause_gadgets[static_cast<size_t>(j)];
            // positive occurrence: r+ -- u, q+ -2- w, r- -3- v;
            // negative occurrence: same with all signs reversed
            int r_same = pos ? vg.r_pos : vg.r_neg;
            int q_same = pos ? vg.q_pos : vg.q_neg;
            int r_opp = pos ? vg.r_neg : vg.r_pos;
            std::string ij = std::to_string(i + 1) + "_" + std::to_string(j + 1);
            int qw = next++;
            int rv0 = next++;
            int rv1 = next++;
            labels[static_cast<size_t>(qw)] = "conn_qw_" + ij + "_0";
            labels[static_cast<size_t>(rv0)] = "conn_rv_" + ij + "_0";
            labels[static_cast<size_t>(rv1)] = "conn_rv_" + ij + "_1";
            edges.insert(edges.end(), {{r_same, cg.u},
                                       {q_same, qw},
                                       {qw, cg.w},
                                       {r_opp, rv0},
                                       {rv0, rv1},
                                       {rv1, cg.v}});
        }
    }
    layout.z1 = next++;
    layout.z2 = next++;
    labels[static_cast<size_t>(layout.z1)] = "z1";
    labels[static_cast<size_t>(layout.z2)] = "z2";
    for (const auto& cg : layout.clause_gadgets) {
        edges.emplace_back(cg.v, layout.z1);
        edges.emplace_back(cg.w, layout.z2);
    }
    layout.graph = Graph::build(total, edges, std::move(labels));
    return layout;
}

/// Candidate MEG-set encoding a truth assignment: p+, p-, and s+ or s- per
/// variable, plus x and y per clause. Size is exactly 3m + 2n.
inline std::vector<int> assignment_to_candidate_set(const ReductionLayout& layout,
                                                    const std::vector<bool>& assignment) {
    if (static_cast<int>(assignment.size()) != layout.m)
        throw BadParameterError("assignment must be total");
    std::vector<int> s;
    for (int i = 0; i < layout.m; ++i) {
        const auto& vg = layout.vars[static_cast<size_t>(i)];
        s.push_back(vg.p_pos);
        s.push_back(vg.p_neg);
        s.push_back(assignment[static_cast<size_t>(i)] ? vg.s_pos : vg.s_neg);
    }
    for (const auto& cg : layout.clause_gadgets) {
        s.push_back(cg.x);
        s.push_back(cg.y);
    }
    std::sort(s.begin(), s.end());
    return s;
}

/// Satisfiability through MEG semantics: preprocess, then test each of the
/// 2^m assignment-form candidate sets of the gadget graph. Complete because
/// any MEG-set of order <= k has that form.
inline bool decide_sat_via_meg(const CnfFormula& f, const SearchBudget& = {}) {
    auto pre = preprocess(f);
    if (pre.resolution == Resolution::trivially_sat) return true;
    if (pre.resolution == Resolution::trivially_unsat) return false;
    auto layout = build_reduction(pre.reduced);
    auto oracle = apsp(layout.graph);
    const int m = layout.m;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        std::vector<bool> assignment(static_cast<size_t>(m));
        for (int i = 0; i < m; ++i) assignment[static_cast<size_t>(i)] = (mask >> i) & 1;
        auto s = assignment_to_candidate_set(layout, assignment);
        if (is_meg_set(layout.graph, oracle, s).is_meg) return true;
    }
    return false;
}

}  // namespace meg
