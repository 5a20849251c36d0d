#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "graph.hpp"
#include "planarity.hpp"

namespace naeflow {

/// Monotone CNF: clauses are lists of distinct variable ids.
class PositiveFormula {
public:
    PositiveFormula() = default;

    PositiveFormula(int num_vars, std::vector<std::vector<int>> clauses)
        : num_vars_(num_vars), clauses_(std::move(clauses))
    {
        if (num_vars < 0)
            throw precondition_error("negative variable count");
        for (std::size_t c = 0; c < clauses_.size(); ++c) {
            auto sorted = clauses_[c];
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                throw precondition_error("clause " + std::to_string(c) + " repeats a variable");
            for (int x : sorted)
                if (x < 0 || x >= num_vars)
                    throw precondition_error("clause " + std::to_string(c) + " names variable " +
                                             std::to_string(x) + " out of range");
        }
    }

    int num_vars() const { return num_vars_; }
    int num_clauses() const { return static_cast<int>(clauses_.size()); }
    const std::vector<std::vector<int>>& clauses() const { return clauses_; }
    const std::vector<int>& clause(int c) const { return clauses_.at(static_cast<std::size_t>(c)); }

    std::vector<int> occurrences() const
    {
        std::vector<int> occ(static_cast<std::size_t>(num_vars_), 0);
        for (const auto& cl : clauses_)
            for (int x : cl)
                ++occ[static_cast<std::size_t>(x)];
        return occ;
    }

    /// Clause ids containing each variable, in clause order.
    std::vector<std::vector<int>> clauses_of() const
    {
        std::vector<std::vector<int>> out(static_cast<std::size_t>(num_vars_));
        for (int c = 0; c < num_clauses(); ++c)
            for (int x : clauses_[static_cast<std::size_t>(c)])
                out[static_cast<std::size_t>(x)].push_back(c);
        return out;
    }

    friend bool operator==(const PositiveFormula&, const PositiveFormula&) = default;

private:
    int num_vars_ = 0;
    std::vector<std::vector<int>> clauses_;
};

/// Truth value per variable.
using Assignment = std::vector<bool>;

enum class SatMode { one_in_k, nae };

inline bool eval(const PositiveFormula& f, const Assignment& a, SatMode mode)
{
    if (static_cast<int>(a.size()) != f.num_vars())
        throw precondition_error("assignment length " + std::to_string(a.size()) + " differs from " +
                                 std::to_string(f.num_vars()) + " variables");
    for (const auto& cl : f.clauses()) {
        int t = 0;
        for (int x : cl)
            t += a[static_cast<std::size_t>(x)] ? 1 : 0;
        if (mode == SatMode::one_in_k ? t != 1 : (t == 0 || t == static_cast<int>(cl.size())))
            return false;
    }
    return true;
}

/// Incidence graph: variables are vertices 0..V-1, clause c is vertex V+c.
struct IncidenceGraph {
    Graph graph;
    int num_vars = 0;

    bool is_clause_vertex(int v) const { return v >= num_vars; }
};

inline IncidenceGraph incidence_graph(const PositiveFormula& f)
{
    std::vector<std::pair<int, int>> es;
    for (int c = 0; c < f.num_clauses(); ++c)
        for (int x : f.clause(c))
            es.emplace_back(x, f.num_vars() + c);
    return {Graph(f.num_vars() + f.num_clauses(), es), f.num_vars()};
}

struct Validation {
    bool ok = true;
    std::vector<std::string> diagnostics;

    explicit operator bool() const { return ok; }
    void fail(std::string msg)
    {
        ok = false;
        diagnostics.push_back(std::move(msg));
    }
};

/// Every clause of size 3, every variable in exactly 3 clauses.
inline Validation validate_cubic(const PositiveFormula& f)
{
    Validation v;
    for (int c = 0; c < f.num_clauses(); ++c)
        if (f.clause(c).size() != 3)
            v.fail("clause " + std::to_string(c) + " has " + std::to_string(f.clause(c).size()) + " literals");
    auto occ = f.occurrences();
    for (int x = 0; x < f.num_vars(); ++x)
        if (occ[static_cast<std::size_t>(x)] != 3)
            v.fail("variable " + std::to_string(x) + " occurs " + std::to_string(occ[static_cast<std::size_t>(x)]) +
                   " times");
    return v;
}

inline Validation validate_cubic_planar(const PositiveFormula& f)
{
    Validation v = validate_cubic(f);
    if (!is_planar(incidence_graph(f).graph))
        v.fail("incidence graph is not planar");
    return v;
}

/// Formula plus a spanning tree on its clauses. gamma(c) is the tree degree of c.
struct TreeLikeInstance {
    PositiveFormula formula;
    std::vector<std::pair<int, int>> clause_tree_edges;

    std::vector<int> gamma() const
    {
        std::vector<int> g(static_cast<std::size_t>(formula.num_clauses()), 0);
        for (auto [a, b] : clause_tree_edges) {
            ++g.at(static_cast<std::size_t>(a));
            ++g.at(static_cast<std::size_t>(b));
        }
        return g;
    }

    /// Incidence graph plus the clause-clause tree edges (clause c is vertex V+c).
    Graph combined_graph() const
    {
        auto es = incidence_graph(formula).graph.edge_pairs();
        for (auto [a, b] : clause_tree_edges)
            es.emplace_back(formula.num_vars() + a, formula.num_vars() + b);
        return Graph(formula.num_vars() + formula.num_clauses(), es);
    }
};

inline Validation validate_tree_like(const TreeLikeInstance& t)
{
    Validation v;
    const int C = t.formula.num_clauses();
    if (C == 0) {
        v.fail("no clauses");
        return v;
    }
    if (static_cast<int>(t.clause_tree_edges.size()) != C - 1)
        v.fail("clause tree has " + std::to_string(t.clause_tree_edges.size()) + " edges, expected " +
               std::to_string(C - 1));
    std::vector<std::pair<int, int>> es;
    for (auto [a, b] : t.clause_tree_edges) {
        if (a < 0 || b < 0 || a >= C || b >= C || a == b) {
            v.fail("bad clause tree edge");
            return v;
        }
        es.emplace_back(a, b);
    }
    try {
        if (!is_connected(Graph(C, es)))
            v.fail("clause tree is not connected");
        if (!is_planar(t.combined_graph()))
            v.fail("combined graph is not planar");
    } catch (const precondition_error& e) {
        v.fail(e.what());
    }
    return v;
}

inline constexpr int default_brute_force_vars = 26;

namespace detail {

// Assignments in lexicographic order with true before false, variable 0 most
// significant.
template <class Pred>
std::optional<Assignment> first_assignment(const PositiveFormula& f, int bound, Pred ok)
{
    const int n = f.num_vars();
    if (n > bound)
        throw precondition_error(std::to_string(n) + " variables exceed the brute-force bound " +
                                 std::to_string(bound));
    const std::uint64_t total = std::uint64_t{1} << n;
    Assignment a(static_cast<std::size_t>(n));
    for (std::uint64_t code = 0; code < total; ++code) {
        for (int x = 0; x < n; ++x)
            a[static_cast<std::size_t>(x)] = !((code >> (n - 1 - x)) & 1);
        if (ok(a))
            return a;
    }
    return std::nullopt;
}

} // namespace detail

inline std::optional<Assignment> solve_one_in_k(const PositiveFormula& f, int bound = default_brute_force_vars)
{
    return detail::first_assignment(f, bound, [&](const Assignment& a) { return eval(f, a, SatMode::one_in_k); });
}

inline std::optional<Assignment> solve_nae(const PositiveFormula& f, int bound = default_brute_force_vars)
{
    return detail::first_assignment(f, bound, [&](const Assignment& a) { return eval(f, a, SatMode::nae); });
}

// ---- serialization ----

inline nlohmann::json formula_to_json(const PositiveFormula& f)
{
    return {{"num_vars", f.num_vars()}, {"clauses", f.clauses()}};
}

inline PositiveFormula formula_from_json(const nlohmann::json& j)
{
    try {
        return PositiveFormula(j.at("num_vars").get<int>(), j.at("clauses").get<std::vector<std::vector<int>>>());
    } catch (const nlohmann::json::exception& e) {
        throw format_error(std::string("formula JSON: ") + e.what());
    } catch (const precondition_error& e) {
        throw format_error(std::string("formula JSON: ") + e.what());
    }
}

/// "p mcnf V C" header, then one clause per line of 1-based ids ending in 0.
inline std::string formula_to_mcnf(const PositiveFormula& f)
{
    std::ostringstream os;
    os << "p mcnf " << f.num_vars() << ' ' << f.num_clauses() << '\n';
    for (const auto& cl : f.clauses()) {
        for (int x : cl)
            os << x + 1 << ' ';
        os << "0\n";
    }
    return os.str();
}

inline PositiveFormula formula_from_mcnf(const std::string& text)
{
    std::istringstream is(text);
    std::string line;
    int nv = -1, nc = -1;
    std::vector<std::vector<int>> clauses;
    std::vector<int> cur;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok == "c")
            continue;
        if (tok == "p") {
            std::string kind;
            if (nv >= 0 || !(ls >> kind >> nv >> nc) || kind != "mcnf" || nv < 0 || nc < 0)
                throw format_error("mcnf: bad header line: " + line);
            continue;
        }
        if (nv < 0)
            throw format_error("mcnf: clause before header");
        do {
            long long lit;
            try {
                std::size_t used = 0;
                lit = std::stoll(tok, &used);
                if (used != tok.size())
                    throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw format_error("mcnf: not an integer: " + tok);
            }
            if (lit < 0)
                throw format_error("mcnf: negative literal in a monotone formula");
            if (lit == 0) {
                clauses.push_back(std::move(cur));
                cur.clear();
            } else {
                cur.push_back(static_cast<int>(lit - 1));
            }
        } while (ls >> tok);
    }
    if (nv < 0)
        throw format_error("mcnf: missing header");
    if (!cur.empty())
        throw format_error("mcnf: last clause not terminated by 0");
    if (static_cast<int>(clauses.size()) != nc)
        throw format_error("mcnf: header announces " + std::to_string(nc) + " clauses, found " +
                           std::to_string(clauses.size()));
    try {
        return PositiveFormula(nv, std::move(clauses));
    } catch (const precondition_error& e) {
        throw format_error(std::string("mcnf: ") + e.what());
    }
}

inline PositiveFormula load_formula_text(const std::string& text)
{
    auto pos = text.find_first_not_of(" \t\r\n");
    if (pos != std::string::npos && text[pos] == '{') {
        try {
            return formula_from_json(nlohmann::json::parse(text));
        } catch (const nlohmann::json::parse_error& e) {
            throw format_error(std::string("formula JSON: ") + e.what());
        }
    }
    return formula_from_mcnf(text);
}


/// {"formula": <formula JSON>, "clause_tree_edges": [[c, d], ...]}
inline nlohmann::json tree_like_to_json(const TreeLikeInstance& t)
{
    return {{"formula", formula_to_json(t.formula)}, {"clause_tree_edges", t.clause_tree_edges}};
}

inline TreeLikeInstance tree_like_from_json(const nlohmann::json& j)
{
    TreeLikeInstance t;
    try {
        t.formula = formula_from_json(j.at("formula"));
        t.clause_tree_edges = j.at("clause_tree_edges").get<std::vector<std::pair<int, int>>>();
    } catch (const nlohmann::json::exception& e) {
        throw format_error(std::string("tree-like JSON: ") + e.what());
    }
    return t;
}

} // namespace naeflow
