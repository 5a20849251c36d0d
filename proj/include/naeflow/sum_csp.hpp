#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <optional>
#include <vector>

#include "search.hpp"

namespace naeflow {

/// Finite-domain CSP whose constraints are linear equalities
/// sum_t coef[t] * x[var[t]] == rhs. Each constraint is kept generalized arc
/// consistent using reachable partial-sum sets, which is exact for the small
/// coefficient ranges used here (flow labels, 0/1 weights).
class SumCsp {
public:
    enum class Branching { lowest_index, smallest_domain };

    /// Adds a variable whose candidate values are tried in the given order.
    int add_variable(std::vector<std::int64_t> values)
    {
        if (values.empty() || values.size() > 32)
            throw precondition_error("variable domain must have 1..32 values");
        values_.push_back(std::move(values));
        full_.push_back(values_.back().size() == 32 ? ~std::uint32_t{0}
                                                    : (std::uint32_t{1} << values_.back().size()) - 1);
        watch_.emplace_back();
        return static_cast<int>(values_.size()) - 1;
    }

    void add_constraint(std::vector<int> vars, std::vector<std::int64_t> coefs, std::int64_t rhs)
    {
        if (vars.size() != coefs.size())
            throw precondition_error("constraint arity mismatch");
        const int id = static_cast<int>(cons_.size());
        for (int v : vars) {
            if (v < 0 || v >= num_vars())
                throw precondition_error("constraint refers to unknown variable");
            watch_[static_cast<std::size_t>(v)].push_back(id);
        }
        cons_.push_back({std::move(vars), std::move(coefs), rhs});
    }

    int num_vars() const { return static_cast<int>(values_.size()); }

    /// Restricts a variable to a single value before solving.
    void fix(int var, std::int64_t value)
    {
        fixed_.emplace_back(var, value);
    }

    std::optional<std::vector<std::int64_t>> solve(Branching br = Branching::lowest_index,
                                                   const SearchControl& ctl = {})
    {
        detail::search_budget budget(ctl);
        std::vector<std::uint32_t> dom = full_;
        for (auto [var, value] : fixed_) {
            const auto& vals = values_.at(static_cast<std::size_t>(var));
            auto it = std::find(vals.begin(), vals.end(), value);
            if (it == vals.end())
                return std::nullopt;
            dom[static_cast<std::size_t>(var)] &= std::uint32_t{1} << (it - vals.begin());
        }
        std::vector<int> all(cons_.size());
        for (std::size_t i = 0; i < all.size(); ++i)
            all[i] = static_cast<int>(i);
        if (!propagate(dom, all, budget))
            return std::nullopt;
        if (!search(dom, br, budget))
            return std::nullopt;
        std::vector<std::int64_t> out(values_.size());
        for (std::size_t v = 0; v < values_.size(); ++v)
            out[v] = values_[v][static_cast<std::size_t>(std::countr_zero(dom[v]))];
        return out;
    }

private:
    struct Constraint {
        std::vector<int> vars;
        std::vector<std::int64_t> coefs;
        std::int64_t rhs;
    };

    // set of integers in [lo, lo + bits.size())
    struct SumSet {
        std::int64_t lo = 0;
        std::vector<char> bits{1};

        bool has(std::int64_t s) const
        {
            return s >= lo && s < lo + static_cast<std::int64_t>(bits.size()) &&
                   bits[static_cast<std::size_t>(s - lo)];
        }
    };

    SumSet extend(const SumSet& a, int var, std::int64_t coef, std::uint32_t mask) const
    {
        const auto& vals = values_[static_cast<std::size_t>(var)];
        std::int64_t mn = 0, mx = 0;
        bool first = true;
        for (std::size_t i = 0; i < vals.size(); ++i)
            if (mask >> i & 1) {
                std::int64_t c = coef * vals[i];
                if (first || c < mn)
                    mn = c;
                if (first || c > mx)
                    mx = c;
                first = false;
            }
        SumSet r;
        r.lo = a.lo + mn;
        r.bits.assign(a.bits.size() + static_cast<std::size_t>(mx - mn), 0);
        for (std::size_t i = 0; i < vals.size(); ++i)
            if (mask >> i & 1) {
                std::size_t shift = static_cast<std::size_t>(coef * vals[i] - mn);
                for (std::size_t s = 0; s < a.bits.size(); ++s)
                    if (a.bits[s])
                        r.bits[s + shift] = 1;
            }
        return r;
    }

    // Returns false on a wipe-out; records changed variables.
    bool revise(const Constraint& c, std::vector<std::uint32_t>& dom, std::vector<int>& changed) const
    {
        const std::size_t m = c.vars.size();
        std::vector<SumSet> pre(m + 1), suf(m + 1);
        for (std::size_t t = 0; t < m; ++t)
            pre[t + 1] = extend(pre[t], c.vars[t], c.coefs[t], dom[static_cast<std::size_t>(c.vars[t])]);
        if (!pre[m].has(c.rhs))
            return false;
        for (std::size_t t = m; t-- > 0;)
            suf[t] = extend(suf[t + 1], c.vars[t], c.coefs[t], dom[static_cast<std::size_t>(c.vars[t])]);
        for (std::size_t t = 0; t < m; ++t) {
            const int var = c.vars[t];
            auto& d = dom[static_cast<std::size_t>(var)];
            const auto& vals = values_[static_cast<std::size_t>(var)];
            std::uint32_t keep = 0;
            for (std::size_t i = 0; i < vals.size(); ++i) {
                if (!(d >> i & 1))
                    continue;
                const std::int64_t need = c.rhs - c.coefs[t] * vals[i];
                bool ok = false;
                for (std::size_t s = 0; s < pre[t].bits.size() && !ok; ++s)
                    if (pre[t].bits[s] && suf[t + 1].has(need - (pre[t].lo + static_cast<std::int64_t>(s))))
                        ok = true;
                if (ok)
                    keep |= std::uint32_t{1} << i;
            }
            if (keep != d) {
                d = keep;
                if (!d)
                    return false;
                changed.push_back(var);
            }
        }
        return true;
    }

    bool propagate(std::vector<std::uint32_t>& dom, const std::vector<int>& seed, detail::search_budget& budget) const
    {
        std::vector<char> queued(cons_.size(), 0);
        std::deque<int> q;
        for (int c : seed)
            if (!queued[static_cast<std::size_t>(c)]) {
                queued[static_cast<std::size_t>(c)] = 1;
                q.push_back(c);
            }
        std::vector<int> changed;
        while (!q.empty()) {
            int c = q.front();
            q.pop_front();
            queued[static_cast<std::size_t>(c)] = 0;
            changed.clear();
            budget.propagation();
            if (!revise(cons_[static_cast<std::size_t>(c)], dom, changed))
                return false;
            for (int v : changed)
                for (int c2 : watch_[static_cast<std::size_t>(v)])
                    if (c2 != c && !queued[static_cast<std::size_t>(c2)]) {
                        queued[static_cast<std::size_t>(c2)] = 1;
                        q.push_back(c2);
                    }
        }
        return true;
    }

    bool search(std::vector<std::uint32_t>& dom, Branching br, detail::search_budget& budget) const
    {
        int pick = -1;
        int best = 0;
        for (int v = 0; v < num_vars(); ++v) {
            int sz = std::popcount(dom[static_cast<std::size_t>(v)]);
            if (sz <= 1)
                continue;
            if (pick < 0 || (br == Branching::smallest_domain && sz < best)) {
                pick = v;
                best = sz;
                if (br == Branching::lowest_index)
                    break;
            }
        }
        if (pick < 0)
            return true;
        budget.node();
        const std::uint32_t d = dom[static_cast<std::size_t>(pick)];
        for (std::size_t i = 0; i < values_[static_cast<std::size_t>(pick)].size(); ++i) {
            if (!(d >> i & 1))
                continue;
            auto saved = dom;
            dom[static_cast<std::size_t>(pick)] = std::uint32_t{1} << i;
            if (propagate(dom, watch_[static_cast<std::size_t>(pick)], budget) && search(dom, br, budget))
                return true;
            dom = std::move(saved);
        }
        return false;
    }

    std::vector<std::vector<std::int64_t>> values_;
    std::vector<std::uint32_t> full_;
    std::vector<std::vector<int>> watch_;
    std::vector<Constraint> cons_;
    std::vector<std::pair<int, std::int64_t>> fixed_;
};

} // namespace naeflow
