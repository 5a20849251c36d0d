#pragma once

#include <optional>
#include <vector>

#include "search.hpp"

namespace naeflow {

/// Exact cover by dancing links (Algorithm X). Items 0..num_items-1 must each
/// be covered exactly once by the chosen options. Branches on the item with
/// the fewest remaining options, ties to the smallest item id; options are
/// tried in the order they were added.
class ExactCover {
public:
    explicit ExactCover(int num_items) : num_items_(num_items)
    {
        if (num_items < 0)
            throw precondition_error("negative item count");
        // node 0 is the root header; nodes 1..num_items are item headers
        const int h = num_items + 1;
        left_.resize(static_cast<std::size_t>(h));
        right_.resize(static_cast<std::size_t>(h));
        up_.resize(static_cast<std::size_t>(h));
        down_.resize(static_cast<std::size_t>(h));
        col_.resize(static_cast<std::size_t>(h));
        row_.assign(static_cast<std::size_t>(h), -1);
        size_.assign(static_cast<std::size_t>(h), 0);
        for (int i = 0; i < h; ++i) {
            left_[static_cast<std::size_t>(i)] = i == 0 ? num_items : i - 1;
            right_[static_cast<std::size_t>(i)] = i == num_items ? 0 : i + 1;
            up_[static_cast<std::size_t>(i)] = down_[static_cast<std::size_t>(i)] = i;
            col_[static_cast<std::size_t>(i)] = i;
        }
    }

    /// Adds an option covering `items`; returns its id. Empty options are kept
    /// but can never be selected.
    int add_option(const std::vector<int>& items)
    {
        const int id = num_options_++;
        int first = -1;
        for (int it : items) {
            if (it < 0 || it >= num_items_)
                throw precondition_error("option refers to item out of range");
            const int c = it + 1;
            const int x = static_cast<int>(col_.size());
            col_.push_back(c);
            row_.push_back(id);
            up_.push_back(up_[static_cast<std::size_t>(c)]);
            down_.push_back(c);
            down_[static_cast<std::size_t>(up_[static_cast<std::size_t>(c)])] = x;
            up_[static_cast<std::size_t>(c)] = x;
            ++size_[static_cast<std::size_t>(c)];
            size_.push_back(0);
            if (first < 0) {
                first = x;
                left_.push_back(x);
                right_.push_back(x);
            } else {
                left_.push_back(left_[static_cast<std::size_t>(first)]);
                right_.push_back(first);
                right_[static_cast<std::size_t>(left_[static_cast<std::size_t>(first)])] = x;
                left_[static_cast<std::size_t>(first)] = x;
            }
        }
        return id;
    }

    int num_items() const { return num_items_; }
    int num_options() const { return num_options_; }

    /// First solution in search order, as ascending-by-choice option ids.
    std::optional<std::vector<int>> solve(const SearchControl& ctl = {})
    {
        detail::search_budget budget(ctl);
        std::vector<int> chosen;
        if (search(chosen, budget))
            return chosen;
        return std::nullopt;
    }

private:
    void cover(int c)
    {
        right_[static_cast<std::size_t>(left_[static_cast<std::size_t>(c)])] = right_[static_cast<std::size_t>(c)];
        left_[static_cast<std::size_t>(right_[static_cast<std::size_t>(c)])] = left_[static_cast<std::size_t>(c)];
        for (int i = down_[static_cast<std::size_t>(c)]; i != c; i = down_[static_cast<std::size_t>(i)])
            for (int j = right_[static_cast<std::size_t>(i)]; j != i; j = right_[static_cast<std::size_t>(j)]) {
                up_[static_cast<std::size_t>(down_[static_cast<std::size_t>(j)])] = up_[static_cast<std::size_t>(j)];
                down_[static_cast<std::size_t>(up_[static_cast<std::size_t>(j)])] = down_[static_cast<std::size_t>(j)];
                --size_[static_cast<std::size_t>(col_[static_cast<std::size_t>(j)])];
            }
    }

    void uncover(int c)
    {
        for (int i = up_[static_cast<std::size_t>(c)]; i != c; i = up_[static_cast<std::size_t>(i)])
            for (int j = left_[static_cast<std::size_t>(i)]; j != i; j = left_[static_cast<std::size_t>(j)]) {
                ++size_[static_cast<std::size_t>(col_[static_cast<std::size_t>(j)])];
                up_[static_cast<std::size_t>(down_[static_cast<std::size_t>(j)])] = j;
                down_[static_cast<std::size_t>(up_[static_cast<std::size_t>(j)])] = j;
            }
        right_[static_cast<std::size_t>(left_[static_cast<std::size_t>(c)])] = c;
        left_[static_cast<std::size_t>(right_[static_cast<std::size_t>(c)])] = c;
    }

    bool search(std::vector<int>& chosen, detail::search_budget& budget)
    {
        if (right_[0] == 0)
            return true;
        budget.node();
        int best = -1;
        for (int c = right_[0]; c != 0; c = right_[static_cast<std::size_t>(c)])
            if (best < 0 || size_[static_cast<std::size_t>(c)] < size_[static_cast<std::size_t>(best)]) {
                best = c;
                if (size_[static_cast<std::size_t>(c)] == 0)
                    break;
            }
        if (size_[static_cast<std::size_t>(best)] == 0)
            return false;
        cover(best);
        for (int r = down_[static_cast<std::size_t>(best)]; r != best; r = down_[static_cast<std::size_t>(r)]) {
            chosen.push_back(row_[static_cast<std::size_t>(r)]);
            for (int j = right_[static_cast<std::size_t>(r)]; j != r; j = right_[static_cast<std::size_t>(j)])
                cover(col_[static_cast<std::size_t>(j)]);
            budget.propagation();
            if (search(chosen, budget))
                return true;
            for (int j = left_[static_cast<std::size_t>(r)]; j != r; j = left_[static_cast<std::size_t>(j)])
                uncover(col_[static_cast<std::size_t>(j)]);
            chosen.pop_back();
        }
        uncover(best);
        return false;
    }

    int num_items_ = 0;
    int num_options_ = 0;
    std::vector<int> left_, right_, up_, down_, col_, row_, size_;
};

} // namespace naeflow
