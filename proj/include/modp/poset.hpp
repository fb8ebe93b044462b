#pragma once

// Finite posets on at most 64 elements and their lower sets, which are
// stored as bitsets.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace modp {

using ElementSet = std::uint64_t;

class FinitePoset {
public:
    // leq(i, j) must be a partial order on 0..size-1
    FinitePoset(int size, const std::function<bool(int, int)>& leq) : n_(size), below_(static_cast<std::size_t>(size), 0) {
        if (size < 0 || size > 64) throw std::invalid_argument("posets are limited to 64 elements");
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if (leq(j, i)) below_[static_cast<std::size_t>(i)] |= ElementSet{1} << j;
        for (int i = 0; i < n_; ++i)
            if (!(below_[static_cast<std::size_t>(i)] >> i & 1u)) throw std::invalid_argument("relation is not reflexive");
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if (i != j && leq(i, j) && leq(j, i)) throw std::invalid_argument("relation is not antisymmetric");
        // a linear extension: fewer elements below first
        order_.resize(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) order_[static_cast<std::size_t>(i)] = i;
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
            return std::popcount(below_[static_cast<std::size_t>(a)]) < std::popcount(below_[static_cast<std::size_t>(b)]);
        });
    }

    int size() const { return n_; }
    bool leq(int i, int j) const { return below_[static_cast<std::size_t>(j)] >> i & 1u; }
    ElementSet principal_lower_set(int i) const { return below_[static_cast<std::size_t>(i)]; }
    ElementSet all() const { return n_ == 64 ? ~ElementSet{0} : (ElementSet{1} << n_) - 1; }

    bool is_lower_set(ElementSet s) const {
        for (int i = 0; i < n_; ++i)
            if ((s >> i & 1u) && (below_[static_cast<std::size_t>(i)] & ~s)) return false;
        return true;
    }

    std::vector<int> minimal_elements() const {
        std::vector<int> out;
        for (int i = 0; i < n_; ++i)
            if (std::popcount(below_[static_cast<std::size_t>(i)]) == 1) out.push_back(i);
        return out;
    }

    std::vector<int> maximal_elements() const {
        std::vector<int> out;
        for (int i = 0; i < n_; ++i) {
            bool top = true;
            for (int j = 0; j < n_ && top; ++j)
                if (j != i && leq(i, j)) top = false;
            if (top) out.push_back(i);
        }
        return out;
    }

    // Visits every lower set once. Walks a linear extension and decides each
    // element in turn; an element may be taken only if everything below it was.
    void for_each_lower_set(const std::function<void(ElementSet)>& visit) const { walk(0, 0, visit); }

    std::uint64_t count_lower_sets() const {
        std::uint64_t c = 0;
        for_each_lower_set([&](ElementSet) { ++c; });
        return c;
    }

    // Sorted by size, then by bit pattern.
    std::vector<ElementSet> lower_sets() const {
        std::vector<ElementSet> out;
        for_each_lower_set([&](ElementSet s) { out.push_back(s); });
        std::sort(out.begin(), out.end(), [](ElementSet a, ElementSet b) {
            const int pa = std::popcount(a), pb = std::popcount(b);
            return pa != pb ? pa < pb : a < b;
        });
        return out;
    }

private:
    void walk(int k, ElementSet chosen, const std::function<void(ElementSet)>& visit) const {
        if (k == n_) {
            visit(chosen);
            return;
        }
        const int e = order_[static_cast<std::size_t>(k)];
        walk(k + 1, chosen, visit);
        const ElementSet strictly_below = below_[static_cast<std::size_t>(e)] & ~(ElementSet{1} << e);
        if ((strictly_below & ~chosen) == 0) walk(k + 1, chosen | (ElementSet{1} << e), visit);
    }

    int n_;
    std::vector<ElementSet> below_;  // below_[i] = {j : j <= i}
    std::vector<int> order_;
};

// Covering pairs (a, b) of lower sets: a subset of b with one element more.
inline std::vector<std::pair<std::size_t, std::size_t>> covering_pairs(const std::vector<ElementSet>& sets) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < sets.size(); ++a)
        for (std::size_t b = 0; b < sets.size(); ++b)
            if ((sets[a] & ~sets[b]) == 0 && std::popcount(sets[b] & ~sets[a]) == 1) out.emplace_back(a, b);
    return out;
}

}  // namespace modp
