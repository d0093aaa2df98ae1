#include "gkd/tableau.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace gkd {

void Tableau::insert(const Rational& value) {
    Rational current = value;
    for (auto& row : rows_) {
        auto it = std::upper_bound(row.begin(), row.end(), current);
        if (it == row.end()) {
            row.push_back(std::move(current));
            return;
        }
        std::swap(current, *it);
    }
    rows_.push_back({std::move(current)});
}

Partition Tableau::shape() const {
    Partition shape;
    shape.reserve(rows_.size());
    for (const auto& row : rows_)
        shape.push_back(static_cast<int>(row.size()));
    return shape;
}

bool Tableau::well_formed() const {
    for (size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r].empty())
            return false;
        if (r > 0 && rows_[r].size() > rows_[r - 1].size())
            return false;
        for (size_t c = 0; c + 1 < rows_[r].size(); ++c)
            if (rows_[r][c] > rows_[r][c + 1])
                return false;
        if (r > 0)
            for (size_t c = 0; c < rows_[r].size(); ++c)
                if (rows_[r - 1][c] >= rows_[r][c])
                    return false;
    }
    return true;
}

Partition rs_shape(const Sequence& x) {
    Tableau tableau;
    for (const auto& value : x)
        tableau.insert(value);
    return tableau.shape();
}

Partition greene_shape(const Sequence& x) {
    if (x.size() > kGreeneMaxLength)
        throw std::domain_error("greene_shape: sequence longer than oracle bound " +
                                std::to_string(kGreeneMaxLength));
    const int n = static_cast<int>(x.size());
    if (n == 0)
        return {};

    // Rank-compress: the shape depends only on the relative order.
    std::vector<int> rank(n);
    {
        std::vector<int> order(n);
        for (int i = 0; i < n; ++i)
            order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return x[a] < x[b]; });
        int next = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && x[order[i]] != x[order[i - 1]])
                ++next;
            rank[order[i]] = next;
        }
    }

    // best[w] = largest subset whose longest strictly decreasing subsequence
    // has length exactly w.
    std::vector<int> best(n + 1, 0);
    const unsigned total = 1u << n;
    std::vector<int> dec(n);
    for (unsigned mask = 1; mask < total; ++mask) {
        int size = 0;
        int width = 0;
        for (int i = 0; i < n; ++i) {
            if (!(mask & (1u << i)))
                continue;
            ++size;
            int longest = 0;
            for (int j = 0; j < i; ++j)
                if ((mask & (1u << j)) && rank[j] > rank[i])
                    longest = std::max(longest, dec[j]);
            dec[i] = longest + 1;
            width = std::max(width, dec[i]);
        }
        best[width] = std::max(best[width], size);
    }

    Partition shape;
    int prev = 0;
    int reach = 0;
    for (int k = 1; k <= n && prev < n; ++k) {
        reach = std::max(reach, best[k]);
        shape.push_back(reach - prev);
        prev = reach;
    }
    return shape;
}

long f_value(Flavor flavor, const Sequence& x) {
    Partition p = rs_shape(x);
    long total = 0;
    if (flavor == Flavor::A) {
        for (size_t k = 0; k < p.size(); ++k)
            total += static_cast<long>(k) * p[k];
        return total;
    }
    RowParityCounts counts = even_odd_counts(p);
    const std::vector<int>& rows = flavor == Flavor::B ? counts.odds : counts.evens;
    for (size_t k = 0; k < rows.size(); ++k)
        total += static_cast<long>(k) * rows[k];
    return total;
}

}  // namespace gkd
