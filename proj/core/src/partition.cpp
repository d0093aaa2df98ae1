#include "gkd/partition.hpp"

#include <stdexcept>

namespace gkd {

namespace {

void require_valid(const Partition& p) {
    if (!is_valid_partition(p))
        throw std::invalid_argument("not a partition: parts must be positive and weakly decreasing");
}

}  // namespace

bool is_valid_partition(const Partition& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0)
            return false;
        if (i > 0 && p[i] > p[i - 1])
            return false;
    }
    return true;
}

long box_count(const Partition& p) {
    long total = 0;
    for (int part : p)
        total += part;
    return total;
}

Partition dual_partition(const Partition& p) {
    require_valid(p);
    Partition q;
    if (p.empty())
        return q;
    q.reserve(p[0]);
    for (int col = 1; col <= p[0]; ++col) {
        int height = 0;
        for (int part : p) {
            if (part >= col)
                ++height;
            else
                break;
        }
        q.push_back(height);
    }
    return q;
}

RowParityCounts even_odd_counts(const Partition& p) {
    require_valid(p);
    RowParityCounts counts;
    counts.evens.reserve(p.size());
    counts.odds.reserve(p.size());
    for (size_t idx = 0; idx < p.size(); ++idx) {
        int row = static_cast<int>(idx) + 1;
        int len = p[idx];
        int half_up = (len + 1) / 2;
        int half_down = len / 2;
        int evens = (row % 2 == 1) ? half_up : half_down;
        counts.evens.push_back(evens);
        counts.odds.push_back(len - evens);
    }
    return counts;
}

}  // namespace gkd
