#pragma once

#include <vector>

namespace gkd {

// Weakly decreasing list of positive integers; the empty partition is valid.
using Partition = std::vector<int>;

bool is_valid_partition(const Partition& p);

long box_count(const Partition& p);

/// Conjugate (transposed) Young diagram: q_i = #{ parts of p that are >= i }.
Partition dual_partition(const Partition& p);

// Per-row counts of even/odd boxes, where box (i,l) is even iff i+l is even
// (1-based row and column).
struct RowParityCounts {
    std::vector<int> evens;
    std::vector<int> odds;
};

/// Closed form: row i holds ceil(p_i/2) even boxes when i is odd,
/// floor(p_i/2) when i is even; odd boxes take the complement.
RowParityCounts even_odd_counts(const Partition& p);

}  // namespace gkd
