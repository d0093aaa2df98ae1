#pragma once

#include <cstddef>
#include <vector>

#include "gkd/partition.hpp"
#include "gkd/rational.hpp"

namespace gkd {

using Sequence = std::vector<Rational>;

// Row-insertion tableau. Rows are weakly increasing, columns strictly
// increasing, row lengths weakly decreasing. Insertion bumps the leftmost
// entry strictly greater than the incoming value; bumped entries cascade.
class Tableau {
public:
    void insert(const Rational& value);

    const std::vector<Sequence>& rows() const { return rows_; }

    Partition shape() const;

    bool well_formed() const;

private:
    std::vector<Sequence> rows_;
};

/// Shape of the insertion tableau of x. Total boxes = length of x.
Partition rs_shape(const Sequence& x);

// Insertion-free oracle via chain invariants: p_1 + ... + p_k is the largest
// subset of positions whose longest strictly decreasing subsequence has
// length <= k. Exhaustive over subsets, so the length is capped.
inline constexpr std::size_t kGreeneMaxLength = 12;

/// Throws std::domain_error when x is longer than kGreeneMaxLength.
Partition greene_shape(const Sequence& x);

enum class Flavor { A, B, D };

/// With p = rs_shape(x): A -> sum (k-1) p_k, B -> sum (k-1) p_k^odd,
/// D -> sum (k-1) p_k^even.
long f_value(Flavor flavor, const Sequence& x);

}  // namespace gkd
