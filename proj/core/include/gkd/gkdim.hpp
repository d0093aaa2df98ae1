#pragma once

#include <optional>
#include <vector>

#include "gkd/rootdata.hpp"
#include "gkd/tableau.hpp"

namespace gkd {

// Partition of the lambda+rho entries into linkage classes, each kept as an
// order-preserving subsequence of the coordinates.
//
// For B/C/D two entries are linked when their difference OR sum is integral,
// so classes are keyed by the residue pair {r, 1-r} mod 1: residue 0 fills
// integral_class, residue 1/2 fills half_class, everything else lands in
// other_classes. For A linkage is integral difference only; the residue-0
// class fills integral_class, all other residue classes go to other_classes
// and half_class stays empty.
struct ClassDecomposition {
    std::optional<Sequence> integral_class;
    std::optional<Sequence> half_class;
    std::vector<Sequence> other_classes;  // ordered by first occurrence
};

/// x followed by its negated reverse: (x_1,...,x_n,-x_n,...,-x_1).
Sequence minus_extend(const Sequence& x);

/// Throws std::invalid_argument when w does not have length rank.
ClassDecomposition decompose(const LieType& type, const Weight& w);

/// Rewrites a mixed-residue linkage class as a difference-linked sequence:
/// entries integrally linked to the first entry stay in order, the remaining
/// (sum-linked) entries follow negated in reverse order. A class whose
/// entries all share one residue is returned unchanged. Throws
/// std::invalid_argument when the entries are not a single linkage class.
Sequence normalize_class(const Sequence& x);

/// Closed form for integral lambda+rho. A: n(n-1)/2 - sum (i-1) p(w)_i with
/// pairwise-integral differences required; B/C: n^2 - sum (i-1) p(w^-)_i^odd;
/// D: n^2-n - sum (i-1) p(w^-)_i^even. B and D accept all-integer or
/// all-half-integer coordinates, C requires all-integer. Throws
/// std::domain_error when the integrality precondition fails.
long gk_dimension_integral(const LieType& type, const Weight& w);

/// GK dimension of L(lambda) for arbitrary rational lambda+rho = w.
/// A:     n(n-1)/2 - sum over all classes of F_A
/// B:     n^2   - F_B(integral^-) - F_B(half^-) - sum F_A(normalized class)
/// C:     n^2   - F_B(integral^-) - F_D(half^-) - sum F_A(normalized class)
/// D:     n^2-n - F_D(integral^-) - F_D(half^-) - sum F_A(normalized class)
/// Missing classes contribute 0. Result lies in [0, positive_root_count].
long gk_dimension(const LieType& type, const Weight& w);

}  // namespace gkd
