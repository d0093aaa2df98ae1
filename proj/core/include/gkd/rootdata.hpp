#pragma once

#include <string>
#include <vector>

#include "gkd/rational.hpp"

namespace gkd {

enum class LieKind { A, B, C, D };

char to_char(LieKind kind);
LieKind kind_from_char(char c);  // accepts 'A'..'D' and 'a'..'d'

// Classical type with coordinate conventions of length `rank`:
//   A rank n = sl(n), n >= 2        B rank n = so(2n+1), n >= 2
//   C rank n = sp(2n), n >= 2       D rank n = so(2n),   n >= 3
class LieType {
public:
    LieType(LieKind kind, int rank);  // throws std::invalid_argument on bad rank

    LieKind kind() const { return kind_; }
    int rank() const { return rank_; }

    // Number of simple roots: rank-1 for A, rank otherwise.
    int simple_root_count() const;

    bool operator==(const LieType&) const = default;

private:
    LieKind kind_;
    int rank_;
};

std::string to_string(const LieType& type);

// Coordinate vector in the standard epsilon-basis; length = rank.
using Weight = std::vector<Rational>;

/// Half-sum of positive roots. A: ((n-1)/2, ..., (1-n)/2); B: (n-1/2, ..., 1/2);
/// C: (n, ..., 1); D: (n-1, ..., 0).
Weight rho(const LieType& type);

/// Fundamental weight of the i-th simple root (1-based), in epsilon-coordinates.
/// The sum over all i equals rho.
Weight fundamental_weight(const LieType& type, int index);

/// rho - fundamental_weight(p): the scalar direction for the minimal parabolic
/// that keeps only the p-th simple root in the Levi.
Weight eta(const LieType& type, int p);

/// z * eta(p) + rho, the lambda+rho vector of the scalar family.
Weight scalar_weight_plus_rho(const LieType& type, int p, const Rational& z);

long positive_root_count(const LieType& type);

/// Nilradical dimension of the minimal parabolic: |Delta^+| - 1.
long dim_u_min(const LieType& type);

}  // namespace gkd
