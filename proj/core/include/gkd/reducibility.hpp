#pragma once

#include <optional>
#include <vector>

#include "gkd/gkdim.hpp"
#include "gkd/rootdata.hpp"

namespace gkd {

// Verdict for the scalar module M(z * eta_p) of minimal parabolic type:
// reducible exactly when GKdim L(lambda) drops below dim u = |Delta^+| - 1.
struct ReducibilityReport {
    LieType type;
    int p;
    Rational z;
    long gkdim;
    long dim_u;
    bool reducible;
};

/// Throws std::invalid_argument on a bad p; throws std::logic_error should
/// the computed GK dimension ever exceed dim u (internal failure).
ReducibilityReport is_reducible(const LieType& type, int p, const Rational& z);

struct Window {
    Rational lo;
    Rational hi;
};

inline const Window kDefaultWindow{Rational(-8), Rational(8)};

struct ScanResult {
    LieType type;
    int p;
    Rational congruence_class;  // in [0, 1)
    Window window;
    std::optional<Rational> first_point;  // smallest reducible z in the window
    bool monotone;  // every same-class z above first_point was also reducible
};

/// Evaluates every z = congruence_class + k inside [window.lo, window.hi] in
/// increasing order. Requires lo < hi and congruence_class in [0, 1).
ScanResult first_reducible_point(const LieType& type, int p,
                                 const Rational& congruence_class,
                                 const Window& window);

// One scanned cell of a proposition table, with the encoded claimed first
// point (when the classical propositions state one for this cell) and the
// comparison flag. Mismatches are reported, never fatal.
struct PropositionRow {
    LieType type;
    int p;
    Rational congruence_class;
    std::optional<Rational> first_point;
    bool monotone;
    std::optional<Rational> paper_claim;
    std::optional<bool> match;  // empty when no claim is encoded
};

/// Claimed first diagonal-reducible point for (kind, rank, p) within the
/// given congruence class, or nullopt where the propositions are silent.
std::optional<Rational> claimed_first_point(LieKind kind, int rank, int p,
                                            const Rational& congruence_class);

/// One row per (rank, p, class), ranks and classes in the given order.
std::vector<PropositionRow> proposition_table(LieKind kind, int rank_lo, int rank_hi,
                                              const std::vector<Rational>& classes,
                                              const Window& window);

}  // namespace gkd
