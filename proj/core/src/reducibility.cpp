#include "gkd/reducibility.hpp"

#include <stdexcept>

namespace gkd {

namespace {

void require_class_canonical(const Rational& congruence_class) {
    if (congruence_class < 0 || congruence_class >= 1)
        throw std::invalid_argument("congruence class " + to_string(congruence_class) +
                                    " not canonical in [0,1)");
}

}  // namespace

ReducibilityReport is_reducible(const LieType& type, int p, const Rational& z) {
    Weight w = scalar_weight_plus_rho(type, p, z);
    long g = gk_dimension(type, w);
    long d = dim_u_min(type);
    if (g > d)
        throw std::logic_error("GK dimension " + std::to_string(g) + " exceeds dim u " +
                               std::to_string(d) + " for " + to_string(type));
    return ReducibilityReport{type, p, z, g, d, g < d};
}

ScanResult first_reducible_point(const LieType& type, int p,
                                 const Rational& congruence_class,
                                 const Window& window) {
    require_class_canonical(congruence_class);
    if (!(window.lo < window.hi))
        throw std::invalid_argument("empty scan window [" + to_string(window.lo) + ", " +
                                    to_string(window.hi) + "]");

    ScanResult result{type, p, congruence_class, window, std::nullopt, true};
    for (Int k = ceil_int(window.lo - congruence_class);; ++k) {
        Rational z = congruence_class + Rational(k);
        if (z > window.hi)
            break;
        bool reducible = is_reducible(type, p, z).reducible;
        if (reducible && !result.first_point)
            result.first_point = z;
        else if (!reducible && result.first_point)
            result.monotone = false;
    }
    return result;
}

std::optional<Rational> claimed_first_point(LieKind kind, int rank, int p,
                                            const Rational& congruence_class) {
    if (rank < 3)
        return std::nullopt;
    const Rational half(1, 2);
    const bool integral = congruence_class == 0;
    const bool half_class = congruence_class == half;

    switch (kind) {
    case LieKind::A:
        if (integral)
            return p == 1 ? Rational(0) : Rational(-1);
        return std::nullopt;
    case LieKind::B:
        if (integral)
            return p == 1 ? Rational(0) : Rational(-1);
        if (half_class)
            return rank == 3 ? half : -half;
        return std::nullopt;
    case LieKind::C:
        if (integral)
            return p == 1 ? Rational(0) : Rational(-1);
        if (half_class)
            return -half;
        return std::nullopt;
    case LieKind::D:
        if (integral) {
            if (p <= rank - 2)
                return Rational(-1);
            return rank == 3 ? Rational(0) : Rational(-1);
        }
        if (half_class) {
            if (p <= rank - 2)
                return -half;
            return rank == 3 ? half : -half;
        }
        return std::nullopt;
    }
    throw std::logic_error("unreachable LieKind");
}

std::vector<PropositionRow> proposition_table(LieKind kind, int rank_lo, int rank_hi,
                                              const std::vector<Rational>& classes,
                                              const Window& window) {
    if (rank_lo > rank_hi)
        throw std::invalid_argument("empty rank range " + std::to_string(rank_lo) + ":" +
                                    std::to_string(rank_hi));
    for (const Rational& cls : classes)
        require_class_canonical(cls);

    std::vector<PropositionRow> rows;
    for (int rank = rank_lo; rank <= rank_hi; ++rank) {
        LieType type(kind, rank);  // rejects ranks below the type's guard
        for (int p = 1; p <= type.simple_root_count(); ++p) {
            for (const Rational& cls : classes) {
                ScanResult scan = first_reducible_point(type, p, cls, window);
                PropositionRow row{type, p, cls, scan.first_point, scan.monotone,
                                   claimed_first_point(kind, rank, p, cls), std::nullopt};
                if (row.paper_claim)
                    row.match = row.first_point == row.paper_claim;
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

}  // namespace gkd
