#include "gkd/rootdata.hpp"

#include <stdexcept>

namespace gkd {

namespace {

void require_simple_root_index(const LieType& type, int p) {
    if (p < 1 || p > type.simple_root_count())
        throw std::invalid_argument("simple root index " + std::to_string(p) +
                                    " out of range for " + to_string(type));
}

}  // namespace

char to_char(LieKind kind) {
    switch (kind) {
    case LieKind::A: return 'A';
    case LieKind::B: return 'B';
    case LieKind::C: return 'C';
    case LieKind::D: return 'D';
    }
    throw std::logic_error("unreachable LieKind");
}

LieKind kind_from_char(char c) {
    switch (c) {
    case 'A': case 'a': return LieKind::A;
    case 'B': case 'b': return LieKind::B;
    case 'C': case 'c': return LieKind::C;
    case 'D': case 'd': return LieKind::D;
    default:
        throw std::invalid_argument(std::string("unknown Lie type '") + c + "'");
    }
}

LieType::LieType(LieKind kind, int rank) : kind_(kind), rank_(rank) {
    int min_rank = kind == LieKind::D ? 3 : 2;
    if (rank < min_rank)
        throw std::invalid_argument("rank " + std::to_string(rank) + " too small for type " +
                                    std::string(1, to_char(kind)) +
                                    " (minimum " + std::to_string(min_rank) + ")");
}

int LieType::simple_root_count() const {
    return kind_ == LieKind::A ? rank_ - 1 : rank_;
}

std::string to_string(const LieType& type) {
    return std::string(1, to_char(type.kind())) + std::to_string(type.rank());
}

Weight rho(const LieType& type) {
    const int n = type.rank();
    Weight w;
    w.reserve(n);
    switch (type.kind()) {
    case LieKind::A:
        for (int i = 1; i <= n; ++i)
            w.emplace_back(n - 2 * i + 1, 2);
        break;
    case LieKind::B:
        for (int i = 1; i <= n; ++i)
            w.emplace_back(2 * (n - i) + 1, 2);
        break;
    case LieKind::C:
        for (int i = 1; i <= n; ++i)
            w.emplace_back(n - i + 1);
        break;
    case LieKind::D:
        for (int i = 1; i <= n; ++i)
            w.emplace_back(n - i);
        break;
    }
    return w;
}

Weight fundamental_weight(const LieType& type, int index) {
    require_simple_root_index(type, index);
    const int n = type.rank();
    Weight w(n, Rational(0));
    switch (type.kind()) {
    case LieKind::A: {
        // e_1 + ... + e_i minus (i/n) * (e_1 + ... + e_n)
        Rational shift(index, n);
        for (int j = 0; j < n; ++j)
            w[j] = (j < index ? Rational(1) : Rational(0)) - shift;
        break;
    }
    case LieKind::B:
        if (index < n) {
            for (int j = 0; j < index; ++j)
                w[j] = 1;
        } else {
            for (int j = 0; j < n; ++j)
                w[j] = Rational(1, 2);
        }
        break;
    case LieKind::C:
        for (int j = 0; j < index; ++j)
            w[j] = 1;
        break;
    case LieKind::D:
        if (index <= n - 2) {
            for (int j = 0; j < index; ++j)
                w[j] = 1;
        } else {
            for (int j = 0; j < n; ++j)
                w[j] = Rational(1, 2);
            if (index == n - 1)
                w[n - 1] = Rational(-1, 2);
        }
        break;
    }
    return w;
}

Weight eta(const LieType& type, int p) {
    Weight result = rho(type);
    Weight omega = fundamental_weight(type, p);
    for (size_t i = 0; i < result.size(); ++i)
        result[i] -= omega[i];
    return result;
}

Weight scalar_weight_plus_rho(const LieType& type, int p, const Rational& z) {
    Weight result = rho(type);
    Weight direction = eta(type, p);
    for (size_t i = 0; i < result.size(); ++i)
        result[i] += z * direction[i];
    return result;
}

long positive_root_count(const LieType& type) {
    const long n = type.rank();
    switch (type.kind()) {
    case LieKind::A: return n * (n - 1) / 2;
    case LieKind::B: return n * n;
    case LieKind::C: return n * n;
    case LieKind::D: return n * n - n;
    }
    throw std::logic_error("unreachable LieKind");
}

long dim_u_min(const LieType& type) {
    return positive_root_count(type) - 1;
}

}  // namespace gkd
