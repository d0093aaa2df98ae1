#pragma once

// Shared test utilities: random generators, an insertion-free GK-dimension
// oracle built from positive-root pairings, and a process runner for the
// CLI end-to-end checks.

#include <cstdio>
#include <cstdlib>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "gkd/gkdim.hpp"
#include "gkd/rootdata.hpp"

namespace testsupport {

// Pairings <w, beta^vee> over the positive roots, in coordinates:
// differences w_i - w_j for i<j (all types), sums w_i + w_j (B/C/D),
// 2 w_i for the short roots of B, w_i for the long roots of C.
inline std::vector<gkd::Rational> positive_root_pairings(const gkd::LieType& type,
                                                         const gkd::Weight& w) {
    std::vector<gkd::Rational> pairings;
    const int n = type.rank();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            pairings.push_back(w[i] - w[j]);
    if (type.kind() != gkd::LieKind::A)
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                pairings.push_back(w[i] + w[j]);
    if (type.kind() == gkd::LieKind::B)
        for (int i = 0; i < n; ++i)
            pairings.push_back(2 * w[i]);
    if (type.kind() == gkd::LieKind::C)
        for (int i = 0; i < n; ++i)
            pairings.push_back(w[i]);
    return pairings;
}

// GK dimension from root combinatorics alone, defined on the two regular
// extremes: |Delta^+| - #integral-roots when every integral pairing is
// positive (dominant regular), |Delta^+| when every integral pairing is
// negative (antidominant regular). Returns nullopt elsewhere.
inline std::optional<long> regular_extreme_gk_oracle(const gkd::LieType& type,
                                                     const gkd::Weight& w) {
    long integral = 0;
    bool all_positive = true;
    bool all_negative = true;
    for (const gkd::Rational& value : positive_root_pairings(type, w)) {
        if (!gkd::is_integer(value))
            continue;
        ++integral;
        if (value <= 0)
            all_positive = false;
        if (value >= 0)
            all_negative = false;
    }
    if (integral == 0 || all_positive)
        return gkd::positive_root_count(type) - integral;
    if (all_negative)
        return gkd::positive_root_count(type);
    return std::nullopt;
}

inline gkd::Rational random_half_grid_value(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> halves(-4, 4);
    return gkd::Rational(halves(rng), 2);
}

inline gkd::Sequence random_half_grid_sequence(std::mt19937_64& rng, size_t max_len) {
    std::uniform_int_distribution<size_t> len(0, max_len);
    gkd::Sequence seq;
    size_t length = len(rng);
    seq.reserve(length);
    for (size_t i = 0; i < length; ++i)
        seq.push_back(random_half_grid_value(rng));
    return seq;
}

inline gkd::Weight random_weight(std::mt19937_64& rng, int rank, int max_numer = 12,
                                 int max_denom = 6) {
    std::uniform_int_distribution<int> numer(-max_numer, max_numer);
    std::uniform_int_distribution<int> denom(1, max_denom);
    gkd::Weight w;
    w.reserve(rank);
    for (int i = 0; i < rank; ++i)
        w.emplace_back(numer(rng), denom(rng));
    return w;
}

// Distinct positive rationals in strictly decreasing order: every integral
// pairing of such a weight is positive, so the oracle above always applies.
inline gkd::Weight random_dominant_regular_weight(std::mt19937_64& rng, int rank) {
    std::uniform_int_distribution<int> numer(1, 40);
    std::uniform_int_distribution<int> denom(1, 6);
    std::set<gkd::Rational> values;
    while (static_cast<int>(values.size()) < rank)
        values.emplace(numer(rng), denom(rng));
    gkd::Weight w(values.rbegin(), values.rend());
    return w;
}

struct ProcessResult {
    int exit_code;
    std::string output;
};

inline ProcessResult run_process(const std::string& command) {
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe)
        throw std::runtime_error("popen failed for: " + command);
    std::string output;
    char buffer[4096];
    size_t n;
    while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0)
        output.append(buffer, n);
    int status = pclose(pipe);
    int code = -1;
    if (WIFEXITED(status))
        code = WEXITSTATUS(status);
    return {code, output};
}

inline std::string cli_path() {
    const char* path = std::getenv("GKD_CLI");
    if (!path || !*path)
        throw std::runtime_error("GKD_CLI not set; point it at the gkd binary");
    return path;
}

}  // namespace testsupport
