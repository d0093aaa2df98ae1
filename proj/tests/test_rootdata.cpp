#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gkd/rootdata.hpp"

using gkd::LieKind;
using gkd::LieType;
using gkd::Rational;
using gkd::Weight;

namespace {

Weight w_of(std::initializer_list<Rational> values) { return Weight(values); }

}  // namespace

TEST_CASE("rank guards") {
    CHECK_THROWS_AS(LieType(LieKind::A, 1), std::invalid_argument);
    CHECK_THROWS_AS(LieType(LieKind::B, 1), std::invalid_argument);
    CHECK_THROWS_AS(LieType(LieKind::D, 2), std::invalid_argument);
    CHECK_NOTHROW(LieType(LieKind::A, 2));
    CHECK_NOTHROW(LieType(LieKind::D, 3));
    CHECK(LieType(LieKind::A, 5).simple_root_count() == 4);
    CHECK(LieType(LieKind::C, 5).simple_root_count() == 5);
}

TEST_CASE("rho fixtures") {
    CHECK(gkd::rho(LieType(LieKind::A, 3)) == w_of({1, 0, -1}));
    CHECK(gkd::rho(LieType(LieKind::B, 3)) ==
          w_of({Rational(5, 2), Rational(3, 2), Rational(1, 2)}));
    CHECK(gkd::rho(LieType(LieKind::C, 3)) == w_of({3, 2, 1}));
    CHECK(gkd::rho(LieType(LieKind::D, 4)) == w_of({3, 2, 1, 0}));
}

TEST_CASE("fundamental weight fixtures") {
    CHECK(gkd::fundamental_weight(LieType(LieKind::A, 3), 2) ==
          w_of({Rational(1, 3), Rational(1, 3), Rational(-2, 3)}));
    CHECK(gkd::fundamental_weight(LieType(LieKind::B, 3), 1) == w_of({1, 0, 0}));
    CHECK(gkd::fundamental_weight(LieType(LieKind::B, 3), 3) ==
          w_of({Rational(1, 2), Rational(1, 2), Rational(1, 2)}));
    CHECK(gkd::fundamental_weight(LieType(LieKind::C, 3), 2) == w_of({1, 1, 0}));
    CHECK(gkd::fundamental_weight(LieType(LieKind::D, 4), 4) ==
          w_of({Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2)}));
    CHECK(gkd::fundamental_weight(LieType(LieKind::D, 4), 3) ==
          w_of({Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(-1, 2)}));
}

TEST_CASE("fundamental weights sum to rho for all classical types up to rank 10") {
    for (LieKind kind : {LieKind::A, LieKind::B, LieKind::C, LieKind::D}) {
        int min_rank = kind == LieKind::D ? 3 : 2;
        for (int rank = min_rank; rank <= 10; ++rank) {
            LieType type(kind, rank);
            Weight sum(rank, Rational(0));
            for (int i = 1; i <= type.simple_root_count(); ++i) {
                Weight omega = gkd::fundamental_weight(type, i);
                for (int j = 0; j < rank; ++j)
                    sum[j] += omega[j];
            }
            CAPTURE(gkd::to_string(type));
            CHECK(sum == gkd::rho(type));
        }
    }
}

TEST_CASE("eta fixtures") {
    CHECK(gkd::eta(LieType(LieKind::B, 3), 1) ==
          w_of({Rational(3, 2), Rational(3, 2), Rational(1, 2)}));
    CHECK(gkd::eta(LieType(LieKind::D, 4), 2) == w_of({2, 1, 1, 0}));
    CHECK(gkd::eta(LieType(LieKind::A, 3), 2) ==
          w_of({Rational(2, 3), Rational(-1, 3), Rational(-1, 3)}));
}

TEST_CASE("eta repeats the p-th coordinate and is traceless for type A") {
    for (LieKind kind : {LieKind::A, LieKind::B, LieKind::C, LieKind::D}) {
        int min_rank = kind == LieKind::D ? 3 : 2;
        for (int rank = min_rank; rank <= 8; ++rank) {
            LieType type(kind, rank);
            for (int p = 1; p <= type.simple_root_count(); ++p) {
                Weight direction = gkd::eta(type, p);
                if (p < rank) {
                    INFO(gkd::to_string(type) << " p=" << p);
                    CHECK(direction[p - 1] == direction[p]);
                }
                if (kind == LieKind::A) {
                    Rational total(0);
                    for (const auto& c : direction)
                        total += c;
                    CHECK(total == 0);
                }
            }
        }
    }
}

TEST_CASE("scalar weight fixtures") {
    CHECK(gkd::scalar_weight_plus_rho(LieType(LieKind::A, 3), 2, Rational(-1)) ==
          w_of({Rational(1, 3), Rational(1, 3), Rational(-2, 3)}));
    CHECK(gkd::scalar_weight_plus_rho(LieType(LieKind::B, 3), 1, Rational(0)) ==
          gkd::rho(LieType(LieKind::B, 3)));
    CHECK(gkd::scalar_weight_plus_rho(LieType(LieKind::B, 3), 1, Rational(-2)) ==
          w_of({Rational(-1, 2), Rational(-3, 2), Rational(-1, 2)}));
}

TEST_CASE("positive root counts and dim u") {
    CHECK(gkd::positive_root_count(LieType(LieKind::A, 4)) == 6);
    CHECK(gkd::positive_root_count(LieType(LieKind::B, 3)) == 9);
    CHECK(gkd::positive_root_count(LieType(LieKind::C, 3)) == 9);
    CHECK(gkd::positive_root_count(LieType(LieKind::D, 4)) == 12);
    CHECK(gkd::dim_u_min(LieType(LieKind::B, 3)) == 8);
    CHECK(gkd::dim_u_min(LieType(LieKind::D, 4)) == 11);
    CHECK(gkd::dim_u_min(LieType(LieKind::A, 3)) == 2);
}

TEST_CASE("index validation") {
    LieType a3(LieKind::A, 3);
    CHECK_THROWS_AS(gkd::fundamental_weight(a3, 3), std::invalid_argument);
    CHECK_THROWS_AS(gkd::fundamental_weight(a3, 0), std::invalid_argument);
    CHECK_THROWS_AS(gkd::eta(a3, 3), std::invalid_argument);
    CHECK_NOTHROW(gkd::eta(LieType(LieKind::B, 3), 3));
    CHECK_THROWS_AS(gkd::eta(LieType(LieKind::B, 3), 4), std::invalid_argument);
}

TEST_CASE("kind characters") {
    CHECK(gkd::kind_from_char('b') == LieKind::B);
    CHECK(gkd::to_char(LieKind::D) == 'D');
    CHECK_THROWS_AS(gkd::kind_from_char('E'), std::invalid_argument);
}
