#include <doctest.h>

#include "fanreg/linalg.hpp"
#include "fanreg/util.hpp"

using namespace fanreg;

TEST_CASE("ranks of known matrices") {
    IntMatrix identity{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    CHECK(rank_gf2(identity) == 3);
    CHECK(rank_rationals(identity) == 3);

    IntMatrix zero{{0, 0}, {0, 0}};
    CHECK(rank_gf2(zero) == 0);
    CHECK(rank_rationals(zero) == 0);

    IntMatrix singular{{1, 2, 3}, {2, 4, 6}, {1, 1, 1}};
    CHECK(rank_rationals(singular) == 2);

    // full rank over Q but rank 0 mod 2
    IntMatrix even{{2, 4}, {6, 8}};
    CHECK(rank_rationals(even) == 2);
    CHECK(rank_gf2(even) == 0);

    CHECK(rank_rationals(IntMatrix{}) == 0);
}

TEST_CASE("certified modular rank agrees with fraction-free elimination") {
    SplitMix64 rng(6174);
    for (int round = 0; round < 40; ++round) {
        int rows = 1 + int(rng.below(6));
        int cols = 1 + int(rng.below(6));
        IntMatrix m(rows, std::vector<long long>(cols));
        for (auto& row : m)
            for (auto& x : row) x = static_cast<long long>(rng.below(7)) - 3;
        CHECK(detail::rank_certified_modular(m) == detail::rank_bareiss_int64(m));
    }
}

TEST_CASE("rational rank survives int64 overflow") {
    // entries around 2^40 force the Bareiss intermediates out of int64
    SplitMix64 rng(31);
    const long long big = 1ll << 40;
    for (int round = 0; round < 5; ++round) {
        IntMatrix m(4, std::vector<long long>(4));
        for (auto& row : m)
            for (auto& x : row) x = big + static_cast<long long>(rng.below(1000));
        CHECK_THROWS_AS(detail::rank_bareiss_int64(m), detail::bareiss_overflow);
        int r = rank_rationals(m);
        CHECK(r == detail::rank_certified_modular(m));
        CHECK(r >= 1);
        CHECK(r <= 4);
    }

    // a scaled identity with huge entries still has full rank
    IntMatrix scaled(3, std::vector<long long>(3, 0));
    for (int i = 0; i < 3; ++i) scaled[i][i] = (1ll << 62) - 1;
    CHECK(rank_rationals(scaled) == 3);
}

TEST_CASE("primality helper") {
    CHECK(detail::is_prime_u64(2));
    CHECK(detail::is_prime_u64(3));
    CHECK(detail::is_prime_u64((1ull << 61) - 1));  // Mersenne prime
    CHECK_FALSE(detail::is_prime_u64(1));
    CHECK_FALSE(detail::is_prime_u64((1ull << 62) + 1));  // 5 * 13 * ...
    CHECK_FALSE(detail::is_prime_u64(1ull << 40));
}
