#include <catch2/catch_amalgamated.hpp>

#include "resrun/sweep.hpp"
#include "resrun/two_squares.hpp"

using namespace resrun;

TEST_CASE("prime splits match the classical values") {
    CHECK(decompose_prime(5) == std::pair<i64, i64>{1, 2});
    CHECK(decompose_prime(13) == std::pair<i64, i64>{3, 2});
    CHECK(decompose_prime(29) == std::pair<i64, i64>{5, 2});
    CHECK_THROWS_MATCHES(decompose_prime(7), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == Errc::wrong_residue_class;
                         }));
    CHECK_THROWS_MATCHES(decompose_prime(21), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == Errc::non_prime;
                         }));
}

TEST_CASE("prime split holds for every p = 1 mod 4 up to 10^5") {
    for (const PrimePower& pp : odd_prime_powers_upto(100'000)) {
        if (pp.d != 1 || pp.p % 4 != 1) continue;
        const auto [a, b] = decompose_prime(pp.p);
        REQUIRE(a > 0);
        REQUIRE(a % 2 == 1);
        REQUIRE(b % 2 == 0);
        REQUIRE(u64(a) * u64(a) + u64(b) * u64(b) == pp.p);
    }
}

TEST_CASE("decompose_q golden values") {
    CHECK(decompose_q(5, 3) == TwoSquares{125, 5, 3, -11, 2});
    CHECK(decompose_q(17, 1) == TwoSquares{17, 17, 1, 1, 4});
    CHECK(decompose_q(5, 6) == TwoSquares{15625, 5, 6, 117, 44});
    CHECK(decompose_q(3, 2) == TwoSquares{9, 3, 2, -3, 0});
    CHECK_THROWS_MATCHES(decompose_q(7, 1), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == Errc::wrong_residue_class;
                         }));
    CHECK_THROWS_AS(decompose_q(3, 3), Error); // 27 = 3 mod 4
}

TEST_CASE("brute oracle golden values") {
    CHECK(brute_two_squares(13, 2) == TwoSquares{169, 13, 2, 5, 12});
    CHECK(brute_two_squares(17, 2) == TwoSquares{289, 17, 2, -15, 8});
    CHECK(brute_two_squares(5, 4) == TwoSquares{625, 5, 4, -7, 24});
    CHECK_THROWS_AS(brute_two_squares(19, 1), Error);
}

TEST_CASE("lifted decomposition equals the brute oracle for all q <= 10^5") {
    for (const PrimePower& pp : odd_prime_powers_upto(100'000)) {
        if (pp.q % 4 != 1) continue;
        const TwoSquares fast = decompose_q(pp.p, pp.d);
        const TwoSquares brute = brute_two_squares(pp.p, pp.d);
        REQUIRE(fast == brute);
    }
}

TEST_CASE("sign rule for p = 3 mod 4 with even degree") {
    for (auto [p, d] : {std::pair<u64, u32>{3, 2}, {3, 4}, {3, 6}, {7, 2}, {7, 4}, {11, 2}, {19, 2}}) {
        const TwoSquares ts = decompose_q(p, d);
        const i64 half = static_cast<i64>(*checked_pow(p, d / 2));
        CHECK(ts.t == 0);
        CHECK(ts.s == ((d / 2) % 2 == 0 ? half : -half));
        CHECK(mod_floor(ts.s, 4) == 1);
    }
}

TEST_CASE("normalization invariants") {
    for (auto [p, d] : {std::pair<u64, u32>{13, 3}, {29, 2}, {5, 8}, {73, 1}, {101, 2}}) {
        const TwoSquares ts = decompose_q(p, d);
        CHECK(u64(i128(ts.s) * ts.s + i128(ts.t) * ts.t) == ts.q);
        CHECK(mod_floor(ts.s, 4) == 1);
        CHECK(ts.t >= 0);
        CHECK(mod_floor(ts.s, p) != 0);
        if (ts.t != 0) CHECK(u64(ts.s < 0 ? -ts.s : ts.s) < isqrt(ts.q) + 1);
        CHECK(decompose_q(p, d) == ts); // deterministic
    }
}

TEST_CASE("large input stays exact") {
    // 5^26 = 1490116119384765625 still fits in 64 bits
    const TwoSquares ts = decompose_q(5, 26);
    CHECK(ts.q == 1490116119384765625ull);
    CHECK(u64(i128(ts.s) * ts.s + i128(ts.t) * ts.t) == ts.q);
    CHECK(mod_floor(ts.s, 4) == 1);
    CHECK_THROWS_MATCHES(decompose_q(5, 28), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == Errc::capacity_exceeded;
                         }));
}
