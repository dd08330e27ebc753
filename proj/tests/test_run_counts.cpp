#include <catch2/catch_amalgamated.hpp>

#include "resrun/run_counts.hpp"
#include "resrun/sweep.hpp"

using namespace resrun;

namespace {

std::pair<u64, u64> brute_both(u64 p, u32 d, u32 len,
                               const ModulusPoly* modulus = nullptr) {
    const FieldCtx ctx = modulus ? make_field_with_modulus(p, *modulus) : make_field(p, d);
    const CharTable table = build_char_table(ctx);
    return {brute_runs(ctx, table, len, RunKind::squares),
            brute_runs(ctx, table, len, RunKind::nonsquares)};
}

} // namespace

TEST_CASE("brute counts on hand-checked fields") {
    CHECK(brute_both(29, 1, 3) == std::pair<u64, u64>{4, 2});
    CHECK(brute_both(7, 1, 2).first == 1); // squares {1,2,4}: only (1,2) is consecutive
    CHECK(brute_both(3, 1, 3) == std::pair<u64, u64>{0, 0});
    CHECK(brute_both(5, 4, 4) == std::pair<u64, u64>{41, 36});
}

TEST_CASE("run length bounds") {
    const FieldCtx ctx = make_field(3, 2);
    const CharTable table = build_char_table(ctx);
    CHECK_THROWS_MATCHES(brute_runs(ctx, table, 4, RunKind::squares), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::run_too_long; }));
    CHECK_THROWS_MATCHES(brute_runs(ctx, table, 1, RunKind::squares), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::run_too_short; }));
}

TEST_CASE("closed triple counts") {
    const ClosedTriples t125 = triples_closed(5, 3);
    CHECK(t125.case_id == 3);
    CHECK(t125.squares == 12);
    CHECK(t125.nonsquares == 18);
    REQUIRE(t125.two_squares.has_value());
    CHECK(t125.two_squares->s == -11);

    const ClosedTriples t289 = triples_closed(17, 2);
    CHECK(t289.case_id == 4);
    CHECK(t289.squares == 38);
    CHECK(t289.nonsquares == 32);

    const ClosedTriples t81 = triples_closed(3, 4);
    CHECK(t81.case_id == 5);
    CHECK(t81.squares == 6);
    CHECK(t81.nonsquares == 12);

    const ClosedTriples t7 = triples_closed(7, 1);
    CHECK(t7.case_id == 1);
    CHECK(t7.squares == 0);
    CHECK(t7.nonsquares == 0);
    CHECK_FALSE(t7.two_squares.has_value());

    CHECK_THROWS_AS(triples_closed(9, 1), Error);
    CHECK_THROWS_AS(triples_closed(2, 5), Error);
}

TEST_CASE("closed quadruple counts for 5^d") {
    const ClosedQuadruples q25 = quadruples_closed(2);
    CHECK(q25.squares == 1);
    CHECK(q25.nonsquares == 0);
    CHECK(q25.even_degree);

    const ClosedQuadruples q3125 = quadruples_closed(5);
    CHECK(q3125.squares == 200);
    CHECK(q3125.nonsquares == 200);

    const ClosedQuadruples q15625 = quadruples_closed(6);
    CHECK(q15625.squares == 901);
    CHECK(q15625.nonsquares == 1020);
}

TEST_CASE("closed equals brute across small prime powers, lengths 3 and 4") {
    for (const PrimePower& pp : odd_prime_powers_upto(3000)) {
        const ClosedTriples ct = triples_closed(pp.p, pp.d);
        const auto [bs, bn] = brute_both(pp.p, pp.d, 3);
        INFO("q=" << pp.q);
        REQUIRE(ct.squares == bs);
        REQUIRE(ct.nonsquares == bn);
        if (pp.q % 4 == 3) { // negation maps square triples to non-square ones
            CHECK(bs == bn);
            CHECK(ct.squares == ct.nonsquares);
        }
    }
    for (u32 d : {1u, 2u, 3u, 4u}) {
        const ClosedQuadruples cq = quadruples_closed(d);
        const auto [bs, bn] = brute_both(5, d, 4);
        REQUIRE(cq.squares == bs);
        REQUIRE(cq.nonsquares == bn);
        if (d % 2 == 1) CHECK(bs == bn);
    }
}

TEST_CASE("oracle equivalence across every odd prime power up to 10^5") {
    SweepConfig config;
    config.max_q = 100'000;
    const SweepResult res = run_sweep(config);
    CHECK(res.summary.errors == 0);
    CHECK(res.summary.mismatches == 0);
    CHECK(res.summary.matches == res.summary.total);
}

TEST_CASE("basic quadruple {1,2,3,4} is all squares exactly when d is even") {
    for (u32 d : {1u, 2u, 3u, 4u}) {
        const FieldCtx ctx = make_field(5, d);
        const CharTable table = build_char_table(ctx);
        bool all_squares = true;
        for (i64 v : {1, 2, 3, 4}) all_squares &= table.value_of(ctx.embed(v)) == 1;
        CHECK(all_squares == (d % 2 == 0));
        if (d % 2 == 0) CHECK(quadruples_closed(d).squares >= 1);
    }
}

TEST_CASE("counts do not depend on the modulus choice") {
    for (auto [p, d] : {std::pair<u64, u32>{5, 2}, {3, 4}, {7, 2}}) {
        const ModulusPoly second = irreducible_modulus(p, d, 1);
        REQUIRE(second != irreducible_modulus(p, d, 0));
        CHECK(brute_both(p, d, 3) == brute_both(p, d, 3, &second));
    }
}

TEST_CASE("bounds reports") {
    const BoundsReport b9 = bounds_check(3, 2);
    CHECK(b9.nonsquare_bound_holds);
    CHECK(b9.nonsquare_equality);
    CHECK(b9.nonsquare_equality_predicted);
    CHECK(b9.ok);

    const BoundsReport b81 = bounds_check(3, 4);
    CHECK(b81.square_equality);
    CHECK(b81.square_equality_predicted);
    CHECK_FALSE(b81.nonsquare_equality);
    CHECK(b81.ok);

    const BoundsReport b25 = bounds_check(5, 2);
    CHECK(b25.square_bound_holds);
    CHECK(b25.nonsquare_bound_holds);
    CHECK_FALSE(b25.square_equality);
    CHECK_FALSE(b25.nonsquare_equality);
    CHECK(b25.ok);
}

TEST_CASE("existence reports") {
    const ExistenceReport e27 = existence_check(3, 3);
    CHECK(e27.nonsquare_triple_exists);
    CHECK(e27.ok);

    for (u64 p : {13ull, 17ull}) {
        const ExistenceReport e = existence_check(p, 1);
        CHECK_FALSE(e.square_triple_exists);
        CHECK_FALSE(e.square_expected); // in the exception set
        CHECK(e.ok);
    }
}

TEST_CASE("count_runs assembles the report") {
    const RunCountReport both = count_runs(13, 2, 3, CountMode::both);
    CHECK(both.q == 169);
    CHECK(both.case_label == "case4");
    CHECK(both.s_used == 5);
    CHECK(both.brute_squares == 18);
    CHECK(both.brute_nonsquares == 22);
    CHECK(both.closed_squares == 18);
    CHECK(both.closed_nonsquares == 22);
    REQUIRE(both.match.has_value());
    CHECK(*both.match);

    const RunCountReport brute = count_runs(7, 1, 2, CountMode::brute);
    CHECK(brute.brute_squares == 1);
    CHECK_FALSE(brute.closed_squares.has_value());
    CHECK_FALSE(brute.match.has_value());
    CHECK(brute.case_label.empty());

    const RunCountReport closed = count_runs(5, 3, 4, CountMode::closed);
    CHECK(closed.case_label == "quad-odd-d");
    CHECK(closed.closed_squares == 6);
    CHECK_FALSE(closed.brute_squares.has_value());

    CHECK_THROWS_MATCHES(count_runs(7, 1, 4, CountMode::closed), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::no_closed_form; }));
    CHECK_THROWS_MATCHES(count_runs(13, 1, 3, CountMode::both, 10), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::capacity_exceeded; }));
}
