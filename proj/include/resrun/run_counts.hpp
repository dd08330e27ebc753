#pragma once

#include <optional>
#include <string>

#include "resrun/char_table.hpp"
#include "resrun/two_squares.hpp"

namespace resrun {

enum class RunKind { squares, nonsquares };

/// Number of beta in F_q such that beta, beta+1, ..., beta+len-1 are all
/// non-zero squares (or all non-squares). Counting by run start; shifting
/// the start is a bijection onto the centered indexing, so the totals match
/// the centered triple/quadruple counts. Runs live inside a coset of the
/// prime subfield, hence len <= p for the elements to be distinct.
inline u64 brute_runs(const FieldCtx& ctx, const CharTable& table, u32 len, RunKind kind) {
    if (len < 2) raise(Errc::run_too_short, "run length must be >= 2");
    if (len > ctx.p()) raise(Errc::run_too_long, "run length exceeds characteristic");
    const int target = kind == RunKind::squares ? 1 : -1;
    const u64 q = ctx.q();
    u64 count = 0;
    for (u64 start = 0; start < q; ++start) {
        u64 idx = start;
        bool ok = true;
        for (u32 j = 0; j < len; ++j) {
            if (table.value(idx) != target) {
                ok = false;
                break;
            }
            idx = ctx.successor(idx);
        }
        count += ok;
    }
    return count;
}

/// Closed-form counts of length-3 runs, dispatching on q mod 8 (and p mod 4
/// when q = 1 mod 8). Case labels: 1: q=7(8), 2: q=3(8), 3: q=5(8),
/// 4: q=1(8) with p=1(4), 5: q=1(8) with p=3(4) (where s = (-1)^(d/2) sqrt q).
struct ClosedTriples {
    u64 q = 0;
    int case_id = 0;
    std::optional<TwoSquares> two_squares; ///< consumed by cases 3-5
    u64 squares = 0;                       ///< count of all-square triples
    u64 nonsquares = 0;                    ///< count of all-non-square triples
};

namespace detail {

inline u64 exact_div(i64 numerator, i64 divisor, const char* what) {
    if (numerator < 0 || numerator % divisor != 0)
        raise(Errc::non_integer_result, std::string(what) + " is not a non-negative multiple of " +
                                            std::to_string(divisor));
    return static_cast<u64>(numerator / divisor);
}

} // namespace detail

inline ClosedTriples triples_closed(u64 p, u32 d) {
    if (d == 0) raise(Errc::degree_zero, "extension degree must be >= 1");
    if (!is_prime(p)) raise(Errc::non_prime, std::to_string(p) + " is not prime");
    if (p == 2) raise(Errc::even_characteristic, "q must be odd");
    const auto qo = checked_pow(p, d);
    if (!qo) raise(Errc::capacity_exceeded, "q overflows 64 bits");
    const i64 q = static_cast<i64>(*qo);

    ClosedTriples out;
    out.q = *qo;
    switch (*qo % 8) {
    case 7:
        out.case_id = 1;
        out.squares = out.nonsquares = detail::exact_div(q - 7, 8, "q-7");
        break;
    case 3:
        out.case_id = 2;
        out.squares = out.nonsquares = detail::exact_div(q - 3, 8, "q-3");
        break;
    case 5: {
        out.case_id = 3;
        const TwoSquares ts = decompose_q(p, d);
        out.two_squares = ts;
        out.squares = detail::exact_div(q + 2 * ts.s - 7, 8, "q+2s-7");
        out.nonsquares = detail::exact_div(q - 2 * ts.s - 3, 8, "q-2s-3");
        break;
    }
    case 1: {
        out.case_id = p % 4 == 1 ? 4 : 5;
        const TwoSquares ts = decompose_q(p, d);
        out.two_squares = ts;
        out.squares = detail::exact_div(q - 2 * ts.s - 15, 8, "q-2s-15");
        out.nonsquares = detail::exact_div(q + 2 * ts.s - 3, 8, "q+2s-3");
        break;
    }
    default:
        raise(Errc::internal_error, "q mod 8 not in {1,3,5,7}");
    }
    return out;
}

/// Closed-form counts of length-4 runs in F_{5^d}: for even d
/// (q-10s-39)/16 squares and (q+6s-7)/16 non-squares; for odd d both equal
/// (q+2s-7)/16.
struct ClosedQuadruples {
    u64 q = 0;
    bool even_degree = false;
    TwoSquares two_squares;
    u64 squares = 0;
    u64 nonsquares = 0;
};

inline ClosedQuadruples quadruples_closed(u32 d) {
    if (d == 0) raise(Errc::degree_zero, "extension degree must be >= 1");
    const auto qo = checked_pow(5, d);
    if (!qo) raise(Errc::capacity_exceeded, "q overflows 64 bits");
    const i64 q = static_cast<i64>(*qo);

    ClosedQuadruples out;
    out.q = *qo;
    out.even_degree = d % 2 == 0;
    out.two_squares = decompose_q(5, d);
    const i64 s = out.two_squares.s;
    if (out.even_degree) {
        out.squares = detail::exact_div(q - 10 * s - 39, 16, "q-10s-39");
        out.nonsquares = detail::exact_div(q + 6 * s - 7, 16, "q+6s-7");
    } else {
        out.squares = out.nonsquares = detail::exact_div(q + 2 * s - 7, 16, "q+2s-7");
    }
    return out;
}

/// Lower-bound report: N_q >= (q - 2 sqrt q - 3)/8 and
/// M_q >= (q - 2 sqrt q - 15)/8, compared exactly (no floating point:
/// X <= 2 sqrt q iff X <= 0 or X^2 <= 4q). Equality is predicted exactly for
/// p = 3 (mod 4) with d = 2 (mod 4) (N bound) or d = 0 (mod 4) (M bound).
struct BoundsReport {
    u64 q = 0;
    u64 squares = 0;    ///< M_q from the closed form
    u64 nonsquares = 0; ///< N_q from the closed form
    bool nonsquare_bound_holds = false;
    bool nonsquare_equality = false;
    bool nonsquare_equality_predicted = false;
    bool square_bound_holds = false;
    bool square_equality = false;
    bool square_equality_predicted = false;
    bool ok = false; ///< bounds hold and equality matches the prediction
};

inline BoundsReport bounds_check(u64 p, u32 d) {
    const ClosedTriples ct = triples_closed(p, d);
    BoundsReport r;
    r.q = ct.q;
    r.squares = ct.squares;
    r.nonsquares = ct.nonsquares;

    // bound holds iff X := q - 8*count - c <= 2 sqrt q
    auto classify = [&](i64 x, bool& holds, bool& equality) {
        if (x <= 0) {
            holds = true;
            equality = false;
            return;
        }
        const i128 x2 = i128(x) * x;
        const i128 fourq = i128(4) * ct.q;
        holds = x2 <= fourq;
        equality = x2 == fourq;
    };
    const i64 q = static_cast<i64>(ct.q);
    classify(q - 8 * static_cast<i64>(ct.nonsquares) - 3, r.nonsquare_bound_holds,
             r.nonsquare_equality);
    classify(q - 8 * static_cast<i64>(ct.squares) - 15, r.square_bound_holds, r.square_equality);

    r.nonsquare_equality_predicted = p % 4 == 3 && d % 4 == 2;
    r.square_equality_predicted = p % 4 == 3 && d % 4 == 0;
    r.ok = r.nonsquare_bound_holds && r.square_bound_holds &&
           r.nonsquare_equality == r.nonsquare_equality_predicted &&
           r.square_equality == r.square_equality_predicted;
    return r;
}

/// Existence report: a triple of consecutive non-squares exists iff q > 9;
/// a triple of consecutive non-zero squares exists iff
/// q not in {3,5,7,9,13,17}.
struct ExistenceReport {
    u64 q = 0;
    bool nonsquare_triple_exists = false;
    bool nonsquare_expected = false;
    bool square_triple_exists = false;
    bool square_expected = false;
    bool ok = false;
};

inline ExistenceReport existence_check(u64 p, u32 d) {
    const ClosedTriples ct = triples_closed(p, d);
    ExistenceReport r;
    r.q = ct.q;
    r.nonsquare_triple_exists = ct.nonsquares > 0;
    r.nonsquare_expected = ct.q > 9;
    r.square_triple_exists = ct.squares > 0;
    r.square_expected =
        !(ct.q == 3 || ct.q == 5 || ct.q == 7 || ct.q == 9 || ct.q == 13 || ct.q == 17);
    r.ok = r.nonsquare_triple_exists == r.nonsquare_expected &&
           r.square_triple_exists == r.square_expected;
    return r;
}

/// One (q, len) verification row: brute-force counts, closed-form counts
/// when a closed form applies (len 3 for all q, len 4 for p = 5), and the
/// match verdict when both sides are present.
struct RunCountReport {
    u64 q = 0;
    u64 p = 0;
    u32 d = 0;
    u32 len = 0;
    std::string case_label; ///< empty when no closed form applies
    std::optional<i64> s_used;
    std::optional<u64> brute_squares;
    std::optional<u64> brute_nonsquares;
    std::optional<u64> closed_squares;
    std::optional<u64> closed_nonsquares;
    std::optional<bool> match;
};

enum class CountMode { brute, closed, both };

inline bool closed_form_applies(u64 p, u32 len) { return len == 3 || (len == 4 && p == 5); }

inline std::string triple_case_label(int case_id) { return "case" + std::to_string(case_id); }

/// Build the report for one (p, d, len). Brute modes construct the field and
/// its character table (subject to `capacity`); closed modes never tabulate.
inline RunCountReport count_runs(u64 p, u32 d, u32 len, CountMode mode,
                                 u64 capacity = kDefaultCapacity) {
    RunCountReport rep;
    rep.p = p;
    rep.d = d;
    rep.len = len;

    const bool has_closed = closed_form_applies(p, len);
    if (mode == CountMode::closed && !has_closed)
        raise(Errc::no_closed_form,
              "closed forms exist for len 3 (any q) and len 4 (q = 5^d) only");

    if (mode != CountMode::brute && has_closed) {
        if (len == 3) {
            const ClosedTriples ct = triples_closed(p, d);
            rep.q = ct.q;
            rep.case_label = triple_case_label(ct.case_id);
            if (ct.two_squares) rep.s_used = ct.two_squares->s;
            rep.closed_squares = ct.squares;
            rep.closed_nonsquares = ct.nonsquares;
        } else {
            const ClosedQuadruples cq = quadruples_closed(d);
            rep.q = cq.q;
            rep.case_label = cq.even_degree ? "quad-even-d" : "quad-odd-d";
            rep.s_used = cq.two_squares.s;
            rep.closed_squares = cq.squares;
            rep.closed_nonsquares = cq.nonsquares;
        }
    }

    if (mode != CountMode::closed) {
        const FieldCtx ctx = make_field(p, d, capacity);
        const CharTable table = build_char_table(ctx);
        rep.q = ctx.q();
        rep.brute_squares = brute_runs(ctx, table, len, RunKind::squares);
        rep.brute_nonsquares = brute_runs(ctx, table, len, RunKind::nonsquares);
    }

    if (rep.brute_squares && rep.closed_squares)
        rep.match = rep.brute_squares == rep.closed_squares &&
                    rep.brute_nonsquares == rep.closed_nonsquares;
    return rep;
}

} // namespace resrun
