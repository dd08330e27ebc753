#pragma once

#include <array>
#include <random>
#include <string>
#include <vector>

#include "resrun/sums.hpp"

namespace resrun {

/// One verified identity: what was checked, the computed-vs-expected detail,
/// and the verdict.
struct CheckLine {
    std::string name;
    std::string detail;
    bool pass = false;
};

enum class Battery { bew, jacobsthal, quartic, section3, section5, all };

inline const char* battery_name(Battery b) {
    switch (b) {
    case Battery::bew: return "bew";
    case Battery::jacobsthal: return "jacobsthal";
    case Battery::quartic: return "quartic";
    case Battery::section3: return "section3";
    case Battery::section5: return "section5";
    case Battery::all: return "all";
    }
    return "?";
}

namespace detail {

inline std::string vs(i64 computed, i64 expected) {
    return "computed " + std::to_string(computed) + ", expected " + std::to_string(expected);
}

inline CheckLine line_eq(std::string name, i64 computed, i64 expected) {
    return CheckLine{std::move(name), vs(computed, expected), computed == expected};
}

} // namespace detail

/// Every monic quadratic with non-zero discriminant sums to -1: exhaustive
/// over all (b, c) up to q = 121, `random_pairs` seeded-random pairs beyond.
inline std::vector<CheckLine> check_bew(const FieldCtx& ctx, const CharTable& table,
                                        u64 random_pairs = 1000) {
    const u64 q = ctx.q();
    u64 checked = 0;
    u64 bad = 0;
    i64 first_bad = 0;
    auto probe = [&](const FieldElem& b, const FieldElem& c) {
        const i64 v = bew_sum(ctx, table, b, c);
        ++checked;
        if (v != -1 && bad++ == 0) first_bad = v;
    };

    const FieldElem four = ctx.embed(4);
    if (q <= 121) {
        for (u64 bi = 0; bi < q; ++bi) {
            const FieldElem b = ctx.elem_from_index(bi);
            const FieldElem bsq = ctx.mul(b, b);
            for (u64 ci = 0; ci < q; ++ci) {
                const FieldElem c = ctx.elem_from_index(ci);
                if (ctx.is_zero(ctx.sub(bsq, ctx.mul(four, c)))) continue;
                probe(b, c);
            }
        }
    } else {
        std::mt19937_64 rng(q);
        while (checked < random_pairs) {
            const FieldElem b = ctx.elem_from_index(rng() % q);
            const FieldElem c = ctx.elem_from_index(rng() % q);
            if (ctx.is_zero(ctx.sub(ctx.mul(b, b), ctx.mul(four, c)))) continue;
            probe(b, c);
        }
    }

    CheckLine line;
    line.name = "bew: sum lambda(x^2+bx+c) = -1, disc != 0";
    line.pass = bad == 0;
    line.detail = std::to_string(checked) + " quadratics" +
                  (bad ? ", " + std::to_string(bad) + " off (first bad sum " +
                             std::to_string(first_bad) + ")"
                       : ", all sums -1");
    return {line};
}

/// Jacobsthal battery. q = 3 (mod 4): J(a) = 0 for every a. q = 1 (mod 4):
/// J(a) matches the Katre-Rajwade closed form for every non-zero square a,
/// and J(-1) is -2s or 2s according to q mod 8.
inline std::vector<CheckLine> check_jacobsthal(const FieldCtx& ctx, const CharTable& table) {
    const u64 q = ctx.q();
    std::vector<CheckLine> lines;
    if (q % 4 == 3) {
        u64 bad = 0;
        for (u64 ai = 0; ai < q; ++ai)
            if (jacobsthal_direct(ctx, table, ctx.elem_from_index(ai)) != 0) ++bad;
        lines.push_back({"jacobsthal: J(a) = 0 for all a (q = 3 mod 4)",
                         std::to_string(q) + " arguments" + (bad ? ", " + std::to_string(bad) + " non-zero" : ", all zero"),
                         bad == 0});
        return lines;
    }

    const TwoSquares ts = decompose_q(ctx.p(), ctx.d());
    u64 checked = 0, bad = 0;
    for (u64 ai = 1; ai < q; ++ai) {
        if (table.value(ai) != 1) continue;
        const FieldElem a = ctx.elem_from_index(ai);
        const i64 expected = is_fourth_power(ctx, a) ? -2 * ts.s : 2 * ts.s;
        ++checked;
        if (jacobsthal_direct(ctx, table, a) != expected) ++bad;
    }
    lines.push_back({"jacobsthal: J(a) = -2s / 2s per fourth-power class, all square a",
                     std::to_string(checked) + " squares, s = " + std::to_string(ts.s) +
                         (bad ? ", " + std::to_string(bad) + " off" : ", all match"),
                     bad == 0});

    const i64 j_minus1 = jacobsthal_direct(ctx, table, ctx.embed(-1));
    const i64 expected = q % 8 == 1 ? -2 * ts.s : 2 * ts.s;
    lines.push_back(detail::line_eq("jacobsthal: J(-1) from q mod 8", j_minus1, expected));
    return lines;
}

/// V = sum lambda(a(a-1)(a+1)(a+2)) against its closed form (p = 5 only).
inline std::vector<CheckLine> check_quartic(const FieldCtx& ctx, const CharTable& table) {
    if (ctx.p() != 5) raise(Errc::wrong_characteristic, "quartic battery requires p = 5");
    const i64 v = quartic_sum_v(ctx, table);
    const i64 closed = quartic_sum_v_closed(ctx.d());
    return {detail::line_eq("quartic: V vs closed form (" +
                                std::string(ctx.d() % 2 == 0 ? "-2s-1" : "2s-1") + ")",
                            v, closed)};
}

/// The triple-count machinery: closed-form lambda values against the Euler
/// criterion, the case-wise S_i / T_i sums over alpha != 0, +/-1, and J(-1).
inline std::vector<CheckLine> check_section3(const FieldCtx& ctx, const CharTable& table) {
    const u64 q = ctx.q();
    std::vector<CheckLine> lines;

    const int l_m1 = lambda_minus_one(q);
    const int l_2 = lambda_two(q);
    const int l_m2 = lambda_minus_two(q);
    lines.push_back(detail::line_eq("lambda(-1) closed vs Euler",
                                    lambda_euler(ctx, ctx.embed(-1)), l_m1));
    lines.push_back(detail::line_eq("lambda(2) closed vs Euler", lambda_euler(ctx, ctx.embed(2)), l_2));
    lines.push_back(detail::line_eq("lambda(-2) closed vs Euler",
                                    lambda_euler(ctx, ctx.embed(-2)), l_m2));

    const std::vector<FieldElem> excl{ctx.embed(0), ctx.embed(1), ctx.embed(-1)};
    const std::array<i64, 3> s_computed{
        sum_lambda_shifted(ctx, table, {0}, excl).value,
        sum_lambda_shifted(ctx, table, {-1}, excl).value,
        sum_lambda_shifted(ctx, table, {1}, excl).value,
    };
    const std::array<i64, 3> t_computed{
        sum_lambda_shifted(ctx, table, {0, -1}, excl).value,
        sum_lambda_shifted(ctx, table, {0, 1}, excl).value,
        sum_lambda_shifted(ctx, table, {-1, 1}, excl).value,
    };
    const std::array<i64, 3> s_expected{-1 - l_m1, -l_m2 - l_m1, -1 - l_2};
    const std::array<i64, 3> t_expected{-1 - l_2, -1 - l_2, -1 - l_m1};
    for (int i = 0; i < 3; ++i) {
        lines.push_back(detail::line_eq("S_" + std::to_string(i + 1), s_computed[i], s_expected[i]));
        lines.push_back(detail::line_eq("T_" + std::to_string(i + 1), t_computed[i], t_expected[i]));
    }

    const i64 j = jacobsthal_direct(ctx, table, ctx.embed(-1));
    i64 j_expected = 0;
    if (q % 4 == 1) {
        const TwoSquares ts = decompose_q(ctx.p(), ctx.d());
        j_expected = q % 8 == 1 ? -2 * ts.s : 2 * ts.s;
    }
    lines.push_back(detail::line_eq("J(-1)", j, j_expected));
    return lines;
}

/// The quadruple-count bookkeeping in characteristic 5: the four linear sums
/// over alpha != 0, +/-1, -2, the quadratic and cubic aggregates, and V.
inline std::vector<CheckLine> check_section5(const FieldCtx& ctx, const CharTable& table) {
    if (ctx.p() != 5) raise(Errc::wrong_characteristic, "section5 battery requires p = 5");
    const u32 d = ctx.d();
    const int l2 = lambda_two(ctx.q());
    const TwoSquares ts = decompose_q(5, d);
    const i64 j_minus1 = d % 2 == 0 ? -2 * ts.s : 2 * ts.s;
    std::vector<CheckLine> lines;

    const std::vector<FieldElem> excl{ctx.embed(0), ctx.embed(1), ctx.embed(-1), ctx.embed(-2)};
    const std::array<std::vector<i64>, 4> linear{{{-1}, {0}, {1}, {2}}};
    const std::array<i64, 4> linear_expected{-1 - 2 * l2, -2 - l2, -2 - l2, -1 - 2 * l2};
    i64 s_sum = 0;
    for (int i = 0; i < 4; ++i) {
        const i64 v = sum_lambda_shifted(ctx, table, linear[i], excl).value;
        s_sum += v;
        lines.push_back(detail::line_eq("S_" + std::to_string(i + 1), v, linear_expected[i]));
    }
    lines.push_back(detail::line_eq("S aggregate = -6-6*lambda(2)", s_sum, -6 - 6 * l2));

    const std::array<std::vector<i64>, 6> pairs{
        {{-1, 0}, {-1, 1}, {-1, 2}, {0, 1}, {0, 2}, {1, 2}}};
    i64 t_sum = 0;
    for (const auto& sh : pairs) t_sum += sum_lambda_shifted(ctx, table, sh, excl).value;
    lines.push_back(detail::line_eq("T aggregate = -10-8*lambda(2)", t_sum, -10 - 8 * l2));

    const std::array<std::vector<i64>, 4> cubics{{{-1, 0, 1}, {-1, 0, 2}, {-1, 1, 2}, {0, 1, 2}}};
    const std::array<i64, 4> cubic_expected{j_minus1 - 1, -2 * ts.s - l2, -2 * ts.s - l2,
                                            j_minus1 - 1};
    i64 u_sum = 0;
    for (int i = 0; i < 4; ++i) {
        const i64 v = sum_lambda_shifted(ctx, table, cubics[i], excl).value;
        u_sum += v;
        lines.push_back(detail::line_eq("U_" + std::to_string(i + 1), v, cubic_expected[i]));
    }
    lines.push_back(detail::line_eq("U aggregate (-8s-4 even d, 0 odd d)", u_sum,
                                    d % 2 == 0 ? -8 * ts.s - 4 : 0));

    lines.push_back(detail::line_eq("V vs closed form", quartic_sum_v(ctx, table),
                                    quartic_sum_v_closed(d)));
    return lines;
}

inline std::vector<CheckLine> run_lemma_battery(const FieldCtx& ctx, const CharTable& table,
                                                Battery which) {
    std::vector<CheckLine> lines;
    auto append = [&lines](std::vector<CheckLine> more) {
        lines.insert(lines.end(), more.begin(), more.end());
    };
    switch (which) {
    case Battery::bew: return check_bew(ctx, table);
    case Battery::jacobsthal: return check_jacobsthal(ctx, table);
    case Battery::quartic: return check_quartic(ctx, table);
    case Battery::section3: return check_section3(ctx, table);
    case Battery::section5: return check_section5(ctx, table);
    case Battery::all:
        append(check_bew(ctx, table));
        append(check_jacobsthal(ctx, table));
        append(check_section3(ctx, table));
        if (ctx.p() == 5) {
            append(check_quartic(ctx, table));
            append(check_section5(ctx, table));
        }
        return lines;
    }
    raise(Errc::internal_error, "unknown battery");
}

} // namespace resrun
