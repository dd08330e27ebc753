#pragma once

#include <algorithm>
#include <vector>

#include "resrun/char_table.hpp"
#include "resrun/two_squares.hpp"

namespace resrun {

/// Exact value of a character sum together with what was summed.
struct SumResult {
    i64 value = 0;
    u64 terms = 0;               ///< number of summands
    std::vector<u64> excluded;   ///< canonical indices left out, sorted
};

/// sum over alpha not in `excluded` of lambda(prod_j (alpha + shift_j)),
/// shifts being prime-subfield constants. The generic engine behind the
/// linear, quadratic and cubic factor sums: lambda is multiplicative (with
/// lambda(0) = 0 absorbing), so each term is a product of table lookups at
/// index shifts. Computed as a full-field pass minus the excluded terms.
inline SumResult sum_lambda_shifted(const FieldCtx& ctx, const CharTable& table,
                                    const std::vector<i64>& shifts,
                                    const std::vector<FieldElem>& excluded = {}) {
    if (shifts.empty()) raise(Errc::zero_argument, "need at least one shift");
    const u64 q = ctx.q();
    std::vector<u64> sh(shifts.size());
    for (std::size_t j = 0; j < shifts.size(); ++j) sh[j] = mod_floor(shifts[j], ctx.p());

    auto term = [&](u64 idx) -> i64 {
        i64 v = 1;
        for (u64 s : sh) {
            v *= table.value(ctx.shift_index(idx, s));
            if (v == 0) break;
        }
        return v;
    };

    i64 total = 0;
    for (u64 idx = 0; idx < q; ++idx) total += term(idx);

    std::vector<u64> excl;
    excl.reserve(excluded.size());
    for (const FieldElem& e : excluded) excl.push_back(ctx.index_of(e));
    std::sort(excl.begin(), excl.end());
    excl.erase(std::unique(excl.begin(), excl.end()), excl.end());
    for (u64 idx : excl) total -= term(idx);

    return SumResult{total, q - excl.size(), std::move(excl)};
}

/// sum over the whole field of lambda(alpha^2 + b*alpha + c), for a
/// quadratic with non-zero discriminant. The value is always -1; the sum is
/// computed directly, the identity is asserted by tests, not assumed here.
inline i64 bew_sum(const FieldCtx& ctx, const CharTable& table, const FieldElem& b,
                   const FieldElem& c) {
    const FieldElem disc = ctx.sub(ctx.mul(b, b), ctx.mul(ctx.embed(4), c));
    if (ctx.is_zero(disc)) raise(Errc::zero_discriminant, "b^2 - 4c = 0");

    const u64 q = ctx.q();
    const u32 d = ctx.d();
    const u64 p = ctx.p();
    std::vector<u64> alpha(d, 0), tmp(d, 0), scratch(ctx.scratch_size());
    i64 total = 0;
    for (u64 idx = 0; idx < q; ++idx) {
        if (idx > 0) {
            for (u32 k = 0; k < d; ++k) {
                if (++alpha[k] < p) break;
                alpha[k] = 0;
            }
        }
        // f(alpha) = alpha*(alpha + b) + c
        for (u32 k = 0; k < d; ++k) {
            tmp[k] = alpha[k] + b.coeffs[k];
            if (tmp[k] >= p) tmp[k] -= p;
        }
        ctx.mul_raw(alpha.data(), tmp.data(), tmp.data(), scratch.data());
        u64 fidx = 0;
        for (u32 k = d; k-- > 0;) {
            u64 ck = tmp[k] + c.coeffs[k];
            if (ck >= p) ck -= p;
            fidx = fidx * p + ck;
        }
        total += table.value(fidx);
    }
    return total;
}

/// Jacobsthal sum J(a) = sum over x of lambda(x) * lambda(x^2 + a),
/// evaluated directly. a = 0 is permitted (J(0) = 0 trivially; no closed
/// form is claimed for it).
inline i64 jacobsthal_direct(const FieldCtx& ctx, const CharTable& table, const FieldElem& a) {
    const u64 q = ctx.q();
    const u32 d = ctx.d();
    const u64 p = ctx.p();
    std::vector<u64> x(d, 0), sq(d, 0), scratch(ctx.scratch_size());
    i64 total = 0;
    for (u64 idx = 1; idx < q; ++idx) { // x = 0 contributes nothing
        for (u32 k = 0; k < d; ++k) {
            if (++x[k] < p) break;
            x[k] = 0;
        }
        ctx.mul_raw(x.data(), x.data(), sq.data(), scratch.data());
        u64 fidx = 0;
        for (u32 k = d; k-- > 0;) {
            u64 ck = sq[k] + a.coeffs[k];
            if (ck >= p) ck -= p;
            fidx = fidx * p + ck;
        }
        total += table.value(idx) * table.value(fidx);
    }
    return total;
}

/// Katre-Rajwade closed form for J(a), a a non-zero square in F_q,
/// q = p^d = 1 (mod 4): -2s if a is a fourth power, +2s otherwise, with s
/// the normalized two-squares parameter. Takes the fourth-power flag rather
/// than an element so the class-level statement can be checked without a
/// live field.
inline i64 jacobsthal_closed(u64 p, u32 d, bool fourth_power) {
    const auto q = checked_pow(p, d);
    if (!q) raise(Errc::capacity_exceeded, "q overflows 64 bits");
    if (*q % 4 != 1) raise(Errc::wrong_residue_class, "closed form needs q = 1 mod 4");
    const TwoSquares ts = decompose_q(p, d);
    return fourth_power ? -2 * ts.s : 2 * ts.s;
}

/// The quartic sum V = sum over alpha of
/// lambda(alpha * (alpha-1) * (alpha+1) * (alpha+2)), defined for
/// characteristic 5 where it collapses to -1 + J(-1).
inline i64 quartic_sum_v(const FieldCtx& ctx, const CharTable& table) {
    if (ctx.p() != 5) raise(Errc::wrong_characteristic, "quartic sum requires characteristic 5");
    return sum_lambda_shifted(ctx, table, {0, -1, 1, 2}).value;
}

/// Closed form companion of quartic_sum_v: -2s-1 for even d, 2s-1 for odd d.
inline i64 quartic_sum_v_closed(u32 d) {
    const TwoSquares ts = decompose_q(5, d);
    return d % 2 == 0 ? -2 * ts.s - 1 : 2 * ts.s - 1;
}

} // namespace resrun
