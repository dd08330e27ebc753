#pragma once

#include <bit>
#include <utility>
#include <vector>

#include "resrun/field.hpp"

namespace resrun {

/// Precomputed quadratic character of one field: value(i) is 0 for the zero
/// element, +1 for non-zero squares, -1 for non-squares, addressed by
/// canonical element index. One bit per element; immutable after build.
class CharTable {
public:
    CharTable(FieldCtx field, std::vector<u64> square_bits)
        : field_(std::move(field)), square_bits_(std::move(square_bits)) {}

    const FieldCtx& field() const { return field_; }
    u64 q() const { return field_.q(); }

    int value(u64 index) const {
        if (index == 0) return 0;
        return (square_bits_[index >> 6] >> (index & 63)) & 1 ? 1 : -1;
    }

    int value_of(const FieldElem& a) const { return value(field_.index_of(a)); }

    bool is_square(u64 index) const { return value(index) == 1; }

private:
    FieldCtx field_;
    std::vector<u64> square_bits_;
};

/// Single pass marking beta^2 for every non-zero beta; each non-zero square
/// is hit exactly twice (by +/- beta). Verifies the (q-1)/2 split before
/// returning.
inline CharTable build_char_table(const FieldCtx& ctx) {
    const u64 p = ctx.p();
    const u64 q = ctx.q();
    const u32 d = ctx.d();
    std::vector<u64> bits((q + 63) / 64, 0);
    auto set_bit = [&bits](u64 i) { bits[i >> 6] |= u64{1} << (i & 63); };

    if (d == 1) {
        for (u64 a = 1; a < p; ++a) set_bit((a * a) % p);
    } else {
        std::vector<u64> digits(d, 0);
        std::vector<u64> sq(d, 0);
        std::vector<u64> scratch(ctx.scratch_size());
        for (u64 i = 1; i < q; ++i) {
            for (u32 k = 0; k < d; ++k) { // increment base-p digit vector
                if (++digits[k] < p) break;
                digits[k] = 0;
            }
            ctx.mul_raw(digits.data(), digits.data(), sq.data(), scratch.data());
            u64 idx = 0;
            for (u32 k = d; k-- > 0;) idx = idx * p + sq[k];
            set_bit(idx);
        }
    }

    u64 squares = 0;
    for (u64 w : bits) squares += static_cast<u64>(std::popcount(w));
    if (squares != (q - 1) / 2 || (bits[0] & 1) != 0)
        raise(Errc::internal_error, "square/non-square partition is not (q-1)/2 each");
    return CharTable(ctx, std::move(bits));
}

/// Euler criterion, independent of the table: a^((q-1)/2) is 1 for squares
/// and -1 for non-squares. Retained as a cross-check oracle and for spot
/// queries on fields too large to tabulate.
inline int lambda_euler(const FieldCtx& ctx, const FieldElem& a) {
    if (ctx.is_zero(a)) return 0;
    const FieldElem r = ctx.pow(a, (ctx.q() - 1) / 2);
    if (r == ctx.one()) return 1;
    if (r == ctx.embed(-1)) return -1;
    raise(Errc::internal_error, "a^((q-1)/2) not in {1,-1}; field arithmetic is broken");
}

/// lambda(-1) = +1 iff q = 1 (mod 4).
inline int lambda_minus_one(u64 q) { return q % 4 == 1 ? 1 : -1; }

/// lambda(2) = +1 iff q = +/-1 (mod 8).
inline int lambda_two(u64 q) {
    const u64 r = q % 8;
    return (r == 1 || r == 7) ? 1 : -1;
}

/// lambda(-2) = +1 iff q = 1 or 3 (mod 8).
inline int lambda_minus_two(u64 q) {
    const u64 r = q % 8;
    return (r == 1 || r == 3) ? 1 : -1;
}

/// a != 0 is a fourth power iff a^((q-1)/4) = 1. Only defined for
/// q = 1 (mod 4), where fourth powers form an index-2 subgroup of squares.
inline bool is_fourth_power(const FieldCtx& ctx, const FieldElem& a) {
    if (ctx.q() % 4 != 1) raise(Errc::wrong_residue_class, "q must be 1 mod 4");
    if (ctx.is_zero(a)) raise(Errc::zero_argument, "fourth-power test of zero");
    return ctx.pow(a, (ctx.q() - 1) / 4) == ctx.one();
}

} // namespace resrun
