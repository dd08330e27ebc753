#pragma once

#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "resrun/errors.hpp"
#include "resrun/numeric.hpp"

namespace resrun {

/// Normalized two-squares parameter for q = p^d = 1 (mod 4):
/// q = s^2 + t^2 with s = 1 (mod 4), t >= 0, and p not dividing s when
/// p = 1 (mod 4). For p = 3 (mod 4) (d even) the only representation is
/// s = (-1)^(d/2) * p^(d/2), t = 0.
struct TwoSquares {
    u64 q = 0;
    u64 p = 0;
    u32 d = 0;
    i64 s = 0;
    i64 t = 0;

    friend bool operator==(const TwoSquares&, const TwoSquares&) = default;
};

namespace detail {

struct Gaussian {
    i64 re = 0;
    i64 im = 0;
};

// Components stay bounded by sqrt(norm) <= sqrt(q) < 2^32 throughout an
// exponentiation, so 128-bit products never overflow.
inline Gaussian gaussian_mul(Gaussian a, Gaussian b) {
    const i128 re = i128(a.re) * b.re - i128(a.im) * b.im;
    const i128 im = i128(a.re) * b.im + i128(a.im) * b.re;
    return Gaussian{static_cast<i64>(re), static_cast<i64>(im)};
}

inline Gaussian gaussian_pow(Gaussian base, u32 e) {
    Gaussian r{1, 0};
    while (e) {
        if (e & 1) r = gaussian_mul(r, base);
        base = gaussian_mul(base, base);
        e >>= 1;
    }
    return r;
}

inline void validate_two_squares(const TwoSquares& v) {
    if (i128(v.s) * v.s + i128(v.t) * v.t != i128(v.q))
        raise(Errc::internal_error, "s^2 + t^2 != q");
    if (mod_floor(v.s, 4) != 1) raise(Errc::internal_error, "s != 1 mod 4");
    if (v.t < 0) raise(Errc::internal_error, "t must be non-negative");
    if (v.p % 4 == 1 && mod_floor(v.s, v.p) == 0)
        raise(Errc::internal_error, "p divides s");
    if (v.t == 0 && v.p % 4 != 3) raise(Errc::internal_error, "t = 0 requires p = 3 mod 4");
}

} // namespace detail

/// Classical two-squares split of a prime p = 1 (mod 4): returns (a, b) with
/// a^2 + b^2 = p, a odd, b even, both positive. Deterministic: the
/// non-residue seeding the square root of -1 is found by ascending search.
inline std::pair<i64, i64> decompose_prime(u64 p) {
    if (!is_prime(p)) raise(Errc::non_prime, std::to_string(p) + " is not prime");
    if (p % 4 != 1) raise(Errc::wrong_residue_class, "p must be 1 mod 4");

    u64 n = 2;
    while (powmod(n, (p - 1) / 2, p) != p - 1) ++n;
    u64 x = powmod(n, (p - 1) / 4, p);
    if (mulmod(x, x, p) != p - 1) raise(Errc::internal_error, "x^2 != -1 mod p");
    if (x > p - x) x = p - x;

    // Cornacchia descent: first remainder below sqrt(p) is one leg.
    u64 a = p, b = x;
    const u64 root = isqrt(p);
    while (b > root) {
        const u64 r = a % b;
        a = b;
        b = r;
    }
    u64 other = 0;
    if (!is_perfect_square(p - b * b, &other))
        raise(Errc::internal_error, "descent did not produce a two-squares split");
    i64 odd = static_cast<i64>(b % 2 == 1 ? b : other);
    i64 even = static_cast<i64>(b % 2 == 1 ? other : b);
    return {odd, even};
}

/// The two-squares parameter of q = p^d = 1 (mod 4). For p = 1 (mod 4) the
/// prime split is lifted to the d-th power in Z[i]; exactly one component of
/// (a+bi)^d is odd and the sign making it 1 (mod 4) is forced. For
/// p = 3 (mod 4), d even, the explicit sign rule applies.
inline TwoSquares decompose_q(u64 p, u32 d) {
    if (d == 0) raise(Errc::degree_zero, "extension degree must be >= 1");
    const auto q = checked_pow(p, d);
    if (!q) raise(Errc::capacity_exceeded, "q overflows 64 bits");

    TwoSquares out{*q, p, d, 0, 0};
    if (p % 4 == 3) {
        if (d % 2 != 0)
            raise(Errc::wrong_residue_class, "q = 3 mod 4 has no two-squares parameter");
        const u64 half = *checked_pow(p, d / 2);
        out.s = (d / 2) % 2 == 0 ? static_cast<i64>(half) : -static_cast<i64>(half);
        out.t = 0;
    } else {
        const auto [a, b] = decompose_prime(p);
        const detail::Gaussian g = detail::gaussian_pow({a, b}, d);
        const bool re_odd = (std::abs(g.re) % 2) == 1;
        i64 s = re_odd ? g.re : g.im;
        const i64 t = re_odd ? g.im : g.re;
        if (mod_floor(s, 4) != 1) s = -s;
        out.s = s;
        out.t = std::abs(t);
    }
    detail::validate_two_squares(out);
    return out;
}

/// Independent oracle: exhaustive search over s = 1 (mod 4), |s| <= sqrt(q),
/// requiring q - s^2 to be a perfect square (and p not dividing s when
/// p = 1 mod 4). Asserts the representation is unique.
inline TwoSquares brute_two_squares(u64 p, u32 d) {
    if (d == 0) raise(Errc::degree_zero, "extension degree must be >= 1");
    const auto q = checked_pow(p, d);
    if (!q || *q > 1'000'000'000'000ull)
        raise(Errc::capacity_exceeded, "oracle range is q <= 10^12");
    if (*q % 4 != 1) raise(Errc::wrong_residue_class, "q = 3 mod 4 has no two-squares parameter");

    const i64 root = static_cast<i64>(isqrt(*q));
    std::vector<TwoSquares> found;
    auto try_s = [&](i64 s) {
        if (p % 4 == 1 && mod_floor(s, p) == 0) return;
        const u64 t2 = *q - static_cast<u64>(i128(s) * s);
        u64 t = 0;
        if (is_perfect_square(t2, &t))
            found.push_back(TwoSquares{*q, p, d, s, static_cast<i64>(t)});
    };
    for (i64 s = 1; s <= root; s += 4) try_s(s);
    for (i64 s = -3; s >= -root; s -= 4) try_s(s);

    if (found.size() != 1)
        raise(Errc::non_unique, "expected exactly one normalized representation, found " +
                                    std::to_string(found.size()));
    detail::validate_two_squares(found.front());
    return found.front();
}

} // namespace resrun
