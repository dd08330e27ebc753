#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "resrun/errors.hpp"
#include "resrun/numeric.hpp"

namespace resrun {

/// Default ceiling on q for table-backed work: a full character table fits
/// comfortably in memory (one bit per element = 32 MiB at the default).
inline constexpr u64 kDefaultCapacity = u64{1} << 28;

/// Absolute ceiling. Keeps every coefficient product and its accumulation
/// inside uint64 (for d >= 2, p <= sqrt(q) < 2^16; for d = 1 a single
/// mulmod below 2^62).
inline constexpr u64 kMaxCapacity = (u64{1} << 31) - 1;

struct FieldParams {
    u64 p = 0; ///< odd prime characteristic
    u32 d = 0; ///< extension degree
    u64 q = 0; ///< p^d, exact

    friend bool operator==(const FieldParams&, const FieldParams&) = default;
};

/// Monic irreducible modulus, ascending-degree coefficients including the
/// leading 1 (size d+1). For d = 1 the canonical modulus is x itself.
struct ModulusPoly {
    std::vector<u64> coeffs;

    u32 degree() const { return static_cast<u32>(coeffs.size()) - 1; }
    friend bool operator==(const ModulusPoly&, const ModulusPoly&) = default;
};

/// One element of F_{p^d}: d residues mod p, ascending degree.
/// Canonical index = sum c_i * p^i.
struct FieldElem {
    std::vector<u64> coeffs;

    friend bool operator==(const FieldElem&, const FieldElem&) = default;
};

namespace poly {

// Dense polynomials over F_p, ascending coefficients. Internal helpers for
// irreducibility testing and modulus enumeration; not a general-purpose
// polynomial layer.

inline void trim(std::vector<u64>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int degree(const std::vector<u64>& a) {
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != 0) return static_cast<int>(i);
    return -1;
}

inline std::vector<u64> mul(const std::vector<u64>& a, const std::vector<u64>& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    std::vector<u64> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
    trim(out);
    return out;
}

/// Remainder of a modulo monic f.
inline std::vector<u64> mod(std::vector<u64> a, const std::vector<u64>& f, u64 p) {
    const int df = degree(f);
    trim(a);
    while (degree(a) >= df) {
        const std::size_t shift = a.size() - f.size();
        const u64 lead = a.back();
        if (lead != 0)
            for (std::size_t i = 0; i < f.size(); ++i)
                a[shift + i] = (a[shift + i] + (p - lead % p) * f[i]) % p;
        trim(a);
    }
    return a;
}

inline std::vector<u64> mulmod(const std::vector<u64>& a, const std::vector<u64>& b,
                               const std::vector<u64>& f, u64 p) {
    return mod(mul(a, b, p), f, p);
}

inline std::vector<u64> powmod(std::vector<u64> base, u64 exp, const std::vector<u64>& f, u64 p) {
    std::vector<u64> r{1};
    base = mod(std::move(base), f, p);
    while (exp) {
        if (exp & 1) r = mulmod(r, base, f, p);
        base = mulmod(base, base, f, p);
        exp >>= 1;
    }
    return r;
}

/// Scale to leading coefficient 1 (mod() requires a monic divisor).
inline std::vector<u64> monic(std::vector<u64> a, u64 p) {
    trim(a);
    if (a.empty() || a.back() == 1) return a;
    const u64 inv = resrun::powmod(a.back(), p - 2, p);
    for (u64& c : a) c = (c * inv) % p;
    return a;
}

inline std::vector<u64> gcd(std::vector<u64> a, std::vector<u64> b, u64 p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        b = monic(std::move(b), p);
        a = mod(std::move(a), b, p);
        std::swap(a, b);
    }
    return a;
}

} // namespace poly

/// Rabin's test: f (monic, degree d >= 1) is irreducible over F_p iff
/// x^(p^d) == x (mod f) and gcd(x^(p^(d/r)) - x, f) = 1 for every prime r | d.
inline bool is_irreducible(const std::vector<u64>& coeffs, u64 p) {
    std::vector<u64> f = coeffs;
    poly::trim(f);
    const int d = poly::degree(f);
    if (d < 1) raise(Errc::degree_zero, "polynomial must have degree >= 1");
    if (f.back() != 1) raise(Errc::not_monic, "modulus must be monic");
    for (u64 c : f)
        if (c >= p) raise(Errc::index_out_of_range, "coefficient not reduced mod p");
    if (d == 1) return true;

    // frob[k] = x^(p^k) mod f
    std::vector<std::vector<u64>> frob(static_cast<std::size_t>(d) + 1);
    frob[0] = {0, 1};
    for (int k = 1; k <= d; ++k) frob[k] = poly::powmod(frob[k - 1], p, f, p);

    std::vector<u64> xq_minus_x = frob[d];
    // subtract x
    if (xq_minus_x.size() < 2) xq_minus_x.resize(2, 0);
    xq_minus_x[1] = (xq_minus_x[1] + p - 1) % p;
    poly::trim(xq_minus_x);
    if (!xq_minus_x.empty()) return false;

    // distinct prime divisors of d by trial division (d is small)
    u32 rem = static_cast<u32>(d);
    for (u32 r = 2; rem > 1; r == 2 ? r = 3 : r += 2) {
        if (r * r > rem) r = rem;
        if (rem % r != 0) continue;
        while (rem % r == 0) rem /= r;
        std::vector<u64> g = frob[static_cast<std::size_t>(d) / r];
        if (g.size() < 2) g.resize(2, 0);
        g[1] = (g[1] + p - 1) % p;
        std::vector<u64> common = poly::gcd(f, std::move(g), p);
        if (poly::degree(common) != 0) return false;
    }
    return true;
}

/// The rank-th monic irreducible of degree d over F_p, in the canonical
/// ordering: non-leading coefficients read as the base-p integer
/// sum c_i p^i, ascending. rank 0 is the modulus make_field uses.
inline ModulusPoly irreducible_modulus(u64 p, u32 d, u64 rank = 0) {
    if (d == 0) raise(Errc::degree_zero, "degree must be >= 1");
    if (d == 1) {
        // x, x+1, x+2, ... are all irreducible.
        if (rank >= p) raise(Errc::index_out_of_range, "rank exceeds polynomial count");
        return ModulusPoly{{rank, 1}};
    }
    const auto total = checked_pow(p, d);
    if (!total) raise(Errc::capacity_exceeded, "modulus search space overflows");
    std::vector<u64> cand(static_cast<std::size_t>(d) + 1, 0);
    cand[d] = 1;
    u64 found = 0;
    for (u64 idx = 0; idx < *total; ++idx) {
        u64 v = idx;
        for (u32 i = 0; i < d; ++i) {
            cand[i] = v % p;
            v /= p;
        }
        if (is_irreducible(cand, p)) {
            if (found == rank) return ModulusPoly{cand};
            ++found;
        }
    }
    raise(Errc::internal_error, "no irreducible polynomial found"); // unreachable: they always exist
}

/// An instantiated F_{p^d}. Immutable after construction; every operation is
/// a pure function of (ctx, operands), so contexts are freely shared across
/// threads.
class FieldCtx {
public:
    const FieldParams& params() const { return params_; }
    const ModulusPoly& modulus() const { return modulus_; }
    u64 p() const { return params_.p; }
    u32 d() const { return params_.d; }
    u64 q() const { return params_.q; }

    FieldElem zero() const { return FieldElem{std::vector<u64>(params_.d, 0)}; }
    FieldElem one() const { return embed(1); }

    /// The prime-subfield constant n mod p (e.g. embed(-2) is the element the
    /// closed-form lambda(-2) refers to).
    FieldElem embed(i64 n) const {
        FieldElem e = zero();
        e.coeffs[0] = mod_floor(n, params_.p);
        return e;
    }

    /// Validated element from a coefficient vector (ascending degree).
    FieldElem elem(std::vector<u64> coeffs) const {
        if (coeffs.size() != params_.d) raise(Errc::index_out_of_range, "wrong coefficient count");
        for (u64 c : coeffs)
            if (c >= params_.p) raise(Errc::index_out_of_range, "coefficient not reduced mod p");
        return FieldElem{std::move(coeffs)};
    }

    bool is_zero(const FieldElem& a) const {
        return std::all_of(a.coeffs.begin(), a.coeffs.end(), [](u64 c) { return c == 0; });
    }

    FieldElem add(const FieldElem& a, const FieldElem& b) const {
        check_elem(a);
        check_elem(b);
        FieldElem r = a;
        for (u32 i = 0; i < params_.d; ++i) {
            r.coeffs[i] += b.coeffs[i];
            if (r.coeffs[i] >= params_.p) r.coeffs[i] -= params_.p;
        }
        return r;
    }

    FieldElem sub(const FieldElem& a, const FieldElem& b) const {
        check_elem(a);
        check_elem(b);
        FieldElem r = a;
        for (u32 i = 0; i < params_.d; ++i) {
            r.coeffs[i] += params_.p - b.coeffs[i];
            if (r.coeffs[i] >= params_.p) r.coeffs[i] -= params_.p;
        }
        return r;
    }

    FieldElem neg(const FieldElem& a) const { return sub(zero(), a); }

    FieldElem mul(const FieldElem& a, const FieldElem& b) const {
        check_elem(a);
        check_elem(b);
        FieldElem r = zero();
        std::vector<u64> scratch(scratch_size());
        mul_raw(a.coeffs.data(), b.coeffs.data(), r.coeffs.data(), scratch.data());
        return r;
    }

    /// Square-and-multiply; pow(a, 0) = 1 (also for a = 0).
    FieldElem pow(const FieldElem& a, u64 e) const {
        check_elem(a);
        FieldElem base = a;
        FieldElem r = one();
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    /// Multiplicative inverse via a^(q-2).
    FieldElem inv(const FieldElem& a) const {
        if (is_zero(a)) raise(Errc::division_by_zero, "inverse of zero");
        return pow(a, params_.q - 2);
    }

    u64 index_of(const FieldElem& a) const {
        check_elem(a);
        u64 idx = 0;
        for (u32 i = params_.d; i-- > 0;) idx = idx * params_.p + a.coeffs[i];
        return idx;
    }

    FieldElem elem_from_index(u64 idx) const {
        if (idx >= params_.q) raise(Errc::index_out_of_range, "element index " + std::to_string(idx));
        FieldElem e = zero();
        for (u32 i = 0; i < params_.d; ++i) {
            e.coeffs[i] = idx % params_.p;
            idx /= params_.p;
        }
        return e;
    }

    /// Index of a + 1: only the degree-0 digit moves (cyclic within p).
    u64 successor(u64 idx) const {
        const u64 c0 = idx % params_.p;
        return c0 == params_.p - 1 ? idx - c0 : idx + 1;
    }

    /// Index of a + n for a prime-subfield constant n.
    u64 shift_index(u64 idx, u64 n_mod_p) const {
        const u64 c0 = idx % params_.p;
        u64 c = c0 + n_mod_p;
        if (c >= params_.p) c -= params_.p;
        return idx - c0 + c;
    }

    std::size_t scratch_size() const { return 2 * static_cast<std::size_t>(params_.d); }

    /// Product into out[0..d): callers provide a scratch buffer of
    /// scratch_size() so table builds and sums avoid per-element allocation.
    /// out may alias a or b (results land in scratch first).
    void mul_raw(const u64* a, const u64* b, u64* out, u64* scratch) const {
        const u64 p = params_.p;
        const u32 d = params_.d;
        if (d == 1) {
            out[0] = (a[0] * b[0]) % p;
            return;
        }
        const std::size_t tlen = 2 * static_cast<std::size_t>(d) - 1;
        for (std::size_t k = 0; k < tlen; ++k) scratch[k] = 0;
        for (u32 i = 0; i < d; ++i) {
            if (a[i] == 0) continue;
            for (u32 j = 0; j < d; ++j)
                scratch[i + j] = (scratch[i + j] + a[i] * b[j]) % p;
        }
        // fold x^k for k >= d using x^d = reduction_
        for (std::size_t k = tlen; k-- > d;) {
            const u64 ck = scratch[k];
            if (ck == 0) continue;
            for (u32 i = 0; i < d; ++i)
                scratch[k - d + i] = (scratch[k - d + i] + ck * reduction_[i]) % p;
        }
        for (u32 i = 0; i < d; ++i) out[i] = scratch[i];
    }

private:
    friend FieldCtx make_field(u64 p, u32 d, u64 capacity);
    friend FieldCtx make_field_with_modulus(u64 p, ModulusPoly modulus, u64 capacity);

    FieldCtx(FieldParams params, ModulusPoly modulus)
        : params_(params), modulus_(std::move(modulus)), reduction_(params.d, 0) {
        // x^d = -(m_0 + m_1 x + ... + m_{d-1} x^{d-1})
        for (u32 i = 0; i < params_.d; ++i)
            reduction_[i] = (params_.p - modulus_.coeffs[i] % params_.p) % params_.p;
    }

    void check_elem(const FieldElem& a) const {
        if (a.coeffs.size() != params_.d)
            raise(Errc::index_out_of_range, "element has wrong coefficient count");
    }

    FieldParams params_;
    ModulusPoly modulus_;
    std::vector<u64> reduction_;
};

namespace detail {

inline FieldParams validate_field_params(u64 p, u32 d, u64 capacity) {
    if (d == 0) raise(Errc::degree_zero, "extension degree must be >= 1");
    if (!is_prime(p)) raise(Errc::non_prime, std::to_string(p) + " is not prime");
    if (p == 2) raise(Errc::even_characteristic, "characteristic 2 not supported");
    if (capacity > kMaxCapacity) capacity = kMaxCapacity;
    const auto q = checked_pow(p, d);
    if (!q || *q > capacity)
        raise(Errc::capacity_exceeded,
              std::to_string(p) + "^" + std::to_string(d) + " exceeds capacity " + std::to_string(capacity));
    return FieldParams{p, d, *q};
}

} // namespace detail

/// Construct F_{p^d} with the canonical (first-ranked) irreducible modulus.
/// Deterministic: identical (p, d) always yields an identical context.
inline FieldCtx make_field(u64 p, u32 d, u64 capacity = kDefaultCapacity) {
    FieldParams params = detail::validate_field_params(p, d, capacity);
    return FieldCtx(params, irreducible_modulus(p, d, 0));
}

/// Construct F_{p^d} on a caller-chosen monic irreducible modulus.
inline FieldCtx make_field_with_modulus(u64 p, ModulusPoly modulus, u64 capacity = kDefaultCapacity) {
    if (modulus.coeffs.size() < 2) raise(Errc::degree_zero, "modulus must have degree >= 1");
    if (modulus.coeffs.back() != 1) raise(Errc::not_monic, "modulus must be monic");
    FieldParams params = detail::validate_field_params(p, modulus.degree(), capacity);
    if (!is_irreducible(modulus.coeffs, p)) raise(Errc::not_irreducible, "modulus is reducible");
    return FieldCtx(params, std::move(modulus));
}

inline std::string to_string(const FieldElem& a) {
    std::string s = "(";
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a.coeffs[i]);
    }
    return s + ")";
}

} // namespace resrun
