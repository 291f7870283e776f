#pragma once

// Overflow-checked 64-bit arithmetic, exact integer roots, and a small
// unsigned big integer for the few places where intermediates do not fit
// in 64 bits. No floating point anywhere: every floor/ceiling of a root
// is certified by an integer power comparison.

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace gridmax {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

inline u64 checked_add(u64 a, u64 b) {
    u64 r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("gridmax: 64-bit addition overflow");
    return r;
}

inline u64 checked_mul(u64 a, u64 b) {
    u64 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("gridmax: 64-bit multiplication overflow");
    return r;
}

inline u64 checked_pow(u64 base, int exp) {
    if (exp < 0) throw std::domain_error("gridmax: negative exponent");
    u64 r = 1;
    for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

// base^exp <= limit, evaluated without overflow.
inline bool pow_at_most(u64 base, int exp, u64 limit) {
    u128 acc = 1;
    for (int i = 0; i < exp; ++i) {
        acc *= base;
        if (acc > limit) return false;
    }
    return true;
}

// Largest r with r^d <= n.
inline u64 iroot(u64 n, int d) {
    if (d < 1) throw std::domain_error("gridmax: iroot needs d >= 1");
    if (n == 0) return 0;
    if (d == 1) return n;
    u64 hi = 1;
    while (hi < n && pow_at_most(hi * 2, d, n)) hi *= 2;
    u64 lo = hi;  // lo^d <= n < (2*hi)^d
    hi = hi * 2;
    while (lo + 1 < hi) {
        u64 mid = lo + (hi - lo) / 2;
        if (pow_at_most(mid, d, n)) lo = mid;
        else hi = mid;
    }
    return lo;
}

inline u64 isqrt(u64 n) { return iroot(n, 2); }

// Least k with k^d >= x.
inline u64 ceil_root(u64 x, int d) {
    if (x == 0) return 0;
    u64 r = iroot(x, d);
    return pow_at_most(r, d, x - 1) ? r + 1 : r;
}

// Unsigned big integer, little-endian 64-bit limbs, no trailing zeros.
// Just enough for products and power comparisons.
class biguint {
public:
    biguint() = default;
    explicit biguint(u64 v) {
        if (v) limbs_.push_back(v);
    }

    bool is_zero() const { return limbs_.empty(); }

    friend bool operator==(const biguint&, const biguint&) = default;

    std::strong_ordering operator<=>(const biguint& o) const {
        if (limbs_.size() != o.limbs_.size())
            return limbs_.size() <=> o.limbs_.size();
        for (std::size_t i = limbs_.size(); i-- > 0;)
            if (limbs_[i] != o.limbs_[i]) return limbs_[i] <=> o.limbs_[i];
        return std::strong_ordering::equal;
    }

    biguint operator*(const biguint& o) const {
        if (is_zero() || o.is_zero()) return {};
        biguint r;
        r.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            u64 carry = 0;
            for (std::size_t j = 0; j < o.limbs_.size(); ++j) {
                u128 cur = (u128)limbs_[i] * o.limbs_[j] + r.limbs_[i + j] + carry;
                r.limbs_[i + j] = (u64)cur;
                carry = (u64)(cur >> 64);
            }
            r.limbs_[i + o.limbs_.size()] += carry;
        }
        while (!r.limbs_.empty() && r.limbs_.back() == 0) r.limbs_.pop_back();
        return r;
    }

    static biguint pow(u64 base, int exp) {
        if (exp < 0) throw std::domain_error("gridmax: negative exponent");
        biguint r(1);
        biguint b(base);
        for (int i = 0; i < exp; ++i) r = r * b;
        return r;
    }

private:
    std::vector<u64> limbs_;
};

}  // namespace gridmax
