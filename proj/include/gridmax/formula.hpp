#pragma once

// Exact edge maxima for n-point induced subgraphs of the d-dimensional
// grid: the closed form d*n - discrepancy over the d-PCR, a redundant
// recursive evaluation used for cross-checking, the integer asymptotic
// bound, and the two classical special cases (d = 2 closed form and the
// binary-ones count below 2^d).

#include <bit>
#include <map>
#include <stdexcept>
#include <utility>

#include "gridmax/arith.hpp"
#include "gridmax/pcr.hpp"

namespace gridmax {

struct edge_max_result {
    u64 n = 0;
    int d = 0;
    u64 edges = 0;
    u64 discrepancy = 0;
    pcr rep;
};

// Sum over terms of l*[m,l-1]^(dim-1) + (dim-l)*[m,l]^(dim-1); the first
// summand vanishes with its coefficient when l = 0.
inline u64 discrepancy(const pcr& p) {
    u64 total = 0;
    for (const auto& t : p.terms) {
        if (t.l > 0)
            total = checked_add(total, checked_mul((u64)t.l, cubic_value(t.m, t.l - 1, t.dim - 1)));
        total = checked_add(total, checked_mul((u64)(t.dim - t.l), cubic_value(t.m, t.l, t.dim - 1)));
    }
    return total;
}

inline edge_max_result max_edges(u64 n, int d) {
    edge_max_result r;
    r.n = n;
    r.d = d;
    r.rep = pcr_decompose(n, d);
    r.discrepancy = discrepancy(r.rep);
    u64 dn = checked_mul((u64)d, n);
    if (r.discrepancy > dn) throw std::logic_error("max_edges: discrepancy exceeds d*n");
    r.edges = dn - r.discrepancy;
    return r;
}

// Closed form for a pseudo cubic: d*[m,l]^d - l*[m,l-1]^(d-1) - (d-l)*[m,l]^(d-1).
inline u64 f_pseudo_cube(u64 m, int l, int d) {
    if (d < 1 || l < 0 || l > d - 1) throw std::domain_error("f_pseudo_cube: need 0 <= l <= d-1");
    u64 total = checked_mul((u64)d, cubic_value(m, l, d));
    u64 sub = checked_mul((u64)(d - l), cubic_value(m, l, d - 1));
    if (l > 0) sub = checked_add(sub, checked_mul((u64)l, cubic_value(m, l - 1, d - 1)));
    if (sub > total) throw std::logic_error("f_pseudo_cube: negative result");
    return total - sub;
}

namespace detail {

inline u64 f_recursive_impl(u64 n, int d, std::map<std::pair<u64, int>, u64>& memo) {
    if (d == 1) return n - 1;
    auto key = std::make_pair(n, d);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    pseudo_cubic_term lead = leading_term(n, d);
    u64 lead_value = cubic_value(lead);
    u64 result = f_pseudo_cube(lead.m, lead.l, d);
    if (lead_value < n) {
        u64 rest = n - lead_value;
        result = checked_add(result, checked_add(f_recursive_impl(rest, d - 1, memo), rest));
    }
    memo.emplace(key, result);
    return result;
}

} // namespace detail

// Recursion on the PCR; deliberately redundant with max_edges and kept as
// an independent evaluation path. The memo lives for one call only.
inline u64 f_recursive(u64 n, int d) {
    if (n < 1) throw std::domain_error("f_recursive: n must be positive");
    if (d < 1) throw std::domain_error("f_recursive: d must be positive");
    std::map<std::pair<u64, int>, u64> memo;
    return detail::f_recursive_impl(n, d, memo);
}

// floor(d*n*(1 - n^(-1/d))) = d*n - ceil(d * n^((d-1)/d)), where the
// ceiling is the least k with k^d >= d^d * n^(d-1). Intermediates go
// through the big integer; the result is exact.
inline u64 asymptotic_bound(u64 n, int d) {
    if (n < 1) throw std::domain_error("asymptotic_bound: n must be positive");
    if (d < 1) throw std::domain_error("asymptotic_bound: d must be positive");
    u64 dn = checked_mul((u64)d, n);
    biguint target = biguint::pow((u64)d, d) * biguint::pow(n, d - 1);
    u64 lo = 0, hi = dn;  // k <= d * n^((d-1)/d) <= d*n
    while (lo < hi) {
        u64 mid = lo + (hi - lo) / 2;
        if (biguint::pow(mid, d) >= target) hi = mid;
        else lo = mid + 1;
    }
    return dn - lo;
}

// 2n - ceil(sqrt(4n)), the d = 2 maximum.
inline u64 harary_harborth(u64 n) {
    if (n < 1) throw std::domain_error("harary_harborth: n must be positive");
    return checked_mul(2, n) - ceil_root(checked_mul(4, n), 2);
}

// Total number of 1 bits in the binary representations of 1..n-1,
// evaluated through the discrepancy form at d = bit count of n (so that
// n < 2^d and the PCR is the binary expansion).
inline u64 binary_ones_formula(u64 n) {
    if (n < 1) throw std::domain_error("binary_ones_formula: n must be positive");
    int d = std::bit_width(n);
    return max_edges(n, d).edges;
}

// Minimum possible sum of the d projection counts over sets of exactly
// pseudo-cubic size: l*[m,l-1]^(d-1) + (d-l)*[m,l]^(d-1).
inline u64 projection_lower_bound(u64 m, int l, int d) {
    if (d < 1 || l < 0 || l > d - 1) throw std::domain_error("projection_lower_bound: need 0 <= l <= d-1");
    u64 total = checked_mul((u64)(d - l), cubic_value(m, l, d - 1));
    if (l > 0) total = checked_add(total, checked_mul((u64)l, cubic_value(m, l - 1, d - 1)));
    return total;
}

}  // namespace gridmax
