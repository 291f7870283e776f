#pragma once

// Pseudo-cubic numbers [m,l]^d = (m+1)^l * m^(d-l) and the greedy
// decomposition of a natural number into pseudo cubics of strictly
// decreasing dimension (its d-PCR). The decomposition is unique once the
// terms descend lexicographically in (m,l) and each remainder stays below
// the next lower-dimensional bracket; pcr_from_terms checks exactly that.

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "gridmax/arith.hpp"

namespace gridmax {

struct pseudo_cubic_term {
    u64 m = 1;   // base
    int l = 0;   // number of factors at m+1
    int dim = 1; // dimension of the bracket

    friend bool operator==(const pseudo_cubic_term&, const pseudo_cubic_term&) = default;
};

// (m+1)^l * m^(dim-l); dim = 0 is the empty product.
inline u64 cubic_value(u64 m, int l, int dim) {
    if (m < 1) throw std::domain_error("cubic_value: m must be positive");
    if (l < 0 || dim < 0 || l > dim) throw std::domain_error("cubic_value: need 0 <= l <= dim");
    return checked_mul(checked_pow(checked_add(m, 1), l), checked_pow(m, dim - l));
}

inline u64 cubic_value(const pseudo_cubic_term& t) { return cubic_value(t.m, t.l, t.dim); }

// [m,d]^d and [m+1,0]^d are the same number; keep the l < dim form.
inline pseudo_cubic_term normalize_term(pseudo_cubic_term t) {
    if (t.l < 0 || t.l > t.dim) throw std::domain_error("normalize_term: need 0 <= l <= dim");
    if (t.l == t.dim) return {checked_add(t.m, 1), 0, t.dim};
    return t;
}

struct pcr {
    std::vector<pseudo_cubic_term> terms; // dims d, d-1, ..., c with no gaps
    u64 n = 0;
    int d = 0;

    friend bool operator==(const pcr&, const pcr&) = default;
};

namespace detail {

// Largest pseudo dim-cubic <= n: m = floor(n^(1/dim)), then the longest
// step up the chain [m,0]^dim < [m,1]^dim < ... that stays <= n. The scan
// replaces the logarithm formula; each step multiplies by (m+1)/m exactly.
inline pseudo_cubic_term leading_term(u64 n, int dim) {
    u64 m = iroot(n, dim);
    u64 value = checked_pow(m, dim);
    int l = 0;
    while (l + 1 <= dim - 1) {
        u128 next = (u128)(value / m) * (m + 1);
        if (next > n) break;
        value = (u64)next;
        ++l;
    }
    return {m, l, dim};
}

} // namespace detail

inline pcr pcr_decompose(u64 n, int d) {
    if (n < 1) throw std::domain_error("pcr_decompose: n must be positive");
    if (d < 1) throw std::domain_error("pcr_decompose: d must be positive");
    pcr out;
    out.n = n;
    out.d = d;
    u64 rest = n;
    for (int dim = d; rest > 0; --dim) {
        pseudo_cubic_term t = detail::leading_term(rest, dim);
        out.terms.push_back(t);
        rest -= cubic_value(t);
    }
    return out;
}

inline u64 pcr_value(const pcr& p) {
    u64 total = 0;
    for (const auto& t : p.terms) total = checked_add(total, cubic_value(t));
    return total;
}

// Validating constructor for externally assembled term lists.
inline pcr pcr_from_terms(std::vector<pseudo_cubic_term> terms, int d) {
    if (d < 1) throw std::domain_error("pcr_from_terms: d must be positive");
    if (terms.empty()) throw std::domain_error("pcr_from_terms: no terms");
    int dim = d;
    for (std::size_t i = 0; i < terms.size(); ++i, --dim) {
        const auto& t = terms[i];
        if (t.dim != dim) throw std::domain_error("pcr_from_terms: dims must run d, d-1, ... without gaps");
        if (t.dim < 1 || t.m < 1 || t.l < 0 || t.l > t.dim - 1)
            throw std::domain_error("pcr_from_terms: term out of range");
        if (i > 0) {
            const auto& prev = terms[i - 1];
            if (!(prev.m > t.m || (prev.m == t.m && prev.l > t.l)))
                throw std::domain_error("pcr_from_terms: (m,l) must strictly decrease");
        }
    }
    u64 rest = 0;
    for (std::size_t i = 1; i < terms.size(); ++i) rest = checked_add(rest, cubic_value(terms[i]));
    if (terms.front().dim >= 1 && rest >= cubic_value(terms.front().m, terms.front().l, terms.front().dim - 1))
        throw std::domain_error("pcr_from_terms: remainder too large for leading term");
    pcr out;
    out.d = d;
    out.terms = std::move(terms);
    out.n = pcr_value(out);
    return out;
}

// Lexicographic comparison of the flattened (m_d, l_d, ..., m_1, l_1)
// tuples, with absent low-dimensional terms read as (0,0). Agrees with
// numeric order of the represented integers.
inline std::strong_ordering pcr_compare(const pcr& a, const pcr& b) {
    if (a.d != b.d) throw std::domain_error("pcr_compare: dimension mismatch");
    for (int dim = a.d; dim >= 1; --dim) {
        std::size_t ia = (std::size_t)(a.d - dim);
        std::size_t ib = (std::size_t)(b.d - dim);
        u64 ma = ia < a.terms.size() ? a.terms[ia].m : 0;
        int la = ia < a.terms.size() ? a.terms[ia].l : 0;
        u64 mb = ib < b.terms.size() ? b.terms[ib].m : 0;
        int lb = ib < b.terms.size() ? b.terms[ib].l : 0;
        if (ma != mb) return ma <=> mb;
        if (la != lb) return la <=> lb;
    }
    return std::strong_ordering::equal;
}

struct cubic_neighbors_result {
    pseudo_cubic_term pred;  // largest pseudo d-cubic <= n
    pseudo_cubic_term succ;  // smallest pseudo d-cubic > n
    pseudo_cubic_term delta; // succ - pred, one dimension down
};

inline cubic_neighbors_result cubic_neighbors(u64 n, int d) {
    if (n < 1) throw std::domain_error("cubic_neighbors: n must be positive");
    if (d < 1) throw std::domain_error("cubic_neighbors: d must be positive");
    pseudo_cubic_term pred = detail::leading_term(n, d);
    pseudo_cubic_term succ = normalize_term({pred.m, pred.l + 1, d});
    pseudo_cubic_term delta{pred.m, pred.l, d - 1};
    return {pred, succ, delta};
}

}  // namespace gridmax
