#pragma once

// Canonical optimal point sets. The pseudo d-cube of [m,l]^d is the box
// with l axes of extent m+1 and d-l axes of extent m; the cubicle of n is
// built recursively by attaching the lower-dimensional cubicle of the PCR
// remainder onto a face of the leading pseudo cube.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "gridmax/formula.hpp"
#include "gridmax/pcr.hpp"
#include "gridmax/pointset.hpp"

namespace gridmax {

// The full box [m+1]^l x [m]^(d-l).
inline point_set pseudo_cube(u64 m, int l, int d) {
    if (d < 1 || l < 0 || l > d - 1) throw std::domain_error("pseudo_cube: need 0 <= l <= d-1");
    u64 count = cubic_value(m, l, d);
    std::vector<lattice_point> pts;
    pts.reserve(count);
    lattice_point cur(d, 1);
    for (;;) {
        pts.push_back(cur);
        int axis = d - 1;
        for (; axis >= 0; --axis) {
            coord extent = (coord)(axis < l ? m + 1 : m);
            if (cur[axis] < extent) {
                ++cur[axis];
                break;
            }
            cur[axis] = 1;
        }
        if (axis < 0) break;
    }
    return point_set(d, std::move(pts));
}

// Embed s into dimension s.dim() + |fixed_axes|, pinning each fixed axis
// (1-based, in the target dimension) to its anchor value; the remaining
// coordinates keep their order.
inline point_set lift(const point_set& s, const std::vector<int>& fixed_axes,
                      const std::vector<coord>& anchor) {
    if (fixed_axes.size() != anchor.size())
        throw std::domain_error("lift: need one anchor value per fixed axis");
    int d = s.dim() + (int)fixed_axes.size();
    std::vector<int> sorted_axes = fixed_axes;
    std::sort(sorted_axes.begin(), sorted_axes.end());
    if (std::unique(sorted_axes.begin(), sorted_axes.end()) != sorted_axes.end())
        throw std::domain_error("lift: duplicate fixed axis");
    for (int a : sorted_axes)
        if (a < 1 || a > d) throw std::domain_error("lift: fixed axis out of range");

    std::vector<coord> pinned((std::size_t)d, 0);
    std::vector<bool> fixed((std::size_t)d, false);
    for (std::size_t i = 0; i < fixed_axes.size(); ++i) {
        fixed[(std::size_t)(fixed_axes[i] - 1)] = true;
        pinned[(std::size_t)(fixed_axes[i] - 1)] = anchor[i];
    }

    std::vector<lattice_point> pts;
    pts.reserve(s.size());
    for (const auto& p : s.points()) {
        lattice_point q((std::size_t)d);
        std::size_t src = 0;
        for (int i = 0; i < d; ++i) q[(std::size_t)i] = fixed[(std::size_t)i] ? pinned[(std::size_t)i] : p[src++];
        pts.push_back(std::move(q));
    }
    return point_set(d, std::move(pts));
}

struct cubicle {
    point_set set;
    pcr rep;  // empty term list when n = 0
    u64 n = 0;
    int d = 0;
};

namespace detail {

inline point_set cubicle_set(u64 n, int d) {
    if (n == 0) return point_set(d);
    pseudo_cubic_term lead = leading_term(n, d);
    point_set base = pseudo_cube(lead.m, lead.l, d);
    u64 rest = n - cubic_value(lead);
    if (rest == 0) return base;
    point_set attached = lift(cubicle_set(rest, d - 1), {lead.l + 1}, {(coord)(lead.m + 1)});
    std::vector<lattice_point> pts = base.points();
    pts.insert(pts.end(), attached.points().begin(), attached.points().end());
    return point_set(d, std::move(pts));
}

} // namespace detail

inline cubicle build_cubicle(u64 n, int d) {
    if (d < 1) throw std::domain_error("build_cubicle: d must be positive");
    cubicle c;
    c.n = n;
    c.d = d;
    if (n > 0) c.rep = pcr_decompose(n, d);
    c.rep.d = d;
    c.set = detail::cubicle_set(n, d);
    return c;
}

// Projection omitting one axis; by construction this is again a cubicle
// set, equal to build_cubicle of its own size one dimension down.
inline point_set side(const cubicle& c, int axis) {
    if (axis < 1 || axis > c.d) throw std::domain_error("side: axis out of range");
    if (c.d == 1) throw std::domain_error("side: no sides in dimension 1");
    std::vector<int> keep;
    for (int a = 1; a <= c.d; ++a)
        if (a != axis) keep.push_back(a);
    return projection(c.set, keep);
}

inline nlohmann::json cubicle_to_json(const cubicle& c) {
    nlohmann::json j = point_set_to_json(c.set);
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : c.rep.terms) terms.push_back({t.m, t.l, t.dim});
    j["pcr"] = std::move(terms);
    return j;
}

}  // namespace gridmax
