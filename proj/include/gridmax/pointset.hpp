#pragma once

// Finite sets of lattice points with 1-based coordinates: Manhattan
// adjacency edge counting, projections, gravity compression along an
// axis, and nestedness predicates. Sets are immutable after construction
// and keep their points lexicographically sorted; membership goes through
// a hash index.

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "gridmax/arith.hpp"

#include <json.hpp>

namespace gridmax {

using coord = i64;
using lattice_point = std::vector<coord>;

struct point_hash {
    std::size_t operator()(const lattice_point& p) const {
        std::size_t h = 1469598103934665603ull;
        for (coord c : p) {
            h ^= (std::size_t)c;
            h *= 1099511628211ull;
        }
        return h;
    }
};

class point_set {
public:
    point_set() = default;

    explicit point_set(int d) : d_(d) {
        if (d < 1) throw std::domain_error("point_set: dimension must be positive");
    }

    point_set(int d, std::vector<lattice_point> pts) : point_set(d) {
        for (const auto& p : pts) {
            if ((int)p.size() != d) throw std::domain_error("point_set: point dimension mismatch");
            for (coord c : p)
                if (c < 1) throw std::domain_error("point_set: coordinates must be >= 1");
        }
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        pts_ = std::move(pts);
        index_.reserve(pts_.size());
        index_.insert(pts_.begin(), pts_.end());
    }

    int dim() const { return d_; }
    u64 size() const { return pts_.size(); }
    bool empty() const { return pts_.empty(); }
    const std::vector<lattice_point>& points() const { return pts_; }
    bool contains(const lattice_point& p) const { return index_.count(p) != 0; }

    bool contains_all(const point_set& other) const {
        for (const auto& p : other.pts_)
            if (!contains(p)) return false;
        return true;
    }

    friend bool operator==(const point_set& a, const point_set& b) {
        return a.d_ == b.d_ && a.pts_ == b.pts_;
    }

private:
    int d_ = 1;
    std::vector<lattice_point> pts_;
    std::unordered_set<lattice_point, point_hash> index_;
};

// Unordered pairs at Manhattan distance 1. Each point probes only its +1
// neighbor per axis, so every edge is counted at its lower endpoint.
inline u64 edge_count(const point_set& s) {
    u64 edges = 0;
    lattice_point q;
    for (const auto& p : s.points()) {
        q = p;
        for (int i = 0; i < s.dim(); ++i) {
            ++q[i];
            if (s.contains(q)) ++edges;
            --q[i];
        }
    }
    return edges;
}

namespace detail {

inline lattice_point strip_axis(const lattice_point& p, int axis) {
    lattice_point q;
    q.reserve(p.size() - 1);
    for (std::size_t i = 0; i < p.size(); ++i)
        if ((int)i != axis - 1) q.push_back(p[i]);
    return q;
}

inline void check_axis(const point_set& s, int axis, const char* who) {
    if (axis < 1 || axis > s.dim())
        throw std::domain_error(std::string(who) + ": axis out of range");
}

} // namespace detail

// Image of s under the projection keeping the given axes (1-based), in
// their original coordinate order. Duplicates collapse.
inline point_set projection(const point_set& s, std::vector<int> keep) {
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    if (keep.empty()) throw std::domain_error("projection: axis set must be non-empty");
    for (int a : keep)
        if (a < 1 || a > s.dim()) throw std::domain_error("projection: axis out of range");
    std::vector<lattice_point> out;
    out.reserve(s.size());
    for (const auto& p : s.points()) {
        lattice_point q;
        q.reserve(keep.size());
        for (int a : keep) q.push_back(p[a - 1]);
        out.push_back(std::move(q));
    }
    return point_set((int)keep.size(), std::move(out));
}

// |pi_omit-hat(S)|: size of the projection omitting one axis. For d = 1
// this is 1 for any non-empty set.
inline u64 projection_count(const point_set& s, int omit) {
    detail::check_axis(s, omit, "projection_count");
    if (s.empty()) return 0;
    if (s.dim() == 1) return 1;
    std::unordered_set<lattice_point, point_hash> image;
    image.reserve(s.size());
    for (const auto& p : s.points()) image.insert(detail::strip_axis(p, omit));
    return image.size();
}

// Gravity along an axis: within each fiber over the omitted coordinates,
// points are ordered by their axis coordinate and re-coordinatized to
// ranks 1..k. Cardinality is preserved; the operator is idempotent.
inline point_set gravity_axis(const point_set& s, int axis) {
    detail::check_axis(s, axis, "gravity_axis");
    std::unordered_map<lattice_point, std::vector<coord>, point_hash> fibers;
    for (const auto& p : s.points())
        fibers[detail::strip_axis(p, axis)].push_back(p[axis - 1]);
    std::vector<lattice_point> out;
    out.reserve(s.size());
    for (auto& [key, coords] : fibers) {
        std::sort(coords.begin(), coords.end());
        for (std::size_t rank = 1; rank <= coords.size(); ++rank) {
            lattice_point q = key;
            q.insert(q.begin() + (axis - 1), (coord)rank);
            out.push_back(std::move(q));
        }
    }
    return point_set(s.dim(), std::move(out));
}

// Total gravity g1 g2 ... gd read as a composition: axis d is applied
// first and axis 1 last. The fixed points are exactly the fully nested
// sets; the fixed point itself does not depend on the order.
inline point_set gravity_total(const point_set& s) {
    point_set cur = s;
    for (int axis = s.dim(); axis >= 1; --axis) cur = gravity_axis(cur, axis);
    return cur;
}

// Slice-containment check: the projections of the slices at axis
// coordinate 1, 2, ... must form a descending chain.
inline bool is_nested(const point_set& s, int axis) {
    detail::check_axis(s, axis, "is_nested");
    if (s.empty()) return true;
    std::map<coord, std::unordered_set<lattice_point, point_hash>> slices;
    coord top = 0;
    for (const auto& p : s.points()) {
        slices[p[axis - 1]].insert(detail::strip_axis(p, axis));
        top = std::max(top, p[axis - 1]);
    }
    for (coord k = top; k >= 2; --k) {
        auto cur = slices.find(k);
        if (cur == slices.end()) continue;  // empty above a later slice is caught below
        auto prev = slices.find(k - 1);
        if (prev == slices.end()) return false;
        for (const auto& q : cur->second)
            if (!prev->second.count(q)) return false;
    }
    return slices.count(1) != 0;
}

inline bool is_fully_nested(const point_set& s) {
    for (int axis = 1; axis <= s.dim(); ++axis)
        if (!is_nested(s, axis)) return false;
    return true;
}

struct axis_extent {
    coord height = 0; // largest coordinate along the axis
    u64 area = 0;     // number of points in the top layer
};

inline std::vector<axis_extent> heights_and_areas(const point_set& s) {
    if (s.empty()) throw std::domain_error("heights_and_areas: set is empty");
    std::vector<axis_extent> out((std::size_t)s.dim());
    for (const auto& p : s.points())
        for (int i = 0; i < s.dim(); ++i)
            out[i].height = std::max(out[i].height, p[i]);
    for (const auto& p : s.points())
        for (int i = 0; i < s.dim(); ++i)
            if (p[i] == out[i].height) ++out[i].area;
    return out;
}

// n^(d-1) <= product of the d projection counts. A theorem for every
// input; exposed as an executable check for the property suite.
inline bool bollobas_thomason_holds(const point_set& s) {
    if (s.empty()) throw std::domain_error("bollobas_thomason_holds: set is empty");
    biguint lhs = biguint::pow(s.size(), s.dim() - 1);
    biguint rhs(1);
    for (int axis = 1; axis <= s.dim(); ++axis)
        rhs = rhs * biguint(projection_count(s, axis));
    return lhs <= rhs;
}

// Canonical interchange form: {"d": d, "points": [[..], ..]} with the
// points lexicographically sorted.
inline nlohmann::json point_set_to_json(const point_set& s) {
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& p : s.points()) pts.push_back(p);
    return nlohmann::json{{"d", s.dim()}, {"points", std::move(pts)}};
}

inline point_set point_set_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("d") || !j.contains("points"))
        throw std::domain_error("point_set_from_json: expected {\"d\", \"points\"}");
    if (!j["d"].is_number_integer()) throw std::domain_error("point_set_from_json: d must be an integer");
    int d = j["d"].get<int>();
    if (!j["points"].is_array()) throw std::domain_error("point_set_from_json: points must be an array");
    std::vector<lattice_point> pts;
    pts.reserve(j["points"].size());
    for (const auto& jp : j["points"]) {
        if (!jp.is_array()) throw std::domain_error("point_set_from_json: each point must be an array");
        lattice_point p;
        p.reserve(jp.size());
        for (const auto& c : jp) {
            if (!c.is_number_integer()) throw std::domain_error("point_set_from_json: coordinates must be integers");
            p.push_back(c.get<coord>());
        }
        pts.push_back(std::move(p));
    }
    return point_set(d, std::move(pts));
}

}  // namespace gridmax
