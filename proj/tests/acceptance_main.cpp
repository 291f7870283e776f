// Acceptance suite: one pass/fail line per criterion, exact tolerances,
// nonzero exit when anything fails.

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "gridmax/gridmax.hpp"

using namespace gridmax;

namespace {

std::string fail_note;

bool check(bool ok, const std::string& note) {
    if (!ok && fail_note.empty()) fail_note = note;
    return ok;
}

#ifdef GRIDMAX_CLI_PATH
std::string run_cli_capture(const std::string& args) {
    std::string cmd = std::string(GRIDMAX_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {};
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    pclose(pipe);
    return out;
}
#endif

// 1. The d = 3 sequence through n = 15, byte-exact from the CLI.
bool criterion_sequence_d3() {
    const std::vector<u64> expect = {0, 1, 2, 4, 5, 7, 9, 12, 13, 15, 17, 20, 21, 23, 25};
    for (u64 n = 1; n <= expect.size(); ++n)
        if (!check(max_edges(n, 3).edges == expect[n - 1], "value mismatch at n=" + std::to_string(n)))
            return false;
#ifdef GRIDMAX_CLI_PATH
    std::string want;
    for (u64 n = 1; n <= expect.size(); ++n)
        want += std::to_string(n) + " " + std::to_string(expect[n - 1]) + "\n";
    if (!check(run_cli_capture("sequence --d 3 --n-max 15") == want, "CLI bytes differ")) return false;
#endif
    return true;
}

// 2. d = 2 closed form, exact integer square root, n up to 10^6.
bool criterion_d2_closed_form() {
    for (u64 n = 1; n <= 1000000; ++n) {
        u64 expect = 2 * n - ceil_root(4 * n, 2);
        if (max_edges(n, 2).edges != expect)
            return check(false, "mismatch at n=" + std::to_string(n));
    }
    return true;
}

// 3. Tightness on perfect d-th powers.
bool criterion_perfect_powers() {
    for (int d = 1; d <= 5; ++d)
        for (u64 m = 1; m <= 6; ++m) {
            u64 n = checked_pow(m, d);
            u64 expect = (u64)d * n - (u64)d * checked_pow(m, d - 1);
            if (!check(max_edges(n, d).edges == expect, "formula off at m^d") ||
                !check(asymptotic_bound(n, d) == expect, "bound not tight at m^d"))
                return false;
        }
    return true;
}

// 4. Hypercube regime: d = 10, all n < 2^10, against the direct bit count.
bool criterion_hypercube_regime() {
    u64 running = 0;  // total 1 bits over 1..n-1
    for (u64 n = 1; n < 1024; ++n) {
        if (!check(max_edges(n, 10).edges == running, "E_10 off at n=" + std::to_string(n)))
            return false;
        if (!check(binary_ones_formula(n) == running, "ones formula off at n=" + std::to_string(n)))
            return false;
        running += (u64)std::popcount(n);
    }
    return check(binary_ones_formula(4) == 4 && binary_ones_formula(13) == 22 &&
                     binary_ones_formula(16) == 32,
                 "spot values differ");
}

// 5. Formula against the order-ideal oracle.
bool criterion_oracle_equivalence() {
    const std::array<std::pair<int, u64>, 3> jobs = {{{2, 25}, {3, 14}, {4, 10}}};
    for (auto [d, n_max] : jobs) {
        verify_report rep = verify_range(d, n_max);
        if (!check(!rep.truncated && rep.rows.size() == n_max, "oracle budget blown")) return false;
        for (const auto& row : rep.rows)
            if (!check(row.agree, "disagreement at d=" + std::to_string(d) +
                                      " n=" + std::to_string(row.n)))
                return false;
    }
    return true;
}

// 6. Raw-subset oracle against the order-ideal oracle, generous box.
bool criterion_double_oracle() {
    for (int d = 1; d <= 3; ++d)
        for (u64 n = 1; n <= 6; ++n) {
            coord box = (coord)(iroot(n, d) + n);
            oracle_budget roomy;
            roomy.max_seconds = 110.0;
            u64 raw = raw_subset_max(n, d, box, roomy).max_edges_found;
            u64 nested = brute_force_max(n, d).max_edges_found;
            if (!check(raw == nested, "oracles split at d=" + std::to_string(d) +
                                          " n=" + std::to_string(n)))
                return false;
        }
    return true;
}

// 7. Gravity property suite over 10^4 random sets.
bool criterion_gravity_suite() {
    std::mt19937_64 rng(424242);
    for (int trial = 0; trial < 10000; ++trial) {
        int d = 1 + (int)(rng() % 4);
        u64 cap = checked_pow(6, d);
        u64 size = 1 + rng() % 30;
        size = std::min(size, cap);
        std::uniform_int_distribution<coord> pick(1, 6);
        std::vector<lattice_point> pts;
        while (pts.size() < size) {
            lattice_point p((std::size_t)d);
            for (auto& c : p) c = pick(rng);
            pts.push_back(std::move(p));
            std::sort(pts.begin(), pts.end());
            pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        }
        point_set s(d, std::move(pts));
        u64 base = edge_count(s);
        point_set total = gravity_total(s);
        if (!check(edge_count(total) >= base, "total gravity lost edges")) return false;
        if (!check(is_fully_nested(s) == (total == s), "fixed point characterization")) return false;
        if (!check(bollobas_thomason_holds(s), "projection product inequality")) return false;
        for (int axis = 1; axis <= d; ++axis) {
            point_set g = gravity_axis(s, axis);
            if (!check(edge_count(g) >= base, "axis gravity lost edges")) return false;
            if (!check(gravity_axis(g, axis) == g, "gravity not idempotent")) return false;
            if (!check(gravity_axis(total, axis) == total, "absorption failed")) return false;
        }
    }
    return true;
}

// 8. Cubicle invariants for n <= 300, d <= 4.
bool criterion_cubicle_invariants() {
    for (int d = 1; d <= 4; ++d) {
        point_set prev(d);
        for (u64 n = 1; n <= 300; ++n) {
            cubicle c = build_cubicle(n, d);
            if (!check(c.set.size() == n, "cardinality")) return false;
            if (!check(c.set.contains_all(prev), "containment monotonicity")) return false;
            if (!check(is_fully_nested(c.set), "nestedness")) return false;
            if (!check(edge_count(c.set) == max_edges(n, d).edges, "optimality")) return false;
            if (d >= 2) {
                auto lead = c.rep.terms.front();
                u64 largest = 0;
                for (int axis = 1; axis <= d; ++axis) {
                    point_set face = side(c, axis);
                    largest = std::max(largest, face.size());
                    if (!check(face == build_cubicle(face.size(), d - 1).set, "side not a cubicle"))
                        return false;
                    if (lead.l < d - 1 && axis >= lead.l + 2)
                        if (!check(face.size() * lead.m >= n, "upper side bound")) return false;
                }
                if (!check(largest * (lead.m + 1) >= n, "largest side bound")) return false;
            }
            prev = c.set;
        }
    }
    return true;
}

// 9. Internal identities: recursion, slicing, the indexed slicing, and
// the projection corollary on random pseudo-cubic-sized sets.
bool criterion_internal_consistency() {
    for (int d = 1; d <= 5; ++d)
        for (u64 n = 1; n <= 2000; ++n)
            if (!check(f_recursive(n, d) == max_edges(n, d).edges, "recursion vs closed form"))
                return false;

    for (u64 m = 1; m <= 8; ++m)
        for (int d = 2; d <= 6; ++d)
            for (int l = 0; l <= d - 1; ++l) {
                u64 lhs = max_edges(cubic_value(m, l + 1, d), d).edges;
                u64 rhs = max_edges(cubic_value(m, l, d), d).edges +
                          max_edges(cubic_value(m, l, d - 1), d - 1).edges +
                          cubic_value(m, l, d - 1);
                if (!check(lhs == rhs, "pseudo-cube recursion")) return false;
            }

    for (int d = 2; d <= 5; ++d)
        for (u64 n = 1; n <= 2000; ++n) {
            auto nb = cubic_neighbors(n, d);
            u64 root = iroot(n, d);
            u64 delta = cubic_value(nb.delta);
            u64 lhs = f_recursive(cubic_value(nb.pred), d);
            if (!check(lhs == root * f_recursive(delta, d - 1) + (root - 1) * delta,
                       "sliced identity"))
                return false;
        }

    for (int d = 2; d <= 4; ++d)
        for (u64 n = 1; n <= 200; ++n) {
            auto nb = cubic_neighbors(n, d);
            i64 root = (i64)iroot(n, d);
            i64 delta = (i64)cubic_value(nb.delta);
            i64 rest = (i64)(n - cubic_value(nb.pred));
            i64 f_rest = rest == 0 ? 0 : (i64)f_recursive((u64)rest, d - 1);
            i64 f_delta = (i64)f_recursive((u64)delta, d - 1);
            i64 expect = (i64)f_recursive(n, d);
            for (i64 i = 0; i <= root; ++i) {
                i64 got = f_rest + rest + i * (f_delta + delta) + (root - i) * f_delta +
                          (root - i - 1) * delta;
                if (!check(got == expect, "indexed slicing identity")) return false;
            }
        }

    std::mt19937_64 rng(5150);
    struct shape { u64 m; int l; int d; };
    const std::vector<shape> shapes = {
        {1, 1, 2}, {2, 0, 2}, {2, 1, 2}, {3, 0, 2}, {1, 2, 3},
        {2, 0, 3}, {2, 1, 3}, {2, 2, 3}, {1, 3, 4}, {2, 0, 4},
    };
    for (int trial = 0; trial < 1000; ++trial) {
        const shape& sh = shapes[(std::size_t)(trial % (int)shapes.size())];
        u64 size = cubic_value(sh.m, sh.l, sh.d);
        std::uniform_int_distribution<coord> pick(1, 6);
        std::vector<lattice_point> pts;
        while (pts.size() < size) {
            lattice_point p((std::size_t)sh.d);
            for (auto& c : p) c = pick(rng);
            pts.push_back(std::move(p));
            std::sort(pts.begin(), pts.end());
            pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        }
        point_set s(sh.d, std::move(pts));
        u64 proj_sum = 0;
        for (int axis = 1; axis <= sh.d; ++axis) proj_sum += projection_count(s, axis);
        if (!check(proj_sum >= projection_lower_bound(sh.m, sh.l, sh.d), "projection corollary"))
            return false;
    }
    return true;
}

struct criterion {
    int id;
    const char* name;
    std::function<bool()> fn;
};

} // namespace

int main() {
    const std::vector<criterion> criteria = {
        {1, "d3-sequence-reproduction", criterion_sequence_d3},
        {2, "d2-closed-form-to-1e6", criterion_d2_closed_form},
        {3, "perfect-power-tightness", criterion_perfect_powers},
        {4, "hypercube-regime-d10", criterion_hypercube_regime},
        {5, "oracle-equivalence", criterion_oracle_equivalence},
        {6, "double-oracle-equivalence", criterion_double_oracle},
        {7, "gravity-property-suite", criterion_gravity_suite},
        {8, "cubicle-invariants", criterion_cubicle_invariants},
        {9, "internal-consistency", criterion_internal_consistency},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        fail_note.clear();
        auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        std::string note;
        try {
            ok = c.fn();
            note = fail_note;
        } catch (const std::exception& e) {
            ok = false;
            note = e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s  %d %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", c.id, c.name, secs,
                    note.empty() ? "" : " -- ", note.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    return failures;
}
