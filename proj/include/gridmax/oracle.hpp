#pragma once

// Independent brute-force maximization of the induced edge count over
// n-point sets. The main oracle enumerates exactly the fully nested sets
// (finite order ideals), generated depth-first as chains of layers along
// the last axis, each layer an ideal one dimension down contained in the
// previous one. A second oracle enumerates raw subsets of a box with no
// structural assumption at all, so the nestedness reduction is itself
// under test. Neither path shares code with the formula module.

#include <atomic>
#include <chrono>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gridmax/formula.hpp"
#include "gridmax/pointset.hpp"

namespace gridmax {

struct oracle_budget {
    u64 max_visits = 10'000'000;
    double max_seconds = 60.0;
};

class budget_exceeded_error : public std::runtime_error {
public:
    budget_exceeded_error(const std::string& what, u64 partial)
        : std::runtime_error(what), partial_count(partial) {}
    u64 partial_count = 0;
};

struct oracle_report {
    u64 n = 0;
    int d = 0;
    u64 max_edges_found = 0;
    point_set witness;
    u64 candidates_examined = 0;
    std::string method;
};

namespace detail {

using layer_shape = std::vector<lattice_point>;  // lex-sorted points of an ideal

using steady = std::chrono::steady_clock;

inline double seconds_since(steady::time_point t0) {
    return std::chrono::duration<double>(steady::now() - t0).count();
}

// Streams every downward-closed subset of the ideal `parent` with
// 1 <= size <= cap, one at a time. Points are decided in lex order, and a
// point may be included only when all its coordinate predecessors are.
class sub_ideal_stream {
public:
    sub_ideal_stream(const layer_shape& parent, u64 cap,
                     const std::function<void(layer_shape&&)>& sink)
        : parent_(parent), cap_(cap), sink_(sink) {
        for (std::size_t i = 0; i < parent.size(); ++i) position_.emplace(parent[i], i);
        chosen_.assign(parent.size(), false);
        walk(0, 0);
    }

private:
    void walk(std::size_t pos, u64 count) {
        if (count == cap_ || pos == parent_.size()) {
            if (count > 0) emit(count);
            return;
        }
        if (includable(pos)) {
            chosen_[pos] = true;
            walk(pos + 1, count + 1);
            chosen_[pos] = false;
        }
        walk(pos + 1, count);
    }

    bool includable(std::size_t pos) const {
        lattice_point q = parent_[pos];
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i] < 2) continue;
            --q[i];
            auto it = position_.find(q);
            ++q[i];
            if (it == position_.end() || !chosen_[it->second]) return false;
        }
        return true;
    }

    void emit(u64 count) {
        layer_shape out;
        out.reserve(count);
        for (std::size_t i = 0; i < parent_.size(); ++i)
            if (chosen_[i]) out.push_back(parent_[i]);
        sink_(std::move(out));
    }

    const layer_shape& parent_;
    u64 cap_;
    const std::function<void(layer_shape&&)>& sink_;
    std::unordered_map<lattice_point, std::size_t, point_hash> position_;
    std::vector<bool> chosen_;
};

// Streams every ideal of N^dim with exactly `size` points. At the top
// level an optional filter selects a slice of the first-layer candidates,
// which is how enumeration fans out across threads.
class nested_enum {
public:
    explicit nested_enum(oracle_budget budget) : budget_(budget), start_(steady::now()) {}

    u64 visited() const { return visited_; }

    void run(u64 size, int dim, const std::function<void(layer_shape&&)>& sink,
             const std::function<bool(u64)>& first_layer_filter = nullptr) {
        filter_ = first_layer_filter;
        first_layer_ordinal_ = 0;
        ideals_exact(size, dim, true, sink);
    }

private:
    void ideals_exact(u64 size, int dim, bool top,
                      const std::function<void(layer_shape&&)>& sink) {
        if (dim == 1) {
            if (top && filter_ && !filter_(first_layer_ordinal_++)) return;
            layer_shape path;
            path.reserve(size);
            for (u64 k = 1; k <= size; ++k) path.push_back({(coord)k});
            count_and_send(std::move(path), top, sink);
            return;
        }
        std::vector<layer_shape> layers;
        for (u64 s = size; s >= 1; --s) {
            ideals_exact(s, dim - 1, false, [&](layer_shape&& first) {
                if (top && filter_ && !filter_(first_layer_ordinal_++)) return;
                layers.push_back(std::move(first));
                chain_rest(size - s, dim, top, layers, sink);
                layers.pop_back();
            });
        }
    }

    void chain_rest(u64 remaining, int dim, bool top, std::vector<layer_shape>& layers,
                    const std::function<void(layer_shape&&)>& sink) {
        if (remaining == 0) {
            count_and_send(assemble(layers), top, sink);
            return;
        }
        const layer_shape parent = layers.back();
        sub_ideal_stream(parent, std::min<u64>(remaining, parent.size()), [&](layer_shape&& next) {
            u64 taken = next.size();
            layers.push_back(std::move(next));
            chain_rest(remaining - taken, dim, top, layers, sink);
            layers.pop_back();
        });
    }

    static layer_shape assemble(const std::vector<layer_shape>& layers) {
        layer_shape out;
        for (std::size_t j = 0; j < layers.size(); ++j)
            for (const auto& p : layers[j]) {
                lattice_point q = p;
                q.push_back((coord)(j + 1));
                out.push_back(std::move(q));
            }
        std::sort(out.begin(), out.end());
        return out;
    }

    void count_and_send(layer_shape&& shape, bool top,
                        const std::function<void(layer_shape&&)>& sink) {
        if (top) {
            if (++visited_ > budget_.max_visits)
                throw budget_exceeded_error("oracle: visit cap exceeded", visited_ - 1);
            if ((visited_ & 0xff) == 0 && seconds_since(start_) > budget_.max_seconds)
                throw budget_exceeded_error("oracle: time budget exceeded", visited_);
        }
        sink(std::move(shape));
    }

    oracle_budget budget_;
    steady::time_point start_;
    u64 visited_ = 0;
    u64 first_layer_ordinal_ = 0;
    std::function<bool(u64)> filter_;
};

// Witness selection shared by both oracles: larger edge count wins; among
// equal counts the lexicographically smaller point list wins.
struct best_tracker {
    i64 value = -1;
    layer_shape points;

    bool offer(u64 edges, const layer_shape& pts) {
        if ((i64)edges > value) {
            value = (i64)edges;
            points = pts;
            return true;
        }
        if ((i64)edges == value && pts < points) {
            points = pts;
            return true;
        }
        return false;
    }

    void merge(const best_tracker& o) {
        if (o.value >= 0) offer((u64)o.value, o.points);
    }
};

} // namespace detail

// Visits every fully nested n-point set in N^d exactly once, in a fixed
// order. Returns the number of sets visited.
inline u64 enumerate_fully_nested(u64 n, int d, const std::function<void(const point_set&)>& visit,
                                  const oracle_budget& budget = {}) {
    if (n < 1) throw std::domain_error("enumerate_fully_nested: n must be positive");
    if (d < 1) throw std::domain_error("enumerate_fully_nested: d must be positive");
    detail::nested_enum en(budget);
    en.run(n, d, [&](detail::layer_shape&& shape) { visit(point_set(d, std::move(shape))); });
    return en.visited();
}

// Maximum edge count over all fully nested n-point sets, which equals the
// unrestricted maximum. With jobs > 1 the first-layer candidates are
// split across threads; the report is independent of scheduling.
inline oracle_report brute_force_max(u64 n, int d, const oracle_budget& budget = {}, int jobs = 1) {
    if (n < 1) throw std::domain_error("brute_force_max: n must be positive");
    if (d < 1) throw std::domain_error("brute_force_max: d must be positive");
    if (jobs < 1) jobs = 1;

    detail::best_tracker best;
    u64 examined = 0;

    if (jobs == 1) {
        detail::nested_enum en(budget);
        en.run(n, d, [&](detail::layer_shape&& shape) {
            point_set s(d, std::move(shape));
            best.offer(edge_count(s), s.points());
        });
        examined = en.visited();
    } else {
        std::vector<detail::best_tracker> bests((std::size_t)jobs);
        std::vector<u64> counts((std::size_t)jobs, 0);
        std::atomic<u64> total_visits{0};
        std::atomic<bool> over_cap{false};
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors((std::size_t)jobs);
        for (int w = 0; w < jobs; ++w) {
            pool.emplace_back([&, w]() {
                try {
                    oracle_budget local = budget;
                    local.max_visits = budget.max_visits + 1;  // cap enforced on the shared counter
                    detail::nested_enum en(local);
                    en.run(
                        n, d,
                        [&](detail::layer_shape&& shape) {
                            if (total_visits.fetch_add(1) + 1 > budget.max_visits) {
                                over_cap.store(true);
                                throw budget_exceeded_error("oracle: visit cap exceeded",
                                                            total_visits.load());
                            }
                            point_set s(d, std::move(shape));
                            bests[(std::size_t)w].offer(edge_count(s), s.points());
                        },
                        [&](u64 ordinal) { return (int)(ordinal % (u64)jobs) == w; });
                    counts[(std::size_t)w] = en.visited();
                } catch (...) {
                    errors[(std::size_t)w] = std::current_exception();
                }
            });
        }
        for (auto& t : pool) t.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
        for (int w = 0; w < jobs; ++w) {
            best.merge(bests[(std::size_t)w]);
            examined += counts[(std::size_t)w];
        }
    }

    oracle_report r;
    r.n = n;
    r.d = d;
    r.max_edges_found = (u64)best.value;
    r.witness = point_set(d, best.points);
    r.candidates_examined = examined;
    r.method = "order-ideal";
    return r;
}

struct raw_subset_options {
    bool prune = true;  // admissible bound: a point added in lex order gains at most d edges
    std::function<void(const point_set&)> visitor;  // called per complete subset reached
};

// Maximum edge count over all n-subsets of the box [box_side]^d. Makes no
// use of nestedness; exists to validate the order-ideal oracle.
inline oracle_report raw_subset_max(u64 n, int d, coord box_side, const oracle_budget& budget = {},
                                    const raw_subset_options& opt = {}) {
    if (n < 1) throw std::domain_error("raw_subset_max: n must be positive");
    if (d < 1) throw std::domain_error("raw_subset_max: d must be positive");
    if (box_side < 1) throw std::domain_error("raw_subset_max: box side must be positive");

    u64 cells = checked_pow((u64)box_side, d);
    if (cells < n) throw std::domain_error("raw_subset_max: box cannot hold n points");
    if (cells > (u64)1 << 24) throw budget_exceeded_error("raw_subset_max: box too large", 0);

    std::vector<u64> stride((std::size_t)d);
    stride[(std::size_t)d - 1] = 1;
    for (int i = d - 2; i >= 0; --i) stride[(std::size_t)i] = stride[(std::size_t)i + 1] * (u64)box_side;

    // lex-smaller neighbor of each cell per axis, or the cell itself if none
    std::vector<u64> below(cells * (std::size_t)d);
    for (u64 idx = 0; idx < cells; ++idx)
        for (int i = 0; i < d; ++i) {
            u64 digit = (idx / stride[(std::size_t)i]) % (u64)box_side;
            below[idx * (std::size_t)d + (std::size_t)i] = digit >= 1 ? idx - stride[(std::size_t)i] : idx;
        }

    std::vector<unsigned char> occupied(cells, 0);
    std::vector<u64> chosen;
    chosen.reserve(n);

    detail::best_tracker best;
    u64 examined = 0;
    u64 ticks = 0;
    auto start = detail::steady::now();

    auto decode = [&](const std::vector<u64>& idxs) {
        detail::layer_shape pts;
        pts.reserve(idxs.size());
        for (u64 idx : idxs) {
            lattice_point p((std::size_t)d);
            for (int i = 0; i < d; ++i)
                p[(std::size_t)i] = (coord)((idx / stride[(std::size_t)i]) % (u64)box_side + 1);
            pts.push_back(std::move(p));
        }
        return pts;
    };

    std::function<void(u64, u64, u64)> dfs = [&](u64 pos, u64 count, u64 edges_now) {
        if (count == n) {
            if (++examined > budget.max_visits)
                throw budget_exceeded_error("raw_subset_max: visit cap exceeded", examined - 1);
            detail::layer_shape pts = decode(chosen);
            if (opt.visitor) opt.visitor(point_set(d, pts));
            best.offer(edges_now, pts);
            return;
        }
        u64 need = n - count;
        for (u64 idx = pos; idx + need <= cells; ++idx) {
            if ((++ticks & 0xfffff) == 0 && detail::seconds_since(start) > budget.max_seconds)
                throw budget_exceeded_error("raw_subset_max: time budget exceeded", examined);
            u64 delta = 0;
            for (int i = 0; i < d; ++i) {
                u64 nb = below[idx * (std::size_t)d + (std::size_t)i];
                if (nb != idx && occupied[nb]) ++delta;
            }
            if (opt.prune && (i64)(edges_now + delta + (need - 1) * (u64)d) <= best.value) continue;
            occupied[idx] = 1;
            chosen.push_back(idx);
            dfs(idx + 1, count + 1, edges_now + delta);
            chosen.pop_back();
            occupied[idx] = 0;
        }
    };
    dfs(0, 0, 0);

    oracle_report r;
    r.n = n;
    r.d = d;
    r.max_edges_found = (u64)best.value;
    r.witness = point_set(d, best.points);
    r.candidates_examined = examined;
    r.method = "raw-subset";
    return r;
}

struct verify_row {
    u64 n = 0;
    u64 formula_value = 0;
    u64 oracle_value = 0;
    bool agree = false;
};

struct verify_report {
    std::vector<verify_row> rows;
    bool truncated = false;  // budget ran out before n_max
};

// Formula value against brute force for every n up to n_max. A blown
// budget yields the partial table with the truncation flag set.
inline verify_report verify_range(int d, u64 n_max, const oracle_budget& budget = {}, int jobs = 1) {
    verify_report rep;
    for (u64 n = 1; n <= n_max; ++n) {
        u64 formula_value = max_edges(n, d).edges;
        try {
            oracle_report o = brute_force_max(n, d, budget, jobs);
            rep.rows.push_back({n, formula_value, o.max_edges_found,
                                formula_value == o.max_edges_found});
        } catch (const budget_exceeded_error&) {
            rep.truncated = true;
            break;
        }
    }
    return rep;
}

inline nlohmann::json oracle_report_to_json(const oracle_report& r) {
    return nlohmann::json{{"n", r.n},
                          {"d", r.d},
                          {"max", r.max_edges_found},
                          {"witness", point_set_to_json(r.witness)},
                          {"examined", r.candidates_examined},
                          {"method", r.method}};
}

}  // namespace gridmax
