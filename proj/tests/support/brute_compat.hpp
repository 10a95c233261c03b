#pragma once

// Test-side oracle for compatibility: exhaustive search over candidate common
// extensions on dom(p) ∪ dom(q) whose values come from the two conditions'
// value pool. Self-contained validity checking; shares nothing with the
// forced-closure procedure it cross-examines.
//
// Search space: r(a) ranges over window-valid supersets of base(a) =
// p(a) ∪ q(a) inside the pool. In restricted mode additions stay below
// max(base(a)) — any common extension restricts to one of this shape (values
// above the max never help any clause) — which keeps the space tiny. The
// unrestricted mode searches all pool values and exists to cross-check that
// claim on small instances.

#include <optional>
#include <vector>

#include "ordwalk/condition.hpp"
#include "ordwalk/walks.hpp"

namespace ordwalk_test {

using ordwalk::Condition;
using ordwalk::Ordinal;

struct BruteOptions {
    bool restrict_to_below_max = true;
    std::size_t node_budget = 2000000;
};

namespace detail {

struct Point {
    Ordinal dom;
    std::vector<Ordinal> base;
    std::vector<Ordinal> addable;
};

inline bool window_ok(const std::vector<Ordinal>& vals) {
    for (std::size_t i = 1; i < vals.size(); ++i)
        if (vals[i] < vals[i - 1] + Ordinal::omega()) return false;
    return true;
}

inline bool pair_ok(const Ordinal& da, const std::vector<Ordinal>& va, const Ordinal& db,
                    const std::vector<Ordinal>& vb, bool strict, ordwalk::RhoCache& cache) {
    std::vector<Ordinal> inter;
    std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(inter));
    if (inter.empty()) return true;
    const Ordinal& m = inter.back();
    for (const Ordinal& x : va)
        if (x < m && !std::binary_search(inter.begin(), inter.end(), x)) return false;
    for (const Ordinal& x : vb)
        if (x < m && !std::binary_search(inter.begin(), inter.end(), x)) return false;
    const Ordinal& cap = ordwalk::rho_pair(cache, da, db);
    return strict ? m < cap : m <= cap;
}

struct Search {
    const std::vector<Point>& pts;
    bool strict;
    ordwalk::RhoCache& cache;
    std::size_t budget;
    std::vector<std::vector<Ordinal>> chosen;

    bool go(std::size_t i) {
        if (budget-- == 0) throw ordwalk::budget_error("brute-force oracle budget exhausted");
        if (i == pts.size()) return true;
        const Point& pt = pts[i];
        std::size_t n = pt.addable.size();
        for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
            std::vector<Ordinal> vals = pt.base;
            for (std::size_t b = 0; b < n; ++b)
                if (mask & (1ULL << b)) vals.push_back(pt.addable[b]);
            std::sort(vals.begin(), vals.end());
            if (!window_ok(vals)) continue;
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j)
                ok = pair_ok(pts[j].dom, chosen[j], pt.dom, vals, strict, cache);
            if (!ok) continue;
            chosen[i] = std::move(vals);
            if (go(i + 1)) return true;
        }
        return false;
    }
};

} // namespace detail

/// Exhaustively decides whether p and q have a common extension; returns one
/// when they do. `strict` selects the P-style cap.
inline std::optional<Condition> brute_force_common_extension(const Condition& p,
                                                             const Condition& q, bool strict,
                                                             ordwalk::RhoCache& cache,
                                                             const BruteOptions& opt = {}) {
    std::vector<Ordinal> pool = p.value_pool();
    for (const Ordinal& v : q.value_pool()) pool.push_back(v);
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());

    std::vector<detail::Point> pts;
    Condition base_union;
    for (const auto& [d, v] : p.entries)
        for (const Ordinal& x : v) base_union.insert_value(d, x);
    for (const auto& [d, v] : q.entries)
        for (const Ordinal& x : v) base_union.insert_value(d, x);
    for (const auto& [d, v] : p.entries) base_union.touch(d);
    for (const auto& [d, v] : q.entries) base_union.touch(d);

    for (const auto& [d, base] : base_union.entries) {
        detail::Point pt{d, base, {}};
        if (!detail::window_ok(base)) return std::nullopt; // base itself is stuck
        for (const Ordinal& v : pool) {
            if (std::binary_search(base.begin(), base.end(), v)) continue;
            if (opt.restrict_to_below_max && (base.empty() || v >= base.back())) continue;
            pt.addable.push_back(v);
        }
        if (pt.addable.size() > 20)
            throw ordwalk::budget_error("brute-force oracle: addable set too large");
        pts.push_back(std::move(pt));
    }

    detail::Search s{pts, strict, cache, opt.node_budget, {}};
    s.chosen.resize(pts.size());
    if (!s.go(0)) return std::nullopt;
    Condition r;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        r.touch(pts[i].dom);
        for (const Ordinal& v : s.chosen[i]) r.insert_value(pts[i].dom, v);
    }
    return r;
}

} // namespace ordwalk_test
