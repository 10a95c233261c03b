#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ordwalk/cseq.hpp"
#include "ordwalk/ordinal.hpp"
#include "ordwalk/util.hpp"

namespace ordwalk {

/// Explicit, inspectable memo table for rho over one family. Computations are
/// pure given a frozen cache; many queries may share one cache sequentially.
class RhoCache {
public:
    explicit RhoCache(const CSeqFamily& fam, std::uint64_t step_budget = 50'000'000)
        : fam_(fam), step_budget_(step_budget) {}

    const CSeqFamily& family() const { return fam_; }

    struct Stats {
        std::uint64_t lookups = 0;
        std::uint64_t computed = 0;
        std::uint64_t steps = 0;
    };
    const Stats& stats() const { return stats_; }
    std::size_t size() const { return memo_.size(); }

    friend const Ordinal& rho(RhoCache& cache, const Ordinal& alpha, const Ordinal& beta);

private:
    const CSeqFamily& fam_;
    std::uint64_t step_budget_;
    Stats stats_;
    std::unordered_map<std::pair<Ordinal, Ordinal>, Ordinal, OrdinalPairHash> memo_;

    static constexpr std::size_t max_depth_ = 100000;

    const Ordinal& compute(const Ordinal& alpha, const Ordinal& beta, std::size_t depth) {
        ++stats_.lookups;
        static const Ordinal zero;
        if (alpha == beta) return zero;
        auto key = std::make_pair(alpha, beta);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        if (++stats_.steps > step_budget_)
            throw budget_error("rho recursion exceeded its step budget");
        if (depth > max_depth_)
            throw budget_error("rho recursion exceeded its depth budget");
        ++stats_.computed;

        // rho(a,b) = max{ otp(C_b ∩ a), rho(a, min(C_b \ a)), rho(x, a) for
        //                 x in C_b ∩ [Lambda(a,b), a) };  rho(a,a) = 0
        Ordinal best = fam_.otp_below(beta, alpha);
        Ordinal step = fam_.min_above(beta, alpha);
        {
            const Ordinal& r = compute(alpha, step, depth + 1);
            if (r > best) best = r;
        }
        for (const Ordinal& xi : fam_.segment(alpha, beta)) {
            const Ordinal& r = compute(xi, alpha, depth + 1);
            if (r > best) best = r;
        }
        return memo_.emplace(std::move(key), std::move(best)).first->second;
    }
};

/// The rho characteristic of the walk from beta down to alpha.
/// Pre: alpha <= beta, both within the family bound. Memoized.
inline const Ordinal& rho(RhoCache& cache, const Ordinal& alpha, const Ordinal& beta) {
    if (alpha > beta) throw precondition_error("rho: alpha must be at most beta");
    return cache.compute(alpha, beta, 0);
}

/// rho of an unordered pair (convenience for condition caps).
inline const Ordinal& rho_pair(RhoCache& cache, const Ordinal& a, const Ordinal& b) {
    return a <= b ? rho(cache, a, b) : rho(cache, b, a);
}

/// The walk beta = b0 > b1 > ... > bk = alpha with b_{i+1} = min(C_{b_i} \ alpha).
inline std::vector<Ordinal> upper_trace(const CSeqFamily& fam, const Ordinal& alpha,
                                        const Ordinal& beta) {
    if (alpha > beta) throw precondition_error("upper_trace: alpha must be at most beta");
    std::vector<Ordinal> out{beta};
    Ordinal cur = beta;
    while (cur != alpha) {
        cur = fam.min_above(cur, alpha);
        out.push_back(cur);
        if (out.size() > 100000) throw budget_error("walk did not terminate within budget");
    }
    return out;
}

/// Running maxima of max(C_{b_i} ∩ alpha) along the upper trace. Steps with an
/// empty intersection contribute nothing; so do steps where the intersection
/// has no maximum (only possible at the final coherent step, where alpha is a
/// limit point of C_{b_i}).
inline std::vector<Ordinal> lower_trace(const CSeqFamily& fam, const Ordinal& alpha,
                                        const Ordinal& beta) {
    if (alpha >= beta) throw precondition_error("lower_trace: alpha must be below beta");
    std::vector<Ordinal> out;
    for (const Ordinal& b : upper_trace(fam, alpha, beta)) {
        if (b == alpha) break;
        auto m = fam.max_below(b, alpha);
        if (m && (out.empty() || *m > out.back())) out.push_back(*m);
    }
    return out;
}

struct WalkTrace {
    Ordinal alpha, beta;
    std::vector<Ordinal> upper;
    std::vector<Ordinal> lower;
    std::vector<Ordinal> lambdas; // Lambda(alpha, b_i) per non-final step
    Ordinal rho_value;
};

inline WalkTrace walk(RhoCache& cache, const Ordinal& alpha, const Ordinal& beta) {
    const CSeqFamily& fam = cache.family();
    WalkTrace t;
    t.alpha = alpha;
    t.beta = beta;
    t.upper = upper_trace(fam, alpha, beta);
    if (alpha < beta) t.lower = lower_trace(fam, alpha, beta);
    for (const Ordinal& b : t.upper) {
        if (b == alpha) break;
        t.lambdas.push_back(fam.lambda_point(alpha, b));
    }
    t.rho_value = rho(cache, alpha, beta);
    return t;
}

/// Complete rho table over a sorted sweep universe. Values are stored
/// rank-compressed: value_id(i,j) indexes into values(), which is sorted, so
/// ordinal comparisons on table cells reduce to integer comparisons.
class RhoTable {
public:
    RhoTable(RhoCache& cache, std::vector<Ordinal> universe)
        : points_(std::move(universe)), n_(points_.size()) {
        ids_.assign(n_ * n_, 0);
        std::unordered_map<Ordinal, std::uint32_t, OrdinalHash> seen;
        std::vector<Ordinal> vals;
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = i; j < n_; ++j) {
                const Ordinal& v = rho(cache, points_[i], points_[j]);
                auto [it, fresh] = seen.emplace(v, 0);
                if (fresh) {
                    it->second = static_cast<std::uint32_t>(vals.size());
                    vals.push_back(v);
                }
                ids_[i * n_ + j] = it->second;
            }
        }
        // rank-compress: sort values, remap ids to ranks
        std::vector<std::uint32_t> rank(vals.size());
        std::vector<std::size_t> order(vals.size());
        for (std::size_t k = 0; k < vals.size(); ++k) order[k] = k;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
        values_.resize(vals.size());
        for (std::size_t r = 0; r < order.size(); ++r) {
            rank[order[r]] = static_cast<std::uint32_t>(r);
            values_[r] = vals[order[r]];
        }
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i; j < n_; ++j) {
                std::uint32_t r = rank[ids_[i * n_ + j]];
                ids_[i * n_ + j] = r;
                ids_[j * n_ + i] = r;
            }
    }

    std::size_t size() const { return n_; }
    const std::vector<Ordinal>& points() const { return points_; }
    const std::vector<Ordinal>& values() const { return values_; }

    /// Rank of rho(points[i], points[j]); ranks compare like the ordinals do.
    std::uint32_t id(std::size_t i, std::size_t j) const { return ids_[i * n_ + j]; }
    const Ordinal& at(std::size_t i, std::size_t j) const { return values_[id(i, j)]; }

private:
    std::vector<Ordinal> points_;
    std::size_t n_;
    std::vector<std::uint32_t> ids_;
    std::vector<Ordinal> values_;
};

/// The sweep form the CLI exports: pairs alpha < beta below `bound`.
inline RhoTable rho_table(RhoCache& cache, const Ordinal& bound, const SweepCaps& caps = {}) {
    if (bound > cache.family().bound())
        throw precondition_error("table bound exceeds family bound");
    return RhoTable(cache, enumerate_below(bound, caps));
}

} // namespace ordwalk
