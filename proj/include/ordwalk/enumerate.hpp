#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "ordwalk/ordinal.hpp"
#include "ordwalk/util.hpp"

namespace ordwalk {

/// Sweep caps for finite-support enumeration of CNF ordinals.
struct SweepCaps {
    std::uint64_t coeff_cap = 4;   // coefficients 1..coeff_cap
    std::uint64_t depth_cap = 2;   // nesting depth of exponents (0 = finite only)
    std::size_t count_cap = 400000; // hard limit on universe size
};

namespace detail {

inline void enumerate_rec(const std::vector<Ordinal>& exps, std::size_t exp_from,
                          const Ordinal& prefix, const Ordinal& bound,
                          const SweepCaps& caps, std::vector<Ordinal>& out) {
    if (out.size() > caps.count_cap)
        throw budget_error("sweep enumeration exceeded count cap of " +
                           std::to_string(caps.count_cap));
    if (prefix < bound) out.push_back(prefix);
    // exps is sorted descending; append strictly smaller exponents only
    for (std::size_t i = exp_from; i < exps.size(); ++i) {
        for (std::uint64_t c = 1; c <= caps.coeff_cap; ++c) {
            Ordinal next = prefix + Ordinal::omega_pow(exps[i], c);
            if (next >= bound) break; // monotone in c
            enumerate_rec(exps, i + 1, next, bound, caps, out);
        }
    }
}

inline std::vector<Ordinal> exponent_pool(const Ordinal& bound, const SweepCaps& caps,
                                          std::uint64_t depth) {
    // exponents usable below `bound`: every e with w^e <= leading exponent's worth
    if (depth == 0) {
        std::vector<Ordinal> out;
        std::uint64_t top = caps.coeff_cap > 8 ? caps.coeff_cap : 8;
        for (std::uint64_t n = 0; n <= top; ++n) {
            if (Ordinal::omega_pow(Ordinal::nat(n)) >= bound && n > 0) break;
            out.push_back(Ordinal::nat(n));
        }
        std::sort(out.begin(), out.end(), [](const Ordinal& a, const Ordinal& b) { return b < a; });
        return out;
    }
    Ordinal exp_bound = bound.is_zero() ? Ordinal() : bound.terms()[0].e().successor();
    SweepCaps sub = caps;
    sub.depth_cap = depth - 1;
    std::vector<Ordinal> es = [&] {
        std::vector<Ordinal> pool = exponent_pool(exp_bound, caps, depth - 1);
        std::vector<Ordinal> acc;
        std::sort(pool.begin(), pool.end(), [](const Ordinal& a, const Ordinal& b) { return b < a; });
        enumerate_rec(pool, 0, Ordinal(), exp_bound, sub, acc);
        return acc;
    }();
    std::sort(es.begin(), es.end(), [](const Ordinal& a, const Ordinal& b) { return b < a; });
    return es;
}

} // namespace detail

/// All CNF ordinals below `bound` whose coefficients are <= caps.coeff_cap and
/// whose exponents (recursively) come from the same capped universe. Sorted
/// ascending. This is the finite-support sweep used by tables, lemma suites and
/// the family validator.
inline std::vector<Ordinal> enumerate_below(const Ordinal& bound, const SweepCaps& caps = {}) {
    std::vector<Ordinal> out;
    if (bound.is_zero()) return out;
    std::vector<Ordinal> exps = detail::exponent_pool(bound, caps, caps.depth_cap);
    detail::enumerate_rec(exps, 0, Ordinal(), bound, caps, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace ordwalk
