#pragma once

#include <vector>

#include "ordwalk/compat.hpp"
#include "ordwalk/condition.hpp"
#include "ordwalk/util.hpp"

namespace ordwalk {

/// Knobs for seeded random generation of valid conditions.
struct GenConfig {
    std::vector<Ordinal> domain_pool;
    std::vector<Ordinal> value_pool;
    std::size_t max_dom = 3;
    std::size_t max_vals = 3;
    std::size_t attempts_per_value = 6;
};

/// Draws a valid condition of the variant: domain points from the domain pool,
/// then values added one at a time with rejection (an addition that breaks any
/// clause is dropped). Deterministic in the RNG state.
inline Condition random_condition(SplitMix64& rng, const GenConfig& cfg,
                                  const PosetVariant& variant, RhoCache& cache) {
    Condition p;
    std::size_t ndom = 1 + rng.below(cfg.max_dom);
    for (std::size_t i = 0; i < ndom && !cfg.domain_pool.empty(); ++i) {
        const Ordinal& d = cfg.domain_pool[rng.below(cfg.domain_pool.size())];
        Condition probe = p;
        probe.touch(d);
        if (validate_condition(probe, variant, cache).valid()) p = std::move(probe);
    }
    if (p.entries.empty()) p.touch(cfg.domain_pool.at(0));
    for (const Ordinal& d : p.domain()) {
        std::size_t want = rng.below(cfg.max_vals + 1);
        for (std::size_t k = 0; k < want; ++k) {
            for (std::size_t attempt = 0; attempt < cfg.attempts_per_value; ++attempt) {
                const Ordinal& v = cfg.value_pool[rng.below(cfg.value_pool.size())];
                Condition probe = p;
                probe.insert_value(d, v);
                if (validate_condition(probe, variant, cache).valid()) {
                    p = std::move(probe);
                    break;
                }
            }
        }
    }
    return p;
}

/// Extends `base` by up to `steps` random valid additions (new domain points
/// or new values), staying inside the variant. Result always extends `base`.
inline Condition random_extension(SplitMix64& rng, const Condition& base, const GenConfig& cfg,
                                  const PosetVariant& variant, RhoCache& cache,
                                  std::size_t steps) {
    Condition r = base;
    for (std::size_t k = 0; k < steps; ++k) {
        bool add_point = !cfg.domain_pool.empty() && rng.chance(1, 3);
        Condition probe = r;
        if (add_point) {
            probe.touch(cfg.domain_pool[rng.below(cfg.domain_pool.size())]);
        } else {
            auto it = probe.entries.begin();
            std::advance(it, rng.below(probe.entries.size()));
            probe.insert_value(it->first, cfg.value_pool[rng.below(cfg.value_pool.size())]);
        }
        if (validate_condition(probe, variant, cache).valid()) r = std::move(probe);
    }
    return r;
}

} // namespace ordwalk
