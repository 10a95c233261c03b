#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ordwalk/condition.hpp"

namespace ordwalk {

/// One application of the forced-membership rule: `value` had to be added to
/// r(to_point) because value in r(from_point), witness in r(from_point) ∩
/// r(to_point), and value < witness — this holds in every common extension by
/// the initial-segment clause, so a derivation replays from raw data.
struct ForcedStep {
    Ordinal value;
    Ordinal from_point;
    Ordinal to_point;
    Ordinal witness;
};

/// Why two conditions have no common extension. The derivation lists the
/// forced additions leading to the clash (usually empty: the clash is already
/// in the pointwise union). Window clashes carry the two values; cap clashes
/// carry the shared value and the rho at the pair.
struct IncompatCert {
    enum class Clause { rho_cap, window };
    Clause clause;
    Ordinal alpha, beta;    // the pair (rho_cap) or the single point (window: beta unused)
    Ordinal shared_value;   // rho_cap: the offending shared value; window: first value
    Ordinal second_value;   // window: second value
    Ordinal rho_at_pair;    // rho_cap
    std::vector<ForcedStep> derivation;

    std::string str() const {
        if (clause == Clause::window)
            return "values " + shared_value.str() + " and " + second_value.str() +
                   " forced into one omega-window at " + alpha.str();
        return "shared value " + shared_value.str() + " at (" + alpha.str() + ", " + beta.str() +
               ") exceeds rho = " + rho_at_pair.str();
    }
};

struct CompatResult {
    std::optional<Condition> witness; // a common extension
    std::optional<IncompatCert> cert;
    bool compatible() const { return witness.has_value(); }
};

namespace detail {

/// Pointwise union with domain union.
inline Condition pointwise_union(const Condition& p, const Condition& q) {
    Condition r = p;
    for (const auto& [b, vals] : q.entries)
        for (const Ordinal& v : vals) r.insert_value(b, v);
    for (const auto& [b, vals] : q.entries) r.touch(b);
    return r;
}

/// Runs the forced-membership closure in place, recording steps. Terminates:
/// each step copies an existing value to a set that lacks it.
inline void forced_closure(Condition& r, std::vector<ForcedStep>* steps) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto ia = r.entries.begin(); ia != r.entries.end(); ++ia) {
            for (auto ib = r.entries.begin(); ib != r.entries.end(); ++ib) {
                if (ia == ib) continue;
                const auto& va = ia->second;
                auto& vb = ib->second;
                std::vector<Ordinal> inter = sorted_intersection(va, vb);
                if (inter.empty()) continue;
                const Ordinal& m = inter.back();
                for (const Ordinal& s : va) {
                    if (s >= m) break;
                    if (!std::binary_search(vb.begin(), vb.end(), s)) {
                        auto it = std::lower_bound(vb.begin(), vb.end(), s);
                        vb.insert(it, s);
                        if (steps) steps->push_back({s, ia->first, ib->first, m});
                        changed = true;
                    }
                }
            }
        }
    }
}

} // namespace detail

/// Decides compatibility of two valid conditions of the same variant by the
/// forced closure: every common extension must contain the closure pointwise,
/// so the closure is a common extension exactly when one exists. Returns the
/// closure as witness, or a certificate naming the violated clause.
inline CompatResult compatible(const Condition& p, const Condition& q,
                               const PosetVariant& variant, RhoCache& cache) {
    if (!validate_condition(p, variant, cache).valid() ||
        !validate_condition(q, variant, cache).valid())
        throw precondition_error("compatible: inputs must be valid " + variant.label +
                                 " conditions");
    Condition r = detail::pointwise_union(p, q);
    std::vector<ForcedStep> steps;
    detail::forced_closure(r, &steps);

    ConditionReport rep = validate_condition(r, variant, cache);
    if (rep.valid()) return {std::move(r), std::nullopt};

    for (const auto& v : rep.violations) {
        if (v.clause == ConditionViolation::Clause::window) {
            const auto& vals = *r.values_at(v.alpha);
            for (std::size_t i = 1; i < vals.size(); ++i)
                if (window_clash(vals[i - 1], vals[i]))
                    return {std::nullopt, IncompatCert{IncompatCert::Clause::window, v.alpha,
                                                       Ordinal(), vals[i - 1], vals[i], Ordinal(),
                                                       std::move(steps)}};
        }
        if (v.clause == ConditionViolation::Clause::rho_cap) {
            std::vector<Ordinal> inter =
                sorted_intersection(*r.values_at(v.alpha), *r.values_at(v.beta));
            return {std::nullopt,
                    IncompatCert{IncompatCert::Clause::rho_cap, v.alpha, v.beta, inter.back(),
                                 Ordinal(), rho(cache, v.alpha, v.beta), std::move(steps)}};
        }
    }
    // the closure rule is exactly the initial-segment clause, so at fixpoint
    // only window and cap violations can remain
    throw std::logic_error("forced closure left an initial-segment violation");
}

/// Replays a certificate from raw data: applies the recorded derivation to the
/// pointwise union (checking every step), then confirms the claimed clash.
/// Anything the replayed sets contain lies in every common extension, so a
/// verified certificate proves incompatibility.
inline bool verify_certificate(const Condition& p, const Condition& q, const IncompatCert& cert,
                               const PosetVariant& variant, RhoCache& cache) {
    Condition r = detail::pointwise_union(p, q);
    for (const ForcedStep& st : cert.derivation) {
        const std::vector<Ordinal>* from = r.values_at(st.from_point);
        const std::vector<Ordinal>* to = r.values_at(st.to_point);
        if (!from || !to) return false;
        bool has_value = std::binary_search(from->begin(), from->end(), st.value);
        bool wit_from = std::binary_search(from->begin(), from->end(), st.witness);
        bool wit_to = std::binary_search(to->begin(), to->end(), st.witness);
        if (!has_value || !wit_from || !wit_to || !(st.value < st.witness)) return false;
        r.insert_value(st.to_point, st.value);
    }
    if (cert.clause == IncompatCert::Clause::window) {
        const std::vector<Ordinal>* vals = r.values_at(cert.alpha);
        if (!vals) return false;
        bool has1 = std::binary_search(vals->begin(), vals->end(), cert.shared_value);
        bool has2 = std::binary_search(vals->begin(), vals->end(), cert.second_value);
        return has1 && has2 && cert.shared_value != cert.second_value &&
               window_clash(cert.shared_value, cert.second_value);
    }
    const std::vector<Ordinal>* va = r.values_at(cert.alpha);
    const std::vector<Ordinal>* vb = r.values_at(cert.beta);
    if (!va || !vb) return false;
    if (!std::binary_search(va->begin(), va->end(), cert.shared_value)) return false;
    if (!std::binary_search(vb->begin(), vb->end(), cert.shared_value)) return false;
    const Ordinal& cap = rho_pair(cache, cert.alpha, cert.beta);
    if (cap != cert.rho_at_pair) return false;
    return variant.strict_cap() ? cert.shared_value >= cap : cert.shared_value > cap;
}

} // namespace ordwalk
