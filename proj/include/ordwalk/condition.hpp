#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ordwalk/walks.hpp"

namespace ordwalk {

using nlohmann::json;

/// A finite condition: finite map from ordinals (below the family bound) to
/// finite sets of ordinals (below the value bound). Value sets are kept sorted
/// and deduplicated. Immutable by convention once built.
struct Condition {
    std::map<Ordinal, std::vector<Ordinal>> entries;

    bool empty() const { return entries.empty(); }

    std::vector<Ordinal> domain() const {
        std::vector<Ordinal> d;
        d.reserve(entries.size());
        for (const auto& [k, v] : entries) d.push_back(k);
        return d;
    }

    const std::vector<Ordinal>* values_at(const Ordinal& a) const {
        auto it = entries.find(a);
        return it == entries.end() ? nullptr : &it->second;
    }

    /// All values across the range, sorted, deduplicated.
    std::vector<Ordinal> value_pool() const {
        std::vector<Ordinal> pool;
        for (const auto& [k, v] : entries) pool.insert(pool.end(), v.begin(), v.end());
        std::sort(pool.begin(), pool.end());
        pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
        return pool;
    }

    void insert_value(const Ordinal& dom, const Ordinal& val) {
        auto& v = entries[dom];
        auto it = std::lower_bound(v.begin(), v.end(), val);
        if (it == v.end() || *it != val) v.insert(it, val);
    }

    void touch(const Ordinal& dom) { entries.try_emplace(dom); }

    friend bool operator==(const Condition& a, const Condition& b) {
        return a.entries == b.entries;
    }

    std::string str() const {
        std::string out = "{";
        bool first = true;
        for (const auto& [k, v] : entries) {
            if (!first) out += ", ";
            first = false;
            out += k.str() + " -> {";
            for (std::size_t i = 0; i < v.size(); ++i)
                out += (i ? "," : "") + v[i].str();
            out += "}";
        }
        return out + "}";
    }
};

inline void to_json(json& j, const Condition& c) {
    json entries = json::array();
    for (const auto& [k, v] : c.entries) {
        json vals = json::array();
        for (const Ordinal& x : v) vals.push_back(x.str());
        entries.push_back({{"dom", k.str()}, {"vals", vals}});
    }
    j = json{{"entries", entries}};
}

inline void from_json(const json& j, Condition& c) {
    c.entries.clear();
    for (const auto& e : j.at("entries")) {
        Ordinal dom = Ordinal::parse(e.at("dom").get<std::string>());
        auto& vals = c.entries[dom];
        for (const auto& v : e.at("vals")) vals.push_back(Ordinal::parse(v.get<std::string>()));
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    }
}

/// Which poset the condition lives in. Q and P differ only in the cap clause
/// (weak vs strict); Q_c, Q_A and Q_mu restrict the domain.
struct PosetVariant {
    enum class Kind { Q, P, Qc, QA, Qmu };
    Kind kind = Kind::Q;
    std::optional<Ordinal> mu;                     // Qmu
    std::function<bool(const Ordinal&)> member;    // QA
    std::string label = "Q";

    bool strict_cap() const { return kind == Kind::P; }

    static PosetVariant Q() { return {}; }
    static PosetVariant P() { return {Kind::P, std::nullopt, nullptr, "P"}; }
    static PosetVariant Qc() { return {Kind::Qc, std::nullopt, nullptr, "Qc"}; }
    static PosetVariant QA(std::function<bool(const Ordinal&)> pred, std::string name) {
        return {Kind::QA, std::nullopt, std::move(pred), std::move(name)};
    }
    static PosetVariant Qmu(Ordinal m) {
        std::string name = "Q_" + m.str();
        return {Kind::Qmu, std::move(m), nullptr, std::move(name)};
    }
};

struct ConditionViolation {
    enum class Clause {
        domain_bound,
        variant_domain,
        value_bound,
        window,
        initial_segment,
        rho_cap,
    };
    Clause clause;
    Ordinal alpha;          // the (first) domain point involved
    Ordinal beta;           // the second domain point for pair clauses
    std::string detail;
};

inline const char* to_string(ConditionViolation::Clause c) {
    using Clause = ConditionViolation::Clause;
    switch (c) {
        case Clause::domain_bound: return "domain-bound";
        case Clause::variant_domain: return "variant-domain";
        case Clause::value_bound: return "value-bound";
        case Clause::window: return "window";
        case Clause::initial_segment: return "initial-segment";
        case Clause::rho_cap: return "rho-cap";
    }
    return "?";
}

struct ConditionReport {
    std::vector<ConditionViolation> violations;
    bool valid() const { return violations.empty(); }
};

inline std::vector<Ordinal> sorted_intersection(const std::vector<Ordinal>& a,
                                                const std::vector<Ordinal>& b) {
    std::vector<Ordinal> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

/// True when t sits inside the omega-window of s (s <= t < s + omega), i.e.
/// the two values may not share a value set.
inline bool window_clash(const Ordinal& s, const Ordinal& t) {
    const Ordinal& lo = s <= t ? s : t;
    const Ordinal& hi = s <= t ? t : s;
    return hi < lo + Ordinal::omega();
}

/// Checks the defining clauses of the variant: domain bounds, the sliding
/// window (any two values of one set differ by at least omega), the
/// initial-segment clause, and the rho cap (weak for Q, strict for P).
/// Violations are data; an empty list means the condition belongs to the poset.
inline ConditionReport validate_condition(const Condition& p, const PosetVariant& variant,
                                          RhoCache& cache) {
    const CSeqFamily& fam = cache.family();
    ConditionReport rep;
    using Clause = ConditionViolation::Clause;

    for (const auto& [a, vals] : p.entries) {
        if (a >= fam.bound())
            rep.violations.push_back({Clause::domain_bound, a, Ordinal(),
                                      "domain point " + a.str() + " at or beyond bound " +
                                          fam.bound().str()});
        switch (variant.kind) {
            case PosetVariant::Kind::Qc:
                if (fam.cof_class(a) == CofClass::tier)
                    rep.violations.push_back({Clause::variant_domain, a, Ordinal(),
                                              "tier-class point " + a.str() + " not allowed in Qc"});
                break;
            case PosetVariant::Kind::QA:
                if (variant.member && !variant.member(a))
                    rep.violations.push_back({Clause::variant_domain, a, Ordinal(),
                                              a.str() + " outside the domain set of " +
                                                  variant.label});
                break;
            case PosetVariant::Kind::Qmu:
                if (a >= *variant.mu)
                    rep.violations.push_back({Clause::variant_domain, a, Ordinal(),
                                              a.str() + " not below mu = " + variant.mu->str()});
                break;
            default:
                break;
        }
        for (const Ordinal& v : vals)
            if (v >= fam.value_bound())
                rep.violations.push_back({Clause::value_bound, a, Ordinal(),
                                          "value " + v.str() + " at or beyond " +
                                              fam.value_bound().str()});
        for (std::size_t i = 1; i < vals.size(); ++i)
            if (window_clash(vals[i - 1], vals[i]))
                rep.violations.push_back({Clause::window, a, Ordinal(),
                                          vals[i - 1].str() + " and " + vals[i].str() +
                                              " share an omega-window at " + a.str()});
    }

    for (auto ia = p.entries.begin(); ia != p.entries.end(); ++ia) {
        for (auto ib = std::next(ia); ib != p.entries.end(); ++ib) {
            const auto& [a, va] = *ia;
            const auto& [b, vb] = *ib;
            std::vector<Ordinal> inter = sorted_intersection(va, vb);
            if (inter.empty()) continue;
            const Ordinal& m = inter.back();
            auto initial = [&](const std::vector<Ordinal>& side) {
                std::size_t below = 0;
                for (const Ordinal& x : side)
                    if (x <= m) ++below;
                return below == inter.size();
            };
            if (!initial(va) || !initial(vb))
                rep.violations.push_back({Clause::initial_segment, a, b,
                                          "shared values are not an initial segment of both " +
                                              a.str() + " and " + b.str()});
            const Ordinal& cap = rho(cache, a, b);
            bool ok = variant.strict_cap() ? m < cap : m <= cap;
            if (!ok)
                rep.violations.push_back({Clause::rho_cap, a, b,
                                          "max shared value " + m.str() +
                                              (variant.strict_cap() ? " not below rho = "
                                                                    : " above rho = ") +
                                              cap.str()});
        }
    }
    return rep;
}

/// q <= p in the extension order: q's domain contains p's and q's value sets
/// contain p's pointwise.
inline bool extends(const Condition& q, const Condition& p) {
    for (const auto& [a, vals] : p.entries) {
        const std::vector<Ordinal>* qv = q.values_at(a);
        if (!qv) return false;
        if (!std::includes(qv->begin(), qv->end(), vals.begin(), vals.end())) return false;
    }
    return true;
}

} // namespace ordwalk
