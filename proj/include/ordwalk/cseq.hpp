#pragma once

#include <istream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ordwalk/enumerate.hpp"
#include "ordwalk/ordinal.hpp"
#include "ordwalk/util.hpp"

namespace ordwalk {

/// Cofinality class at desk scale. For limit alpha of a tiered family,
/// tier iff otp(C_alpha) equals the tier parameter W; the tier class plays the
/// role an uncountable-cofinality point plays for the full-size sequences.
enum class CofClass { successor, omega, tier };

inline const char* to_string(CofClass c) {
    switch (c) {
        case CofClass::successor: return "successor";
        case CofClass::omega: return "omega";
        case CofClass::tier: return "tier";
    }
    return "?";
}

/// A C-sequence assignment alpha -> C_alpha for alpha below bound(), exposed
/// through the query contract the walk recursion needs. Conventions:
///   C_0 = {},  C_{alpha+1} = {alpha};  subclasses only answer for limit beta.
/// Families are immutable after construction; every query is pure.
class CSeqFamily {
public:
    CSeqFamily(std::string name, Ordinal bound, std::optional<Ordinal> tier)
        : name_(std::move(name)), bound_(std::move(bound)), tier_(std::move(tier)) {}
    virtual ~CSeqFamily() = default;

    const std::string& name() const { return name_; }
    const Ordinal& bound() const { return bound_; }
    const std::optional<Ordinal>& tier() const { return tier_; }

    /// Ordinals allowed as condition values (below the tier when present).
    const Ordinal& value_bound() const { return tier_ ? *tier_ : bound_; }

    std::size_t segment_cap = 100000;

    /// min(C_beta \ alpha); pre: alpha < beta <= bound.
    Ordinal min_above(const Ordinal& beta, const Ordinal& alpha) const {
        check(beta);
        if (alpha >= beta) throw precondition_error("min_above: alpha must be below beta");
        if (beta.is_successor()) return beta.predecessor(); // alpha <= beta-1 always
        return limit_min_above(beta, alpha);
    }

    /// otp(C_beta ∩ alpha); pre: alpha <= beta <= bound.
    Ordinal otp_below(const Ordinal& beta, const Ordinal& alpha) const {
        check(beta);
        if (alpha > beta) throw precondition_error("otp_below: alpha must be at most beta");
        if (beta.is_zero()) return Ordinal();
        if (beta.is_successor())
            return beta.predecessor() < alpha ? Ordinal::nat(1) : Ordinal();
        return limit_otp_below(beta, alpha);
    }

    /// Maximal limit point of C_beta ∩ (alpha+1); 0 when there is none.
    /// Pre: alpha < beta <= bound.
    Ordinal lambda_point(const Ordinal& alpha, const Ordinal& beta) const {
        check(beta);
        if (alpha >= beta) throw precondition_error("lambda_point: alpha must be below beta");
        if (beta.is_successor()) return Ordinal();
        return limit_lambda(alpha, beta);
    }

    /// C_beta ∩ [lambda_point(alpha,beta), alpha), increasing. Finite for every
    /// honest family; a cap violation is diagnosed as a family error.
    std::vector<Ordinal> segment(const Ordinal& alpha, const Ordinal& beta) const {
        check(beta);
        if (alpha >= beta) throw precondition_error("segment: alpha must be below beta");
        if (beta.is_successor()) return {};
        return limit_segment(alpha, beta);
    }

    /// max(C_beta ∩ alpha) when that set is nonempty and has a maximum.
    std::optional<Ordinal> max_below(const Ordinal& beta, const Ordinal& alpha) const {
        check(beta);
        if (beta.is_zero()) return std::nullopt;
        if (beta.is_successor()) {
            Ordinal p = beta.predecessor();
            return p < alpha ? std::optional<Ordinal>(p) : std::nullopt;
        }
        return limit_max_below(beta, alpha);
    }

    /// Least element of lim(C_beta) strictly above alpha (and below beta).
    std::optional<Ordinal> next_limit_point(const Ordinal& beta, const Ordinal& alpha) const {
        check(beta);
        if (beta.is_zero() || beta.is_successor()) return std::nullopt;
        return limit_next_limit_point(beta, alpha);
    }

    bool contains(const Ordinal& beta, const Ordinal& x) const {
        if (x >= beta) return false;
        try {
            return min_above(beta, x) == x;
        } catch (const family_error&) {
            return false; // no element at or above x at all
        }
    }

    /// x ∈ lim(C_beta): x is a limit and sup(C_beta ∩ x) = x.
    bool is_limit_point(const Ordinal& beta, const Ordinal& x) const {
        if (!x.is_limit() || x >= beta) return false;
        return lambda_point(x, beta) == x;
    }

    CofClass cof_class(const Ordinal& alpha) const {
        if (alpha.is_zero() || alpha.is_successor()) return CofClass::successor;
        if (tier_ && otp_below(alpha, alpha) == *tier_) return CofClass::tier;
        return CofClass::omega;
    }

protected:
    virtual Ordinal limit_min_above(const Ordinal& beta, const Ordinal& alpha) const = 0;
    virtual Ordinal limit_otp_below(const Ordinal& beta, const Ordinal& alpha) const = 0;
    virtual Ordinal limit_lambda(const Ordinal& alpha, const Ordinal& beta) const = 0;
    virtual std::vector<Ordinal> limit_segment(const Ordinal& alpha, const Ordinal& beta) const = 0;
    virtual std::optional<Ordinal> limit_max_below(const Ordinal& beta, const Ordinal& alpha) const = 0;
    virtual std::optional<Ordinal> limit_next_limit_point(const Ordinal& beta,
                                                          const Ordinal& alpha) const = 0;

    void check(const Ordinal& beta) const {
        if (beta > bound_)
            throw precondition_error("ordinal " + beta.str() + " is beyond family bound " +
                                     bound_.str());
    }

private:
    std::string name_;
    Ordinal bound_;
    std::optional<Ordinal> tier_;
};

namespace detail {

/// Canonical fundamental sequence below epsilon_0. For limit a with last CNF
/// term w^e*c:  a[n] = prefix + w^e*(c-1) + step(n), where step(n) = w^e' * n
/// when e = e'+1 and step(n) = w^{e[n]} when e is a limit.
inline Ordinal fund_seq(const Ordinal& a, std::uint64_t n) {
    if (!a.is_limit()) throw precondition_error("fundamental sequence of a non-limit");
    const auto& terms = a.terms();
    Ordinal prefix;
    for (std::size_t i = 0; i + 1 < terms.size(); ++i)
        prefix = prefix + Ordinal::omega_pow(terms[i].e(), terms[i].coeff);
    const Ordinal& e = terms.back().e();
    BigNat c = terms.back().coeff;
    if (c > 1) prefix = prefix + Ordinal::omega_pow(e, c - 1);
    if (e.is_successor())
        return n == 0 ? prefix : prefix + Ordinal::omega_pow(e.predecessor(), n);
    return prefix + Ordinal::omega_pow(fund_seq(e, n));
}

/// Least n with fund_seq(a, n) >= target; galloping + binary search.
inline std::uint64_t fund_index_at_least(const Ordinal& a, const Ordinal& target) {
    if (fund_seq(a, 0) >= target) return 0;
    std::uint64_t lo = 0, hi = 1;
    while (fund_seq(a, hi) < target) {
        lo = hi;
        if (hi > (1ULL << 60)) throw budget_error("fundamental-sequence search exploded");
        hi *= 2;
    }
    while (lo + 1 < hi) {
        std::uint64_t mid = lo + (hi - lo) / 2;
        (fund_seq(a, mid) < target ? lo : hi) = mid;
    }
    return hi;
}

} // namespace detail

/// F1: canonical fundamental sequences for CNF. Every C_alpha has order type
/// omega and no limit points, so coherence is vacuous.
class FundSeqFamily final : public CSeqFamily {
public:
    explicit FundSeqFamily(Ordinal bound)
        : CSeqFamily("f1", std::move(bound), std::nullopt) {}

protected:
    Ordinal limit_min_above(const Ordinal& beta, const Ordinal& alpha) const override {
        return detail::fund_seq(beta, detail::fund_index_at_least(beta, alpha));
    }

    Ordinal limit_otp_below(const Ordinal& beta, const Ordinal& alpha) const override {
        if (alpha == beta) return Ordinal::omega(); // whole C_beta has type omega
        return Ordinal::nat(detail::fund_index_at_least(beta, alpha));
    }

    Ordinal limit_lambda(const Ordinal&, const Ordinal&) const override { return Ordinal(); }

    std::vector<Ordinal> limit_segment(const Ordinal& alpha, const Ordinal& beta) const override {
        std::uint64_t n = detail::fund_index_at_least(beta, alpha);
        if (n > segment_cap)
            throw family_error("segment of size " + std::to_string(n) + " exceeds cap");
        std::vector<Ordinal> out;
        out.reserve(n);
        for (std::uint64_t i = 0; i < n; ++i) out.push_back(detail::fund_seq(beta, i));
        return out;
    }

    std::optional<Ordinal> limit_max_below(const Ordinal& beta, const Ordinal& alpha) const override {
        if (alpha >= beta) return std::nullopt; // whole set, type omega: no maximum
        std::uint64_t n = detail::fund_index_at_least(beta, alpha);
        if (n == 0) return std::nullopt;
        return detail::fund_seq(beta, n - 1);
    }

    std::optional<Ordinal> limit_next_limit_point(const Ordinal&, const Ordinal&) const override {
        return std::nullopt;
    }
};

/// F2: the full-interval family C_alpha = (0, alpha). Coherent, but otp(C_alpha)
/// = alpha, so the order-type clause of the square validator fails. Kept as a
/// built-in to exercise the validator and to watch lemma tests on a non-square
/// family.
class FullIntervalFamily final : public CSeqFamily {
public:
    explicit FullIntervalFamily(Ordinal bound)
        : CSeqFamily("f2", std::move(bound), std::nullopt) {}

protected:
    Ordinal limit_min_above(const Ordinal&, const Ordinal& alpha) const override {
        return alpha.is_zero() ? Ordinal::nat(1) : alpha;
    }

    Ordinal limit_otp_below(const Ordinal&, const Ordinal& alpha) const override {
        if (alpha.is_nat()) {
            BigNat v = alpha.nat_value();
            return v == 0 ? Ordinal() : Ordinal::nat(v - 1);
        }
        return alpha;
    }

    Ordinal limit_lambda(const Ordinal& alpha, const Ordinal&) const override {
        return alpha.limit_part();
    }

    std::vector<Ordinal> limit_segment(const Ordinal& alpha, const Ordinal& beta) const override {
        return interval_segment(Ordinal(), alpha, beta, segment_cap);
    }

    std::optional<Ordinal> limit_max_below(const Ordinal&, const Ordinal& alpha) const override {
        if (alpha.is_successor() && !(alpha == Ordinal::nat(1))) return alpha.predecessor();
        return std::nullopt; // empty intersection or no maximum (alpha a limit)
    }

    std::optional<Ordinal> limit_next_limit_point(const Ordinal& beta,
                                                  const Ordinal& alpha) const override {
        Ordinal cand = alpha.limit_part() + Ordinal::omega();
        if (cand < beta) return cand;
        return std::nullopt;
    }

public:
    /// Elements of the interval (base, alpha) from max(lambda, base+1) up to
    /// alpha (exclusive) — shared by the interval-shaped families.
    static std::vector<Ordinal> interval_segment(const Ordinal& base, const Ordinal& alpha,
                                                 const Ordinal& beta, std::size_t cap) {
        (void)beta;
        if (alpha <= base) return {};
        Ordinal s = Ordinal::left_diff(base, alpha);
        Ordinal lp = s.limit_part();
        Ordinal start = lp.is_zero() ? base + Ordinal::nat(1) : base + lp;
        BigNat n = s.nat_tail();
        if (lp.is_zero() && n > 0) n -= 1; // start at base+1, not base
        if (n > cap) throw family_error("interval segment exceeds cap");
        std::vector<Ordinal> out;
        Ordinal cur = start;
        for (BigNat i = 0; i < n; ++i) {
            out.push_back(cur);
            cur = cur.successor();
        }
        return out;
    }
};

/// F3: the two-tier square family with tier parameter W (a power of omega) and
/// bound W*W. For limit r with 0 < r <= W,  C_{W*q+r} = (W*q, W*q+r); for
/// alpha = W*q with q a limit, C_alpha = {W*q_n + 1 : n} along the canonical
/// fundamental sequence q_n of q. Coherence holds non-vacuously.
class TwoTierFamily final : public CSeqFamily {
public:
    explicit TwoTierFamily(const Ordinal& tier_param)
        : CSeqFamily("f3", tier_param * tier_param, tier_param) {
        if (!tier_param.is_omega_power() || tier_param < Ordinal::omega())
            throw precondition_error("two-tier family needs an infinite power of omega, got " +
                                     tier_param.str());
    }

protected:
    // decompose limit beta: either an interval block (base, base+r), or the
    // sparse successor ladder at beta = W*q with q a limit
    struct Block {
        bool interval; // else: ladder
        Ordinal base;  // W*q
        Ordinal r;     // interval extent, 0 < r <= W
        Ordinal q;     // ladder index (a limit)
    };

    Block block_of(const Ordinal& beta) const {
        auto [q, r] = Ordinal::divmod_pow(beta, tier()->terms()[0].e());
        if (!r.is_zero()) return Block{true, *tier() * q, r, q};
        // beta = W*q with q > 0; q successor means beta = W*(q-1) + W: interval of extent W
        if (q.is_successor())
            return Block{true, *tier() * q.predecessor(), *tier(), q};
        return Block{false, *tier() * q, Ordinal(), q};
    }

    Ordinal ladder_elem(const Block& b, std::uint64_t n) const {
        return *tier() * detail::fund_seq(b.q, n) + Ordinal::nat(1);
    }

    std::uint64_t ladder_index_at_least(const Block& b, const Ordinal& target) const {
        if (ladder_elem(b, 0) >= target) return 0;
        std::uint64_t lo = 0, hi = 1;
        while (ladder_elem(b, hi) < target) {
            lo = hi;
            if (hi > (1ULL << 60)) throw budget_error("ladder search exploded");
            hi *= 2;
        }
        while (lo + 1 < hi) {
            std::uint64_t mid = lo + (hi - lo) / 2;
            (ladder_elem(b, mid) < target ? lo : hi) = mid;
        }
        return hi;
    }

    Ordinal limit_min_above(const Ordinal& beta, const Ordinal& alpha) const override {
        Block b = block_of(beta);
        if (b.interval) {
            if (alpha <= b.base) return b.base + Ordinal::nat(1);
            return alpha; // every point of the open interval belongs to C_beta
        }
        return ladder_elem(b, ladder_index_at_least(b, alpha));
    }

    Ordinal limit_otp_below(const Ordinal& beta, const Ordinal& alpha) const override {
        Block b = block_of(beta);
        if (b.interval) {
            if (alpha <= b.base) return Ordinal();
            Ordinal s = Ordinal::left_diff(b.base, alpha > beta ? beta : alpha);
            if (s.is_nat()) return Ordinal::nat(s.nat_value() - 1);
            return s;
        }
        if (alpha >= beta) return Ordinal::omega(); // whole ladder
        return Ordinal::nat(ladder_index_at_least(b, alpha));
    }

    Ordinal limit_lambda(const Ordinal& alpha, const Ordinal& beta) const override {
        Block b = block_of(beta);
        if (!b.interval) return Ordinal();
        if (alpha <= b.base) return Ordinal();
        Ordinal lp = Ordinal::left_diff(b.base, alpha).limit_part();
        return lp.is_zero() ? Ordinal() : b.base + lp;
    }

    std::vector<Ordinal> limit_segment(const Ordinal& alpha, const Ordinal& beta) const override {
        Block b = block_of(beta);
        if (b.interval) return FullIntervalFamily::interval_segment(b.base, alpha, beta, segment_cap);
        std::uint64_t n = ladder_index_at_least(b, alpha);
        if (n > segment_cap) throw family_error("ladder segment exceeds cap");
        std::vector<Ordinal> out;
        out.reserve(n);
        for (std::uint64_t i = 0; i < n; ++i) out.push_back(ladder_elem(b, i));
        return out;
    }

    std::optional<Ordinal> limit_max_below(const Ordinal& beta, const Ordinal& alpha) const override {
        Block b = block_of(beta);
        if (b.interval) {
            if (alpha <= b.base + Ordinal::nat(1)) return std::nullopt;
            if (alpha <= beta && alpha.is_successor()) return alpha.predecessor();
            return std::nullopt; // no maximum: alpha a limit inside, or whole set
        }
        if (alpha >= beta) return std::nullopt;
        std::uint64_t n = ladder_index_at_least(b, alpha);
        if (n == 0) return std::nullopt;
        return ladder_elem(b, n - 1);
    }

    std::optional<Ordinal> limit_next_limit_point(const Ordinal& beta,
                                                  const Ordinal& alpha) const override {
        Block b = block_of(beta);
        if (!b.interval) return std::nullopt;
        Ordinal s = alpha <= b.base ? Ordinal() : Ordinal::left_diff(b.base, alpha);
        Ordinal cand = s.limit_part() + Ordinal::omega(); // least limit > s
        if (cand < b.r) return b.base + cand;
        return std::nullopt;
    }
};

/// A family read from explicit finite C-sets ("alpha: x1,x2,..." per line),
/// for bounded experiments and for feeding the validator deliberately broken
/// data. Limit ordinals missing from the map cannot be queried.
class ExplicitFamily final : public CSeqFamily {
public:
    ExplicitFamily(std::string name, Ordinal bound, std::optional<Ordinal> tier,
                   std::map<Ordinal, std::vector<Ordinal>> sets)
        : CSeqFamily(std::move(name), std::move(bound), std::move(tier)),
          sets_(std::move(sets)) {
        for (auto& [k, v] : sets_) {
            std::sort(v.begin(), v.end());
            v.erase(std::unique(v.begin(), v.end()), v.end());
        }
    }

    const std::map<Ordinal, std::vector<Ordinal>>& sets() const { return sets_; }

protected:
    const std::vector<Ordinal>& set_of(const Ordinal& beta) const {
        auto it = sets_.find(beta);
        if (it == sets_.end())
            throw family_error("explicit family has no C-set for limit ordinal " + beta.str());
        return it->second;
    }

    Ordinal limit_min_above(const Ordinal& beta, const Ordinal& alpha) const override {
        for (const Ordinal& x : set_of(beta))
            if (x >= alpha) return x;
        throw family_error("explicit C_" + beta.str() + " has no element at or above " +
                           alpha.str());
    }

    Ordinal limit_otp_below(const Ordinal& beta, const Ordinal& alpha) const override {
        std::uint64_t n = 0;
        for (const Ordinal& x : set_of(beta))
            if (x < alpha) ++n;
        return Ordinal::nat(n);
    }

    Ordinal limit_lambda(const Ordinal& alpha, const Ordinal& beta) const override {
        (void)alpha;
        set_of(beta); // finite explicit sets have no limit points
        return Ordinal();
    }

    std::vector<Ordinal> limit_segment(const Ordinal& alpha, const Ordinal& beta) const override {
        std::vector<Ordinal> out;
        for (const Ordinal& x : set_of(beta))
            if (x < alpha) out.push_back(x);
        return out;
    }

    std::optional<Ordinal> limit_max_below(const Ordinal& beta, const Ordinal& alpha) const override {
        std::optional<Ordinal> best;
        for (const Ordinal& x : set_of(beta))
            if (x < alpha) best = x;
        return best;
    }

    std::optional<Ordinal> limit_next_limit_point(const Ordinal&, const Ordinal&) const override {
        return std::nullopt;
    }

private:
    std::map<Ordinal, std::vector<Ordinal>> sets_;
};

/// Wraps a family and removes one designated element from one designated C-set.
/// Removing a non-isolated point breaks closedness at exactly that spot, which
/// is what the validator fault-injection tests want.
class RemovedPointFamily final : public CSeqFamily {
public:
    RemovedPointFamily(std::shared_ptr<const CSeqFamily> base, Ordinal at, Ordinal removed)
        : CSeqFamily(base->name() + "-corrupt", base->bound(), base->tier()),
          base_(std::move(base)), at_(std::move(at)), removed_(std::move(removed)) {}

protected:
    bool hit(const Ordinal& beta) const { return beta == at_; }

    Ordinal limit_min_above(const Ordinal& beta, const Ordinal& alpha) const override {
        Ordinal m = base_->min_above(beta, alpha);
        if (hit(beta) && m == removed_) return base_->min_above(beta, removed_.successor());
        return m;
    }

    Ordinal limit_otp_below(const Ordinal& beta, const Ordinal& alpha) const override {
        Ordinal o = base_->otp_below(beta, alpha);
        if (hit(beta) && removed_ < alpha && base_->contains(beta, removed_)) {
            // drop the point at position p: otp becomes p + (o - (p+1))
            Ordinal p = base_->otp_below(beta, removed_);
            return p + Ordinal::left_diff(p.successor(), o);
        }
        return o;
    }

    Ordinal limit_lambda(const Ordinal& alpha, const Ordinal& beta) const override {
        return base_->lambda_point(alpha, beta); // removal keeps all limit points
    }

    std::vector<Ordinal> limit_segment(const Ordinal& alpha, const Ordinal& beta) const override {
        std::vector<Ordinal> out = base_->segment(alpha, beta);
        if (hit(beta)) std::erase(out, removed_);
        return out;
    }

    std::optional<Ordinal> limit_max_below(const Ordinal& beta, const Ordinal& alpha) const override {
        auto m = base_->max_below(beta, alpha);
        if (hit(beta) && m && *m == removed_) return base_->max_below(beta, removed_);
        return m;
    }

    std::optional<Ordinal> limit_next_limit_point(const Ordinal& beta,
                                                  const Ordinal& alpha) const override {
        return base_->next_limit_point(beta, alpha);
    }

private:
    std::shared_ptr<const CSeqFamily> base_;
    Ordinal at_;
    Ordinal removed_;
};

/// Parses the explicit-family text format: one "alpha: x1,x2,..." line per
/// limit ordinal, plus optional "name NAME", "bound ORD", "tier ORD" headers.
/// Blank lines and lines starting with '#' are skipped. When no bound is
/// given, the least strict upper bound of the keys is used.
inline std::shared_ptr<ExplicitFamily> load_explicit_family(std::istream& in) {
    std::string name = "file";
    std::optional<Ordinal> bound, tier;
    std::map<Ordinal, std::vector<Ordinal>> sets;
    std::string line;
    std::size_t lineno = 0;
    auto trim = [](std::string s) {
        std::size_t a = s.find_first_not_of(" \t\r");
        std::size_t b = s.find_last_not_of(" \t\r");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("name ", 0) == 0) { name = trim(line.substr(5)); continue; }
        if (line.rfind("bound ", 0) == 0) { bound = Ordinal::parse(trim(line.substr(6))); continue; }
        if (line.rfind("tier ", 0) == 0) { tier = Ordinal::parse(trim(line.substr(5))); continue; }
        std::size_t colon = line.find(':');
        if (colon == std::string::npos)
            throw parse_error("family line " + std::to_string(lineno) + " has no ':'", 0);
        Ordinal key = Ordinal::parse(trim(line.substr(0, colon)));
        std::vector<Ordinal> elems;
        std::string rest = line.substr(colon + 1);
        std::size_t start = 0;
        while (start <= rest.size()) {
            std::size_t comma = rest.find(',', start);
            std::string tok = trim(rest.substr(start, comma == std::string::npos
                                                           ? std::string::npos
                                                           : comma - start));
            if (!tok.empty()) elems.push_back(Ordinal::parse(tok));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        sets[key] = std::move(elems);
    }
    if (!bound) {
        Ordinal b;
        for (const auto& [k, v] : sets)
            if (k >= b) b = k.successor();
        bound = b;
    }
    return std::make_shared<ExplicitFamily>(name, *bound, tier, std::move(sets));
}

/// One square-sequence clause violated at one spot.
struct FamilyViolation {
    enum class Clause { club_cofinal, club_closed, otp_bound, element_class, coherence };
    Clause clause;
    Ordinal alpha;   // the C-set owner
    Ordinal witness; // the offending point (or alpha itself for otp_bound)
    std::string detail;
};

inline const char* to_string(FamilyViolation::Clause c) {
    using Clause = FamilyViolation::Clause;
    switch (c) {
        case Clause::club_cofinal: return "club-cofinal";
        case Clause::club_closed: return "club-closed";
        case Clause::otp_bound: return "otp-bound";
        case Clause::element_class: return "element-class";
        case Clause::coherence: return "coherence";
    }
    return "?";
}

struct FamilyReport {
    std::vector<FamilyViolation> violations;
    std::size_t limit_ordinals_checked = 0;
    std::size_t coherence_pairs_checked = 0;
    bool passed() const { return violations.empty(); }
};

/// Checks the square-sequence clauses on every limit ordinal of the sweep
/// universe below sample_bound: club-ness (sampled), the order-type bound,
/// the element cofinality-class bound (tiered families), and coherence at
/// every sampled limit point. Violations are data, not failures.
inline FamilyReport validate_family(const CSeqFamily& fam, const Ordinal& sample_bound,
                                    const SweepCaps& caps = {}) {
    if (sample_bound > fam.bound())
        throw precondition_error("sample bound exceeds family bound");
    FamilyReport rep;
    std::vector<Ordinal> universe = enumerate_below(sample_bound, caps);
    for (const Ordinal& alpha : universe) {
        if (!alpha.is_limit()) continue;
        ++rep.limit_ordinals_checked;

        // otp bound: tiered families cap at the tier; otherwise the square-style
        // otp(C_alpha) < alpha, which only has content above omega
        Ordinal full_otp = fam.otp_below(alpha, alpha);
        if (fam.tier()) {
            if (full_otp > *fam.tier())
                rep.violations.push_back({FamilyViolation::Clause::otp_bound, alpha, alpha,
                                          "otp(C) = " + full_otp.str() + " exceeds tier " +
                                              fam.tier()->str()});
        } else if (alpha > Ordinal::omega() && full_otp >= alpha) {
            rep.violations.push_back({FamilyViolation::Clause::otp_bound, alpha, alpha,
                                      "otp(C) = " + full_otp.str() + " not below " + alpha.str()});
        }

        for (const Ordinal& x : universe) {
            if (x >= alpha) break;

            // cofinality on sampled points: some element of C_alpha at or above x
            bool cofinal_ok = false;
            try {
                Ordinal m = fam.min_above(alpha, x);
                cofinal_ok = m >= x && m < alpha;
            } catch (const family_error&) {
            }
            if (!cofinal_ok)
                rep.violations.push_back({FamilyViolation::Clause::club_cofinal, alpha, x,
                                          "no element of C in [" + x.str() + ", " + alpha.str() +
                                              ")"});

            bool lp = fam.is_limit_point(alpha, x);
            if (lp && !fam.contains(alpha, x))
                rep.violations.push_back({FamilyViolation::Clause::club_closed, alpha, x,
                                          "limit point " + x.str() + " missing from C"});

            if (fam.tier() && fam.contains(alpha, x) && fam.cof_class(x) == CofClass::tier)
                rep.violations.push_back({FamilyViolation::Clause::element_class, alpha, x,
                                          "tier-class element " + x.str() + " inside C"});

            if (lp) {
                ++rep.coherence_pairs_checked;
                bool ok = fam.otp_below(alpha, x) == fam.otp_below(x, x);
                if (ok) {
                    for (const Ordinal& y : universe) {
                        if (y >= x) break;
                        if (fam.contains(alpha, y) != fam.contains(x, y)) { ok = false; break; }
                    }
                }
                if (!ok)
                    rep.violations.push_back({FamilyViolation::Clause::coherence, alpha, x,
                                              "C ∩ " + x.str() + " differs from the C-set at " +
                                                  x.str()});
            }
        }
    }
    return rep;
}

} // namespace ordwalk
