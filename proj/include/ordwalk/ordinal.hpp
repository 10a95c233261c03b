#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ordwalk/util.hpp"

namespace ordwalk {

using BigNat = boost::multiprecision::cpp_int;

/// Ordinal below epsilon_0 in Cantor normal form:
/// w^e1*c1 + ... + w^ek*ck with e1 > e2 > ... > ek and all ci >= 1.
/// The empty term list is 0. Immutable value type; all operations are pure.
/// Exponents are shared immutable nodes, so copies are cheap.
class Ordinal {
public:
    struct Term {
        std::shared_ptr<const Ordinal> exp;
        BigNat coeff;
        const Ordinal& e() const { return *exp; }
    };

    Ordinal() = default;

    static Ordinal nat(const BigNat& n) {
        Ordinal o;
        if (n < 0) throw precondition_error("ordinal coefficients must be non-negative");
        if (n > 0) o.terms_.push_back(Term{zero_ptr(), n});
        return o;
    }
    static Ordinal nat(std::uint64_t n) { return nat(BigNat(n)); }

    static Ordinal omega() { return omega_pow(nat(1)); }

    static Ordinal omega_pow(const Ordinal& e, const BigNat& coeff = 1) {
        if (coeff == 0) return Ordinal();
        if (coeff < 0) throw precondition_error("ordinal coefficients must be positive");
        Ordinal o;
        o.terms_.push_back(Term{std::make_shared<Ordinal>(e), coeff});
        return o;
    }

    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    bool is_nat() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].e().is_zero());
    }

    /// Value as a natural number; pre: is_nat().
    BigNat nat_value() const {
        if (terms_.empty()) return 0;
        if (!is_nat()) throw precondition_error("ordinal is not finite: " + str());
        return terms_[0].coeff;
    }

    bool is_successor() const {
        return !terms_.empty() && terms_.back().e().is_zero();
    }

    bool is_limit() const { return !is_zero() && !is_successor(); }

    /// w^e with coefficient 1 (additively indecomposable, including 1 = w^0).
    bool is_omega_power() const {
        return terms_.size() == 1 && terms_[0].coeff == 1;
    }

    Ordinal successor() const {
        Ordinal r = *this;
        if (r.is_successor())
            r.terms_.back().coeff += 1;
        else
            r.terms_.push_back(Term{zero_ptr(), 1});
        return r;
    }

    /// Pre: is_successor().
    Ordinal predecessor() const {
        if (!is_successor()) throw precondition_error("predecessor of a non-successor: " + str());
        Ordinal r = *this;
        if (r.terms_.back().coeff == 1)
            r.terms_.pop_back();
        else
            r.terms_.back().coeff -= 1;
        return r;
    }

    /// Largest limit ordinal <= *this (0 if none): drops the trailing finite term.
    Ordinal limit_part() const {
        Ordinal r = *this;
        if (r.is_successor()) r.terms_.pop_back();
        return r;
    }

    /// The trailing finite part: *this = limit_part() + nat_tail().
    BigNat nat_tail() const {
        if (is_successor()) return terms_.back().coeff;
        return 0;
    }

    static int cmp(const Ordinal& a, const Ordinal& b) {
        std::size_t n = std::min(a.terms_.size(), b.terms_.size());
        for (std::size_t i = 0; i < n; ++i) {
            if (a.terms_[i].exp != b.terms_[i].exp) { // shared-node fast path
                int c = cmp(a.terms_[i].e(), b.terms_[i].e());
                if (c != 0) return c;
            }
            if (a.terms_[i].coeff != b.terms_[i].coeff)
                return a.terms_[i].coeff < b.terms_[i].coeff ? -1 : 1;
        }
        if (a.terms_.size() == b.terms_.size()) return 0;
        return a.terms_.size() < b.terms_.size() ? -1 : 1;
    }

    friend bool operator==(const Ordinal& a, const Ordinal& b) { return cmp(a, b) == 0; }
    friend bool operator!=(const Ordinal& a, const Ordinal& b) { return cmp(a, b) != 0; }
    friend bool operator<(const Ordinal& a, const Ordinal& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const Ordinal& a, const Ordinal& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const Ordinal& a, const Ordinal& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const Ordinal& a, const Ordinal& b) { return cmp(a, b) >= 0; }

    /// Ordinal sum (non-commutative): terms of a with exponent below b's leading
    /// exponent are absorbed.
    friend Ordinal operator+(const Ordinal& a, const Ordinal& b) {
        if (b.is_zero()) return a;
        if (a.is_zero()) return b;
        const Ordinal& lead = b.terms_[0].e();
        Ordinal r;
        std::size_t from = 0;
        bool merged = false;
        for (const Term& t : a.terms_) {
            int c = cmp(t.e(), lead);
            if (c > 0) {
                r.terms_.push_back(t);
            } else {
                if (c == 0) {
                    r.terms_.push_back(Term{b.terms_[0].exp, t.coeff + b.terms_[0].coeff});
                    merged = true;
                    from = 1;
                }
                break;
            }
        }
        (void)merged;
        for (std::size_t i = from; i < b.terms_.size(); ++i) r.terms_.push_back(b.terms_[i]);
        return r;
    }

    /// Ordinal product. Used internally to build forms like W*q + r.
    friend Ordinal operator*(const Ordinal& a, const Ordinal& b) {
        if (a.is_zero() || b.is_zero()) return Ordinal();
        Ordinal acc;
        const Ordinal& e1 = a.terms_[0].e();
        for (const Term& t : b.terms_) {
            if (t.e().is_zero()) {
                // a * finite d: multiply the leading coefficient, keep a's tail
                Ordinal part;
                part.terms_.push_back(Term{a.terms_[0].exp, a.terms_[0].coeff * t.coeff});
                for (std::size_t i = 1; i < a.terms_.size(); ++i)
                    part.terms_.push_back(a.terms_[i]);
                acc = acc + part;
            } else {
                acc = acc + omega_pow(e1 + t.e(), t.coeff);
            }
        }
        return acc;
    }

    /// Unique c with a + c = b; pre: a <= b.
    static Ordinal left_diff(const Ordinal& a, const Ordinal& b) {
        if (cmp(a, b) > 0) throw precondition_error("left_diff: minuend below subtrahend");
        std::size_t i = 0;
        for (; i < a.terms_.size() && i < b.terms_.size(); ++i) {
            if (cmp(a.terms_[i].e(), b.terms_[i].e()) != 0 ||
                a.terms_[i].coeff != b.terms_[i].coeff)
                break;
        }
        Ordinal r;
        if (i == a.terms_.size()) {
            for (; i < b.terms_.size(); ++i) r.terms_.push_back(b.terms_[i]);
            return r;
        }
        // first differing term; b's must dominate
        if (cmp(a.terms_[i].e(), b.terms_[i].e()) == 0) {
            r.terms_.push_back(Term{b.terms_[i].exp, b.terms_[i].coeff - a.terms_[i].coeff});
            ++i;
        }
        for (; i < b.terms_.size(); ++i) r.terms_.push_back(b.terms_[i]);
        return r;
    }

    /// Division by a power of omega: a = w^e * q + r with r < w^e. Total.
    static std::pair<Ordinal, Ordinal> divmod_pow(const Ordinal& a, const Ordinal& e) {
        Ordinal q, r;
        for (const Term& t : a.terms_) {
            if (cmp(t.e(), e) >= 0)
                q.terms_.push_back(Term{std::make_shared<Ordinal>(left_diff(e, t.e())), t.coeff});
            else
                r.terms_.push_back(t);
        }
        return {q, r};
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const Term& t : terms_) {
            if (!first) out += '+';
            first = false;
            if (t.e().is_zero()) {
                out += t.coeff.str();
                continue;
            }
            out += 'w';
            if (!(t.e().is_nat() && t.e().nat_value() == 1)) {
                out += '^';
                if (t.e().needs_parens_as_exponent())
                    out += '(' + t.e().str() + ')';
                else
                    out += t.e().str();
            }
            if (t.coeff != 1) out += '*' + t.coeff.str();
        }
        return out;
    }

    /// Parses ordinal notation:
    ///   expr := term ("+" term)*
    ///   term := "w" ("^" exp)? ("*" nat)? | nat
    ///   exp  := "(" expr ")" | "w" ("^" exp)? | nat
    /// Non-CNF input (non-decreasing exponents) is normalized through ordinal
    /// addition, e.g. "w+w" parses to w*2 and "1+w" to w.
    static Ordinal parse(std::string_view text) {
        Parser p{text, 0};
        Ordinal r = p.parse_expr();
        if (p.pos != text.size()) throw parse_error("trailing input", p.pos);
        return r;
    }

    std::size_t hash() const {
        std::size_t h = 0x9e3779b9u;
        for (const Term& t : terms_) {
            h ^= t.e().hash() + 0x9e3779b9u + (h << 6) + (h >> 2);
            std::size_t ch = t.coeff <= 0xffffffffu
                                 ? static_cast<std::size_t>(static_cast<std::uint64_t>(t.coeff))
                                 : std::hash<std::string>{}(t.coeff.str());
            h ^= ch + 0x9e3779b9u + (h << 6) + (h >> 2);
        }
        return h;
    }

private:
    static const std::shared_ptr<const Ordinal>& zero_ptr() {
        static const std::shared_ptr<const Ordinal> z = std::make_shared<Ordinal>();
        return z;
    }

    bool needs_parens_as_exponent() const {
        // unambiguous without parens only for a bare nat or a coefficient-free
        // tower w, w^w, w^w^w, ...
        if (is_nat()) return false;
        if (terms_.size() == 1 && terms_[0].coeff == 1)
            return terms_[0].e().needs_parens_as_exponent();
        return true;
    }

    struct Parser {
        std::string_view s;
        std::size_t pos;

        bool peek(char c) const { return pos < s.size() && s[pos] == c; }
        bool eat(char c) {
            if (peek(c)) { ++pos; return true; }
            return false;
        }

        BigNat parse_nat() {
            std::size_t start = pos;
            std::string digits;
            while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') digits += s[pos++];
            if (digits.empty()) throw parse_error("expected a number", start);
            return BigNat(digits);
        }

        Ordinal parse_exponent() {
            if (eat('(')) {
                Ordinal e = parse_expr();
                if (!eat(')')) throw parse_error("expected ')'", pos);
                return e;
            }
            if (eat('w')) {
                Ordinal e = Ordinal::nat(1);
                if (eat('^')) e = parse_exponent();
                return Ordinal::omega_pow(e);
            }
            return Ordinal::nat(parse_nat());
        }

        Ordinal parse_term() {
            if (eat('w')) {
                Ordinal e = Ordinal::nat(1);
                if (eat('^')) e = parse_exponent();
                BigNat c = 1;
                if (eat('*')) {
                    c = parse_nat();
                    if (c == 0) return Ordinal();
                }
                return Ordinal::omega_pow(e, c);
            }
            if (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') return Ordinal::nat(parse_nat());
            throw parse_error("expected 'w' or a number", pos);
        }

        Ordinal parse_expr() {
            Ordinal acc = parse_term();
            while (eat('+')) acc = acc + parse_term();
            return acc;
        }
    };

    std::vector<Term> terms_;
};

struct OrdinalHash {
    std::size_t operator()(const Ordinal& o) const { return o.hash(); }
};

struct OrdinalPairHash {
    std::size_t operator()(const std::pair<Ordinal, Ordinal>& p) const {
        std::size_t h = p.first.hash();
        return h ^ (p.second.hash() + 0x9e3779b9u + (h << 6) + (h >> 2));
    }
};

inline Ordinal ord_add(const Ordinal& a, const Ordinal& b) { return a + b; }

/// Splits a as omega_param*q + r with r < omega_param.
/// Pre: omega_param is a power of omega and a < omega_param*omega_param.
inline std::pair<Ordinal, Ordinal> split_two_tier(const Ordinal& a, const Ordinal& omega_param) {
    if (!omega_param.is_omega_power())
        throw precondition_error("tier parameter must be a power of omega: " + omega_param.str());
    if (a >= omega_param * omega_param)
        throw precondition_error("split_two_tier: " + a.str() + " is not below " +
                                 omega_param.str() + "*" + omega_param.str());
    return Ordinal::divmod_pow(a, omega_param.terms()[0].e());
}

} // namespace ordwalk
