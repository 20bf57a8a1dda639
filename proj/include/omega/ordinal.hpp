#pragma once

// Ordinal notations in Cantor normal form below epsilon-0. A notation is
// either zero (no terms) or a sum of terms w^exponent * coefficient with
// strictly decreasing notation-valued exponents and positive coefficients.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "omega/sexpr.hpp"

namespace omega {

struct OrdinalNotation {
    struct Term;
    std::vector<Term> terms;  // empty means zero

    bool is_zero() const { return terms.empty(); }
};

struct OrdinalNotation::Term {
    OrdinalNotation exponent;
    std::uint64_t coefficient = 1;
};

enum class Ordering { Less, Equal, Greater };

namespace ord {

inline OrdinalNotation zero() { return {}; }

inline OrdinalNotation from_nat(std::uint64_t n) {
    OrdinalNotation o;
    if (n > 0) o.terms.push_back({zero(), n});
    return o;
}

inline OrdinalNotation one() { return from_nat(1); }

inline OrdinalNotation omega_pow(OrdinalNotation exponent, std::uint64_t coefficient = 1) {
    OrdinalNotation o;
    if (coefficient > 0) o.terms.push_back({std::move(exponent), coefficient});
    return o;
}

inline OrdinalNotation omega(std::uint64_t coefficient = 1) {
    return omega_pow(one(), coefficient);
}

}  // namespace ord

inline Ordering compare(const OrdinalNotation& a, const OrdinalNotation& b) {
    std::size_t n = a.terms.size() < b.terms.size() ? a.terms.size() : b.terms.size();
    for (std::size_t i = 0; i < n; ++i) {
        Ordering e = compare(a.terms[i].exponent, b.terms[i].exponent);
        if (e != Ordering::Equal) return e;
        if (a.terms[i].coefficient != b.terms[i].coefficient)
            return a.terms[i].coefficient < b.terms[i].coefficient ? Ordering::Less
                                                                   : Ordering::Greater;
    }
    if (a.terms.size() != b.terms.size())
        return a.terms.size() < b.terms.size() ? Ordering::Less : Ordering::Greater;
    return Ordering::Equal;
}

inline bool operator==(const OrdinalNotation& a, const OrdinalNotation& b) {
    return compare(a, b) == Ordering::Equal;
}

inline bool is_valid_cnf(const OrdinalNotation& o) {
    for (std::size_t i = 0; i < o.terms.size(); ++i) {
        if (o.terms[i].coefficient == 0) return false;
        if (!is_valid_cnf(o.terms[i].exponent)) return false;
        if (i > 0 && compare(o.terms[i - 1].exponent, o.terms[i].exponent) != Ordering::Greater)
            return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Classification and fundamental sequences

enum class OrdinalClass { Zero, Successor, Limit };

struct Classified {
    OrdinalClass cls = OrdinalClass::Zero;
    OrdinalNotation predecessor;  // Successor only
};

inline Classified classify(const OrdinalNotation& o) {
    if (o.is_zero()) return {OrdinalClass::Zero, {}};
    if (o.terms.back().exponent.is_zero()) {
        OrdinalNotation pred = o;
        if (--pred.terms.back().coefficient == 0) pred.terms.pop_back();
        return {OrdinalClass::Successor, std::move(pred)};
    }
    return {OrdinalClass::Limit, {}};
}

inline OrdinalNotation successor(const OrdinalNotation& o) {
    OrdinalNotation s = o;
    if (!s.terms.empty() && s.terms.back().exponent.is_zero())
        ++s.terms.back().coefficient;
    else
        s.terms.push_back({ord::zero(), 1});
    return s;
}

// Wainer-style assignment. For lambda = delta + w^a*c:
//   c > 1            ->  delta + w^a*(c-1) + fs(w^a, n)
//   c = 1, a = a'+1  ->  delta + w^a' * n        (delta itself when n = 0)
//   c = 1, a limit   ->  delta + w^fs(a, n)
// Guarantees fs(lambda, n) < fs(lambda, n+1) < lambda.
inline OrdinalNotation fundamental_sequence(const OrdinalNotation& lambda, std::uint64_t n) {
    if (classify(lambda).cls != OrdinalClass::Limit) throw std::invalid_argument("not-a-limit");
    OrdinalNotation delta = lambda;
    OrdinalNotation::Term last = delta.terms.back();
    delta.terms.pop_back();
    if (last.coefficient > 1) {
        OrdinalNotation rest = fundamental_sequence(ord::omega_pow(last.exponent), n);
        delta.terms.push_back({last.exponent, last.coefficient - 1});
        for (auto& t : rest.terms) delta.terms.push_back(std::move(t));
        return delta;
    }
    Classified ec = classify(last.exponent);
    if (ec.cls == OrdinalClass::Successor) {
        if (n > 0) delta.terms.push_back({std::move(ec.predecessor), n});
        return delta;
    }
    delta.terms.push_back({fundamental_sequence(last.exponent, n), 1});
    return delta;
}

// ---------------------------------------------------------------------------
// Text form
//
//   Ord     := "0" | Term (" + " Term)*
//   Term    := "w^" OrdAtom ("*" COEFF)? | "w" ("*" COEFF)? | NAT
//   OrdAtom := NAT | "w" | "(" Ord ")"
//
// Canonical printing drops exponent 1 (plain "w"), prints exponent-zero
// terms as bare naturals, and omits coefficient 1.

inline std::string print_ordinal(const OrdinalNotation& o) {
    if (o.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < o.terms.size(); ++i) {
        const auto& t = o.terms[i];
        if (i > 0) out += " + ";
        if (t.exponent.is_zero()) {
            out += std::to_string(t.coefficient);
            continue;
        }
        if (t.exponent == ord::one()) {
            out += "w";
        } else if (t.exponent.terms.size() == 1 && t.exponent.terms[0].exponent.is_zero()) {
            out += "w^" + std::to_string(t.exponent.terms[0].coefficient);
        } else if (t.exponent == ord::omega()) {
            out += "w^w";
        } else {
            out += "w^(" + print_ordinal(t.exponent) + ")";
        }
        if (t.coefficient != 1) out += "*" + std::to_string(t.coefficient);
    }
    return out;
}

namespace detail {

class OrdinalParser {
  public:
    explicit OrdinalParser(std::string_view text) : text_(text) {}

    OrdinalNotation parse_top() {
        OrdinalNotation o = parse_ord();
        if (pos_ != text_.size()) fail("trailing input after ordinal");
        return o;
    }

  private:
    [[noreturn]] void fail(const std::string& reason) const {
        throw ParseError(reason, 1, static_cast<int>(pos_) + 1);
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    bool at_digit() const { return peek() >= '0' && peek() <= '9'; }

    std::uint64_t parse_nat() {
        if (!at_digit()) fail("expected a natural number");
        if (peek() == '0' && pos_ + 1 < text_.size() && text_[pos_ + 1] >= '0' &&
            text_[pos_ + 1] <= '9')
            fail("leading zero in natural number");
        std::uint64_t value = 0;
        while (at_digit()) {
            std::uint64_t digit = static_cast<std::uint64_t>(text_[pos_++] - '0');
            if (value > (UINT64_MAX - digit) / 10) fail("natural number too large");
            value = value * 10 + digit;
        }
        return value;
    }

    OrdinalNotation parse_ord() {
        // A lone "0" (at this nesting level) denotes the zero notation.
        if (peek() == '0' && !(pos_ + 1 < text_.size() && text_[pos_ + 1] >= '0' &&
                               text_[pos_ + 1] <= '9')) {
            char after = pos_ + 1 < text_.size() ? text_[pos_ + 1] : '\0';
            if (after == '\0' || after == ')') {
                ++pos_;
                return ord::zero();
            }
        }
        OrdinalNotation o;
        o.terms.push_back(parse_term());
        while (pos_ + 2 < text_.size() && text_.substr(pos_, 3) == " + ") {
            pos_ += 3;
            o.terms.push_back(parse_term());
        }
        for (std::size_t i = 0; i < o.terms.size(); ++i) {
            if (o.terms[i].coefficient == 0) fail("cnf-violation: zero coefficient");
            if (i > 0 &&
                compare(o.terms[i - 1].exponent, o.terms[i].exponent) != Ordering::Greater)
                fail("cnf-violation: exponents not strictly decreasing");
        }
        return o;
    }

    OrdinalNotation::Term parse_term() {
        if (at_digit()) return {ord::zero(), parse_nat()};
        if (peek() != 'w') fail("expected term");
        ++pos_;
        OrdinalNotation exponent = ord::one();
        if (peek() == '^') {
            ++pos_;
            exponent = parse_atom();
        }
        std::uint64_t coefficient = 1;
        if (peek() == '*') {
            ++pos_;
            coefficient = parse_nat();
        }
        return {std::move(exponent), coefficient};
    }

    OrdinalNotation parse_atom() {
        if (at_digit()) return ord::from_nat(parse_nat());
        if (peek() == 'w') {
            ++pos_;
            return ord::omega();
        }
        if (peek() == '(') {
            ++pos_;
            OrdinalNotation o = parse_ord();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return o;
        }
        fail("expected exponent");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline OrdinalNotation parse_ordinal(std::string_view text) {
    return detail::OrdinalParser(text).parse_top();
}

}  // namespace omega
