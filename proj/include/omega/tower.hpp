#pragma once

// The verifier family. A descriptor names a verifier: Tower(level) is the
// ordinal-indexed progression, Singleton(p) accepts exactly one program,
// Union joins two verifiers. `verify` is the total checker over
// (descriptor, certificate, program) triples; `diag` emits the diagonal
// program for a descriptor; `strengthen` is the step from a verifier to a
// strictly stronger one.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "omega/lang.hpp"
#include "omega/ordinal.hpp"
#include "omega/proof.hpp"
#include "omega/sexpr.hpp"

namespace omega {

struct VerifierDesc;
using VerifierDescPtr = std::shared_ptr<const VerifierDesc>;

struct VerifierDesc {
    enum class Kind { Tower, Singleton, Union };

    Kind kind = Kind::Tower;
    OrdinalNotation level;      // Tower
    std::string program_text;   // Singleton: canonical program text
    VerifierDescPtr left, right;  // Union

    static VerifierDesc tower(OrdinalNotation level) {
        VerifierDesc v;
        v.kind = Kind::Tower;
        v.level = std::move(level);
        return v;
    }
    static VerifierDesc singleton(std::string program_text) {
        VerifierDesc v;
        v.kind = Kind::Singleton;
        v.program_text = std::move(program_text);
        return v;
    }
    static VerifierDesc union_of(VerifierDesc left, VerifierDesc right) {
        VerifierDesc v;
        v.kind = Kind::Union;
        v.left = std::make_shared<const VerifierDesc>(std::move(left));
        v.right = std::make_shared<const VerifierDesc>(std::move(right));
        return v;
    }
};

// ---------------------------------------------------------------------------
// Text form (bit-exact):  tower ORD | singleton "PROGRAM" | union (V) (V)

inline std::string print_descriptor(const VerifierDesc& v) {
    switch (v.kind) {
        case VerifierDesc::Kind::Tower: return "tower " + print_ordinal(v.level);
        case VerifierDesc::Kind::Singleton: return "singleton " + quote_string(v.program_text);
        case VerifierDesc::Kind::Union:
            return "union (" + print_descriptor(*v.left) + ") (" + print_descriptor(*v.right) +
                   ")";
    }
    return {};
}

inline bool operator==(const VerifierDesc& a, const VerifierDesc& b) {
    return print_descriptor(a) == print_descriptor(b);
}

namespace detail {

// Reads a quoted string starting at text[pos] (which must be '"'); returns
// the unescaped contents and advances pos past the closing quote.
inline std::string scan_quoted(std::string_view text, std::size_t& pos) {
    if (pos >= text.size() || text[pos] != '"')
        throw ParseError("expected '\"'", 1, static_cast<int>(pos) + 1);
    ++pos;
    std::string out;
    for (;;) {
        if (pos >= text.size())
            throw ParseError("unterminated string", 1, static_cast<int>(pos) + 1);
        char c = text[pos++];
        if (c == '"') return out;
        if (c == '\\') {
            if (pos >= text.size())
                throw ParseError("unterminated escape", 1, static_cast<int>(pos) + 1);
            char e = text[pos++];
            if (e != '"' && e != '\\')
                throw ParseError("invalid escape sequence", 1, static_cast<int>(pos) + 1);
            out += e;
        } else {
            out += c;
        }
    }
}

// Extracts the contents of a balanced parenthesis group starting at
// text[pos] == '('; quote-aware. Advances pos past the closing ')'.
inline std::string_view scan_group(std::string_view text, std::size_t& pos) {
    if (pos >= text.size() || text[pos] != '(')
        throw ParseError("expected '('", 1, static_cast<int>(pos) + 1);
    std::size_t start = ++pos;
    int depth = 1;
    while (pos < text.size()) {
        char c = text[pos];
        if (c == '"') {
            scan_quoted(text, pos);
            continue;
        }
        if (c == '(') ++depth;
        if (c == ')' && --depth == 0) {
            std::string_view inner = text.substr(start, pos - start);
            ++pos;
            return inner;
        }
        ++pos;
    }
    throw ParseError("unclosed '('", 1, static_cast<int>(pos) + 1);
}

}  // namespace detail

inline VerifierDesc parse_descriptor(std::string_view text) {
    if (text.rfind("tower ", 0) == 0)
        return VerifierDesc::tower(parse_ordinal(text.substr(6)));
    if (text.rfind("singleton ", 0) == 0) {
        std::size_t pos = 10;
        std::string program_text = detail::scan_quoted(text, pos);
        if (pos != text.size())
            throw ParseError("trailing input after descriptor", 1, static_cast<int>(pos) + 1);
        // The embedded program must be canonical text.
        Program p = parse_program(program_text);
        if (print_program(p) != program_text)
            throw ParseError("singleton program text is not canonical", 1, 11);
        return VerifierDesc::singleton(std::move(program_text));
    }
    if (text.rfind("union ", 0) == 0) {
        std::size_t pos = 6;
        std::string_view left = detail::scan_group(text, pos);
        if (pos >= text.size() || text[pos] != ' ')
            throw ParseError("expected ' ' between union members", 1, static_cast<int>(pos) + 1);
        ++pos;
        std::string_view right = detail::scan_group(text, pos);
        if (pos != text.size())
            throw ParseError("trailing input after descriptor", 1, static_cast<int>(pos) + 1);
        return VerifierDesc::union_of(parse_descriptor(left), parse_descriptor(right));
    }
    throw ParseError("expected tower/singleton/union descriptor", 1, 1);
}

// ---------------------------------------------------------------------------
// The diagonal program

// P(x): if x is a pair (pi, t) of non-pair components and the embedded
// verifier accepts (pi, t), return the negation of t's own output on x;
// otherwise return false. Identical descriptors yield byte-identical text.
inline Program diag(const VerifierDesc& v) {
    using namespace ast;
    std::string vtext = print_descriptor(v);
    auto not_a_pair = [](const char* name) {
        return node(ExprKind::Eq, {node(ExprKind::IsPair, {var(name)}), boolean(false)});
    };
    ExprPtr condition = node(
        ExprKind::And,
        {node(ExprKind::And, {not_a_pair("pi"), not_a_pair("t")}),
         node(ExprKind::Verify, {str(std::move(vtext)), var("pi"), var("t")})});
    StmtPtr inner_if = if_else(
        std::move(condition),
        {set("r", node(ExprKind::Not,
                       {node(ExprKind::ToBool, {node(ExprKind::Apply, {var("t"), var("x")})})}))},
        {set("r", boolean(false))});
    StmtPtr outer_if = if_else(
        node(ExprKind::IsPair, {var("x")}),
        {set("pi", node(ExprKind::Fst, {var("x")})), set("t", node(ExprKind::Snd, {var("x")})),
         std::move(inner_if)},
        {set("r", boolean(false))});
    Program p;
    p.param = "x";
    p.body.push_back(std::move(outer_if));
    p.result = var("r");
    return p;
}

// ---------------------------------------------------------------------------
// Verification

inline CheckResult verify(const VerifierDesc& v, const Certificate& cert, const Program& program) {
    switch (v.kind) {
        case VerifierDesc::Kind::Tower: {
            if (cert.kind == CertKind::LoopFree || cert.kind == CertKind::Ranking)
                return check_base_certificate(cert, program);
            if (cert.kind == CertKind::Diagonal) {
                VerifierDesc below;
                try {
                    below = parse_descriptor(cert.text);
                } catch (const ParseError&) {
                    return CheckResult::reject(reject_reason::bad_descriptor);
                }
                if (below.kind != VerifierDesc::Kind::Tower)
                    return CheckResult::reject(reject_reason::diagonal_not_tower);
                if (compare(below.level, v.level) != Ordering::Less)
                    return CheckResult::reject(reject_reason::level_not_below);
                if (!(program == diag(below)))
                    return CheckResult::reject(reject_reason::diagonal_mismatch);
                return CheckResult::accept();
            }
            if (cert.kind == CertKind::Reflection) {
                OrdinalNotation below;
                try {
                    below = parse_ordinal(cert.text);
                } catch (const ParseError&) {
                    return CheckResult::reject(reject_reason::bad_ordinal);
                }
                if (compare(below, v.level) != Ordering::Less)
                    return CheckResult::reject(reject_reason::level_not_below);
                return verify(VerifierDesc::tower(std::move(below)), *cert.inner, program);
            }
            return CheckResult::reject(reject_reason::wrong_certificate_form);
        }
        case VerifierDesc::Kind::Singleton: {
            if (cert.kind != CertKind::Singleton)
                return CheckResult::reject(reject_reason::wrong_certificate_form);
            if (print_program(program) != v.program_text)
                return CheckResult::reject(reject_reason::program_mismatch);
            return CheckResult::accept();
        }
        case VerifierDesc::Kind::Union: {
            if (cert.kind == CertKind::Left) return verify(*v.left, *cert.inner, program);
            if (cert.kind == CertKind::Right) return verify(*v.right, *cert.inner, program);
            return CheckResult::reject(reject_reason::wrong_certificate_form);
        }
    }
    return CheckResult::reject(reject_reason::wrong_certificate_form);
}

// The proof-checking oracle handed to the interpreter: parses all three
// texts and defers to verify; anything unparseable is rejected.
inline VerifyOracle make_verify_oracle() {
    return [](const std::string& vtext, const std::string& ptext, const std::string& ttext) {
        try {
            VerifierDesc v = parse_descriptor(vtext);
            Certificate c = parse_certificate(ptext);
            Program t = parse_program(ttext);
            return verify(v, c, t).accepted;
        } catch (const ParseError&) {
            return false;
        }
    };
}

// ---------------------------------------------------------------------------
// Strengthening and the progression

inline VerifierDesc strengthen(const VerifierDesc& v) {
    if (v.kind == VerifierDesc::Kind::Tower)
        return VerifierDesc::tower(successor(v.level));
    return VerifierDesc::union_of(v, VerifierDesc::singleton(print_program(diag(v))));
}

// [fs(lambda, 0), ..., fs(lambda, k-1)]: strictly increasing, all below lambda.
inline std::vector<OrdinalNotation> enumerate_tower(const OrdinalNotation& lambda,
                                                    std::uint64_t k) {
    if (classify(lambda).cls != OrdinalClass::Limit) throw std::invalid_argument("not-a-limit");
    std::vector<OrdinalNotation> out;
    out.reserve(static_cast<std::size_t>(k));
    for (std::uint64_t n = 0; n < k; ++n) out.push_back(fundamental_sequence(lambda, n));
    return out;
}

// Finite sample of levels strictly below `level`: the successor chain
// interleaved with fundamental-sequence samples at limits.
inline std::vector<OrdinalNotation> search_frontier(const OrdinalNotation& level) {
    std::vector<OrdinalNotation> out;
    auto push_unique = [&out](const OrdinalNotation& o) {
        for (const OrdinalNotation& have : out)
            if (have == o) return;
        out.push_back(o);
    };
    OrdinalNotation cur = level;
    for (int step = 0; step < 8 && !cur.is_zero(); ++step) {
        Classified c = classify(cur);
        if (c.cls == OrdinalClass::Successor) {
            cur = std::move(c.predecessor);
            push_unique(cur);
        } else {
            for (std::uint64_t n = 0; n <= 4; ++n) push_unique(fundamental_sequence(cur, n));
            cur = fundamental_sequence(cur, 4);
        }
    }
    return out;
}

namespace detail {

inline std::optional<Certificate> search_impl(const VerifierDesc& v, const Program& program,
                                              std::uint64_t& budget) {
    auto attempt = [&](const Certificate& c) {
        if (budget == 0) return false;
        --budget;
        return verify(v, c, program).accepted;
    };
    switch (v.kind) {
        case VerifierDesc::Kind::Tower: {
            Certificate loop_free = Certificate::loop_free();
            if (attempt(loop_free)) return loop_free;
            if (std::optional<Certificate> inferred = infer_certificate(program);
                inferred && inferred->kind == CertKind::Ranking && attempt(*inferred))
                return inferred;
            std::vector<OrdinalNotation> frontier = search_frontier(v.level);
            for (const OrdinalNotation& below : frontier) {
                Certificate cand =
                    Certificate::diagonal(print_descriptor(VerifierDesc::tower(below)));
                if (attempt(cand)) return cand;
            }
            for (const OrdinalNotation& below : frontier) {
                if (budget == 0) break;
                std::optional<Certificate> inner =
                    search_impl(VerifierDesc::tower(below), program, budget);
                if (!inner) continue;
                Certificate cand = Certificate::reflection(print_ordinal(below), *inner);
                if (attempt(cand)) return cand;
            }
            return std::nullopt;
        }
        case VerifierDesc::Kind::Singleton: {
            Certificate cand = Certificate::singleton();
            if (attempt(cand)) return cand;
            return std::nullopt;
        }
        case VerifierDesc::Kind::Union: {
            if (budget > 0)
                if (std::optional<Certificate> c = search_impl(*v.left, program, budget)) {
                    Certificate cand = Certificate::left(*c);
                    if (attempt(cand)) return cand;
                }
            if (budget > 0)
                if (std::optional<Certificate> c = search_impl(*v.right, program, budget)) {
                    Certificate cand = Certificate::right(*c);
                    if (attempt(cand)) return cand;
                }
            return std::nullopt;
        }
    }
    return std::nullopt;
}

}  // namespace detail

// Bounded enumeration of candidate certificates, smallest first. The budget
// caps the number of verify attempts; any returned certificate is accepted.
inline std::optional<Certificate> accepts_via_search(const VerifierDesc& v, const Program& program,
                                                     std::uint64_t budget) {
    return detail::search_impl(v, program, budget);
}

}  // namespace omega
