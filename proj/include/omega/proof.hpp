#pragma once

// Termination certificates and the decidable base checker. Base certificates
// (loopfree / ranking) are purely syntactic: loopfree programs must contain
// no while and no apply; ranking clauses pin every loop to the exact
// countdown shape `while (0 < v) { ...; v = v - k }` with no other write to
// v inside the loop. Programs containing apply are never base-certifiable,
// which keeps every diagonal program out of reach of the base checker.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "omega/lang.hpp"
#include "omega/sexpr.hpp"

namespace omega {

// Child indices from the top-level statement list down to a while statement.
// Descending into an if consumes two indices: the statement index, then 0
// for the then-branch or 1 for the else-branch.
using Path = std::vector<std::size_t>;

enum class CertKind { LoopFree, Ranking, Diagonal, Reflection, Left, Right, Singleton };

struct RankingClause {
    Path loop_path;
    std::string var;
    std::uint64_t dec = 1;
};

struct Certificate;
using CertificatePtr = std::shared_ptr<const Certificate>;

struct Certificate {
    CertKind kind = CertKind::LoopFree;
    std::vector<RankingClause> clauses;  // Ranking
    std::string text;                    // Diagonal: descriptor text; Reflection: ordinal text
    CertificatePtr inner;                // Reflection / Left / Right

    static Certificate loop_free() { return {}; }
    static Certificate ranking(std::vector<RankingClause> clauses) {
        Certificate c;
        c.kind = CertKind::Ranking;
        c.clauses = std::move(clauses);
        return c;
    }
    static Certificate diagonal(std::string vdesc_text) {
        Certificate c;
        c.kind = CertKind::Diagonal;
        c.text = std::move(vdesc_text);
        return c;
    }
    static Certificate reflection(std::string ordinal_text, Certificate inner) {
        Certificate c;
        c.kind = CertKind::Reflection;
        c.text = std::move(ordinal_text);
        c.inner = std::make_shared<const Certificate>(std::move(inner));
        return c;
    }
    static Certificate left(Certificate inner) {
        Certificate c;
        c.kind = CertKind::Left;
        c.inner = std::make_shared<const Certificate>(std::move(inner));
        return c;
    }
    static Certificate right(Certificate inner) {
        Certificate c;
        c.kind = CertKind::Right;
        c.inner = std::make_shared<const Certificate>(std::move(inner));
        return c;
    }
    static Certificate singleton() {
        Certificate c;
        c.kind = CertKind::Singleton;
        return c;
    }
};

// Closed enumeration of reject reasons.
namespace reject_reason {
inline constexpr const char* not_base_certificate = "not-base-certificate";
inline constexpr const char* contains_apply = "contains-apply";
inline constexpr const char* contains_while = "contains-while";
inline constexpr const char* unknown_loop_path = "unknown-loop-path";
inline constexpr const char* duplicate_clause = "duplicate-clause";
inline constexpr const char* uncovered_loop = "uncovered-loop";
inline constexpr const char* guard_shape = "guard-shape";
inline constexpr const char* decrement_shape = "decrement-shape";
inline constexpr const char* extra_assignment = "extra-assignment";
inline constexpr const char* wrong_certificate_form = "wrong-certificate-form";
inline constexpr const char* level_not_below = "level-not-below";
inline constexpr const char* diagonal_not_tower = "diagonal-not-tower";
inline constexpr const char* diagonal_mismatch = "diagonal-mismatch";
inline constexpr const char* bad_ordinal = "bad-ordinal";
inline constexpr const char* bad_descriptor = "bad-descriptor";
inline constexpr const char* program_mismatch = "program-mismatch";
}  // namespace reject_reason

struct CheckResult {
    bool accepted = false;
    std::string reason;          // reject only
    std::optional<Path> locus;   // reject only, when a loop is implicated

    static CheckResult accept() { return {true, {}, {}}; }
    static CheckResult reject(std::string reason, std::optional<Path> locus = {}) {
        return {false, std::move(reason), std::move(locus)};
    }

    explicit operator bool() const { return accepted; }
};

// ---------------------------------------------------------------------------
// Path resolution

namespace detail {

inline void collect_while_paths(const std::vector<StmtPtr>& stmts, Path& prefix,
                                std::vector<Path>& out) {
    for (std::size_t i = 0; i < stmts.size(); ++i) {
        const Stmt& s = *stmts[i];
        if (s.kind == StmtKind::While) {
            prefix.push_back(i);
            out.push_back(prefix);
            collect_while_paths(s.body, prefix, out);
            prefix.pop_back();
        } else if (s.kind == StmtKind::If) {
            prefix.push_back(i);
            prefix.push_back(0);
            collect_while_paths(s.body, prefix, out);
            prefix.back() = 1;
            collect_while_paths(s.orelse, prefix, out);
            prefix.pop_back();
            prefix.pop_back();
        }
    }
}

}  // namespace detail

inline std::vector<Path> while_paths(const Program& p) {
    std::vector<Path> out;
    Path prefix;
    detail::collect_while_paths(p.body, prefix, out);
    return out;
}

// Resolves a path to its while statement, or nullptr when the path does not
// lead to one.
inline const Stmt* resolve_while(const Program& p, const Path& path) {
    const std::vector<StmtPtr>* stmts = &p.body;
    std::size_t i = 0;
    while (i < path.size()) {
        if (path[i] >= stmts->size()) return nullptr;
        const Stmt& s = *(*stmts)[path[i]];
        ++i;
        if (i == path.size()) return s.kind == StmtKind::While ? &s : nullptr;
        if (s.kind == StmtKind::While) {
            stmts = &s.body;
        } else if (s.kind == StmtKind::If) {
            if (path[i] > 1) return nullptr;
            stmts = path[i] == 0 ? &s.body : &s.orelse;
            ++i;
        } else {
            return nullptr;
        }
    }
    return nullptr;
}

// ---------------------------------------------------------------------------
// Base checking

namespace detail {

inline bool is_countdown_guard(const Expr& guard, const std::string& var) {
    return guard.kind == ExprKind::Lt && guard.args[0]->kind == ExprKind::NatLit &&
           guard.args[0]->nat == 0 && guard.args[1]->kind == ExprKind::Var &&
           guard.args[1]->text == var;
}

inline bool is_decrement(const Stmt& s, const std::string& var, std::uint64_t dec) {
    return s.kind == StmtKind::Set && s.name == var && s.expr->kind == ExprKind::Sub &&
           s.expr->args[0]->kind == ExprKind::Var && s.expr->args[0]->text == var &&
           s.expr->args[1]->kind == ExprKind::NatLit && s.expr->args[1]->nat == dec;
}

inline std::size_t count_sets_to(const std::vector<StmtPtr>& stmts, const std::string& var) {
    std::size_t n = 0;
    for (const StmtPtr& s : stmts) {
        if (s->kind == StmtKind::Set && s->name == var) ++n;
        n += count_sets_to(s->body, var);
        n += count_sets_to(s->orelse, var);
    }
    return n;
}

inline CheckResult check_ranking_clause(const Program& program, const RankingClause& clause) {
    const Stmt* loop = resolve_while(program, clause.loop_path);
    if (!loop) return CheckResult::reject(reject_reason::unknown_loop_path, clause.loop_path);
    if (!is_countdown_guard(*loop->expr, clause.var))
        return CheckResult::reject(reject_reason::guard_shape, clause.loop_path);
    if (clause.dec == 0 || loop->body.empty() ||
        !is_decrement(*loop->body.back(), clause.var, clause.dec))
        return CheckResult::reject(reject_reason::decrement_shape, clause.loop_path);
    if (count_sets_to(loop->body, clause.var) != 1)
        return CheckResult::reject(reject_reason::extra_assignment, clause.loop_path);
    return CheckResult::accept();
}

}  // namespace detail

inline CheckResult check_base_certificate(const Certificate& cert, const Program& program) {
    if (cert.kind == CertKind::LoopFree) {
        if (contains_apply(program)) return CheckResult::reject(reject_reason::contains_apply);
        if (contains_while(program)) return CheckResult::reject(reject_reason::contains_while);
        return CheckResult::accept();
    }
    if (cert.kind != CertKind::Ranking)
        return CheckResult::reject(reject_reason::not_base_certificate);
    if (contains_apply(program)) return CheckResult::reject(reject_reason::contains_apply);
    for (std::size_t i = 0; i < cert.clauses.size(); ++i)
        for (std::size_t j = i + 1; j < cert.clauses.size(); ++j)
            if (cert.clauses[i].loop_path == cert.clauses[j].loop_path)
                return CheckResult::reject(reject_reason::duplicate_clause,
                                           cert.clauses[i].loop_path);
    for (const RankingClause& clause : cert.clauses) {
        CheckResult r = detail::check_ranking_clause(program, clause);
        if (!r) return r;
    }
    for (const Path& loop : while_paths(program)) {
        bool covered = false;
        for (const RankingClause& clause : cert.clauses)
            if (clause.loop_path == loop) covered = true;
        if (!covered) return CheckResult::reject(reject_reason::uncovered_loop, loop);
    }
    return CheckResult::accept();
}

// Authoring aid: LoopFree when it checks, otherwise a ranking certificate
// scanned off the loop shapes. Whatever it returns passes
// check_base_certificate.
inline std::optional<Certificate> infer_certificate(const Program& program) {
    if (contains_apply(program)) return std::nullopt;
    if (!contains_while(program)) return Certificate::loop_free();
    std::vector<RankingClause> clauses;
    for (const Path& path : while_paths(program)) {
        const Stmt* loop = resolve_while(program, path);
        const Expr& guard = *loop->expr;
        if (guard.kind != ExprKind::Lt || guard.args[0]->kind != ExprKind::NatLit ||
            guard.args[0]->nat != 0 || guard.args[1]->kind != ExprKind::Var)
            return std::nullopt;
        std::string var = guard.args[1]->text;
        if (loop->body.empty()) return std::nullopt;
        const Stmt& last = *loop->body.back();
        if (last.kind != StmtKind::Set || last.name != var || last.expr->kind != ExprKind::Sub ||
            last.expr->args[0]->kind != ExprKind::Var || last.expr->args[0]->text != var ||
            last.expr->args[1]->kind != ExprKind::NatLit || last.expr->args[1]->nat == 0)
            return std::nullopt;
        if (detail::count_sets_to(loop->body, var) != 1) return std::nullopt;
        clauses.push_back({path, std::move(var), last.expr->args[1]->nat});
    }
    return Certificate::ranking(std::move(clauses));
}

// ---------------------------------------------------------------------------
// Text form
//
//   (loopfree) | (ranking ((path N*) (var NAME) (dec K))+) | (diagonal "VDESC")
//   | (reflection "ORD" CERT) | (left CERT) | (right CERT) | (singleton)

inline std::string print_certificate(const Certificate& cert) {
    switch (cert.kind) {
        case CertKind::LoopFree: return "(loopfree)";
        case CertKind::Ranking: {
            std::string out = "(ranking";
            for (const RankingClause& c : cert.clauses) {
                out += " ((path";
                for (std::size_t i : c.loop_path) out += " " + std::to_string(i);
                out += ") (var " + c.var + ") (dec " + std::to_string(c.dec) + "))";
            }
            out += ")";
            return out;
        }
        case CertKind::Diagonal: return "(diagonal " + quote_string(cert.text) + ")";
        case CertKind::Reflection:
            return "(reflection " + quote_string(cert.text) + " " +
                   print_certificate(*cert.inner) + ")";
        case CertKind::Left: return "(left " + print_certificate(*cert.inner) + ")";
        case CertKind::Right: return "(right " + print_certificate(*cert.inner) + ")";
        case CertKind::Singleton: return "(singleton)";
    }
    return {};
}

inline bool operator==(const Certificate& a, const Certificate& b) {
    return print_certificate(a) == print_certificate(b);
}

namespace detail {

inline Certificate parse_certificate_datum(const Datum& d) {
    if (d.kind != Datum::Kind::List || d.items.empty() || d.items[0].kind != Datum::Kind::Symbol)
        throw ParseError("expected certificate form", d.line, d.column);
    const std::string& head = d.items[0].text;
    if (head == "loopfree") {
        expect_arity(d, 1, "loopfree");
        return Certificate::loop_free();
    }
    if (head == "singleton") {
        expect_arity(d, 1, "singleton");
        return Certificate::singleton();
    }
    if (head == "diagonal") {
        expect_arity(d, 2, "diagonal");
        expect_kind(d.items[1], Datum::Kind::Str, "descriptor text");
        return Certificate::diagonal(d.items[1].text);
    }
    if (head == "reflection") {
        expect_arity(d, 3, "reflection");
        expect_kind(d.items[1], Datum::Kind::Str, "ordinal text");
        return Certificate::reflection(d.items[1].text, parse_certificate_datum(d.items[2]));
    }
    if (head == "left") {
        expect_arity(d, 2, "left");
        return Certificate::left(parse_certificate_datum(d.items[1]));
    }
    if (head == "right") {
        expect_arity(d, 2, "right");
        return Certificate::right(parse_certificate_datum(d.items[1]));
    }
    if (head == "ranking") {
        if (d.items.size() < 2)
            throw ParseError("ranking expects at least one clause", d.line, d.column);
        std::vector<RankingClause> clauses;
        for (std::size_t i = 1; i < d.items.size(); ++i) {
            const Datum& cl = d.items[i];
            if (cl.kind != Datum::Kind::List || cl.items.size() != 3)
                throw ParseError("expected ((path ...) (var ...) (dec ...))", cl.line, cl.column);
            const Datum& path = cl.items[0];
            if (path.kind != Datum::Kind::List || path.items.empty() ||
                !path.items[0].is_symbol("path"))
                throw ParseError("expected (path ...)", path.line, path.column);
            RankingClause clause;
            for (std::size_t j = 1; j < path.items.size(); ++j) {
                expect_kind(path.items[j], Datum::Kind::Nat, "path index");
                clause.loop_path.push_back(static_cast<std::size_t>(path.items[j].nat));
            }
            const Datum& var = cl.items[1];
            if (var.kind != Datum::Kind::List || var.items.size() != 2 ||
                !var.items[0].is_symbol("var"))
                throw ParseError("expected (var NAME)", var.line, var.column);
            clause.var = expect_name(var.items[1]);
            const Datum& dec = cl.items[2];
            if (dec.kind != Datum::Kind::List || dec.items.size() != 2 ||
                !dec.items[0].is_symbol("dec"))
                throw ParseError("expected (dec K)", dec.line, dec.column);
            expect_kind(dec.items[1], Datum::Kind::Nat, "decrement");
            if (dec.items[1].nat == 0)
                throw ParseError("decrement must be positive", dec.line, dec.column);
            clause.dec = dec.items[1].nat;
            clauses.push_back(std::move(clause));
        }
        return Certificate::ranking(std::move(clauses));
    }
    throw ParseError("unknown certificate head '" + head + "'", d.line, d.column);
}

}  // namespace detail

inline Certificate parse_certificate(std::string_view text) {
    return detail::parse_certificate_datum(read_sexpr(text));
}

}  // namespace omega
