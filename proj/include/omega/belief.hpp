#pragma once

// Belief bases: finite sets of statements closed under modus ponens plus
// two verifier rules. Trusting a verifier yields belief that its diagonal
// program terminates; believing a program terminates yields trust in the
// verifier accepting exactly that program. Iterating the construction
// produces an endless chain of strictly stronger trusted verifiers.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "omega/lang.hpp"
#include "omega/sexpr.hpp"
#include "omega/tower.hpp"

namespace omega {

struct Statement;
using StatementPtr = std::shared_ptr<const Statement>;

struct Statement {
    enum class Kind { Terminating, Trusted, Implies };

    Kind kind = Kind::Terminating;
    std::string text;       // Terminating: program text; Trusted: descriptor text
    StatementPtr lhs, rhs;  // Implies

    static Statement terminating(std::string program_text) {
        Statement s;
        s.kind = Kind::Terminating;
        s.text = std::move(program_text);
        return s;
    }
    static Statement trusted(std::string descriptor_text) {
        Statement s;
        s.kind = Kind::Trusted;
        s.text = std::move(descriptor_text);
        return s;
    }
    static Statement implies(Statement antecedent, Statement consequent) {
        Statement s;
        s.kind = Kind::Implies;
        s.lhs = std::make_shared<const Statement>(std::move(antecedent));
        s.rhs = std::make_shared<const Statement>(std::move(consequent));
        return s;
    }
};

inline std::string print_statement(const Statement& s) {
    switch (s.kind) {
        case Statement::Kind::Terminating: return "(terminating " + quote_string(s.text) + ")";
        case Statement::Kind::Trusted: return "(trusted " + quote_string(s.text) + ")";
        case Statement::Kind::Implies:
            return "(implies " + print_statement(*s.lhs) + " " + print_statement(*s.rhs) + ")";
    }
    return {};
}

inline bool operator==(const Statement& a, const Statement& b) {
    return print_statement(a) == print_statement(b);
}

namespace detail {

inline Statement parse_statement_datum(const Datum& d) {
    if (d.kind != Datum::Kind::List || d.items.empty() || d.items[0].kind != Datum::Kind::Symbol)
        throw ParseError("expected statement form", d.line, d.column);
    const std::string& head = d.items[0].text;
    if (head == "terminating") {
        expect_arity(d, 2, "terminating");
        expect_kind(d.items[1], Datum::Kind::Str, "program text");
        return Statement::terminating(d.items[1].text);
    }
    if (head == "trusted") {
        expect_arity(d, 2, "trusted");
        expect_kind(d.items[1], Datum::Kind::Str, "descriptor text");
        return Statement::trusted(d.items[1].text);
    }
    if (head == "implies") {
        expect_arity(d, 3, "implies");
        return Statement::implies(parse_statement_datum(d.items[1]),
                                  parse_statement_datum(d.items[2]));
    }
    throw ParseError("unknown statement head '" + head + "'", d.line, d.column);
}

}  // namespace detail

inline Statement parse_statement(std::string_view text) {
    return detail::parse_statement_datum(read_sexpr(text));
}

// ---------------------------------------------------------------------------
// Belief bases: set semantics, keyed by canonical statement text.

class BeliefBase {
  public:
    bool insert(const Statement& s) {
        return statements_.emplace(print_statement(s), s).second;
    }
    bool contains(const Statement& s) const { return contains_text(print_statement(s)); }
    bool contains_text(const std::string& key) const { return statements_.count(key) != 0; }

    std::size_t size() const { return statements_.size(); }
    bool empty() const { return statements_.empty(); }

    auto begin() const { return statements_.begin(); }
    auto end() const { return statements_.end(); }

    friend bool operator==(const BeliefBase& a, const BeliefBase& b) {
        if (a.statements_.size() != b.statements_.size()) return false;
        auto ita = a.statements_.begin();
        auto itb = b.statements_.begin();
        for (; ita != a.statements_.end(); ++ita, ++itb)
            if (ita->first != itb->first) return false;
        return true;
    }

  private:
    std::map<std::string, Statement> statements_;
};

// Newline-separated statements; '#' starts a comment line; blanks skipped.
inline BeliefBase parse_belief_base(std::string_view text) {
    BeliefBase base;
    std::size_t pos = 0;
    int line_no = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        ++line_no;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first != std::string_view::npos && line[first] != '#') {
            try {
                base.insert(parse_statement(line));
            } catch (const ParseError& e) {
                throw ParseError(e.reason, line_no, e.column);
            }
        }
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    return base;
}

inline std::string print_belief_base(const BeliefBase& base) {
    std::string out;
    for (const auto& [text, stmt] : base) {
        out += text;
        out += '\n';
    }
    return out;
}

// ---------------------------------------------------------------------------
// Closure

struct CloseResult {
    BeliefBase base;
    std::vector<std::string> warnings;  // statements skipped for malformed embedded text
};

// One round applies, to every statement currently present: modus ponens;
// the trusted-verifier rule (trusted V adds the implication to
// terminating(diag V) and its consequent); and the terminating-program rule
// (terminating P adds the implication to trusted(singleton P) and its
// consequent). Rounds repeat `depth` times or until nothing new appears.
inline CloseResult close(const BeliefBase& base, std::uint64_t depth) {
    CloseResult result;
    result.base = base;
    BeliefBase warned;
    for (std::uint64_t round = 0; round < depth; ++round) {
        std::vector<Statement> additions;
        for (const auto& [text, s] : result.base) {
            switch (s.kind) {
                case Statement::Kind::Implies: {
                    if (result.base.contains(*s.lhs)) additions.push_back(*s.rhs);
                    break;
                }
                case Statement::Kind::Trusted: {
                    VerifierDesc v;
                    try {
                        v = parse_descriptor(s.text);
                    } catch (const ParseError&) {
                        if (warned.insert(s))
                            result.warnings.push_back("unparseable descriptor in " + text);
                        break;
                    }
                    Statement conclusion = Statement::terminating(print_program(diag(v)));
                    additions.push_back(Statement::implies(s, conclusion));
                    additions.push_back(std::move(conclusion));
                    break;
                }
                case Statement::Kind::Terminating: {
                    Program p;
                    try {
                        p = parse_program(s.text);
                    } catch (const ParseError&) {
                        if (warned.insert(s))
                            result.warnings.push_back("unparseable program in " + text);
                        break;
                    }
                    VerifierDesc only = VerifierDesc::singleton(print_program(p));
                    Statement conclusion = Statement::trusted(print_descriptor(only));
                    additions.push_back(Statement::implies(s, conclusion));
                    additions.push_back(std::move(conclusion));
                    break;
                }
            }
        }
        bool changed = false;
        for (const Statement& a : additions) changed = result.base.insert(a) || changed;
        if (!changed) break;  // fixpoint
    }
    return result;
}

inline bool is_derivable(const BeliefBase& base, const Statement& s, std::uint64_t depth) {
    return close(base, depth).base.contains(s);
}

// ---------------------------------------------------------------------------
// The no-maximal-trusted-verifier step

enum class DerivationRule { Premise, Axiom2, Axiom3, MP };

inline const char* rule_name(DerivationRule r) {
    switch (r) {
        case DerivationRule::Premise: return "premise";
        case DerivationRule::Axiom2: return "axiom2";
        case DerivationRule::Axiom3: return "axiom3";
        case DerivationRule::MP: return "mp";
    }
    return "";
}

struct DerivationStep {
    Statement stmt;
    DerivationRule rule = DerivationRule::Premise;
    std::vector<std::size_t> premises;  // indices of earlier steps
};

using DerivationTrace = std::vector<DerivationStep>;

struct StrongerTrusted {
    VerifierDesc verifier;
    DerivationTrace trace;
};

// Requires trusted(v) derivable from the base within depth 3. Returns the
// union of v with the singleton verifier for diag(v), plus the derivation
// of the singleton's trustworthiness.
inline std::optional<StrongerTrusted> derive_stronger_trusted(const BeliefBase& base,
                                                              const VerifierDesc& v) {
    Statement premise = Statement::trusted(print_descriptor(v));
    if (!close(base, 3).base.contains(premise)) return std::nullopt;

    std::string diag_text = print_program(diag(v));
    VerifierDesc only = VerifierDesc::singleton(diag_text);
    Statement terminating = Statement::terminating(diag_text);
    Statement trusted_only = Statement::trusted(print_descriptor(only));

    DerivationTrace trace;
    trace.push_back({premise, DerivationRule::Premise, {}});
    trace.push_back({Statement::implies(premise, terminating), DerivationRule::Axiom2, {0}});
    trace.push_back({terminating, DerivationRule::MP, {0, 1}});
    trace.push_back({Statement::implies(terminating, trusted_only), DerivationRule::Axiom3, {2}});
    trace.push_back({trusted_only, DerivationRule::MP, {2, 3}});

    return StrongerTrusted{VerifierDesc::union_of(v, std::move(only)), std::move(trace)};
}

}  // namespace omega
