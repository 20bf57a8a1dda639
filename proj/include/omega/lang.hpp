#pragma once

// The object language: a tiny while-language over naturals, booleans,
// strings and pairs, written as s-expressions. Programs take exactly one
// input value and end in a single top-level return. Evaluation is
// deterministic and fuel-bounded; `apply` runs another program (given as
// text) under the same shared fuel budget, and `verify` consults a
// host-supplied proof-checking oracle.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "omega/sexpr.hpp"

namespace omega {

// ---------------------------------------------------------------------------
// Values

class Value {
  public:
    enum class Kind { Nat, Bool, Str, Pair };

    static Value nat(std::uint64_t n) {
        Value v;
        v.kind_ = Kind::Nat;
        v.nat_ = n;
        return v;
    }
    static Value boolean(bool b) {
        Value v;
        v.kind_ = Kind::Bool;
        v.bool_ = b;
        return v;
    }
    static Value str(std::string s) {
        Value v;
        v.kind_ = Kind::Str;
        v.str_ = std::move(s);
        return v;
    }
    static Value pair(Value first, Value second) {
        Value v;
        v.kind_ = Kind::Pair;
        v.first_ = std::make_shared<const Value>(std::move(first));
        v.second_ = std::make_shared<const Value>(std::move(second));
        return v;
    }

    Kind kind() const { return kind_; }
    bool is_nat() const { return kind_ == Kind::Nat; }
    bool is_bool() const { return kind_ == Kind::Bool; }
    bool is_str() const { return kind_ == Kind::Str; }
    bool is_pair() const { return kind_ == Kind::Pair; }

    std::uint64_t as_nat() const { return nat_; }
    bool as_bool() const { return bool_; }
    const std::string& as_str() const { return str_; }
    const Value& first() const { return *first_; }
    const Value& second() const { return *second_; }

    // Truthiness used by `tobool`: total over all values.
    bool truthy() const {
        switch (kind_) {
            case Kind::Nat: return nat_ != 0;
            case Kind::Bool: return bool_;
            case Kind::Str: return !str_.empty();
            case Kind::Pair: return true;
        }
        return false;
    }

    friend bool operator==(const Value& a, const Value& b) {
        if (a.kind_ != b.kind_) return false;
        switch (a.kind_) {
            case Kind::Nat: return a.nat_ == b.nat_;
            case Kind::Bool: return a.bool_ == b.bool_;
            case Kind::Str: return a.str_ == b.str_;
            case Kind::Pair: return *a.first_ == *b.first_ && *a.second_ == *b.second_;
        }
        return false;
    }
    friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }

  private:
    Kind kind_ = Kind::Nat;
    std::uint64_t nat_ = 0;
    bool bool_ = false;
    std::string str_;
    std::shared_ptr<const Value> first_, second_;
};

// ---------------------------------------------------------------------------
// Abstract syntax

enum class ExprKind {
    NatLit,
    BoolLit,
    StrLit,
    Var,
    Add,
    Sub,
    Mul,
    Lt,
    Eq,
    And,
    Or,
    Not,
    ToBool,
    Pair,
    Fst,
    Snd,
    IsPair,
    Verify,
    Apply,
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    ExprKind kind;
    std::uint64_t nat = 0;       // NatLit
    bool truth = false;          // BoolLit
    std::string text;            // StrLit contents or Var name
    std::vector<ExprPtr> args;   // children, arity fixed per kind
};

enum class StmtKind { Set, While, If };

struct Stmt;
using StmtPtr = std::shared_ptr<const Stmt>;

struct Stmt {
    StmtKind kind;
    std::string name;             // Set target
    ExprPtr expr;                 // Set value / While guard / If condition
    std::vector<StmtPtr> body;    // While body / If then-branch
    std::vector<StmtPtr> orelse;  // If else-branch
};

struct Program {
    std::string param;
    std::vector<StmtPtr> body;  // statements before the final return
    ExprPtr result;             // return expression
};

inline ExprPtr make_expr(Expr e) { return std::make_shared<const Expr>(std::move(e)); }
inline StmtPtr make_stmt(Stmt s) { return std::make_shared<const Stmt>(std::move(s)); }

namespace ast {

inline ExprPtr nat(std::uint64_t n) {
    Expr e;
    e.kind = ExprKind::NatLit;
    e.nat = n;
    return make_expr(std::move(e));
}
inline ExprPtr boolean(bool b) {
    Expr e;
    e.kind = ExprKind::BoolLit;
    e.truth = b;
    return make_expr(std::move(e));
}
inline ExprPtr str(std::string s) {
    Expr e;
    e.kind = ExprKind::StrLit;
    e.text = std::move(s);
    return make_expr(std::move(e));
}
inline ExprPtr var(std::string name) {
    Expr e;
    e.kind = ExprKind::Var;
    e.text = std::move(name);
    return make_expr(std::move(e));
}
inline ExprPtr node(ExprKind kind, std::vector<ExprPtr> args) {
    Expr e;
    e.kind = kind;
    e.args = std::move(args);
    return make_expr(std::move(e));
}
inline StmtPtr set(std::string name, ExprPtr value) {
    Stmt s;
    s.kind = StmtKind::Set;
    s.name = std::move(name);
    s.expr = std::move(value);
    return make_stmt(std::move(s));
}
inline StmtPtr while_loop(ExprPtr guard, std::vector<StmtPtr> body) {
    Stmt s;
    s.kind = StmtKind::While;
    s.expr = std::move(guard);
    s.body = std::move(body);
    return make_stmt(std::move(s));
}
inline StmtPtr if_else(ExprPtr cond, std::vector<StmtPtr> then_body, std::vector<StmtPtr> else_body) {
    Stmt s;
    s.kind = StmtKind::If;
    s.expr = std::move(cond);
    s.body = std::move(then_body);
    s.orelse = std::move(else_body);
    return make_stmt(std::move(s));
}

}  // namespace ast

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

struct ExprSpec {
    ExprKind kind;
    std::size_t arity;
};

inline const std::unordered_map<std::string_view, ExprSpec>& expr_table() {
    static const std::unordered_map<std::string_view, ExprSpec> table = {
        {"add", {ExprKind::Add, 2}},     {"sub", {ExprKind::Sub, 2}},
        {"mul", {ExprKind::Mul, 2}},     {"lt", {ExprKind::Lt, 2}},
        {"eq", {ExprKind::Eq, 2}},       {"and", {ExprKind::And, 2}},
        {"or", {ExprKind::Or, 2}},       {"not", {ExprKind::Not, 1}},
        {"tobool", {ExprKind::ToBool, 1}}, {"pair", {ExprKind::Pair, 2}},
        {"fst", {ExprKind::Fst, 1}},     {"snd", {ExprKind::Snd, 1}},
        {"ispair", {ExprKind::IsPair, 1}}, {"verify", {ExprKind::Verify, 3}},
        {"apply", {ExprKind::Apply, 2}},
    };
    return table;
}

inline ExprPtr parse_expr(const Datum& d);

inline ExprPtr parse_expr(const Datum& d) {
    if (d.kind != Datum::Kind::List || d.items.empty() || d.items[0].kind != Datum::Kind::Symbol)
        throw ParseError("expected expression form", d.line, d.column);
    const std::string& head = d.items[0].text;
    if (head == "nat") {
        expect_arity(d, 2, "nat");
        expect_kind(d.items[1], Datum::Kind::Nat, "natural literal");
        return ast::nat(d.items[1].nat);
    }
    if (head == "bool") {
        expect_arity(d, 2, "bool");
        if (d.items[1].is_symbol("true")) return ast::boolean(true);
        if (d.items[1].is_symbol("false")) return ast::boolean(false);
        throw ParseError("bool expects true or false", d.line, d.column);
    }
    if (head == "str") {
        expect_arity(d, 2, "str");
        expect_kind(d.items[1], Datum::Kind::Str, "string literal");
        return ast::str(d.items[1].text);
    }
    if (head == "var") {
        expect_arity(d, 2, "var");
        return ast::var(expect_name(d.items[1]));
    }
    auto it = expr_table().find(head);
    if (it == expr_table().end())
        throw ParseError("unknown expression head '" + head + "'", d.line, d.column);
    expect_arity(d, it->second.arity + 1, head.c_str());
    std::vector<ExprPtr> args;
    args.reserve(it->second.arity);
    for (std::size_t i = 1; i < d.items.size(); ++i) args.push_back(parse_expr(d.items[i]));
    return ast::node(it->second.kind, std::move(args));
}

inline std::vector<StmtPtr> parse_stmt_seq(const Datum& d);

inline StmtPtr parse_stmt(const Datum& d) {
    if (d.kind != Datum::Kind::List || d.items.empty() || d.items[0].kind != Datum::Kind::Symbol)
        throw ParseError("expected statement form", d.line, d.column);
    const std::string& head = d.items[0].text;
    if (head == "set") {
        expect_arity(d, 3, "set");
        return ast::set(expect_name(d.items[1]), parse_expr(d.items[2]));
    }
    if (head == "while") {
        expect_arity(d, 3, "while");
        return ast::while_loop(parse_expr(d.items[1]), parse_stmt_seq(d.items[2]));
    }
    if (head == "if") {
        expect_arity(d, 4, "if");
        return ast::if_else(parse_expr(d.items[1]), parse_stmt_seq(d.items[2]),
                            parse_stmt_seq(d.items[3]));
    }
    if (head == "return")
        throw ParseError("return is only allowed as the last element of the top-level block",
                         d.line, d.column);
    throw ParseError("unknown statement head '" + head + "'", d.line, d.column);
}

// (body Stmt*)
inline std::vector<StmtPtr> parse_stmt_seq(const Datum& d) {
    if (d.kind != Datum::Kind::List || d.items.empty() || !d.items[0].is_symbol("body"))
        throw ParseError("expected (body ...)", d.line, d.column);
    std::vector<StmtPtr> out;
    for (std::size_t i = 1; i < d.items.size(); ++i) out.push_back(parse_stmt(d.items[i]));
    return out;
}

}  // namespace detail

inline Program parse_program(std::string_view text) {
    Datum d = read_sexpr(text);
    if (d.kind != Datum::Kind::List || d.items.size() != 3 || !d.items[0].is_symbol("fun"))
        throw ParseError("expected (fun (x) (block ...))", d.line, d.column);
    const Datum& params = d.items[1];
    if (params.kind != Datum::Kind::List || params.items.size() != 1)
        throw ParseError("expected exactly one parameter", params.line, params.column);
    Program p;
    p.param = expect_name(params.items[0]);
    const Datum& block = d.items[2];
    if (block.kind != Datum::Kind::List || block.items.empty() || !block.items[0].is_symbol("block"))
        throw ParseError("expected (block ...)", block.line, block.column);
    if (block.items.size() < 2)
        throw ParseError("block must end with a return", block.line, block.column);
    for (std::size_t i = 1; i + 1 < block.items.size(); ++i)
        p.body.push_back(detail::parse_stmt(block.items[i]));
    const Datum& ret = block.items.back();
    if (ret.kind != Datum::Kind::List || ret.items.size() != 2 || !ret.items[0].is_symbol("return"))
        throw ParseError("block must end with (return Expr)", ret.line, ret.column);
    p.result = detail::parse_expr(ret.items[1]);
    return p;
}

inline Value parse_value(std::string_view text);

namespace detail {

inline Value parse_value_datum(const Datum& d) {
    if (d.kind != Datum::Kind::List || d.items.empty() || d.items[0].kind != Datum::Kind::Symbol)
        throw ParseError("expected value literal", d.line, d.column);
    const std::string& head = d.items[0].text;
    if (head == "nat") {
        expect_arity(d, 2, "nat");
        expect_kind(d.items[1], Datum::Kind::Nat, "natural literal");
        return Value::nat(d.items[1].nat);
    }
    if (head == "bool") {
        expect_arity(d, 2, "bool");
        if (d.items[1].is_symbol("true")) return Value::boolean(true);
        if (d.items[1].is_symbol("false")) return Value::boolean(false);
        throw ParseError("bool expects true or false", d.line, d.column);
    }
    if (head == "str") {
        expect_arity(d, 2, "str");
        expect_kind(d.items[1], Datum::Kind::Str, "string literal");
        return Value::str(d.items[1].text);
    }
    if (head == "pair") {
        expect_arity(d, 3, "pair");
        return Value::pair(parse_value_datum(d.items[1]), parse_value_datum(d.items[2]));
    }
    throw ParseError("unknown value head '" + head + "'", d.line, d.column);
}

}  // namespace detail

inline Value parse_value(std::string_view text) {
    return detail::parse_value_datum(read_sexpr(text));
}

// ---------------------------------------------------------------------------
// Canonical printing: single spaces, lowercase keywords, no extra whitespace.
// Programs are equal iff their canonical texts are byte-equal.

namespace detail {

inline void print_expr(const Expr& e, std::string& out);

inline void print_expr(const Expr& e, std::string& out) {
    switch (e.kind) {
        case ExprKind::NatLit:
            out += "(nat " + std::to_string(e.nat) + ")";
            return;
        case ExprKind::BoolLit:
            out += e.truth ? "(bool true)" : "(bool false)";
            return;
        case ExprKind::StrLit:
            out += "(str " + quote_string(e.text) + ")";
            return;
        case ExprKind::Var:
            out += "(var " + e.text + ")";
            return;
        default:
            break;
    }
    static const char* names[] = {"",   "",   "",    "",      "add",  "sub", "mul",
                                  "lt", "eq", "and", "or",    "not",  "tobool", "pair",
                                  "fst", "snd", "ispair", "verify", "apply"};
    out += '(';
    out += names[static_cast<int>(e.kind)];
    for (const ExprPtr& a : e.args) {
        out += ' ';
        print_expr(*a, out);
    }
    out += ')';
}

inline void print_stmt(const Stmt& s, std::string& out);

inline void print_stmt_seq(const std::vector<StmtPtr>& body, std::string& out) {
    out += "(body";
    for (const StmtPtr& s : body) {
        out += ' ';
        print_stmt(*s, out);
    }
    out += ')';
}

inline void print_stmt(const Stmt& s, std::string& out) {
    switch (s.kind) {
        case StmtKind::Set:
            out += "(set " + s.name + ' ';
            print_expr(*s.expr, out);
            out += ')';
            return;
        case StmtKind::While:
            out += "(while ";
            print_expr(*s.expr, out);
            out += ' ';
            print_stmt_seq(s.body, out);
            out += ')';
            return;
        case StmtKind::If:
            out += "(if ";
            print_expr(*s.expr, out);
            out += ' ';
            print_stmt_seq(s.body, out);
            out += ' ';
            print_stmt_seq(s.orelse, out);
            out += ')';
            return;
    }
}

}  // namespace detail

inline std::string print_program(const Program& p) {
    std::string out = "(fun (" + p.param + ") (block";
    for (const StmtPtr& s : p.body) {
        out += ' ';
        detail::print_stmt(*s, out);
    }
    out += " (return ";
    detail::print_expr(*p.result, out);
    out += ")))";
    return out;
}

inline std::string print_value(const Value& v) {
    switch (v.kind()) {
        case Value::Kind::Nat: return "(nat " + std::to_string(v.as_nat()) + ")";
        case Value::Kind::Bool: return v.as_bool() ? "(bool true)" : "(bool false)";
        case Value::Kind::Str: return "(str " + quote_string(v.as_str()) + ")";
        case Value::Kind::Pair:
            return "(pair " + print_value(v.first()) + " " + print_value(v.second()) + ")";
    }
    return {};
}

inline bool operator==(const Program& a, const Program& b) {
    return print_program(a) == print_program(b);
}

// ---------------------------------------------------------------------------
// AST utilities

namespace detail {

inline bool expr_contains(const Expr& e, ExprKind k) {
    if (e.kind == k) return true;
    for (const ExprPtr& a : e.args)
        if (expr_contains(*a, k)) return true;
    return false;
}

inline bool stmts_contain_expr(const std::vector<StmtPtr>& body, ExprKind k);

inline bool stmt_contains_expr(const Stmt& s, ExprKind k) {
    if (expr_contains(*s.expr, k)) return true;
    return stmts_contain_expr(s.body, k) || stmts_contain_expr(s.orelse, k);
}

inline bool stmts_contain_expr(const std::vector<StmtPtr>& body, ExprKind k) {
    for (const StmtPtr& s : body)
        if (stmt_contains_expr(*s, k)) return true;
    return false;
}

inline bool stmts_contain_while(const std::vector<StmtPtr>& body) {
    for (const StmtPtr& s : body) {
        if (s->kind == StmtKind::While) return true;
        if (!s->body.empty() && stmts_contain_while(s->body)) return true;
        if (!s->orelse.empty() && stmts_contain_while(s->orelse)) return true;
    }
    return false;
}

inline std::size_t expr_nodes(const Expr& e) {
    std::size_t n = 1;
    for (const ExprPtr& a : e.args) n += expr_nodes(*a);
    return n;
}

inline std::size_t stmt_nodes(const std::vector<StmtPtr>& body) {
    std::size_t n = 0;
    for (const StmtPtr& s : body) {
        n += 1 + expr_nodes(*s->expr);
        n += stmt_nodes(s->body);
        n += stmt_nodes(s->orelse);
    }
    return n;
}

}  // namespace detail

inline bool contains_apply(const Program& p) {
    if (detail::stmts_contain_expr(p.body, ExprKind::Apply)) return true;
    return detail::expr_contains(*p.result, ExprKind::Apply);
}

inline bool contains_while(const Program& p) { return detail::stmts_contain_while(p.body); }

// Total count of Stmt and Expr nodes, the return element counting as one.
inline std::size_t ast_node_count(const Program& p) {
    return detail::stmt_nodes(p.body) + 1 + detail::expr_nodes(*p.result);
}

// ---------------------------------------------------------------------------
// Evaluation

struct RunResult {
    enum class Kind { Halt, RuntimeError, OutOfFuel };

    Kind kind = Kind::OutOfFuel;
    Value value;         // Halt only
    std::string reason;  // RuntimeError only

    static RunResult halt(Value v) { return {Kind::Halt, std::move(v), {}}; }
    static RunResult error(std::string reason) {
        return {Kind::RuntimeError, Value::nat(0), std::move(reason)};
    }
    static RunResult out_of_fuel() { return {Kind::OutOfFuel, Value::nat(0), {}}; }

    bool halted() const { return kind != Kind::OutOfFuel; }  // errors count as halting
    bool is_halt() const { return kind == Kind::Halt; }
    bool is_error() const { return kind == Kind::RuntimeError; }
};

// Host-supplied total proof-checking oracle: (vdesc text, proof text,
// program text) -> accept. Charged as a single fuel unit at the verify node.
using VerifyOracle =
    std::function<bool(const std::string&, const std::string&, const std::string&)>;

namespace detail {

struct OutOfFuelSignal {};
struct RuntimeSignal {
    std::string reason;
};

class Interpreter {
  public:
    Interpreter(std::uint64_t fuel, const VerifyOracle& oracle) : fuel_(fuel), oracle_(oracle) {}

    Value run_program(const Program& p, const Value& input) {
        Env env;
        env.emplace(p.param, input);
        for (const StmtPtr& s : p.body) exec(*s, env);
        charge();  // the return element
        return eval(*p.result, env);
    }

  private:
    using Env = std::unordered_map<std::string, Value>;

    void charge() {
        if (fuel_ == 0) throw OutOfFuelSignal{};
        --fuel_;
    }

    [[noreturn]] static void fail(std::string reason) { throw RuntimeSignal{std::move(reason)}; }

    void exec(const Stmt& s, Env& env) {
        switch (s.kind) {
            case StmtKind::Set: {
                charge();
                env[s.name] = eval(*s.expr, env);
                return;
            }
            case StmtKind::While: {
                for (;;) {
                    charge();  // one unit per guard test
                    if (!eval_bool(*s.expr, env, "while guard")) return;
                    for (const StmtPtr& b : s.body) exec(*b, env);
                }
            }
            case StmtKind::If: {
                charge();
                const auto& branch = eval_bool(*s.expr, env, "if condition") ? s.body : s.orelse;
                for (const StmtPtr& b : branch) exec(*b, env);
                return;
            }
        }
    }

    bool eval_bool(const Expr& e, Env& env, const char* what) {
        Value v = eval(e, env);
        if (!v.is_bool()) fail(std::string("type-mismatch: ") + what + " expects a boolean");
        return v.as_bool();
    }

    std::uint64_t eval_nat(const Expr& e, Env& env, const char* op) {
        Value v = eval(e, env);
        if (!v.is_nat()) fail(std::string("type-mismatch: ") + op + " expects naturals");
        return v.as_nat();
    }

    Value eval(const Expr& e, Env& env) {
        charge();
        switch (e.kind) {
            case ExprKind::NatLit: return Value::nat(e.nat);
            case ExprKind::BoolLit: return Value::boolean(e.truth);
            case ExprKind::StrLit: return Value::str(e.text);
            case ExprKind::Var: {
                auto it = env.find(e.text);
                if (it == env.end()) fail("unbound-variable: " + e.text);
                return it->second;
            }
            case ExprKind::Add:
                return Value::nat(eval_nat(*e.args[0], env, "add") + eval_nat(*e.args[1], env, "add"));
            case ExprKind::Sub: {
                std::uint64_t a = eval_nat(*e.args[0], env, "sub");
                std::uint64_t b = eval_nat(*e.args[1], env, "sub");
                return Value::nat(a >= b ? a - b : 0);  // monus
            }
            case ExprKind::Mul:
                return Value::nat(eval_nat(*e.args[0], env, "mul") * eval_nat(*e.args[1], env, "mul"));
            case ExprKind::Lt: {
                std::uint64_t a = eval_nat(*e.args[0], env, "lt");
                std::uint64_t b = eval_nat(*e.args[1], env, "lt");
                return Value::boolean(a < b);
            }
            case ExprKind::Eq:
                return Value::boolean(eval(*e.args[0], env) == eval(*e.args[1], env));
            case ExprKind::And: {
                if (!eval_bool(*e.args[0], env, "and")) return Value::boolean(false);
                return Value::boolean(eval_bool(*e.args[1], env, "and"));
            }
            case ExprKind::Or: {
                if (eval_bool(*e.args[0], env, "or")) return Value::boolean(true);
                return Value::boolean(eval_bool(*e.args[1], env, "or"));
            }
            case ExprKind::Not: return Value::boolean(!eval_bool(*e.args[0], env, "not"));
            case ExprKind::ToBool: return Value::boolean(eval(*e.args[0], env).truthy());
            case ExprKind::Pair: {
                Value a = eval(*e.args[0], env);
                Value b = eval(*e.args[1], env);
                return Value::pair(std::move(a), std::move(b));
            }
            case ExprKind::Fst: {
                Value v = eval(*e.args[0], env);
                if (!v.is_pair()) fail("type-mismatch: fst expects a pair");
                return v.first();
            }
            case ExprKind::Snd: {
                Value v = eval(*e.args[0], env);
                if (!v.is_pair()) fail("type-mismatch: snd expects a pair");
                return v.second();
            }
            case ExprKind::IsPair: return Value::boolean(eval(*e.args[0], env).is_pair());
            case ExprKind::Verify: {
                Value vd = eval(*e.args[0], env);
                Value pf = eval(*e.args[1], env);
                Value pr = eval(*e.args[2], env);
                if (!vd.is_str() || !pf.is_str() || !pr.is_str())
                    fail("type-mismatch: verify expects strings");
                return Value::boolean(oracle_ && oracle_(vd.as_str(), pf.as_str(), pr.as_str()));
            }
            case ExprKind::Apply: {
                Value pv = eval(*e.args[0], env);
                Value iv = eval(*e.args[1], env);
                if (!pv.is_str()) fail("type-mismatch: apply expects program text");
                Program callee;
                try {
                    callee = parse_program(pv.as_str());
                } catch (const ParseError&) {
                    fail("apply-unparseable");
                }
                try {
                    return run_program(callee, iv);
                } catch (const RuntimeSignal&) {
                    // A failing callee is absorbed as false; the caller goes on.
                    return Value::boolean(false);
                }
            }
        }
        fail("type-mismatch: unknown expression");
    }

    std::uint64_t fuel_;
    const VerifyOracle& oracle_;
};

}  // namespace detail

inline RunResult run(const Program& p, const Value& input, std::uint64_t fuel,
                     const VerifyOracle& oracle = nullptr) {
    detail::Interpreter interp(fuel, oracle);
    try {
        return RunResult::halt(interp.run_program(p, input));
    } catch (const detail::OutOfFuelSignal&) {
        return RunResult::out_of_fuel();
    } catch (const detail::RuntimeSignal& s) {
        return RunResult::error(s.reason);
    }
}

}  // namespace omega
