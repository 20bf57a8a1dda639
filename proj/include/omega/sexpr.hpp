#pragma once

// Small s-expression reader/writer used by every textual surface of the
// library: programs, values, certificates, verifier descriptors and belief
// statements all share this datum layer.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace omega {

struct ParseError : std::runtime_error {
    ParseError(std::string reason, int line, int column)
        : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                             std::to_string(column) + ": " + reason),
          reason(std::move(reason)),
          line(line),
          column(column) {}

    std::string reason;
    int line;
    int column;
};

struct Datum {
    enum class Kind { List, Symbol, Nat, Str };

    Kind kind = Kind::List;
    std::vector<Datum> items;  // List
    std::string text;          // Symbol spelling or Str contents
    std::uint64_t nat = 0;     // Nat
    int line = 0;
    int column = 0;

    bool is_list() const { return kind == Kind::List; }
    bool is_symbol(std::string_view s) const { return kind == Kind::Symbol && text == s; }

    // Head symbol of a list, or "" when the datum is not of that shape.
    std::string_view head() const {
        if (kind != Kind::List || items.empty() || items[0].kind != Kind::Symbol) return {};
        return items[0].text;
    }
};

inline bool is_name_start(char c) { return c >= 'a' && c <= 'z'; }
inline bool is_name_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
}

// Identifiers everywhere in the library: [a-z][a-z0-9_]*
inline bool is_valid_name(std::string_view s) {
    if (s.empty() || !is_name_start(s[0])) return false;
    for (char c : s.substr(1))
        if (!is_name_char(c)) return false;
    return true;
}

// Escapes '"' and '\' only; other bytes pass through verbatim.
inline std::string quote_string(std::string_view s) {
    std::string out;
    out.reserve(s.size() + 2);
    out += '"';
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

class SexprReader {
  public:
    explicit SexprReader(std::string_view text) : text_(text) {}

    // Reads a single datum and requires the rest of the input to be blank.
    Datum read_single() {
        skip_space();
        Datum d = read_datum();
        skip_space();
        if (pos_ < text_.size()) fail("trailing input after expression");
        return d;
    }

  private:
    [[noreturn]] void fail(const std::string& reason) const {
        throw ParseError(reason, line_, column_);
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    char advance() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        return c;
    }

    void skip_space() {
        while (pos_ < text_.size()) {
            char c = peek();
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n')
                advance();
            else
                break;
        }
    }

    Datum read_datum() {
        if (pos_ >= text_.size()) fail("unexpected end of input");
        Datum d;
        d.line = line_;
        d.column = column_;
        char c = peek();
        if (c == '(') {
            advance();
            d.kind = Datum::Kind::List;
            for (;;) {
                skip_space();
                if (pos_ >= text_.size()) fail("unclosed '('");
                if (peek() == ')') {
                    advance();
                    break;
                }
                d.items.push_back(read_datum());
            }
            return d;
        }
        if (c == ')') fail("unexpected ')'");
        if (c == '"') return read_string(d);
        if (c >= '0' && c <= '9') return read_nat(d);
        if (is_name_start(c)) {
            d.kind = Datum::Kind::Symbol;
            while (pos_ < text_.size() && is_name_char(peek())) d.text += advance();
            return d;
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    Datum read_string(Datum d) {
        d.kind = Datum::Kind::Str;
        advance();  // opening quote
        for (;;) {
            if (pos_ >= text_.size()) fail("unterminated string literal");
            char c = advance();
            if (c == '"') break;
            if (c == '\\') {
                if (pos_ >= text_.size()) fail("unterminated escape");
                char e = advance();
                if (e != '"' && e != '\\') fail("invalid escape sequence");
                d.text += e;
            } else {
                d.text += c;
            }
        }
        return d;
    }

    Datum read_nat(Datum d) {
        d.kind = Datum::Kind::Nat;
        std::uint64_t value = 0;
        bool first = true;
        while (pos_ < text_.size() && peek() >= '0' && peek() <= '9') {
            std::uint64_t digit = static_cast<std::uint64_t>(advance() - '0');
            if (value > (UINT64_MAX - digit) / 10) fail("natural literal too large");
            value = value * 10 + digit;
            first = false;
        }
        if (first) fail("expected digits");
        if (pos_ < text_.size() && is_name_char(peek())) fail("malformed number");
        d.nat = value;
        return d;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
};

inline Datum read_sexpr(std::string_view text) { return SexprReader(text).read_single(); }

// Structural helpers used by the per-grammar parsers.

inline void expect_arity(const Datum& d, std::size_t n, const char* what) {
    if (d.items.size() != n)
        throw ParseError(std::string(what) + ": expected " + std::to_string(n) +
                             " elements, got " + std::to_string(d.items.size()),
                         d.line, d.column);
}

inline const Datum& expect_kind(const Datum& d, Datum::Kind k, const char* what) {
    if (d.kind != k) throw ParseError(std::string("expected ") + what, d.line, d.column);
    return d;
}

inline std::string expect_name(const Datum& d) {
    expect_kind(d, Datum::Kind::Symbol, "identifier");
    if (!is_valid_name(d.text))
        throw ParseError("invalid identifier '" + d.text + "'", d.line, d.column);
    return d.text;
}

}  // namespace omega
