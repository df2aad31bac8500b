#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "stanley/decomposition.hpp"
#include "stanley/ideal.hpp"

namespace stanley {

/// Syntax error with the byte offset it occurred at.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          message_(message),
          position_(position) {}

    const std::string& message() const { return message_; }
    std::size_t position() const { return position_; }

private:
    std::string message_;
    std::size_t position_;
};

namespace detail {

enum class Tok {
    lparen, rparen, comma, star, caret, cap, ellipsis, semicolon, equals,
    integer, variable, ambient_n, end
};

struct Token {
    Tok type;
    long value = 0;    // integer payload or variable index
    std::size_t pos = 0;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' ||
                                       text_[pos_] == '\n' || text_[pos_] == '\r'))
            ++pos_;
        const std::size_t start = pos_;
        if (pos_ >= text_.size()) {
            current_ = {Tok::end, 0, start};
            return;
        }
        const char c = text_[pos_];
        switch (c) {
            case '(': current_ = {Tok::lparen, 0, start}; ++pos_; return;
            case ')': current_ = {Tok::rparen, 0, start}; ++pos_; return;
            case ',': current_ = {Tok::comma, 0, start}; ++pos_; return;
            case '*': current_ = {Tok::star, 0, start}; ++pos_; return;
            case '^': current_ = {Tok::caret, 0, start}; ++pos_; return;
            case ';': current_ = {Tok::semicolon, 0, start}; ++pos_; return;
            case '=': current_ = {Tok::equals, 0, start}; ++pos_; return;
            case '&': current_ = {Tok::cap, 0, start}; ++pos_; return;
            default: break;
        }
        if (text_.compare(pos_, 3, "\xE2\x88\xA9") == 0) {  // U+2229 intersection sign
            current_ = {Tok::cap, 0, start};
            pos_ += 3;
            return;
        }
        if (text_.compare(pos_, 3, "\xE2\x80\xA6") == 0 || text_.compare(pos_, 3, "...") == 0) {
            current_ = {Tok::ellipsis, 0, start};
            pos_ += 3;
            return;
        }
        if (c == 'x') {
            ++pos_;
            if (pos_ >= text_.size() || !is_digit(text_[pos_]))
                throw ParseError("expected variable index after 'x'", pos_);
            current_ = {Tok::variable, lex_number(), start};
            if (current_.value == 0) throw ParseError("variable index must be at least 1", start);
            return;
        }
        if (c == 'n') {
            ++pos_;
            current_ = {Tok::ambient_n, 0, start};
            return;
        }
        if (is_digit(c)) {
            current_ = {Tok::integer, lex_number(), start};
            return;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }

    long lex_number() {
        long v = 0;
        const std::size_t start = pos_;
        while (pos_ < text_.size() && is_digit(text_[pos_])) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1000000) throw ParseError("number too large", start);
            ++pos_;
        }
        return v;
    }

    static bool is_digit(char c) { return c >= '0' && c <= '9'; }

    std::string_view text_;
    std::size_t pos_ = 0;
    Token current_{Tok::end, 0, 0};
};

// Generators as sparse exponent maps until the ambient size is known.
using SparseGen = std::map<int, int>;

struct ParsedIdeal {
    std::vector<SparseGen> gens;
    bool has_unit = false;
    int max_index = 0;  // 1-based
};

class Parser {
public:
    explicit Parser(std::string_view text) : lex_(text) {}

    Token expect(Tok type, const char* what) {
        if (lex_.peek().type != type) throw ParseError(std::string("expected ") + what, lex_.peek().pos);
        return lex_.take();
    }

    bool accept(Tok type) {
        if (lex_.peek().type != type) return false;
        lex_.take();
        return true;
    }

    const Token& peek() const { return lex_.peek(); }

    /// Optional "n=INT;" prefix.
    std::optional<int> parse_ambient_prefix() {
        if (lex_.peek().type != Tok::ambient_n) return std::nullopt;
        lex_.take();
        expect(Tok::equals, "'='");
        const Token t = expect(Tok::integer, "ambient size");
        if (t.value < 1) throw ParseError("ambient size must be at least 1", t.pos);
        expect(Tok::semicolon, "';'");
        return static_cast<int>(t.value);
    }

    /// factor := VAR ('^' INT)?
    std::pair<int, int> parse_factor() {
        const Token v = expect(Tok::variable, "variable");
        int exp = 1;
        if (accept(Tok::caret)) {
            const Token e = expect(Tok::integer, "exponent");
            if (e.value == 0) throw ParseError("exponent must be at least 1", e.pos);
            exp = static_cast<int>(e.value);
        }
        return {static_cast<int>(v.value), exp};
    }

    /// ideal := '(' item (',' item)* ')' with range sugar between bare
    /// variables; literal generators 1 (unit) and 0 (dropped) are allowed.
    ParsedIdeal parse_ideal_literal() {
        expect(Tok::lparen, "'('");
        ParsedIdeal out;
        std::optional<int> prev_bare;  // last item, if it was a bare variable
        for (;;) {
            if (lex_.peek().type == Tok::ellipsis) {
                const Token ell = lex_.take();
                if (!prev_bare) throw ParseError("range needs a bare variable on its left", ell.pos);
                expect(Tok::comma, "','");
                const Token v = expect(Tok::variable, "variable closing the range");
                const int from = *prev_bare, to = static_cast<int>(v.value);
                if (lex_.peek().type == Tok::caret)
                    throw ParseError("range endpoints cannot carry exponents", lex_.peek().pos);
                if (from > to) throw ParseError("descending variable range", v.pos);
                for (int i = from + 1; i <= to; ++i) out.gens.push_back({{i, 1}});
                out.max_index = std::max(out.max_index, to);
                prev_bare = std::nullopt;
            } else if (lex_.peek().type == Tok::integer) {
                const Token t = lex_.take();
                if (t.value == 1) out.has_unit = true;
                else if (t.value != 0)
                    throw ParseError("integer generators other than 0 and 1 are not monomials",
                                     t.pos);
                prev_bare = std::nullopt;
            } else {
                SparseGen gen;
                auto [var, exp] = parse_factor();
                gen[var] += exp;
                bool bare = exp == 1;
                while (accept(Tok::star)) {
                    auto [v2, e2] = parse_factor();
                    gen[v2] += e2;
                    bare = false;
                }
                if (!gen.empty()) out.max_index = std::max(out.max_index, gen.rbegin()->first);
                prev_bare = bare && gen.size() == 1 ? std::optional<int>(var) : std::nullopt;
                out.gens.push_back(std::move(gen));
            }
            if (!accept(Tok::comma)) break;
        }
        expect(Tok::rparen, "')'");
        return out;
    }

private:
    Lexer lex_;
};

inline MonomialIdeal build_ideal(const ParsedIdeal& parsed, int n) {
    if (parsed.max_index > n)
        throw ParseError("variable index exceeds the declared ambient size", 0);
    std::vector<Monomial> gens;
    if (parsed.has_unit) gens.push_back(Monomial::unit(n));
    for (const SparseGen& g : parsed.gens) {
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        for (auto [var, exp] : g) e[static_cast<std::size_t>(var - 1)] = exp;
        gens.push_back(Monomial(std::move(e)));
    }
    return MonomialIdeal(n, std::move(gens));
}

}  // namespace detail

/// Parses a single ideal literal such as "(x1^2*x2, x3)" with optional
/// "n=INT;" prefix; ambient size is inferred from the largest index if not
/// declared. Range sugar "(x1,...,x6)" expands to the variable list.
inline MonomialIdeal parse_ideal(std::string_view text) {
    detail::Parser parser(text);
    const std::optional<int> declared = parser.parse_ambient_prefix();
    const detail::ParsedIdeal parsed = parser.parse_ideal_literal();
    if (parser.peek().type != detail::Tok::end)
        throw ParseError("trailing input after ideal", parser.peek().pos);
    const int n = declared ? *declared : std::max(parsed.max_index, 1);
    return detail::build_ideal(parsed, n);
}

/// Parses an intersection expression "(...) \xE2\x88\xA9 (...)" (ASCII '&'
/// also accepted) and returns the intersected ideal in the joint ambient.
inline MonomialIdeal parse_ideal_expression(std::string_view text) {
    detail::Parser parser(text);
    const std::optional<int> declared = parser.parse_ambient_prefix();
    std::vector<detail::ParsedIdeal> parts;
    parts.push_back(parser.parse_ideal_literal());
    while (parser.accept(detail::Tok::cap)) parts.push_back(parser.parse_ideal_literal());
    if (parser.peek().type != detail::Tok::end)
        throw ParseError("trailing input after expression", parser.peek().pos);

    int n = declared.value_or(1);
    if (!declared)
        for (const auto& p : parts) n = std::max(n, p.max_index);
    MonomialIdeal out = detail::build_ideal(parts.front(), n);
    for (std::size_t i = 1; i < parts.size(); ++i)
        out = intersect(out, detail::build_ideal(parts[i], n));
    return out;
}

/// Parses a decomposition file: one "u ; Z" line per space, '#' comments and
/// blank lines ignored, Z a comma-separated variable list (possibly empty).
inline std::vector<StanleySpace> parse_decomposition(std::string_view text, int n) {
    std::vector<StanleySpace> spaces;
    std::size_t line_start = 0;
    while (line_start <= text.size()) {
        std::size_t line_end = text.find('\n', line_start);
        if (line_end == std::string_view::npos) line_end = text.size();
        std::string_view line = text.substr(line_start, line_end - line_start);
        const std::size_t offset = line_start;
        line_start = line_end + 1;
        if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
        if (line[line.find_first_not_of(" \t\r")] == '#') continue;

        try {
            detail::Parser parser(line);
            // generator: bare "1" or a product of factors
            detail::SparseGen gen;
            if (parser.peek().type == detail::Tok::integer) {
                const auto t = parser.expect(detail::Tok::integer, "generator");
                if (t.value != 1) throw ParseError("generator must be a monomial or 1", t.pos);
            } else {
                do {
                    auto [var, exp] = parser.parse_factor();
                    if (var > n) throw ParseError("variable index exceeds ambient size", 0);
                    gen[var] += exp;
                } while (parser.accept(detail::Tok::star));
            }
            parser.expect(detail::Tok::semicolon, "';'");
            std::vector<int> Z;
            if (parser.peek().type != detail::Tok::end) {
                do {
                    const auto v = parser.expect(detail::Tok::variable, "free variable");
                    if (v.value > n) throw ParseError("variable index exceeds ambient size", v.pos);
                    Z.push_back(static_cast<int>(v.value) - 1);
                } while (parser.accept(detail::Tok::comma));
            }
            if (parser.peek().type != detail::Tok::end)
                throw ParseError("trailing input after space", parser.peek().pos);
            std::sort(Z.begin(), Z.end());
            Z.erase(std::unique(Z.begin(), Z.end()), Z.end());

            std::vector<int> e(static_cast<std::size_t>(n), 0);
            for (auto [var, exp] : gen) e[static_cast<std::size_t>(var - 1)] = exp;
            spaces.push_back({Monomial(std::move(e)), std::move(Z)});
        } catch (const ParseError& err) {
            throw ParseError(err.message(), offset + err.position());
        }
    }
    return spaces;
}

}  // namespace stanley
