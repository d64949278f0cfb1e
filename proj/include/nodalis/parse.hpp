#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "nodalis/errors.hpp"
#include "nodalis/poly.hpp"
#include "nodalis/rational.hpp"

namespace nodalis {

namespace detail {

enum class TokenKind { number, var_x, var_y, plus, minus, star, caret, lparen, rparen, end };

struct Token {
    TokenKind kind;
    std::size_t pos;
    BigInt num{0};
    BigInt den{1};
};

inline std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto digits = [&](std::size_t& j) {
        std::string s;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) s += text[j++];
        return s;
    };
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string n = digits(i);
            BigInt den = 1;
            if (i < text.size() && text[i] == '/') {
                ++i;
                std::string d = digits(i);
                if (d.empty()) throw ParseError("expected denominator digits", i);
                den = BigInt(d);
                if (den == 0) throw ParseError("zero denominator", start);
            }
            out.push_back({TokenKind::number, start, BigInt(n), den});
            continue;
        }
        switch (c) {
            case 'x':
            case 'X': out.push_back({TokenKind::var_x, start}); break;
            case 'y':
            case 'Y': out.push_back({TokenKind::var_y, start}); break;
            case '+': out.push_back({TokenKind::plus, start}); break;
            case '-': out.push_back({TokenKind::minus, start}); break;
            case '*': out.push_back({TokenKind::star, start}); break;
            case '^': out.push_back({TokenKind::caret, start}); break;
            case '(': out.push_back({TokenKind::lparen, start}); break;
            case ')': out.push_back({TokenKind::rparen, start}); break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
        ++i;
    }
    out.push_back({TokenKind::end, text.size()});
    return out;
}

/// Recursive-descent parser for the polynomial grammar: rational literals,
/// X and Y (case-insensitive), + - * ^ and parentheses; ^ binds tighter than
/// *, * tighter than + and -; exponents are non-negative integer literals;
/// implicit multiplication is not allowed.
template <FieldElement K>
class PolyParser {
  public:
    PolyParser(std::vector<Token> tokens, const typename K::Ctx& ctx)
        : toks_(std::move(tokens)), ctx_(ctx) {}

    BivariatePoly<K> parse() {
        auto p = expr();
        if (peek().kind != TokenKind::end)
            throw ParseError("expected an operator or end of input", peek().pos);
        return p;
    }

  private:
    const Token& peek() const { return toks_[i_]; }
    Token next() { return toks_[i_++]; }
    bool accept(TokenKind k) {
        if (peek().kind != k) return false;
        ++i_;
        return true;
    }

    BivariatePoly<K> expr() {
        auto acc = term();
        while (true) {
            if (accept(TokenKind::plus))
                acc = acc + term();
            else if (accept(TokenKind::minus))
                acc = acc - term();
            else
                return acc;
        }
    }

    BivariatePoly<K> term() {
        auto acc = factor();
        while (accept(TokenKind::star)) acc = acc * factor();
        return acc;
    }

    BivariatePoly<K> factor() {
        bool negate = false;
        while (true) {
            if (accept(TokenKind::minus))
                negate = !negate;
            else if (accept(TokenKind::plus))
                continue;
            else
                break;
        }
        auto p = power();
        return negate ? -p : p;
    }

    BivariatePoly<K> power() {
        auto base = atom();
        if (accept(TokenKind::caret)) {
            const Token& e = peek();
            if (e.kind != TokenKind::number || e.den != 1)
                throw ParseError("exponent must be a non-negative integer literal", e.pos);
            if (e.num > 64) throw ParseError("exponent too large", e.pos);
            next();
            return base.pow(static_cast<unsigned>(e.num));
        }
        return base;
    }

    BivariatePoly<K> atom() {
        const Token& t = peek();
        switch (t.kind) {
            case TokenKind::number: {
                next();
                return BivariatePoly<K>::constant(ctx_, ctx_.from_ratio(t.num, t.den));
            }
            case TokenKind::var_x: next(); return BivariatePoly<K>::variable_x(ctx_);
            case TokenKind::var_y: next(); return BivariatePoly<K>::variable_y(ctx_);
            case TokenKind::lparen: {
                next();
                auto p = expr();
                if (!accept(TokenKind::rparen)) throw ParseError("expected ')'", peek().pos);
                return p;
            }
            default:
                throw ParseError("expected a number, X, Y or '('", t.pos);
        }
    }

    std::vector<Token> toks_;
    typename K::Ctx ctx_;
    std::size_t i_ = 0;
};

} // namespace detail

template <FieldElement K>
BivariatePoly<K> parse_polynomial(std::string_view text, const typename K::Ctx& ctx) {
    return detail::PolyParser<K>(detail::tokenize(text), ctx).parse();
}

/// Scalar literal: an optionally signed integer or a/b fraction, mapped into
/// the field (prime fields invert the denominator).
template <FieldElement K>
K parse_scalar(std::string_view text, const typename K::Ctx& ctx) {
    auto toks = detail::tokenize(text);
    std::size_t i = 0;
    bool negate = false;
    while (toks[i].kind == detail::TokenKind::minus || toks[i].kind == detail::TokenKind::plus) {
        if (toks[i].kind == detail::TokenKind::minus) negate = !negate;
        ++i;
    }
    if (toks[i].kind != detail::TokenKind::number || toks[i + 1].kind != detail::TokenKind::end)
        throw ParseError("expected a rational literal", toks[i].pos);
    K v = ctx.from_ratio(toks[i].num, toks[i].den);
    return negate ? -v : v;
}

} // namespace nodalis
