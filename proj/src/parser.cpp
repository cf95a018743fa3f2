#include "ncsym/parser.hpp"
#include <cctype>

namespace ncsym {

namespace {

struct Parser {
    const std::string& s;
    ContextPtr ctx;
    size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }
    char peek() {
        skip();
        return pos < s.size() ? s[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

    long integer() {
        skip();
        size_t start = pos;
        bool neg = false;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
            neg = s[pos] == '-';
            ++pos;
        }
        if (pos >= s.size() || !std::isdigit((unsigned char)s[pos]))
            fail("expected integer");
        long v = 0;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) {
            v = v * 10 + (s[pos] - '0');
            if (v > 1000000000L) { pos = start; fail("integer literal too large"); }
            ++pos;
        }
        return neg ? -v : v;
    }

    std::string ident() {
        skip();
        size_t start = pos;
        while (pos < s.size() && (std::isalnum((unsigned char)s[pos]) || s[pos] == '_'))
            ++pos;
        return s.substr(start, pos - start);
    }

    struct Base {
        Expr e;
        bool is_rho = false;
        bool is_m = false;
    };

    Base base() {
        skip();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            Expr e = expr();
            if (!eat(')')) fail("expected ')'");
            return {e};
        }
        if (std::isdigit((unsigned char)c)) {
            long num = integer();
            if (peek() == '/') {
                ++pos;
                long den = integer();
                if (den == 0) fail("zero denominator");
                return {Expr::constant(ctx, Coeff(GaussRat(Rat(num, den))))};
            }
            return {Expr::integer(ctx, num)};
        }
        if (std::isalpha((unsigned char)c) || c == '_') {
            size_t at = pos;
            std::string name = ident();
            if (name == "i") return {Expr::constant(ctx, Coeff::i())};
            if (name == "m") return {Expr::constant(ctx, Coeff::m()), false, true};
            if (name == "r") {
                if (!ctx->has_radical()) { pos = at; fail("radical r not available in this context"); }
                return {Expr::radical(ctx)};
            }
            if (name == "rho") {
                if (!ctx->has_radical()) { pos = at; fail("rho not available in this context"); }
                return {Expr::rho(ctx, 1), true};
            }
            int v = ctx->find(name);
            if (v < 0) { pos = at; fail("unregistered variable '" + name + "'"); }
            return {Expr::variable(ctx, v)};
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    Expr factor() {
        Base b = base();
        if (peek() != '^') return b.e;
        ++pos;
        size_t at = pos;
        long n = integer();
        if (n < -64 || n > 64) { pos = at; fail("exponent out of range"); }
        if (b.is_rho) return Expr::rho(ctx, (int)n);
        if (b.is_m) return Expr::constant(ctx, Coeff::m((int)n));
        try {
            return b.e.pow((int)n);
        } catch (const std::domain_error& ex) {
            pos = at;
            fail(ex.what());
        }
    }

    Expr term() {
        Expr e = factor();
        while (peek() == '*') {
            ++pos;
            e = e * factor();
        }
        return e;
    }

    Expr expr() {
        bool neg = false;
        if (peek() == '-') { neg = true; ++pos; }
        else if (peek() == '+') ++pos;
        Expr e = term();
        if (neg) e = -e;
        while (true) {
            char c = peek();
            if (c == '+') { ++pos; e = e + term(); }
            else if (c == '-') { ++pos; e = e - term(); }
            else break;
        }
        return e;
    }
};

} // namespace

Expr parse(const std::string& text, ContextPtr ctx) {
    Parser p{text, std::move(ctx)};
    Expr e = p.expr();
    p.skip();
    if (p.pos != text.size()) p.fail("trailing input");
    return e;
}

} // namespace ncsym
