#include "bcontinuum/series_expr.hpp"

#include "bcontinuum/errors.hpp"

#include <cctype>
#include <cmath>
#include <functional>
#include <memory>

namespace bcontinuum {

namespace {

using TermFn = std::function<double(double /*i*/, double /*x*/)>;

// Recursive descent over:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-' factor | power
//   power  := primary ('^' factor)?
//   primary:= number | 'i' | 'x' | ident '(' expr ')' | '(' expr ')'
class Parser {
public:
    explicit Parser(std::string src) : src_(std::move(src)) {}

    TermFn parse() {
        TermFn e = expr();
        skip_ws();
        if (pos_ != src_.size()) throw ParseError("unexpected trailing input", pos_);
        return e;
    }

private:
    std::string src_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    TermFn expr() {
        TermFn lhs = term();
        for (;;) {
            if (eat('+')) {
                TermFn rhs = term();
                lhs = [lhs, rhs](double i, double x) { return lhs(i, x) + rhs(i, x); };
            } else if (eat('-')) {
                TermFn rhs = term();
                lhs = [lhs, rhs](double i, double x) { return lhs(i, x) - rhs(i, x); };
            } else
                return lhs;
        }
    }

    TermFn term() {
        TermFn lhs = factor();
        for (;;) {
            if (eat('*')) {
                TermFn rhs = factor();
                lhs = [lhs, rhs](double i, double x) { return lhs(i, x) * rhs(i, x); };
            } else if (eat('/')) {
                TermFn rhs = factor();
                lhs = [lhs, rhs](double i, double x) { return lhs(i, x) / rhs(i, x); };
            } else
                return lhs;
        }
    }

    TermFn factor() {
        if (eat('-')) {
            TermFn inner = factor();
            return [inner](double i, double x) { return -inner(i, x); };
        }
        return power();
    }

    TermFn power() {
        TermFn base = primary();
        if (eat('^')) {
            TermFn exponent = factor();
            return [base, exponent](double i, double x) { return std::pow(base(i, x), exponent(i, x)); };
        }
        return base;
    }

    TermFn primary() {
        skip_ws();
        if (pos_ >= src_.size()) throw ParseError("unexpected end of expression", pos_);
        const char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
        if (eat('(')) {
            TermFn inner = expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return inner;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    TermFn number() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.'))
            ++pos_;
        const std::string text = src_.substr(start, pos_ - start);
        try {
            const double v = std::stod(text);
            return [v](double, double) { return v; };
        } catch (const std::exception&) {
            throw ParseError("bad numeric literal '" + text + "'", start);
        }
    }

    TermFn identifier() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        const std::string name = src_.substr(start, pos_ - start);
        if (name == "i") return [](double i, double) { return i; };
        if (name == "x") return [](double, double x) { return x; };
        if (name == "sin" || name == "cos" || name == "exp") {
            if (!eat('(')) throw ParseError("expected '(' after " + name, pos_);
            TermFn arg = expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            if (name == "sin") return [arg](double i, double x) { return std::sin(arg(i, x)); };
            if (name == "cos") return [arg](double i, double x) { return std::cos(arg(i, x)); };
            return [arg](double i, double x) { return std::exp(arg(i, x)); };
        }
        throw ParseError("unknown identifier '" + name + "'", start);
    }
};

} // namespace

Series parse_series(const std::string& expr, Interval interval, std::string label) {
    TermFn fn = Parser(expr).parse();
    return Series{label.empty() ? expr : std::move(label), std::move(interval),
                  [fn](Index i, double x) { return fn(static_cast<double>(i), x); }};
}

} // namespace bcontinuum
