#include "resloc/expr_parser.hpp"

#include <cctype>

#include "resloc/errors.hpp"

namespace resloc {

namespace {

constexpr long long kMaxExponent = 4096;

// expr   := term (('+'|'-') term)*
// term   := factor (('*'|'/') factor)*
// factor := '-' factor | power
// power  := atom ('^' exponent)*
// atom   := INT | 'u' | '(' expr ')'
// exponent := ['-'] INT | '(' ['-'] INT ')'
class Parser {
  public:
    explicit Parser(const std::string& text) : s_(text) {}

    RationalFunction parse() {
        RationalFunction f = expr();
        skip_ws();
        if (pos_ != s_.size()) err("unexpected trailing input");
        return f;
    }

  private:
    [[noreturn]] void err(const std::string& what) {
        fail(Errc::SyntaxError, what + " at position " + std::to_string(pos_));
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    bool eat(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    RationalFunction expr() {
        RationalFunction acc = term();
        while (true) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                return acc;
        }
    }

    RationalFunction term() {
        RationalFunction acc = factor();
        while (true) {
            if (eat('*'))
                acc *= factor();
            else if (eat('/'))
                acc /= factor();
            else
                return acc;
        }
    }

    RationalFunction factor() {
        if (eat('-')) return -factor();
        return power();
    }

    RationalFunction power() {
        RationalFunction base = atom();
        while (eat('^')) base = base.pow(exponent());
        return base;
    }

    long long exponent() {
        const bool parens = eat('(');
        bool neg = eat('-');
        if (!std::isdigit(static_cast<unsigned char>(peek()))) err("expected an integer exponent");
        long long e = integer();
        if (parens && !eat(')')) err("expected ')' after integer exponent");
        if (e > kMaxExponent) err("exponent out of range");
        return neg ? -e : e;
    }

    long long integer() {
        skip_ws();
        long long v = 0;
        bool any = false;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            const int digit = s_[pos_] - '0';
            if (v > (kMaxExponent * kMaxExponent)) err("integer literal too large");
            v = v * 10 + digit;
            ++pos_;
            any = true;
        }
        if (!any) err("expected an integer");
        return v;
    }

    RationalFunction atom() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            RationalFunction inner = expr();
            if (!eat(')')) err("expected ')'");
            return inner;
        }
        if (c == 'u') {
            ++pos_;
            return RationalFunction::var();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            // Literals may exceed the exponent cap; scan digits directly.
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return RationalFunction(Rational(mpz_class(s_.substr(start, pos_ - start))));
        }
        if (c == '\0') err("unexpected end of input");
        err(std::string("unexpected character '") + c + "'");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_expression(const std::string& text) {
    return Parser(text).parse();
}

}  // namespace resloc
