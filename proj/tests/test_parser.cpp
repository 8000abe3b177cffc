#include <doctest.h>

#include <optional>
#include <string>
#include <vector>

#include "resloc/errors.hpp"
#include "resloc/expr_parser.hpp"
#include "testutil.hpp"

using namespace resloc;
using testutil::Rng;

namespace {

// Reference path: tokenize, shunting-yard to RPN, evaluate numerically at a
// rational point. Independent of the RationalFunction arithmetic used by the
// real parser. Returns nullopt when the evaluation hits a pole or 0^negative.
struct Tok {
    char op;  // 'n' number, 'u' variable, or one of + - * / ^ ( ) m (unary minus)
    Rational value;
};

std::vector<Tok> tokenize(const std::string& s) {
    std::vector<Tok> out;
    bool prev_value = false;  // previous token ends a value
    bool prev_caret = false;  // a '-' right after '^' is the exponent's sign
    for (std::size_t i = 0; i < s.size();) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '-' && prev_caret && i + 1 < s.size() &&
             std::isdigit(static_cast<unsigned char>(s[i + 1])))) {
            std::size_t j = c == '-' ? i + 1 : i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({'n', Rational(mpz_class(s.substr(i, j - i)))});
            i = j;
            prev_value = true;
            prev_caret = false;
            continue;
        }
        if (c == 'u') {
            out.push_back({'u', Rational(0)});
            prev_value = true;
            prev_caret = false;
            ++i;
            continue;
        }
        if (c == '-' && !prev_value) {
            out.push_back({'m', Rational(0)});
            ++i;
            prev_caret = false;
            continue;
        }
        out.push_back({c, Rational(0)});
        prev_value = (c == ')');
        prev_caret = (c == '^');
        ++i;
    }
    return out;
}

int prec(char op) {
    switch (op) {
        case '^': return 4;
        case 'm': return 3;
        case '*':
        case '/': return 2;
        case '+':
        case '-': return 1;
        default: return 0;
    }
}

bool right_assoc(char op) {
    return op == 'm';
}

std::optional<Rational> eval_rpn_at(const std::string& expr, const Rational& point) {
    std::vector<Tok> output;
    std::vector<char> ops;
    for (const Tok& t : tokenize(expr)) {
        if (t.op == 'n' || t.op == 'u') {
            output.push_back(t);
        } else if (t.op == '(') {
            ops.push_back('(');
        } else if (t.op == ')') {
            while (!ops.empty() && ops.back() != '(') {
                output.push_back({ops.back(), Rational(0)});
                ops.pop_back();
            }
            if (ops.empty()) return std::nullopt;
            ops.pop_back();
        } else {
            while (!ops.empty() && ops.back() != '(' &&
                   (prec(ops.back()) > prec(t.op) ||
                    (prec(ops.back()) == prec(t.op) && !right_assoc(t.op))))
            {
                output.push_back({ops.back(), Rational(0)});
                ops.pop_back();
            }
            ops.push_back(t.op);
        }
    }
    while (!ops.empty()) {
        if (ops.back() == '(') return std::nullopt;
        output.push_back({ops.back(), Rational(0)});
        ops.pop_back();
    }

    std::vector<Rational> stack;
    for (const Tok& t : output) {
        if (t.op == 'n') {
            stack.push_back(t.value);
        } else if (t.op == 'u') {
            stack.push_back(point);
        } else if (t.op == 'm') {
            if (stack.empty()) return std::nullopt;
            stack.back() = -stack.back();
        } else {
            if (stack.size() < 2) return std::nullopt;
            const Rational b = stack.back();
            stack.pop_back();
            const Rational a = stack.back();
            stack.pop_back();
            switch (t.op) {
                case '+': stack.push_back(a + b); break;
                case '-': stack.push_back(a - b); break;
                case '*': stack.push_back(a * b); break;
                case '/':
                    if (b.is_zero()) return std::nullopt;
                    stack.push_back(a / b);
                    break;
                case '^': {
                    if (!b.is_integer()) return std::nullopt;
                    if (a.is_zero() && b.sign() < 0) return std::nullopt;
                    const long long e = static_cast<long long>(b.numerator().get_si());
                    stack.push_back(a.pow(e));
                    break;
                }
                default: return std::nullopt;
            }
        }
    }
    if (stack.size() != 1) return std::nullopt;
    return stack.back();
}

// Random well-formed expression from the grammar.
std::string random_expr(Rng& rng, int depth) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 2 : 6);
    std::uniform_int_distribution<int> small(0, 12);
    std::uniform_int_distribution<int> exps(0, 4);
    switch (pick(rng)) {
        case 0: return std::to_string(small(rng));
        case 1: return "u";
        case 2: return small(rng) % 2 ? "u" : std::to_string(small(rng));
        case 3: return "(" + random_expr(rng, depth - 1) + "+" + random_expr(rng, depth - 1) + ")";
        case 4: return "(" + random_expr(rng, depth - 1) + "-" + random_expr(rng, depth - 1) + ")";
        case 5: return "(" + random_expr(rng, depth - 1) + "*" + random_expr(rng, depth - 1) + ")";
        default: {
            const int e = exps(rng);
            return "(" + random_expr(rng, depth - 1) + ")^" + (e < 2 ? "-" : "") +
                   std::to_string(e);
        }
    }
}

}  // namespace

TEST_CASE("grammar basics") {
    const RationalFunction f = parse_expression("(1-u)^-2 + 3*u^2");
    // Denominator (1-u)^2 made monic is (u-1)^2.
    const Polynomial expected_den = (Polynomial::var() - Polynomial(1)).pow(2);
    CHECK(f.den() == expected_den);
    CHECK(f.eval(Rational(2)) == Rational(13));

    CHECK(parse_expression("1/(1-u^3)").den() ==
          (Polynomial(1) - Polynomial::var().pow(3)).monic());
    CHECK(parse_expression("-7/2") == RationalFunction(Rational(-7, 2)));
    CHECK(parse_expression("u^-2").eval(Rational(2)) == Rational(1, 4));
    CHECK(parse_expression("-u^2").eval(Rational(3)) == Rational(-9));  // ^ before unary -
    CHECK(parse_expression("u^(-2)").eval(Rational(2)) == Rational(1, 4));
    CHECK(parse_expression("2^3^2") == RationalFunction(Rational(64)));  // left assoc
}

TEST_CASE("syntax errors carry a position") {
    CHECK_THROWS_AS(parse_expression("u^(1/2)"), Error);
    CHECK_THROWS_AS(parse_expression("1+"), Error);
    CHECK_THROWS_AS(parse_expression("(1-u"), Error);
    CHECK_THROWS_AS(parse_expression("3 ? 4"), Error);
    CHECK_THROWS_AS(parse_expression(""), Error);
    CHECK_THROWS_AS(parse_expression("x+1"), Error);
    try {
        parse_expression("1 + $");
        FAIL("expected a syntax error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::SyntaxError);
        CHECK(std::string(e.what()).find("position 4") != std::string::npos);
    }
    // Division by the zero function is a domain error, not a syntax error.
    try {
        parse_expression("1/(u-u)");
        FAIL("expected a division error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::DivisionByZero);
    }
}

TEST_CASE("fuzzed expressions match the shunting-yard reference") {
    Rng rng(61);
    const std::vector<Rational> points = {Rational(2),     Rational(-3), Rational(1, 2),
                                          Rational(-5, 3), Rational(7)};
    for (int i = 0; i < 300; ++i) {
        const std::string expr = random_expr(rng, 4);
        RationalFunction f;
        try {
            f = parse_expression(expr);
        } catch (const Error& e) {
            // The only acceptable failure for well-formed input is a zero
            // denominator built by the arithmetic itself.
            CHECK(e.code() == Errc::DivisionByZero);
            continue;
        }
        for (const Rational& p : points) {
            const auto ref = eval_rpn_at(expr, p);
            if (!ref) continue;
            Rational direct;
            try {
                direct = f.eval(p);
            } catch (const Error&) {
                continue;  // pole of the reduced function
            }
            CHECK_MESSAGE(direct == *ref, "mismatch for '", expr, "' at u=", p.str());
        }
    }
}
