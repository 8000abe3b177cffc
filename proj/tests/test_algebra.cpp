#include <doctest.h>

#include "resloc/errors.hpp"
#include "resloc/expr_parser.hpp"
#include "resloc/localized_ring.hpp"
#include "resloc/rational_function.hpp"
#include "testutil.hpp"

using namespace resloc;
using testutil::Rng;

namespace {

RationalFunction rf(const std::string& expr) {
    return parse_expression(expr);
}

}  // namespace

TEST_CASE("rational canonical form and arithmetic") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(-7, 2).str() == "-7/2");
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK_THROWS_AS(Rational(1, 0), Error);
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), Error);
    CHECK(Rational::parse("-7/2") == Rational(-7, 2));
    CHECK(Rational::parse("10") == Rational(10));
    CHECK_THROWS_AS(Rational::parse("1.5"), Error);
    CHECK_THROWS_AS(Rational::parse("1/0"), Error);
}

TEST_CASE("polynomial division, gcd, composition") {
    const Polynomial u = Polynomial::var();
    const Polynomial p = u.pow(2) - Polynomial(1);
    const Polynomial q = u - Polynomial(1);
    auto [quot, rem] = Polynomial::divmod(p, q);
    CHECK(quot == u + Polynomial(1));
    CHECK(rem.is_zero());
    CHECK(Polynomial::gcd(p, q) == q.monic());
    CHECK(Polynomial::gcd(Polynomial(), Polynomial()).is_zero());
    CHECK_THROWS_AS(Polynomial().degree(), Error);

    // P(u + a) agrees with evaluation.
    Rng rng(11);
    for (int i = 0; i < 50; ++i) {
        const Polynomial r = testutil::random_polynomial(rng, 5);
        const Rational a = testutil::random_rational(rng);
        const Rational x = testutil::random_rational(rng);
        CHECK(r.shifted_arg(a).eval(x) == r.eval(x + a));
    }
}

TEST_CASE("rf_normalize reduces, makes the denominator monic, kills zero") {
    SUBCASE("gcd cancellation") {
        const RationalFunction f = rf("(u^2-1)/(u-1)");
        CHECK(f.num() == Polynomial::var() + Polynomial(1));
        CHECK(f.den() == Polynomial(1));
    }
    SUBCASE("zero normalizes to 0/1") {
        const RationalFunction f(Polynomial(), Polynomial(5));
        CHECK(f.is_zero());
        CHECK(f.den() == Polynomial(1));
    }
    SUBCASE("constant times (1-u) cancels") {
        const RationalFunction f = rf("(3-3*u)/(2*u-2*u^2)");
        CHECK(f.num() == Polynomial(Rational(3, 2)));
        CHECK(f.den() == Polynomial::var());
        // Cross-check by evaluation away from the cancelled pole.
        CHECK(f.eval(Rational(1, 2)) == Rational(3));
    }
    SUBCASE("zero denominator rejected") {
        CHECK_THROWS_AS(RationalFunction(Polynomial(1), Polynomial()), Error);
    }
}

TEST_CASE("normal form is unique and normalization is idempotent") {
    Rng rng(12);
    for (int i = 0; i < 100; ++i) {
        const Polynomial num = testutil::random_polynomial(rng, 4);
        const Polynomial den = testutil::random_polynomial(rng, 4, true);
        const Polynomial scale = testutil::random_polynomial(rng, 3, true);
        const RationalFunction a(num, den);
        const RationalFunction b(num * scale, den * scale);
        CHECK(a == b);
        CHECK(RationalFunction(a.num(), a.den()) == a);
        // Cross-multiplied equality against the raw representative.
        CHECK(a.num() * den == num * a.den());
    }
}

TEST_CASE("field operations satisfy the evaluation homomorphism") {
    Rng rng(13);
    int done = 0;
    while (done < 100) {
        const RationalFunction f = testutil::random_rational_function(rng);
        const RationalFunction g = testutil::random_rational_function(rng);
        const Rational p = testutil::random_rational(rng, 20);
        if (f.den().eval(p).is_zero() || g.den().eval(p).is_zero()) continue;
        CHECK((f + g).eval(p) == f.eval(p) + g.eval(p));
        CHECK((f - g).eval(p) == f.eval(p) - g.eval(p));
        CHECK((f * g).eval(p) == f.eval(p) * g.eval(p));
        if (!g.is_zero() && !g.num().eval(p).is_zero())
            CHECK((f / g).eval(p) == f.eval(p) / g.eval(p));
        ++done;
    }
}

TEST_CASE("rf identities") {
    const RationalFunction f = rf("1/(1-u)");
    CHECK(f + rf("u/(u-1)") == RationalFunction(Rational(1)));
    CHECK(f * RationalFunction(Rational(1)) == f);
    CHECK((f - f).is_zero());
    CHECK(f.eval(Rational(2)) == Rational(-1));
    CHECK(rf("u^3").eval(Rational(0)) == Rational(0));
    CHECK(rf("(1-u^2)/(1-u)").eval(Rational(1)) == Rational(2));
    CHECK_THROWS_AS(f.eval(Rational(1)), Error);
}

TEST_CASE("cyclotomic polynomials by exact division") {
    const Polynomial u = Polynomial::var();
    CHECK(cyclotomic(1) == u - Polynomial(1));
    CHECK(cyclotomic(2) == u + Polynomial(1));
    CHECK(cyclotomic(4) == u.pow(2) + Polynomial(1));
    CHECK(cyclotomic(6) == u.pow(2) - u + Polynomial(1));

    // prod_{d | n} phi_d = u^n - 1.
    for (unsigned long long n = 1; n <= 30; ++n) {
        Polynomial prod(Rational(1));
        for (unsigned long long d = 1; d <= n; ++d)
            if (n % d == 0) prod = prod * cyclotomic(d);
        CHECK(prod == u.pow(n) - Polynomial(1));
    }
}

TEST_CASE("localized ring membership") {
    CHECK(localized_membership(rf("1/(1-u^3)"), TheoryKind::KTheory));
    CHECK_FALSE(localized_membership(rf("1/(u-2)"), TheoryKind::KTheory));
    CHECK(localized_membership(rf("5/u^2"), TheoryKind::Borel));
    CHECK_FALSE(localized_membership(rf("1/(1-u)"), TheoryKind::Borel));
    CHECK(localized_membership(rf("u^5+1"), TheoryKind::Borel));
    // Denominator phi_6 alone: index above the degree but still cyclotomic.
    CHECK(localized_membership(rf("1/(u^2-u+1)"), TheoryKind::KTheory));
    CHECK(localized_membership(rf("0"), TheoryKind::KTheory));

    SUBCASE("closed under product and sum") {
        Rng rng(14);
        std::vector<RationalFunction> pool = {
            rf("1/(1-u^3)"), rf("u^2/(1-u)"), rf("(u+2)/u^4"),
            rf("1/((1-u)*(1-u^2))"), rf("3/(u^2-u+1)"), rf("u^-2") , rf("5")};
        for (int i = 0; i < 40; ++i) {
            std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
            const RationalFunction& f = pool[pick(rng)];
            const RationalFunction& g = pool[pick(rng)];
            REQUIRE(localized_membership(f, TheoryKind::KTheory));
            REQUIRE(localized_membership(g, TheoryKind::KTheory));
            CHECK(localized_membership(f * g, TheoryKind::KTheory));
            CHECK(localized_membership(f + g, TheoryKind::KTheory));
        }
    }
}

TEST_CASE("laurent polynomial arithmetic and fraction form") {
    const LaurentPolynomial a = LaurentPolynomial::monomial(Rational(3), -2) +
                                LaurentPolynomial::monomial(Rational(1), 5);
    CHECK(a.min_exponent() == -2);
    CHECK(a.max_exponent() == 5);
    CHECK(a.coeff(0).is_zero());
    const RationalFunction f{a};
    CHECK(f.is_laurent());
    CHECK(f.as_laurent() == a);
    CHECK((a - a).is_zero());
    CHECK_THROWS_AS(LaurentPolynomial().min_exponent(), Error);
    CHECK_THROWS_AS(a.eval(Rational(0)), Error);
    CHECK(a.eval(Rational(2)) == Rational(3, 4) + Rational(32));
}
