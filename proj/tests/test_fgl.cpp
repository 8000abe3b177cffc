#include <doctest.h>

#include "resloc/errors.hpp"
#include "resloc/expr_parser.hpp"
#include "resloc/fgl.hpp"
#include "testutil.hpp"

using namespace resloc;
using testutil::Rng;

namespace {

RationalFunction rf(const std::string& expr) {
    return parse_expression(expr);
}

// (sum b_l y^l) * (e^{-1} + sum c_k y^k) == 1 mod y^{N+1}.
void check_reconstruction(const EulerSeries& s, const InvertedEulerSeries& inv, int N) {
    std::vector<RationalFunction> g;
    g.push_back(inv.e_inverse);
    g.insert(g.end(), inv.c.begin(), inv.c.end());
    for (int k = 0; k <= N; ++k) {
        RationalFunction acc;
        for (int j = 0; j <= k; ++j) {
            const RationalFunction bj =
                j < static_cast<int>(s.b.size()) ? s.b[static_cast<std::size_t>(j)] : RationalFunction();
            if (bj.is_zero()) continue;
            acc += bj * g[static_cast<std::size_t>(k - j)];
        }
        CHECK(acc == (k == 0 ? RationalFunction(Rational(1)) : RationalFunction()));
    }
}

}  // namespace

TEST_CASE("built-in laws and their euler elements") {
    const BuiltinFgl additive = fgl_builtin(FglName::Additive);
    CHECK(additive.law.at(1, 0) == LaurentPolynomial(Rational(1)));
    CHECK(additive.law.at(0, 1) == LaurentPolynomial(Rational(1)));
    CHECK(additive.law.at(1, 1).is_zero());
    CHECK(additive.euler == rf("-u"));
    CHECK(fgl_validate(additive.law, /*check_associativity=*/true));

    const BuiltinFgl mult = fgl_builtin(FglName::Multiplicative);
    CHECK(mult.law.at(1, 1) == LaurentPolynomial(Rational(-1)));
    CHECK(mult.euler == rf("1 - u^-1"));
    CHECK(fgl_validate(mult.law, /*check_associativity=*/true));
}

TEST_CASE("validation rejects broken tables") {
    FormalGroupLaw bad(2);
    bad.set(1, 0, LaurentPolynomial(Rational(1)));
    bad.set(0, 1, LaurentPolynomial(Rational(1)));
    bad.set(2, 0, LaurentPolynomial(Rational(1)));
    CHECK_FALSE(fgl_validate(bad));

    FormalGroupLaw asym(2);
    asym.set(1, 0, LaurentPolynomial(Rational(1)));
    asym.set(0, 1, LaurentPolynomial(Rational(1)));
    asym.set(1, 2, LaurentPolynomial(Rational(-1)));  // (2,1) missing
    CHECK_FALSE(fgl_validate(asym));

    FormalGroupLaw nonassoc(2);
    nonassoc.set(1, 0, LaurentPolynomial(Rational(1)));
    nonassoc.set(0, 1, LaurentPolynomial(Rational(1)));
    nonassoc.set(2, 2, LaurentPolynomial(Rational(1)));
    CHECK(fgl_validate(nonassoc));  // unit/symmetry axioms hold
    CHECK_FALSE(fgl_validate(nonassoc, /*check_associativity=*/true));
}

TEST_CASE("euler series coefficients") {
    const BuiltinFgl additive = fgl_builtin(FglName::Additive);
    const EulerSeries sa = euler_series(additive.law, additive.euler, 5);
    CHECK(sa.b[0] == rf("-u"));
    CHECK(sa.b[1] == RationalFunction(Rational(1)));
    for (int l = 2; l <= 5; ++l) CHECK(sa.b[static_cast<std::size_t>(l)].is_zero());

    const BuiltinFgl mult = fgl_builtin(FglName::Multiplicative);
    const EulerSeries sm = euler_series(mult.law, mult.euler, 5);
    CHECK(sm.b[0] == mult.euler);
    CHECK(sm.b[1] == RationalFunction(Rational(1)) - mult.euler);
    for (int l = 2; l <= 5; ++l) CHECK(sm.b[static_cast<std::size_t>(l)].is_zero());
}

TEST_CASE("inverted euler series closed forms") {
    const int N = 16;
    SUBCASE("multiplicative: c_k = (1-u)^-k - (1-u)^-k-1") {
        const BuiltinFgl mult = fgl_builtin(FglName::Multiplicative);
        const auto inv = invert_euler_series(euler_series(mult.law, mult.euler, N), N);
        CHECK(inv.e_inverse == rf("u/(u-1)"));
        for (int k = 1; k <= N; ++k) {
            const RationalFunction expected = rf("1-u").pow(-k) - rf("1-u").pow(-k - 1);
            CHECK(inv.c[static_cast<std::size_t>(k - 1)] == expected);
        }
    }
    SUBCASE("additive: c_k = -u^-k-1, the sign the reconstruction fixes") {
        const BuiltinFgl additive = fgl_builtin(FglName::Additive);
        const auto inv = invert_euler_series(euler_series(additive.law, additive.euler, N), N);
        CHECK(inv.e_inverse == rf("-u^-1"));
        for (int k = 1; k <= N; ++k)
            CHECK(inv.c[static_cast<std::size_t>(k - 1)] == -rf("u").pow(-k - 1));
    }
    SUBCASE("constant series inverts to 1/e alone") {
        EulerSeries s;
        s.b.push_back(rf("-u"));
        const auto inv = invert_euler_series(s, 6);
        CHECK(inv.e_inverse == rf("-u^-1"));
        for (const auto& c : inv.c) CHECK(c.is_zero());
    }
    SUBCASE("b_0 = 0 is rejected") {
        EulerSeries s;
        s.b.push_back(RationalFunction());
        CHECK_THROWS_AS(invert_euler_series(s, 4), Error);
    }
}

TEST_CASE("reconstruction invariant") {
    const int N = 16;
    for (auto name : {FglName::Additive, FglName::Multiplicative}) {
        const BuiltinFgl b = fgl_builtin(name);
        const EulerSeries s = euler_series(b.law, b.euler, N);
        check_reconstruction(s, invert_euler_series(s, N), N);
    }

    // Random valid laws with small integer a_{k,l} entries.
    Rng rng(31);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int trial = 0; trial < 20; ++trial) {
        FormalGroupLaw law(3);
        law.set(1, 0, LaurentPolynomial(Rational(1)));
        law.set(0, 1, LaurentPolynomial(Rational(1)));
        for (int k = 1; k <= 3; ++k)
            for (int l = k; l <= 3; ++l) {
                const LaurentPolynomial a{Rational(entry(rng))};
                law.set(k, l, a);
                law.set(l, k, a);
            }
        REQUIRE(fgl_validate(law));
        for (const RationalFunction& e : {rf("-u"), rf("1-u^-1")}) {
            const EulerSeries s = euler_series(law, e, 8);
            check_reconstruction(s, invert_euler_series(s, 8), 8);
        }
    }
}

TEST_CASE("residue axiom check on the three worked pairs") {
    const int N = 16;
    const BuiltinFgl additive = fgl_builtin(FglName::Additive);
    const BuiltinFgl mult = fgl_builtin(FglName::Multiplicative);

    const AxiomReport borel =
        residue_axiom_check(ResidueKind::BorelRes, additive.law, additive.euler, N);
    CHECK(borel.passed());
    CHECK(borel.axiom2_value == Rational(-1));

    const AxiomReport rho1 = residue_axiom_check(ResidueKind::Rho1, mult.law, mult.euler, N);
    CHECK(rho1.passed());

    const AxiomReport rho0inf = residue_axiom_check(ResidueKind::Rho0Inf, mult.law, mult.euler, N);
    CHECK(rho0inf.passed());

    SUBCASE("stability: passing at N means passing at every smaller order") {
        for (int n = 1; n < N; ++n) {
            CHECK(residue_axiom_check(ResidueKind::BorelRes, additive.law, additive.euler, n).passed());
            CHECK(residue_axiom_check(ResidueKind::Rho1, mult.law, mult.euler, n).passed());
            CHECK(residue_axiom_check(ResidueKind::Rho0Inf, mult.law, mult.euler, n).passed());
        }
    }

    SUBCASE("mismatched pair fails axiom 2") {
        // rho1 against the additive e = -u: rho1(-u^-1) = 0, not -1.
        const AxiomReport crossed =
            residue_axiom_check(ResidueKind::Rho1, additive.law, additive.euler, 4);
        CHECK_FALSE(crossed.passed());
        CHECK(crossed.axiom2_value == Rational(0));
    }
}
