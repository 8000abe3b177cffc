#pragma once

#include <random>
#include <vector>

#include "resloc/laurent.hpp"
#include "resloc/polynomial.hpp"
#include "resloc/rational.hpp"
#include "resloc/rational_function.hpp"

namespace testutil {

using resloc::LaurentPolynomial;
using resloc::Polynomial;
using resloc::Rational;
using resloc::RationalFunction;

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, long long max_abs = 9) {
    std::uniform_int_distribution<long long> num(-max_abs, max_abs);
    std::uniform_int_distribution<long long> den(1, max_abs);
    return Rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(Rng& rng, long long max_abs = 9) {
    while (true) {
        Rational r = random_rational(rng, max_abs);
        if (!r.is_zero()) return r;
    }
}

inline Polynomial random_polynomial(Rng& rng, std::size_t max_degree, bool nonzero = false) {
    std::uniform_int_distribution<std::size_t> deg(0, max_degree);
    while (true) {
        std::vector<Rational> coeffs(deg(rng) + 1);
        for (auto& c : coeffs) c = random_rational(rng);
        Polynomial p{std::move(coeffs)};
        if (!nonzero || !p.is_zero()) return p;
    }
}

inline LaurentPolynomial random_laurent(Rng& rng, long long min_exp, long long max_exp) {
    std::uniform_int_distribution<long long> exp(min_exp, max_exp);
    std::uniform_int_distribution<int> count(1, 5);
    LaurentPolynomial p;
    const int n = count(rng);
    for (int i = 0; i < n; ++i)
        p += LaurentPolynomial::monomial(random_rational(rng), exp(rng));
    return p;
}

inline RationalFunction random_rational_function(Rng& rng, std::size_t max_degree = 4) {
    return RationalFunction(random_polynomial(rng, max_degree),
                            random_polynomial(rng, max_degree, /*nonzero=*/true));
}

}  // namespace testutil
