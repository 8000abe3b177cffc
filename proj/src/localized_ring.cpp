#include "resloc/localized_ring.hpp"

#include <algorithm>
#include <vector>

#include "resloc/errors.hpp"

namespace resloc {

namespace {

std::vector<unsigned long long> divisors_of(unsigned long long d) {
    std::vector<unsigned long long> divs;
    for (unsigned long long e = 1; e * e <= d; ++e) {
        if (d % e) continue;
        divs.push_back(e);
        if (e != d / e) divs.push_back(d / e);
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

unsigned long long totient(unsigned long long d) {
    unsigned long long result = d;
    for (unsigned long long p = 2; p * p <= d; ++p) {
        if (d % p) continue;
        while (d % p == 0) d /= p;
        result -= result / p;
    }
    if (d > 1) result -= result / d;
    return result;
}

Polynomial u_power_minus_one(unsigned long long d) {
    std::vector<Rational> c(d + 1);
    c[0] = Rational(-1);
    c[d] = Rational(1);
    return Polynomial(std::move(c));
}

}  // namespace

Polynomial cyclotomic(unsigned long long d) {
    if (d == 0) fail(Errc::BadPolynomial, "cyclotomic index must be positive");
    // Bottom-up over the divisors of d, no shared state.
    const auto divs = divisors_of(d);
    std::vector<Polynomial> table(divs.size());
    for (std::size_t i = 0; i < divs.size(); ++i) {
        Polynomial p = u_power_minus_one(divs[i]);
        for (std::size_t j = 0; j < i; ++j)
            if (divs[i] % divs[j] == 0) p = p.exact_div(table[j]);
        table[i] = std::move(p);
    }
    return table.back();
}

bool localized_membership(const RationalFunction& f, TheoryKind theory) {
    if (f.is_zero()) return true;
    if (theory == TheoryKind::Borel) return f.is_laurent();

    // K-theory: strip powers of u, then peel cyclotomic factors. A factor
    // phi_d of a degree-n denominator needs phi(d) <= n, and phi(d) >= sqrt(d)
    // for d > 6, so indices above max(6, n^2) cannot occur.
    Polynomial rem = f.den().strip_valuation();
    if (rem.is_one()) return true;
    std::size_t n = rem.degree();
    const unsigned long long limit =
        std::max<unsigned long long>(6, static_cast<unsigned long long>(n) * n);
    for (unsigned long long d = 1; d <= limit && !rem.is_one(); ++d) {
        if (totient(d) > rem.degree()) continue;
        const Polynomial phi = cyclotomic(d);
        while (true) {
            auto [q, r] = Polynomial::divmod(rem, phi);
            if (!r.is_zero()) break;
            rem = std::move(q);
            if (rem.is_one()) break;
        }
    }
    return rem.is_one();
}

}  // namespace resloc
