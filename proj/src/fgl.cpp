#include "resloc/fgl.hpp"

#include <array>

#include "resloc/errors.hpp"

namespace resloc {

void FormalGroupLaw::set(int k, int l, LaurentPolynomial a) {
    if (k < 0 || l < 0 || k > order_ || l > order_)
        fail(Errc::InvalidFgl, "coefficient index outside 0..order");
    if (a.is_zero())
        a_.erase({k, l});
    else
        a_[{k, l}] = std::move(a);
}

LaurentPolynomial FormalGroupLaw::at(int k, int l) const {
    auto it = a_.find({k, l});
    return it == a_.end() ? LaurentPolynomial() : it->second;
}

BuiltinFgl fgl_builtin(FglName name) {
    FormalGroupLaw law(1);
    law.set(1, 0, LaurentPolynomial(Rational(1)));
    law.set(0, 1, LaurentPolynomial(Rational(1)));
    if (name == FglName::Additive) {
        // F = X + Y, e = -u.
        return {law, RationalFunction(Polynomial::monomial(Rational(-1), 1))};
    }
    // F = X + Y - XY, e = 1 - u^-1.
    law.set(1, 1, LaurentPolynomial(Rational(-1)));
    LaurentPolynomial e = LaurentPolynomial(Rational(1)) - LaurentPolynomial::monomial(Rational(1), -1);
    return {law, RationalFunction(e)};
}

namespace {

// Trivariate truncated polynomial with rational-function coefficients,
// used only by the associativity check.
struct Tri {
    int cap;
    std::map<std::array<int, 3>, RationalFunction> terms;

    void add(std::array<int, 3> e, const RationalFunction& c) {
        if (c.is_zero() || e[0] + e[1] + e[2] > cap) return;
        auto it = terms.find(e);
        if (it == terms.end()) {
            terms.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
};

Tri tri_mul(const Tri& a, const Tri& b) {
    Tri r{a.cap, {}};
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms)
            r.add({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    return r;
}

Tri tri_pow(const Tri& a, int e, int cap) {
    Tri acc{cap, {}};
    acc.add({0, 0, 0}, RationalFunction(Rational(1)));
    for (int i = 0; i < e; ++i) acc = tri_mul(acc, a);
    return acc;
}

// F(A, B) for series arguments with zero constant term.
Tri tri_apply(const FormalGroupLaw& law, const Tri& a, const Tri& b, int cap) {
    Tri r{cap, {}};
    for (int k = 0; k <= law.order() && k <= cap; ++k) {
        for (int l = 0; l <= law.order() && k + l <= cap; ++l) {
            const LaurentPolynomial akl = law.at(k, l);
            if (akl.is_zero()) continue;
            const RationalFunction c{akl};
            const Tri term = tri_mul(tri_pow(a, k, cap), tri_pow(b, l, cap));
            for (const auto& [e, v] : term.terms) r.add(e, c * v);
        }
    }
    return r;
}

bool fgl_associative(const FormalGroupLaw& law, int cap) {
    Tri x{cap, {}}, y{cap, {}}, z{cap, {}};
    x.add({1, 0, 0}, RationalFunction(Rational(1)));
    y.add({0, 1, 0}, RationalFunction(Rational(1)));
    z.add({0, 0, 1}, RationalFunction(Rational(1)));
    const Tri fxy = tri_apply(law, x, y, cap);
    const Tri fyz = tri_apply(law, y, z, cap);
    const Tri left = tri_apply(law, fxy, z, cap);
    const Tri right = tri_apply(law, x, fyz, cap);
    return left.terms == right.terms;
}

}  // namespace

bool fgl_validate(const FormalGroupLaw& law, bool check_associativity) {
    const LaurentPolynomial one(Rational(1));
    for (int k = 0; k <= law.order(); ++k) {
        const LaurentPolynomial expected = (k == 1) ? one : LaurentPolynomial();
        if (law.at(k, 0) != expected || law.at(0, k) != expected) return false;
    }
    for (const auto& [idx, a] : law.entries())
        if (law.at(idx.second, idx.first) != a) return false;
    if (check_associativity && !fgl_associative(law, 6)) return false;
    return true;
}

EulerSeries euler_series(const FormalGroupLaw& law, const RationalFunction& e, int N) {
    if (!fgl_validate(law)) fail(Errc::InvalidFgl, "formal group law fails the unit/symmetry axioms");
    EulerSeries s;
    s.b.reserve(static_cast<std::size_t>(N) + 1);
    // Powers of e up to the table order.
    std::vector<RationalFunction> epow(static_cast<std::size_t>(law.order()) + 1);
    epow[0] = RationalFunction(Rational(1));
    for (int k = 1; k <= law.order(); ++k) epow[static_cast<std::size_t>(k)] = epow[static_cast<std::size_t>(k - 1)] * e;
    for (int l = 0; l <= N; ++l) {
        RationalFunction bl;
        if (l <= law.order())
            for (int k = 0; k <= law.order(); ++k) {
                const LaurentPolynomial akl = law.at(k, l);
                if (akl.is_zero()) continue;
                bl += RationalFunction(akl) * epow[static_cast<std::size_t>(k)];
            }
        s.b.push_back(std::move(bl));
    }
    return s;
}

InvertedEulerSeries invert_euler_series(const EulerSeries& s, int N) {
    if (s.b.empty() || s.b[0].is_zero())
        fail(Errc::NonInvertibleLeadingTerm, "leading Euler coefficient b_0 is zero");
    auto b = [&](int l) {
        return l < static_cast<int>(s.b.size()) ? s.b[static_cast<std::size_t>(l)] : RationalFunction();
    };
    InvertedEulerSeries inv;
    inv.e_inverse = s.b[0].reciprocal();
    inv.c.reserve(static_cast<std::size_t>(N));
    std::vector<RationalFunction> g;  // g[k]: y^k coefficient of the inverse
    g.push_back(inv.e_inverse);
    for (int k = 1; k <= N; ++k) {
        RationalFunction acc;
        for (int j = 1; j <= k; ++j) {
            const RationalFunction bj = b(j);
            if (bj.is_zero()) continue;
            acc += bj * g[static_cast<std::size_t>(k - j)];
        }
        g.push_back(-(acc / s.b[0]));
        inv.c.push_back(g.back());
    }
    return inv;
}

bool AxiomReport::passed() const {
    if (!axiom1_violations.empty()) return false;
    if (axiom2_value != Rational(-1)) return false;
    for (bool killed : c_kill)
        if (!killed) return false;
    return true;
}

AxiomReport residue_axiom_check(ResidueKind kind, const FormalGroupLaw& law,
                                const RationalFunction& e, int N) {
    AxiomReport report;
    // Axiom 1 sampled on the monomial basis of the unlocalized ring.
    const long long lo = theory_of(kind) == TheoryKind::Borel ? 0 : -N;
    for (long long j = lo; j <= N; ++j) {
        const auto mono = RationalFunction(LaurentPolynomial::monomial(Rational(1), j));
        if (residue_map(kind, mono) != Rational(0))
            report.axiom1_violations.push_back("u^" + std::to_string(j));
    }
    const auto series = euler_series(law, e, N);
    const auto inv = invert_euler_series(series, N);
    report.axiom2_value = residue_map(kind, inv.e_inverse);
    report.c_kill.reserve(inv.c.size());
    for (const auto& ck : inv.c) report.c_kill.push_back(residue_map(kind, ck) == Rational(0));
    return report;
}

}  // namespace resloc
