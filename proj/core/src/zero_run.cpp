#include "rootpoly/zero_run.hpp"

#include <algorithm>

#include "rootpoly/errors.hpp"

namespace rootpoly {

ZeroRunReport zero_runs(const std::vector<bool>& support) {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < support.size(); ++k)
        if (support[k]) idx.push_back(k);
    if (idx.empty()) throw EmptyInput("zero_runs: no nonzero coefficients");

    ZeroRunReport rep;
    if (idx.size() == 1) {
        rep.b = rep.l = idx.front();
        return rep;
    }
    rep.b = idx[0];
    rep.l = idx[1];
    rep.max_run = idx[1] - idx[0] - 1;
    for (std::size_t j = 0; j + 1 < idx.size(); ++j) {
        const std::size_t b = idx[j], l = idx[j + 1];
        if (l - b >= 2) rep.gaps.push_back(Gap{b, l});
        // strict > keeps the lowest-b pair on ties
        if (l - b - 1 > rep.max_run) {
            rep.max_run = l - b - 1;
            rep.b = b;
            rep.l = l;
        }
    }
    return rep;
}

ZeroRunReport zero_runs(const DensePoly& f) {
    std::vector<bool> support(f.coeffs().size());
    for (std::size_t k = 0; k < support.size(); ++k) support[k] = f.coeffs()[k] != 0;
    return zero_runs(support);
}

ZeroRunReport zero_runs(const RationalSeries& f) {
    std::vector<bool> support(f.terms());
    for (std::size_t k = 0; k < support.size(); ++k) support[k] = f[k] != 0;
    return zero_runs(support);
}

ZeroRunReport check_power_run(const DensePoly& f, unsigned t) {
    if (t == 0) throw InvalidOrder("check_power_run: exponent must be >= 1");
    if (f.is_zero()) throw EmptyInput("check_power_run: zero polynomial");
    const std::size_t d = *f.degree();
    const u64 p = f.modulus();

    ZeroRunReport rep = zero_runs(f.pow(t));
    rep.d = d;
    rep.hypothesis_ok = static_cast<u128>(d) * t < p;
    for (const Gap& gap : rep.gaps)
        if (gap.l - gap.b > d) rep.bound_ok = false;
    if (rep.hypothesis_ok && !rep.bound_ok)
        throw TheoremViolation("power of degree-" + std::to_string(d) +
                               " polynomial has a zero run of length " +
                               std::to_string(rep.max_run) + " >= " + std::to_string(d));
    return rep;
}

AbcTriple gap_triple(const DensePoly& g, const Gap& gap) {
    const auto deg = g.degree();
    if (!deg || gap.l <= gap.b + 1 || gap.l > *deg)
        throw HypothesisViolated("gap_triple: not an interior gap of g");
    if (g.coeff(gap.b) == 0 || g.coeff(gap.l) == 0)
        throw HypothesisViolated("gap_triple: gap endpoints must be nonzero");
    for (std::size_t k = gap.b + 1; k < gap.l; ++k)
        if (g.coeff(k) != 0) throw HypothesisViolated("gap_triple: gap interior not zero");

    const u64 p = g.modulus();
    std::vector<u64> low(g.coeffs().begin(), g.coeffs().begin() + static_cast<std::ptrdiff_t>(gap.b) + 1);
    std::vector<u64> high(g.coeffs().size(), 0);
    std::copy(g.coeffs().begin() + static_cast<std::ptrdiff_t>(gap.l), g.coeffs().end(),
              high.begin() + static_cast<std::ptrdiff_t>(gap.l));
    DensePoly b_part(p, std::move(low));
    DensePoly a_part(p, std::move(high));

    // a + b = g stays true after dividing all three by gcd(a, b)
    const DensePoly common = poly_gcd(a_part, b_part);
    auto reduce = [&](const DensePoly& f) {
        auto [q, r] = divmod(f, common);
        if (!r.is_zero()) throw TheoremViolation("gap_triple: gcd does not divide its argument");
        return q;
    };
    return AbcTriple{reduce(a_part), reduce(b_part), reduce(g)};
}

AbcReport abc_check(const DensePoly& a, const DensePoly& b, const DensePoly& c) {
    if (a.is_zero() || b.is_zero() || c.is_zero())
        throw HypothesisViolated("abc_check: inputs must be nonzero");
    if (a + b != c) throw HypothesisViolated("abc_check: a + b != c");
    const auto coprime = [](const DensePoly& f, const DensePoly& g) {
        return poly_gcd(f, g).degree() == std::size_t{0};
    };
    if (!coprime(a, b) || !coprime(a, c) || !coprime(b, c))
        throw HypothesisViolated("abc_check: inputs must be pairwise coprime");
    if (derivative(a).is_zero() && derivative(b).is_zero() && derivative(c).is_zero())
        throw HypothesisViolated("abc_check: all derivatives vanish");

    AbcReport rep;
    rep.max_deg = std::max({a.degree().value_or(0), b.degree().value_or(0), c.degree().value_or(0)});
    rep.rad_deg = radical(a * b * c).degree().value_or(0);
    rep.holds = rep.rad_deg >= 1 && rep.max_deg <= rep.rad_deg - 1;
    if (!rep.holds)
        throw TheoremViolation("abc_check: max degree " + std::to_string(rep.max_deg) +
                               " exceeds radical degree " + std::to_string(rep.rad_deg) + " - 1");
    return rep;
}

TwoValueClass two_value_classify(const DensePoly& f, const DensePoly& C, u64 m) {
    if (f.modulus() != C.modulus())
        throw ModulusMismatch("two_value_classify: mixed moduli");
    FieldContext F(f.modulus());
    const u64 p = F.p();
    if (m == 0 || (p - 1) % m != 0)
        throw InvalidOrder("two_value_classify: m must divide p - 1");
    const std::size_t deg_c = C.degree().value_or(0);
    if (static_cast<u128>(deg_c) * 3 > m)
        throw HypothesisViolated("two_value_classify: need 3 deg(C) <= m");

    // f^2 must agree with C on the whole order-m subgroup
    const FieldElement h = pow(F.element(F.generator()), (p - 1) / m);
    FieldElement x(1, p);
    for (u64 j = 0; j < m; ++j) {
        const FieldElement fx = f.evaluate(x);
        if (fx * fx != C.evaluate(x))
            throw HypothesisViolated("two_value_classify: f(a)^2 != C(a) on the subgroup");
        x = x * h;
    }

    const DensePoly f2 = f * f;
    if (f2 == C) return TwoValueClass::identity;
    if (f2 == C * DensePoly::monomial(p, static_cast<std::size_t>(m)))
        return TwoValueClass::twisted;
    const std::size_t deg_f = f.degree().value_or(0);
    if (static_cast<u128>(deg_f) * 3 >= static_cast<u128>(m) * 2)
        return TwoValueClass::high_degree;
    throw TheoremViolation("two_value_classify: no branch applies below degree 2m/3");
}

} // namespace rootpoly
