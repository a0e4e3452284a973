#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rootpoly/poly.hpp"

using namespace rootpoly;

namespace {

DensePoly rand_poly(u64 p, std::size_t max_deg, std::mt19937_64& rng, bool force_deg = false) {
    std::size_t d = rng() % (max_deg + 1);
    if (force_deg) d = max_deg;
    std::vector<u64> c(d + 1);
    for (auto& v : c) v = rng() % p;
    if (c.back() == 0) c.back() = 1 + rng() % (p - 1);
    return DensePoly(p, std::move(c));
}

// independent oracle: quadratic-time convolution
DensePoly mul_brute(const DensePoly& a, const DensePoly& b) {
    u64 p = a.modulus();
    if (a.is_zero() || b.is_zero()) return DensePoly(p);
    std::vector<u64> out(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            out[i + j] = (out[i + j] + u128(a.coeffs()[i]) * b.coeffs()[j]) % p;
    return DensePoly(p, std::move(out));
}

} // namespace

TEST_CASE("degree sentinel and trimming") {
    DensePoly z(13);
    CHECK(z.is_zero());
    CHECK_FALSE(z.degree().has_value());
    DensePoly f(13, {5, 0, 0});
    CHECK(f.degree() == std::size_t{0});
    DensePoly g(13, {0, 0, 26});
    CHECK(g.is_zero()); // 26 = 0 mod 13
    DensePoly h(13, {1, 1});
    CHECK((h - h).is_zero());
    CHECK_FALSE((h - h).degree().has_value());
}

TEST_CASE("arithmetic matches hand values over F_13") {
    DensePoly f(13, {0, 0, 3, 0, 0, 11}); // 3X^2 + 11X^5
    CHECK(f.degree() == std::size_t{5});
    CHECK(f.evaluate(3) == 9); // 3*9 + 11*243 = 27 + 2673 = 2700 = 9 mod 13
    CHECK(f.evaluate(0) == 0);
    DensePoly g(13, {1, 1});
    CHECK((f + g).coeffs() == std::vector<u64>{1, 1, 3, 0, 0, 11});
    CHECK((f * g).coeffs() == std::vector<u64>{0, 0, 3, 3, 0, 11, 11});
    CHECK((-g).coeffs() == std::vector<u64>{12, 12});
}

TEST_CASE("multiplication: karatsuba agrees with schoolbook oracle across the threshold") {
    std::mt19937_64 rng(101);
    for (u64 p : {u64{13}, u64{10007}, u64{2305843009213693951ull}}) {
        for (std::size_t n : {std::size_t{1}, std::size_t{7}, std::size_t{47}, std::size_t{48}, std::size_t{49}, std::size_t{130}, std::size_t{300}}) {
            DensePoly a = rand_poly(p, n, rng, true);
            DensePoly b = rand_poly(p, n / 2 + 1, rng, true);
            CHECK(a * b == mul_brute(a, b));
        }
    }
}

TEST_CASE("pow by squaring matches iterated multiplication") {
    std::mt19937_64 rng(7);
    DensePoly f = rand_poly(101, 4, rng, true);
    DensePoly acc = DensePoly::constant(101, 1);
    for (u64 e = 0; e <= 9; ++e) {
        CHECK(f.pow(e) == acc);
        acc = mul_brute(acc, f);
    }
    CHECK(DensePoly(7).pow(0) == DensePoly::constant(7, 1)); // 0^0 = 1 here
    CHECK(DensePoly(7).pow(3).is_zero());
}

TEST_CASE("cyclic reduction folds exponents onto k mod m") {
    // X^6 + X^3 + 2 mod X^3 - 1 = X^3->1 twice: (1 + 1 + 2) = 4... laid out: k=6 -> 0, k=3 -> 0
    DensePoly f(13, {2, 0, 0, 1, 0, 0, 1});
    CHECK(f.mod_cyclic(3).coeffs() == std::vector<u64>{4});
    // X^5 stays X^5 mod X^6 - 1
    DensePoly g(13, {0, 0, 3, 0, 0, 11});
    CHECK(g.mod_cyclic(6) == g);
    CHECK(g.mod_cyclic(2).coeffs() == std::vector<u64>{3, 11});
    // evaluation agreement: f(a) = (f mod X^m - 1)(a) whenever a^m = 1
    DensePoly h(13, {5, 1, 0, 2, 0, 0, 0, 9, 4});
    for (u64 a : {u64{1}, u64{3}, u64{9}}) { // cube roots of 1 mod 13
        CHECK(h.evaluate(a) == h.mod_cyclic(3).evaluate(a));
    }
}

TEST_CASE("derivative: hand value and product rule") {
    DensePoly f(13, {7, 0, 0, 1}); // X^3 + 7
    CHECK(derivative(f).coeffs() == std::vector<u64>{0, 0, 3});
    CHECK(derivative(DensePoly::constant(13, 5)).is_zero());
    // char-p collapse: d/dX X^13 = 13 X^12 = 0 mod 13
    CHECK(derivative(DensePoly::monomial(13, 13)).is_zero());
    std::mt19937_64 rng(3);
    for (int k = 0; k < 30; ++k) {
        DensePoly a = rand_poly(101, 6, rng), b = rand_poly(101, 6, rng);
        CHECK(derivative(a * b) == derivative(a) * b + a * derivative(b));
    }
}

TEST_CASE("divmod and gcd") {
    DensePoly f(13, {1, 0, 0, 0, 1}); // X^4 + 1
    DensePoly g(13, {1, 1});          // X + 1
    auto [q, r] = divmod(f, g);
    CHECK(q * g + r == f);
    CHECK(r.degree() < g.degree());
    CHECK_THROWS_AS(divmod(f, DensePoly(13)), DivisionByZero);

    std::mt19937_64 rng(17);
    for (int k = 0; k < 50; ++k) {
        DensePoly a = rand_poly(10007, 12, rng), b = rand_poly(10007, 7, rng);
        if (b.is_zero()) continue;
        auto [qq, rr] = divmod(a, b);
        CHECK(qq * b + rr == a);
        if (!rr.is_zero()) CHECK(*rr.degree() < *b.degree());
        // gcd divides both and is monic
        DensePoly d = poly_gcd(a, b);
        if (!d.is_zero()) {
            CHECK(d.is_monic());
            CHECK(divmod(a, d).second.is_zero());
            CHECK(divmod(b, d).second.is_zero());
        }
    }
    // shared factor shows up
    DensePoly common(10007, {3, 1});
    DensePoly u = rand_poly(10007, 4, rng) * common;
    DensePoly v = rand_poly(10007, 5, rng) * common;
    DensePoly d = poly_gcd(u, v);
    CHECK(divmod(d, common).second.is_zero());
}

TEST_CASE("radical strips multiplicities") {
    u64 p = 101;
    DensePoly x1(p, {1, 1});  // X + 1
    DensePoly x2(p, {2, 1});  // X + 2
    DensePoly f = x1 * x1 * x1 * x2;
    CHECK(radical(f) == x1 * x2);
    CHECK(radical(DensePoly::constant(p, 9)) == DensePoly::constant(p, 1));
    CHECK(radical(DensePoly::monomial(p, 5, 7)).coeffs() == std::vector<u64>{0, 1});
    CHECK_THROWS_AS(radical(DensePoly(p)), EmptyInput);
}

TEST_CASE("interpolation: round trip, duplicate rejection, delta basis") {
    u64 p = 13;
    std::mt19937_64 rng(23);
    for (int k = 0; k < 30; ++k) {
        DensePoly f = rand_poly(p, 5, rng);
        std::vector<std::pair<FieldElement, FieldElement>> pts;
        for (u64 x = 1; x <= 7; ++x) pts.push_back({FieldElement(x, p), f.evaluate(FieldElement(x, p))});
        CHECK(interpolate(pts) == f);
    }
    std::vector<std::pair<FieldElement, FieldElement>> dup = {
        {FieldElement(1, p), FieldElement(2, p)}, {FieldElement(1, p), FieldElement(3, p)}};
    CHECK_THROWS_AS(interpolate(dup), DuplicateNode);
    CHECK_THROWS_AS(interpolate({}), EmptyInput);

    // delta_at: 1 on its own node, 0 on the rest of the coset of squares (m = 6)
    u64 m = 6;
    for (u64 alpha : {u64{1}, u64{3}, u64{4}, u64{9}, u64{10}, u64{12}}) {
        DensePoly dlt = delta_at(FieldElement(alpha, p), m);
        CHECK(dlt.degree() == std::size_t{m - 1});
        for (u64 beta : {u64{1}, u64{3}, u64{4}, u64{9}, u64{10}, u64{12}}) {
            CHECK(dlt.evaluate(beta) == (alpha == beta ? 1 : 0));
        }
    }
    CHECK_THROWS_AS(delta_at(FieldElement(0, p), m), DivisionByZero);
    CHECK_THROWS_AS(delta_at(FieldElement(1, p), 13), DivisionByZero); // m = 0 mod p
}

TEST_CASE("interpolation of signed roots reproduces known minimal square-root polynomial") {
    // p = 7: nodes are the squares, interpolating a -> a^2 gives X^2 = X^{(p+1)/4}
    u64 p = 7;
    std::vector<std::pair<FieldElement, FieldElement>> pts;
    for (u64 a : {u64{1}, u64{2}, u64{4}}) pts.push_back({FieldElement(a, p), FieldElement(a * a % p, p)});
    DensePoly f = interpolate(pts);
    CHECK(f == DensePoly::monomial(p, 2));
}
