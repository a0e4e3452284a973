#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "rootpoly/search.hpp"

using namespace rootpoly;

TEST_CASE("task geometry") {
    TaskGeometry sq = TaskGeometry::build(17, 2);
    CHECK(sq.tau == 2);
    CHECK(sq.n == 8);
    CHECK(sq.g == 3);
    CHECK(sq.zeta == 16); // -1
    for (u64 j = 0; j < 8; ++j) {
        CHECK(sq.nodes[j] == modarith::pow(9, j, 17));
        CHECK(sq.bases[j] == modarith::pow(3, j, 17));
        CHECK(modarith::mul(sq.bases[j], sq.bases[j], 17) == sq.nodes[j]);
    }

    TaskGeometry cube = TaskGeometry::build(13, 3);
    CHECK(cube.tau == 3);
    CHECK(cube.n == 4);
    CHECK(cube.zeta == 3);
    CHECK(cube.nodes == std::vector<u64>{1, 8, 12, 5});
    CHECK(cube.bases == std::vector<u64>{1, 2, 4, 8});
    for (u64 j = 0; j < 4; ++j)
        CHECK(modarith::pow(cube.bases[j], 3, 13) == cube.nodes[j]);

    // root branches cover all tau roots: bases * zeta^c
    TaskGeometry five = TaskGeometry::build(31, 5);
    CHECK(five.tau == 5);
    CHECK(five.n == 6);
    for (u64 j = 0; j < five.n; ++j)
        for (u64 c = 0; c < 5; ++c) {
            u64 root = modarith::mul(five.bases[j], modarith::pow(five.zeta, c, 31), 31);
            CHECK(modarith::pow(root, 5, 31) == five.nodes[j]);
        }
}

TEST_CASE("degree floors") {
    auto b = degree_bound(7, 2, 0);
    CHECK(b.value == 2);
    CHECK(b.name == "(p+1)/4");
    CHECK(b.equality);
    CHECK(degree_bound(11, 2, 0).value == 3);
    CHECK(degree_bound(23, 2, 0).value == 6);

    CHECK(degree_bound(13, 2, 0).value == 4);
    CHECK(degree_bound(13, 2, 0).name == "(p-1)/3");
    CHECK_FALSE(degree_bound(13, 2, 0).equality);
    CHECK(degree_bound(17, 2, 0).value == 6);
    CHECK(degree_bound(29, 2, 0).value == 10);
    CHECK(degree_bound(37, 2, 0).value == 12);

    CHECK(degree_bound(13, 2, 1).value == 3);
    CHECK(degree_bound(13, 2, 1).name == "(p-1)/3 - e");
    CHECK(degree_bound(13, 2, 2).value == 2);
    CHECK(degree_bound(17, 2, 1).value == 5);
    CHECK(degree_bound(19, 2, 1).value == 4); // ceil((19-1-2)/4)
    CHECK(degree_bound(19, 2, 1).name == "(p-1)/4 - e/2");

    // small fields fall back to the root-counting floor
    CHECK(degree_bound(5, 2, 0).value == 1);
    CHECK(degree_bound(5, 2, 0).name == "trivial");
    CHECK(degree_bound(3, 2, 0).value == 0);

    // t >= 3: the special residue classes keep the trivial floor
    CHECK(degree_bound(13, 3, 0).value == 2);
    CHECK(degree_bound(13, 3, 0).name == "((p-1)/t - e)/t");
    CHECK(degree_bound(19, 3, 0).value == 4);
    CHECK(degree_bound(19, 3, 0).name == "2p/(t(t+1)) - e");
    CHECK(degree_bound(41, 5, 0).value == 3);
    CHECK(degree_bound(13, 12, 0).value == 0); // one node forces nothing
}

TEST_CASE("square-root minima and witnesses") {
    const struct {
        u64 p;
        std::size_t deg;
        const char* wit; // lexicographically least witness of minimal degree
    } cases[] = {
        {7, 2, "+++"},          {11, 3, "+-+-+"},
        {13, 5, "++++++"},      {17, 6, "+++++--+"},
        {19, 5, "+-+-+-+-+"},   {23, 6, "+-+-+-+-+-+"},
        {29, 11, "++--++--++--++"},
    };
    for (const auto& c : cases) {
        SearchReport r = min_degree_exhaustive(c.p);
        CHECK(r.min_degree == c.deg);
        CHECK(r.witness == c.wit);
        CHECK(r.bound_ok);
        CHECK(r.vectors == u64{1} << ((c.p - 1) / 2));
        if (c.p % 4 == 3) {
            CHECK(r.min_degree == (c.p + 1) / 4);
            CHECK(r.bound.equality);
        }
        // the reported witness really interpolates to the reported degree
        DensePoly f = witness_interpolant(c.p, 2, r.witness);
        CHECK(f.degree() == c.deg);
        CHECK(verify_root_poly(f, RootTask(c.p, 2)) == 0);
    }
}

TEST_CASE("p = 37 at several thread counts") {
    SearchReport one = min_degree_exhaustive(37, 2, 1);
    CHECK(one.min_degree == 14);
    CHECK(one.witness == "++--++--++--++--++");
    CHECK(one.vectors == u64{1} << 18);
    CHECK(one.bound.value == 12);
    CHECK(one.bound_ok);
    for (unsigned threads : {2u, 4u, 7u}) {
        SearchReport r = min_degree_exhaustive(37, 2, threads);
        CHECK(r.min_degree == one.min_degree);
        CHECK(r.witness == one.witness);
        CHECK(r.vectors == one.vectors);
    }
}

TEST_CASE("higher-order roots via the branch odometer") {
    SearchReport cube = min_degree_exhaustive(13, 3);
    CHECK(cube.min_degree == 3);
    CHECK(cube.witness == "0000");
    CHECK(cube.vectors == 81);
    CHECK(cube.bound.value == 2);
    CHECK(cube.bound_ok);

    SearchReport r19 = min_degree_exhaustive(19, 3);
    CHECK(r19.min_degree == 4);
    CHECK(r19.witness == "000010");
    CHECK(r19.vectors == 729);
    CHECK(r19.bound.value == 4); // tight here
    CHECK(r19.bound_ok);

    SearchReport r17 = min_degree_exhaustive(17, 4);
    CHECK(r17.min_degree == 2);
    CHECK(r17.witness == "0102");
    CHECK(r17.vectors == 256);

    SearchReport r13 = min_degree_exhaustive(13, 4);
    CHECK(r13.min_degree == 1);
    CHECK(r13.witness == "012");
    CHECK(r13.vectors == 64);

    SearchReport r41 = min_degree_exhaustive(41, 5);
    CHECK(r41.min_degree == 5);
    CHECK(r41.witness == "00010320");
    CHECK(r41.bound.value == 3);
    CHECK(r41.bound_ok);

    // special class B: the closed-form construction attains the minimum
    SearchReport r31 = min_degree_exhaustive(31, 3, 3);
    CHECK(r31.min_degree == 7);
    CHECK(r31.witness == "0000000201");
    CHECK(construct_tth_special(31, 3).degree() == std::size_t{7});
    SearchReport r31b = min_degree_exhaustive(31, 3, 1);
    CHECK(r31b.witness == r31.witness);

    // gcd(t, p-1) = 1: a single assignment
    SearchReport unique = min_degree_exhaustive(5, 3);
    CHECK(unique.vectors == 1);
    CHECK(unique.witness == "0000");
    CHECK(unique.min_degree == 3);

    // one node: the constant interpolant
    SearchReport single = min_degree_exhaustive(13, 12);
    CHECK(single.vectors == 12);
    CHECK(single.min_degree == 0);
    CHECK(single.witness == "0");
}

TEST_CASE("top coefficients match full interpolation") {
    for (u64 p : {5, 13, 17}) {
        TaskGeometry geo = TaskGeometry::build(p, 2);
        const u64 m = geo.n;
        for (u64 mask = 0; mask < (u64{1} << m); ++mask) {
            std::string signs(m, '+');
            std::vector<std::pair<FieldElement, FieldElement>> pts(m);
            for (u64 j = 0; j < m; ++j) {
                bool minus = (mask >> (m - 1 - j)) & 1;
                if (minus) signs[j] = '-';
                pts[j] = {FieldElement(geo.nodes[j], p),
                          FieldElement(minus ? p - geo.bases[j] : geo.bases[j], p)};
            }
            DensePoly f = interpolate(pts);
            for (u64 i = 1; i <= m; ++i)
                CHECK(f.coeff(m - i) == leading_coefficient(p, signs, i));
        }
    }
}

TEST_CASE("witness interpolants") {
    // branch digits 0210 pick exactly the values of X^3 on the cubes mod 13
    CHECK(witness_interpolant(13, 3, "0210") == DensePoly::monomial(13, 3));
    CHECK(witness_interpolant(13, 2, ".++++-").degree() == std::size_t{3});
    DensePoly alt = witness_interpolant(17, 2, "+-+++++-"); // a depth-1 kernel vector
    CHECK(alt.coeff(7) == 0);
    CHECK(alt.degree() == std::size_t{6});
    CHECK(verify_root_poly(alt, RootTask(17, 2)) == 0);
    CHECK(leading_coefficient(17, "+-+++++-", 1) == 0);

    CHECK_THROWS_AS(witness_interpolant(13, 2, "+++"), ParseError);
    CHECK_THROWS_AS(witness_interpolant(13, 2, "++++0+"), ParseError);
    CHECK_THROWS_AS(witness_interpolant(13, 3, "0040"), ParseError);
    CHECK_THROWS_AS(witness_interpolant(13, 2, "......"), EmptyInput);
    CHECK_THROWS_AS(leading_coefficient(17, "++++++++", 0), InvalidOrder);
    CHECK_THROWS_AS(leading_coefficient(17, "+++", 1), ParseError);
}

TEST_CASE("exception-tolerant search") {
    SearchReport plain = min_degree_robust(13, 0);
    CHECK(plain.min_degree == 5);
    CHECK(plain.witness == "++++++");
    CHECK(plain.e == 0);

    SearchReport one = min_degree_robust(13, 1);
    CHECK(one.min_degree == 3);
    CHECK(one.witness == ".++++-");
    CHECK(one.dropped == std::vector<std::size_t>{0});
    CHECK(one.bound.value == 3);
    CHECK(one.bound_ok);

    SearchReport two = min_degree_robust(13, 2);
    CHECK(two.min_degree == 2);
    CHECK(two.witness == "..+---");
    CHECK(two.dropped == std::vector<std::size_t>{0, 1});
    CHECK(two.bound.value == 2);
    CHECK(two.bound_ok);

    SearchReport s17 = min_degree_robust(17, 1);
    CHECK(s17.min_degree == 5);
    CHECK(s17.witness == ".++++---");
    CHECK(s17.bound.value == 5);
    CHECK(s17.bound_ok);

    // thread count cannot change the outcome
    for (unsigned threads : {2u, 5u}) {
        SearchReport r = min_degree_robust(13, 2, threads);
        CHECK(r.min_degree == two.min_degree);
        CHECK(r.witness == two.witness);
        CHECK(r.vectors == two.vectors);
    }

    // a dropped-node witness stays a valid partial interpolant
    DensePoly f = witness_interpolant(13, 2, one.witness);
    CHECK(f.degree() == one.min_degree);
    CHECK(verify_root_poly(f, RootTask(13, 2)) == 1); // exactly the dropped node

    CHECK_THROWS_AS(min_degree_robust(13, 6), HypothesisViolated);
}

TEST_CASE("search space caps") {
    CHECK_THROWS_AS(min_degree_exhaustive(59), SearchSpaceTooLarge);
    SearchLimits tight;
    tight.max_assignments = 1 << 10;
    CHECK_THROWS_AS(min_degree_exhaustive(37, 2, 1, tight), SearchSpaceTooLarge);
    CHECK_THROWS_AS(min_degree_robust(37, 1, 1, tight), SearchSpaceTooLarge);
}

TEST_CASE("kernel vectors by exhaustive walk") {
    KernelReport hit = kernel_sign_search(17, 1, KernelStrategy::exhaustive);
    CHECK(hit.found);
    CHECK(hit.witness == "+++++--+"); // lex-least of the 8 solutions
    CHECK(hit.examined == 7);
    CHECK(hit.degree == 6);
    CHECK(hit.errors == 0);

    KernelReport none = kernel_sign_search(17, 2, KernelStrategy::exhaustive);
    CHECK_FALSE(none.found);
    CHECK(none.examined == 128);

    KernelReport none13 = kernel_sign_search(13, 1, KernelStrategy::exhaustive);
    CHECK_FALSE(none13.found); // consistent with the p = 13 minimum staying at 5
    CHECK(none13.examined == 32);

    KernelReport deep = kernel_sign_search(29, 2, KernelStrategy::exhaustive);
    CHECK(deep.found);
    CHECK(deep.witness == "++--++--++--++"); // the degree-11 witness again
    CHECK(deep.examined == 3277);
    CHECK(deep.degree == 11);
    CHECK(deep.errors == 0);
    CHECK_FALSE(kernel_sign_search(29, 3, KernelStrategy::exhaustive).found);

    CHECK_THROWS_AS(kernel_sign_search(17, 0, KernelStrategy::exhaustive), HypothesisViolated);
    CHECK_THROWS_AS(kernel_sign_search(17, 8, KernelStrategy::exhaustive), HypothesisViolated);
    CHECK_THROWS_AS(kernel_sign_search(10007, 1, KernelStrategy::exhaustive),
                    SearchSpaceTooLarge);
}

TEST_CASE("kernel vectors by meeting in the middle") {
    KernelReport hit = kernel_sign_search(17, 1, KernelStrategy::meet_in_middle);
    CHECK(hit.found);
    CHECK(hit.witness == "+++++--+");
    CHECK(hit.examined == 9); // 8 right assignments + 1 left probe
    CHECK(hit.degree == 6);

    KernelReport big = kernel_sign_search(29, 1, KernelStrategy::meet_in_middle);
    CHECK(big.found);
    CHECK(big.witness == kernel_sign_search(29, 1, KernelStrategy::exhaustive).witness);

    KernelReport none = kernel_sign_search(13, 1, KernelStrategy::meet_in_middle);
    CHECK_FALSE(none.found);

    CHECK_THROWS_AS(kernel_sign_search(17, 2, KernelStrategy::meet_in_middle),
                    HypothesisViolated);
}

TEST_CASE("kernel vectors by seeded plateau walk") {
    KernelReport a = kernel_sign_search(17, 1, KernelStrategy::random_flip, 0, 42);
    CHECK(a.found);
    CHECK(a.errors == 0);
    CHECK(a.degree <= 6);
    CHECK(leading_coefficient(17, a.witness, 1) == 0);
    KernelReport b = kernel_sign_search(17, 1, KernelStrategy::random_flip, 0, 42);
    CHECK(b.witness == a.witness); // same seed, same walk
    CHECK(b.examined == a.examined);
    KernelReport c = kernel_sign_search(101, 1, KernelStrategy::random_flip, 0, 7);
    CHECK(c.found);
    CHECK(c.errors == 0);
    CHECK(leading_coefficient(101, c.witness, 1) == 0);

    // hopeless target, tiny budget: gives up instead of throwing
    KernelReport give_up = kernel_sign_search(13, 1, KernelStrategy::random_flip, 512, 1);
    CHECK_FALSE(give_up.found);
    CHECK(give_up.examined >= 512);
}

TEST_CASE("bucket statistics of odd sign polynomials") {
    EquidistReport r = equidist_stats(10007, {1}, 10);
    CHECK(r.counts.size() == 10);
    CHECK(std::accumulate(r.counts.begin(), r.counts.end(), u64{0}) == 5003);
    CHECK(r.ok);
    CHECK(r.max_dev <= r.bound);

    EquidistReport mixed = equidist_stats(10007, {1, -1, 1}, 7);
    CHECK(std::accumulate(mixed.counts.begin(), mixed.counts.end(), u64{0}) == 5003);
    CHECK(mixed.ok);

    EquidistReport tiny = equidist_stats(13, {1, -1}, 3);
    CHECK(std::accumulate(tiny.counts.begin(), tiny.counts.end(), u64{0}) == 6);

    CHECK_THROWS_AS(equidist_stats(13, {}, 3), EmptyInput);
    CHECK_THROWS_AS(equidist_stats(13, {2}, 3), HypothesisViolated);
    CHECK_THROWS_AS(equidist_stats(13, {1}, 0), InvalidOrder);
}
