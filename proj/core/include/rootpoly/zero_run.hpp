#pragma once

#include <optional>

#include "rootpoly/poly.hpp"
#include "rootpoly/series.hpp"

namespace rootpoly {

// One interior zero run: coefficients b and l are nonzero, everything strictly
// between is zero, and l - b - 1 >= 1.
struct Gap {
    std::size_t b;
    std::size_t l;
    std::size_t run() const { return l - b - 1; }
    friend bool operator==(const Gap&, const Gap&) = default;
};

struct ZeroRunReport {
    std::size_t max_run = 0;
    // realizing pair: the lowest-b adjacent support pair achieving max_run
    // (b = l = the only support index when there is a single nonzero term)
    std::size_t b = 0;
    std::size_t l = 0;
    std::vector<Gap> gaps;             // every interior zero run, ascending
    std::optional<std::size_t> d;      // cap: each gap must satisfy l - b <= d
    bool hypothesis_ok = true;         // d * t < p held (power checks only)
    bool bound_ok = true;              // all gaps within the cap
};

// Scan a support mask (true = nonzero coefficient). Throws EmptyInput if all false.
ZeroRunReport zero_runs(const std::vector<bool>& support);
ZeroRunReport zero_runs(const DensePoly& f);
// Interior runs within the truncation window only.
ZeroRunReport zero_runs(const RationalSeries& f);

// Computes f^t and scans it with cap d = deg(f). When d * t < p the cap is a
// proved bound and a violation throws TheoremViolation; when d * t >= p the
// report is returned with hypothesis_ok = false and no assertion is made.
ZeroRunReport check_power_run(const DensePoly& f, unsigned t);

// Split g at an interior gap: low part B (through X^b), high part A X^l, and
// divide all three of (A X^l, B, g) by gcd(A X^l, B) so the triple is pairwise
// coprime and still sums correctly.
struct AbcTriple {
    DensePoly a; // reduced A X^l
    DensePoly b; // reduced B
    DensePoly c; // reduced g
};
AbcTriple gap_triple(const DensePoly& g, const Gap& gap);

struct AbcReport {
    std::size_t max_deg = 0;
    std::size_t rad_deg = 0;
    bool holds = false; // max_deg <= rad_deg - 1
};

// Mason-Stothers check for a + b = c: requires the sum to hold, the inputs to
// be nonzero and pairwise coprime, and not all derivatives zero (else
// HypothesisViolated). Throws TheoremViolation if the inequality fails.
AbcReport abc_check(const DensePoly& a, const DensePoly& b, const DensePoly& c);

// The three-way classification for f^2 agreeing with C on the order-m subgroup:
// f^2 = C, f^2 = C X^m, or deg(f) >= 2m/3.
enum class TwoValueClass { identity, twisted, high_degree };

// Preconditions (HypothesisViolated / InvalidOrder): m | p-1, 3 deg(C) <= m,
// and f(a)^2 = C(a) on the whole subgroup. A high_degree result with
// 3 deg(f) < 2m would falsify the underlying theorem -> TheoremViolation.
TwoValueClass two_value_classify(const DensePoly& f, const DensePoly& C, u64 m);

} // namespace rootpoly
