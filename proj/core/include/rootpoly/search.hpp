#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rootpoly/field.hpp"
#include "rootpoly/poly.hpp"
#include "rootpoly/roots.hpp"

namespace rootpoly {

// Node layout shared by every search: the t-th powers S_t form the order-n
// subgroup, nodes[j] = g^(tau j), and bases[j] is the canonical t-th root of
// nodes[j]; the full root set of a node is bases[j] * zeta^c, c < tau.
struct TaskGeometry {
    u64 p = 0;
    unsigned t = 2;
    u64 tau = 0;  // gcd(t, p - 1): roots per node
    u64 n = 0;    // node count (p - 1) / tau
    u64 g = 0;    // smallest primitive root
    u64 zeta = 0; // g^n, order tau
    std::vector<u64> nodes;
    std::vector<u64> bases;

    static TaskGeometry build(u64 p, unsigned t);
};

struct SearchLimits {
    u64 max_assignments = u64{1} << 26; // mirror-inclusive cap on the vector count
};

// Proved floor for the minimal degree at a given exception budget e.
struct DegreeBound {
    u64 value = 0;
    std::string name;      // human-readable formula the floor came from
    bool equality = false; // floor known to be attained exactly
};
DegreeBound degree_bound(u64 p, unsigned t, unsigned e);

struct SearchReport {
    u64 p = 0;
    unsigned t = 2;
    unsigned e = 0;            // exceptions tolerated (0 for the plain search)
    std::size_t min_degree = 0;
    std::string witness;       // per-node choices: +/- for tau = 2, digits for
                               // tau > 2, '.' marks a dropped node
    std::vector<std::size_t> dropped; // indices behind the dots, ascending
    u64 vectors = 0;           // assignments covered, symmetry mirrors included
    DegreeBound bound;
    bool bound_ok = false;     // min_degree respects (and equality: attains) bound
    unsigned threads = 1;
    double ms = 0;
};

// Minimal interpolant degree over every choice of t-th root per node.
// Deterministic for any thread count. Throws SearchSpaceTooLarge when the
// assignment space exceeds limits.
SearchReport min_degree_exhaustive(u64 p, unsigned t = 2, unsigned threads = 1,
                                   const SearchLimits& limits = {});

// Square-root variant that may drop up to e nodes entirely (|U| = 0..e); the
// reported witness holds '.' at the dropped indices. e = 0 is the plain search.
SearchReport min_degree_robust(u64 p, unsigned e, unsigned threads = 1,
                               const SearchLimits& limits = {});

// Interpolant defined by a witness string (same encoding the searches emit).
DensePoly witness_interpolant(u64 p, unsigned t, const std::string& witness);

// Coefficient of X^(m - i), 1 <= i <= m, of the sign-vector interpolant for
// the square task: (1/m) sum_j signs_j g^(j (2i + 1)) with m = (p - 1) / 2.
u64 leading_coefficient(u64 p, const std::string& signs, u64 i);

// Sign vectors whose square-task interpolant loses its top `depth`
// coefficients, i.e. reaches degree <= m - depth - 1.
enum class KernelStrategy { exhaustive, meet_in_middle, random_flip };

struct KernelReport {
    u64 p = 0;
    unsigned depth = 1;
    KernelStrategy strategy = KernelStrategy::exhaustive;
    bool found = false;
    std::string witness;    // lex-least hit for the deterministic strategies
    std::size_t degree = 0; // interpolant degree of the hit
    u64 errors = 0;         // square-task verification errors of the hit
    u64 examined = 0;
    u64 seed = 0;           // random_flip only
    double ms = 0;
};

// budget = 0 picks the default (the SearchLimits cap, or 2^22 random steps).
// exhaustive / meet_in_middle find the lexicographically least witness or
// prove there is none; random_flip is a seeded plateau walk that may give up.
KernelReport kernel_sign_search(u64 p, unsigned depth, KernelStrategy strategy,
                                u64 budget = 0, u64 seed = 0);

// Bucket statistics of P(x) = sum_i signs[i] x^(2i+1) over half the group:
// k buckets of [0, p), deviation target 4 t ln^2(p) / sqrt(p).
struct EquidistReport {
    u64 p = 0;
    unsigned k = 0;
    std::vector<u64> counts;
    double max_dev = 0;
    double bound = 0;
    bool ok = false;
};
EquidistReport equidist_stats(u64 p, const std::vector<int>& signs, unsigned k);

} // namespace rootpoly
