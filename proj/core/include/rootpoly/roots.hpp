#pragma once

#include <numeric>

#include "rootpoly/poly.hpp"

namespace rootpoly {

// "Compute t-th roots on the t-th powers of F_p^*": the target set S_t is the
// image of x -> x^t, iterated as g^(tau * j) with tau = gcd(t, p-1).
struct RootTask {
    u64 p;
    unsigned t;

    RootTask(u64 p_, unsigned t_) : p(p_), t(t_) {
        if (t < 2) throw InvalidOrder("root power t must be at least 2");
        FieldContext check(p); // validates the modulus
    }

    u64 tau() const { return std::gcd<u64, u64>(t, p - 1); } // roots per residue
    u64 size() const { return (p - 1) / tau(); }             // |S_t|
};

// X^{(p+1)/4}; exact square roots on squares for p = 3 mod 4.
// Throws WrongResidueClass otherwise.
DensePoly construct_3mod4(u64 p);

// The two-case square root for p = 5 mod 8 and a nonzero square a:
// a^{(p+3)/8} when a^{(p-1)/4} = 1, else i * a^{(p+3)/8}.
FieldElement tonelli_branch(const FieldContext& F, u64 a);

// ((1-i)/2) X^{(3p+1)/8} + ((1+i)/2) X^{(p+3)/8} for p = 5 mod 8.
DensePoly construct_5mod8(u64 p);

// (f0 (X^{(p-1)/4} + 1) - f1 (X^{(p-1)/4} - 1)) / 2: agrees with f0 where
// a^{(p-1)/4} = 1 and with f1 where it is -1. Needs p = 1 mod 4.
DensePoly crt_combine(const DensePoly& f0, const DensePoly& f1);

// |{a in S_t : f(a)^t != a}|.
u64 verify_root_poly(const DensePoly& f, const RootTask& task);

// Monomial t-th root polynomials for the two special residue classes:
// p = 1-t mod t^2 gives X^{(p+t-1)/t^2}, 2p = 2-t mod t^2 gives X^{(2p+t-2)/t^2}.
// Throws InvalidOrder when p != 1 mod t, WrongResidueClass when neither case fits.
DensePoly construct_tth_special(u64 p, unsigned t);

} // namespace rootpoly
