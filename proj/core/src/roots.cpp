#include "rootpoly/roots.hpp"

#include <string>

namespace rootpoly {

DensePoly construct_3mod4(u64 p) {
    FieldContext F(p);
    if (p % 4 != 3) throw WrongResidueClass("p = " + std::to_string(p) + " is not 3 mod 4");
    return DensePoly::monomial(p, (p + 1) / 4);
}

FieldElement tonelli_branch(const FieldContext& F, u64 a) {
    u64 p = F.p();
    if (p % 8 != 5) throw WrongResidueClass("p = " + std::to_string(p) + " is not 5 mod 8");
    if (F.legendre(a) != 1) throw NonResidue(std::to_string(a) + " is not a nonzero square mod " + std::to_string(p));
    u64 u = modarith::pow(a, (p + 3) / 8, p);
    if (modarith::pow(a, (p - 1) / 4, p) != 1) u = modarith::mul(u, F.sqrt_of_minus_one(), p);
    return FieldElement(u, p);
}

DensePoly construct_5mod8(u64 p) {
    FieldContext F(p);
    if (p % 8 != 5) throw WrongResidueClass("p = " + std::to_string(p) + " is not 5 mod 8");
    u64 i = F.sqrt_of_minus_one();
    u64 half = inv(F.element(2)).value;
    u64 lo = modarith::mul(modarith::add(1, i, p), half, p);  // (1+i)/2 on X^{(p+3)/8}
    u64 hi = modarith::mul(modarith::sub(1, i, p), half, p);  // (1-i)/2 on X^{(3p+1)/8}
    std::vector<u64> c((3 * p + 1) / 8 + 1, 0);
    c[(p + 3) / 8] = lo;
    c[(3 * p + 1) / 8] = hi;
    return DensePoly(p, std::move(c));
}

DensePoly crt_combine(const DensePoly& f0, const DensePoly& f1) {
    if (f0.modulus() != f1.modulus())
        throw ModulusMismatch("crt_combine over moduli " + std::to_string(f0.modulus()) + " and " +
                              std::to_string(f1.modulus()));
    u64 p = f0.modulus();
    FieldContext F(p);
    if (p % 4 != 1) throw WrongResidueClass("p = " + std::to_string(p) + " is not 1 mod 4");
    u64 q = (p - 1) / 4;
    DensePoly xq = DensePoly::monomial(p, q);
    DensePoly one = DensePoly::constant(p, 1);
    DensePoly combined = f0 * (xq + one) - f1 * (xq - one);
    return combined.scaled(inv(F.element(2)).value);
}

u64 verify_root_poly(const DensePoly& f, const RootTask& task) {
    if (f.modulus() != task.p)
        throw ModulusMismatch("polynomial mod " + std::to_string(f.modulus()) + " against task mod " +
                              std::to_string(task.p));
    u64 p = task.p;
    FieldContext F(p);
    u64 tau = task.tau();
    u64 n = task.size();
    u64 step = modarith::pow(F.generator(), tau, p);
    u64 a = 1;
    u64 errors = 0;
    for (u64 j = 0; j < n; ++j) {
        u64 fa = f.evaluate(a);
        if (modarith::pow(fa, task.t, p) != a) ++errors;
        a = modarith::mul(a, step, p);
    }
    return errors;
}

DensePoly construct_tth_special(u64 p, unsigned t) {
    FieldContext F(p);
    if (t < 2) throw InvalidOrder("root power t must be at least 2");
    u64 tt = t;
    if (p % tt != 1) throw InvalidOrder("p = " + std::to_string(p) + " is not 1 mod " + std::to_string(t));
    u64 t2 = tt * tt;
    if (p % t2 == (t2 + 1 - tt) % t2) {
        return DensePoly::monomial(p, (p + tt - 1) / t2);
    }
    if ((2 * u128(p)) % t2 == (t2 + 2 - tt) % t2) {
        return DensePoly::monomial(p, static_cast<u64>((2 * u128(p) + tt - 2) / t2));
    }
    throw WrongResidueClass("p = " + std::to_string(p) + " fits neither residue case mod t^2");
}

} // namespace rootpoly
