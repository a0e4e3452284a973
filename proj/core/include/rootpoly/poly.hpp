#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "rootpoly/field.hpp"

namespace rootpoly {

// Dense univariate polynomial over F_p. Coefficients ascending, always
// trimmed so the last entry (if any) is nonzero; the zero polynomial is the
// empty vector and its degree is reported as nullopt, never -1.
class DensePoly {
  public:
    explicit DensePoly(u64 p) : p_(p) { check_modulus(); }
    DensePoly(u64 p, std::vector<u64> coeffs) : p_(p), c_(std::move(coeffs)) {
        check_modulus();
        for (auto& v : c_) v %= p_;
        trim();
    }

    static DensePoly monomial(u64 p, std::size_t k, u64 coeff = 1) {
        std::vector<u64> c(k + 1, 0);
        c[k] = coeff % p;
        return DensePoly(p, std::move(c));
    }
    static DensePoly constant(u64 p, u64 v) { return DensePoly(p, {v % p}); }

    u64 modulus() const { return p_; }
    const std::vector<u64>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    std::optional<std::size_t> degree() const {
        if (c_.empty()) return std::nullopt;
        return c_.size() - 1;
    }
    // coefficient of X^k, 0 past the end
    u64 coeff(std::size_t k) const { return k < c_.size() ? c_[k] : 0; }

    u64 leading() const { return c_.empty() ? 0 : c_.back(); }

    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    friend bool operator==(const DensePoly&, const DensePoly&) = default;

    DensePoly& operator+=(const DensePoly& o);
    DensePoly& operator-=(const DensePoly& o);
    friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
    friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }
    friend DensePoly operator*(const DensePoly& a, const DensePoly& b);
    DensePoly operator-() const;

    // scalar multiple
    DensePoly scaled(u64 s) const;

    // f^e by repeated squaring; f^0 = 1
    DensePoly pow(u64 e) const;

    // remainder mod X^m - 1: coefficient k folds onto k mod m
    DensePoly mod_cyclic(std::size_t m) const;

    // drop coefficients at X^n and above
    DensePoly truncated(std::size_t n) const;

    FieldElement evaluate(FieldElement x) const;
    u64 evaluate(u64 x) const { return evaluate(FieldElement(x, p_)).value; }

  private:
    void check_modulus() const {
        if (p_ < 2) throw Error("polynomial modulus must be a prime");
    }
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    u64 p_;
    std::vector<u64> c_;
};

// Schoolbook under this many coefficients, Karatsuba above.
inline constexpr std::size_t kKaratsubaThreshold = 48;

DensePoly derivative(const DensePoly& f);

// Quotient and remainder; deg(r) < deg(g). Throws DivisionByZero on g = 0.
std::pair<DensePoly, DensePoly> divmod(const DensePoly& f, const DensePoly& g);

// Monic gcd; gcd(f, 0) = monic f, gcd(0, 0) = 0.
DensePoly poly_gcd(DensePoly a, DensePoly b);

// Monic squarefree part f / gcd(f, f'), exact for deg(f) < p.
// Throws EmptyInput on the zero polynomial.
DensePoly radical(const DensePoly& f);

// Lagrange interpolation through distinct nodes, O(n^2).
// Throws DuplicateNode on repeated x, ModulusMismatch on mixed moduli.
DensePoly interpolate(const std::vector<std::pair<FieldElement, FieldElement>>& points);

// (1/m) * sum_{k<m} (X/alpha)^k: degree m-1, value 1 at alpha and 0 at the
// other elements of alpha's order-m coset. Throws DivisionByZero on alpha = 0
// or m = 0 mod p.
DensePoly delta_at(FieldElement alpha, u64 m);

} // namespace rootpoly
