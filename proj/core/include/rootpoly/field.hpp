#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rootpoly/errors.hpp"

namespace rootpoly {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Largest modulus accepted: keeps a*b inside u128 with room to spare and
// makes sums of a few reduced products safe in u128.
inline constexpr u64 kMaxModulus = (u64{1} << 62) - 1;

namespace modarith {

inline u64 add(u64 a, u64 b, u64 p) {
    u64 s = a + b; // no overflow: a, b < 2^62
    return s >= p ? s - p : s;
}

inline u64 sub(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

inline u64 mul(u64 a, u64 b, u64 p) { return static_cast<u64>(u128(a) * b % p); }

inline u64 pow(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul(r, a, p);
        a = mul(a, a, p);
        e >>= 1;
    }
    return r;
}

} // namespace modarith

// Deterministic Miller-Rabin, exact for the full u64 range we accept.
bool is_prime(u64 n);

// Prime factors of n (distinct, ascending). Pollard rho + Miller-Rabin.
std::vector<u64> prime_factors(u64 n);

// One residue of F_p. Carries its modulus; mixing moduli throws.
struct FieldElement {
    u64 value = 0;
    u64 modulus = 0;

    FieldElement() = default;
    FieldElement(u64 v, u64 p) : value(v % p), modulus(p) {}

    friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

FieldElement operator+(FieldElement a, FieldElement b);
FieldElement operator-(FieldElement a, FieldElement b);
FieldElement operator*(FieldElement a, FieldElement b);
FieldElement operator/(FieldElement a, FieldElement b);
FieldElement operator-(FieldElement a);

FieldElement pow(FieldElement a, u64 e);
FieldElement inv(FieldElement a);

// Legendre symbol (a/p): 0, 1 or -1.
int legendre(FieldElement a);

// Validated prime field context. Immutable once built, safe to share.
class FieldContext {
  public:
    // Throws NotPrime unless p is an odd prime <= kMaxModulus.
    explicit FieldContext(u64 p);

    u64 p() const { return p_; }
    FieldElement element(u64 v) const { return FieldElement(v, p_); }

    // Smallest positive primitive root mod p.
    u64 generator() const { return generator_; }

    // p - 1 = odd_part * 2^two_adicity.
    u64 odd_part() const { return odd_part_; }
    int two_adicity() const { return two_adicity_; }

    // Smallest quadratic nonresidue (absent for p = 3... present for every odd p > 1,
    // kept cached for the square-root ladder).
    u64 nonresidue() const { return nonresidue_; }

    // Canonical square root of -1 when p = 1 mod 4: the smaller of the pair.
    // Throws WrongResidueClass for p = 3 mod 4.
    u64 sqrt_of_minus_one() const;

    int legendre(u64 a) const { return rootpoly::legendre(element(a)); }

    // Tonelli-Shanks. Returns the smaller of the two square roots.
    // Throws NonResidue unless legendre(a) = 1.
    FieldElement sqrt(FieldElement a) const;
    u64 sqrt(u64 a) const { return sqrt(element(a)).value; }

  private:
    u64 p_;
    u64 generator_;
    u64 odd_part_;
    int two_adicity_;
    u64 nonresidue_;
    std::optional<u64> i_; // sqrt(-1), p = 1 mod 4 only
};

// Convenience wrappers that build a throwaway context.
u64 find_generator(u64 p);
u64 sqrt_mod(u64 a, u64 p);
u64 sqrt_of_minus_one(u64 p);

} // namespace rootpoly
