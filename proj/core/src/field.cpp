#include "rootpoly/field.hpp"

#include <algorithm>
#include <string>

namespace rootpoly {

namespace {

u64 mulmod(u64 a, u64 b, u64 n) { return static_cast<u64>(u128(a) * b % n); }

u64 powmod(u64 a, u64 e, u64 n) {
    u64 r = 1 % n;
    a %= n;
    while (e) {
        if (e & 1) r = mulmod(r, a, n);
        a = mulmod(a, a, n);
        e >>= 1;
    }
    return r;
}

bool miller_rabin(u64 n, u64 a) {
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

u64 pollard_rho(u64 n) {
    if ((n & 1) == 0) return 2;
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (mulmod(x, x, n) + c) % n;
            y = (mulmod(y, y, n) + c) % n;
            y = (mulmod(y, y, n) + c) % n;
            d = std::__gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

void factor_into(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    // small trial division first keeps rho off easy composites
    for (u64 q : {u64{2}, u64{3}, u64{5}, u64{7}, u64{11}, u64{13}}) {
        if (n % q == 0) {
            out.push_back(q);
            while (n % q == 0) n /= q;
            factor_into(n, out);
            return;
        }
    }
    u64 d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

} // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 q : {u64{2}, u64{3}, u64{5}, u64{7}, u64{11}, u64{13}, u64{17}, u64{19}, u64{23}, u64{29}, u64{31}, u64{37}}) {
        if (n % q == 0) return n == q;
    }
    // these 12 bases are a proven-exact witness set far past 2^62
    for (u64 a : {u64{2}, u64{3}, u64{5}, u64{7}, u64{11}, u64{13}, u64{17}, u64{19}, u64{23}, u64{29}, u64{31}, u64{37}}) {
        if (!miller_rabin(n, a)) return false;
    }
    return true;
}

std::vector<u64> prime_factors(u64 n) {
    std::vector<u64> out;
    factor_into(n, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

void require_same_modulus(const FieldElement& a, const FieldElement& b) {
    if (a.modulus != b.modulus)
        throw ModulusMismatch("field elements have moduli " + std::to_string(a.modulus) + " and " +
                              std::to_string(b.modulus));
}

} // namespace

FieldElement operator+(FieldElement a, FieldElement b) {
    require_same_modulus(a, b);
    return FieldElement{modarith::add(a.value, b.value, a.modulus), a.modulus};
}

FieldElement operator-(FieldElement a, FieldElement b) {
    require_same_modulus(a, b);
    return FieldElement{modarith::sub(a.value, b.value, a.modulus), a.modulus};
}

FieldElement operator*(FieldElement a, FieldElement b) {
    require_same_modulus(a, b);
    return FieldElement{modarith::mul(a.value, b.value, a.modulus), a.modulus};
}

FieldElement operator-(FieldElement a) {
    return FieldElement{a.value == 0 ? 0 : a.modulus - a.value, a.modulus};
}

FieldElement pow(FieldElement a, u64 e) {
    return FieldElement{modarith::pow(a.value, e, a.modulus), a.modulus};
}

FieldElement inv(FieldElement a) {
    if (a.value == 0) throw DivisionByZero("inverse of 0 mod " + std::to_string(a.modulus));
    // p prime, so a^(p-2) works
    return pow(a, a.modulus - 2);
}

FieldElement operator/(FieldElement a, FieldElement b) {
    require_same_modulus(a, b);
    return a * inv(b);
}

int legendre(FieldElement a) {
    if (a.value == 0) return 0;
    u64 r = modarith::pow(a.value, (a.modulus - 1) / 2, a.modulus);
    return r == 1 ? 1 : -1;
}

FieldContext::FieldContext(u64 p) : p_(p) {
    if (p > kMaxModulus) throw NotPrime("modulus " + std::to_string(p) + " exceeds 2^62 - 1");
    if (p < 3 || !rootpoly::is_prime(p)) throw NotPrime(std::to_string(p) + " is not an odd prime");

    odd_part_ = p - 1;
    two_adicity_ = 0;
    while ((odd_part_ & 1) == 0) {
        odd_part_ >>= 1;
        ++two_adicity_;
    }

    auto factors = prime_factors(p - 1);
    generator_ = 0;
    for (u64 g = 2; g < p; ++g) {
        bool primitive = true;
        for (u64 q : factors) {
            if (modarith::pow(g, (p - 1) / q, p) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            generator_ = g;
            break;
        }
    }

    nonresidue_ = 0;
    for (u64 z = 2; z < p; ++z) {
        if (legendre(z) == -1) {
            nonresidue_ = z;
            break;
        }
    }

    if (p % 4 == 1) {
        // nonresidue^((p-1)/4) squares to -1
        u64 r = modarith::pow(nonresidue_, (p - 1) / 4, p);
        i_ = std::min(r, p - r);
    }
}

u64 FieldContext::sqrt_of_minus_one() const {
    if (!i_) throw WrongResidueClass("-1 is a nonresidue mod " + std::to_string(p_) + " (p = 3 mod 4)");
    return *i_;
}

FieldElement FieldContext::sqrt(FieldElement a) const {
    if (a.modulus != p_) throw ModulusMismatch("element mod " + std::to_string(a.modulus) + " in context mod " + std::to_string(p_));
    if (rootpoly::legendre(a) != 1)
        throw NonResidue(std::to_string(a.value) + " is not a nonzero square mod " + std::to_string(p_));

    u64 r;
    if (p_ % 4 == 3) {
        r = modarith::pow(a.value, (p_ + 1) / 4, p_);
    } else {
        // Tonelli-Shanks on p - 1 = odd_part * 2^s
        u64 q = odd_part_;
        int s = two_adicity_;
        u64 z = modarith::pow(nonresidue_, q, p_); // order 2^s
        u64 x = modarith::pow(a.value, (q + 1) / 2, p_);
        u64 b = modarith::pow(a.value, q, p_);
        int m = s;
        while (b != 1) {
            u64 t = b;
            int i = 0;
            while (t != 1) {
                t = modarith::mul(t, t, p_);
                ++i;
            }
            u64 gpow = z;
            for (int k = 0; k < m - i - 1; ++k) gpow = modarith::mul(gpow, gpow, p_);
            x = modarith::mul(x, gpow, p_);
            z = modarith::mul(gpow, gpow, p_);
            b = modarith::mul(b, z, p_);
            m = i;
        }
        r = x;
    }
    return FieldElement{std::min(r, p_ - r), p_};
}

u64 find_generator(u64 p) { return FieldContext(p).generator(); }

u64 sqrt_mod(u64 a, u64 p) { return FieldContext(p).sqrt(a); }

u64 sqrt_of_minus_one(u64 p) { return FieldContext(p).sqrt_of_minus_one(); }

} // namespace rootpoly
