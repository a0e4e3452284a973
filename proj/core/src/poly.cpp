#include "rootpoly/poly.hpp"

#include <algorithm>
#include <string>

namespace rootpoly {

namespace {

void require_same_modulus(const DensePoly& a, const DensePoly& b) {
    if (a.modulus() != b.modulus())
        throw ModulusMismatch("polynomials have moduli " + std::to_string(a.modulus()) + " and " +
                              std::to_string(b.modulus()));
}

using Vec = std::vector<u64>;

Vec school_mul(const Vec& a, const Vec& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    Vec out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] = modarith::add(out[i + j], modarith::mul(a[i], b[j], p), p);
        }
    }
    return out;
}

Vec add_vec(const Vec& a, const Vec& b, u64 p) {
    Vec out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        u64 x = i < a.size() ? a[i] : 0;
        u64 y = i < b.size() ? b[i] : 0;
        out[i] = modarith::add(x, y, p);
    }
    return out;
}

Vec kara_mul(const Vec& a, const Vec& b, u64 p) {
    if (a.size() < kKaratsubaThreshold || b.size() < kKaratsubaThreshold) return school_mul(a, b, p);
    std::size_t h = std::max(a.size(), b.size()) / 2;
    Vec a0(a.begin(), a.begin() + std::min(h, a.size()));
    Vec a1(a.begin() + std::min(h, a.size()), a.end());
    Vec b0(b.begin(), b.begin() + std::min(h, b.size()));
    Vec b1(b.begin() + std::min(h, b.size()), b.end());

    Vec z0 = kara_mul(a0, b0, p);
    Vec z2 = kara_mul(a1, b1, p);
    Vec z1 = kara_mul(add_vec(a0, a1, p), add_vec(b0, b1, p), p);

    Vec out(a.size() + b.size() - 1, 0);
    auto acc = [&](const Vec& v, std::size_t shift, bool negate) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] == 0) continue;
            u64& slot = out[i + shift];
            slot = negate ? modarith::sub(slot, v[i], p) : modarith::add(slot, v[i], p);
        }
    };
    acc(z0, 0, false);
    acc(z1, h, false);
    acc(z0, h, true);
    acc(z2, h, true);
    acc(z2, 2 * h, false);
    return out;
}

} // namespace

DensePoly& DensePoly::operator+=(const DensePoly& o) {
    require_same_modulus(*this, o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = modarith::add(c_[i], o.c_[i], p_);
    trim();
    return *this;
}

DensePoly& DensePoly::operator-=(const DensePoly& o) {
    require_same_modulus(*this, o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = modarith::sub(c_[i], o.c_[i], p_);
    trim();
    return *this;
}

DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    require_same_modulus(a, b);
    DensePoly out(a.modulus());
    out.c_ = kara_mul(a.c_, b.c_, a.modulus());
    out.trim();
    return out;
}

DensePoly DensePoly::operator-() const {
    DensePoly out(p_);
    out.c_.reserve(c_.size());
    for (u64 v : c_) out.c_.push_back(v == 0 ? 0 : p_ - v);
    return out;
}

DensePoly DensePoly::scaled(u64 s) const {
    s %= p_;
    DensePoly out(p_);
    out.c_.reserve(c_.size());
    for (u64 v : c_) out.c_.push_back(modarith::mul(v, s, p_));
    out.trim();
    return out;
}

DensePoly DensePoly::pow(u64 e) const {
    DensePoly result = DensePoly::constant(p_, 1);
    DensePoly base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

DensePoly DensePoly::mod_cyclic(std::size_t m) const {
    if (m == 0) throw Error("mod_cyclic needs m >= 1");
    DensePoly out(p_);
    out.c_.assign(std::min(m, c_.size()), 0);
    for (std::size_t k = 0; k < c_.size(); ++k) {
        std::size_t r = k % m;
        if (r >= out.c_.size()) out.c_.resize(r + 1, 0);
        out.c_[r] = modarith::add(out.c_[r], c_[k], p_);
    }
    out.trim();
    return out;
}

DensePoly DensePoly::truncated(std::size_t n) const {
    DensePoly out(p_);
    out.c_.assign(c_.begin(), c_.begin() + std::min(n, c_.size()));
    out.trim();
    return out;
}

FieldElement DensePoly::evaluate(FieldElement x) const {
    if (x.modulus != p_)
        throw ModulusMismatch("evaluating mod " + std::to_string(p_) + " at a point mod " + std::to_string(x.modulus));
    u64 acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc = modarith::add(modarith::mul(acc, x.value, p_), c_[i], p_);
    }
    return FieldElement(acc, p_);
}

DensePoly derivative(const DensePoly& f) {
    u64 p = f.modulus();
    const auto& c = f.coeffs();
    if (c.size() <= 1) return DensePoly(p);
    std::vector<u64> d(c.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k) d[k - 1] = modarith::mul(c[k], k % p, p);
    return DensePoly(p, std::move(d));
}

std::pair<DensePoly, DensePoly> divmod(const DensePoly& f, const DensePoly& g) {
    require_same_modulus(f, g);
    if (g.is_zero()) throw DivisionByZero("polynomial division by zero");
    u64 p = f.modulus();
    if (f.is_zero() || *f.degree() < *g.degree()) return {DensePoly(p), f};

    std::vector<u64> rem = f.coeffs();
    std::size_t dg = *g.degree();
    u64 lead_inv = inv(FieldElement(g.leading(), p)).value;
    std::vector<u64> quot(rem.size() - dg, 0);
    for (std::size_t i = rem.size(); i-- > dg;) {
        if (rem[i] == 0) continue;
        u64 q = modarith::mul(rem[i], lead_inv, p);
        quot[i - dg] = q;
        for (std::size_t j = 0; j <= dg; ++j) {
            rem[i - dg + j] = modarith::sub(rem[i - dg + j], modarith::mul(q, g.coeff(j), p), p);
        }
    }
    return {DensePoly(p, std::move(quot)), DensePoly(p, std::move(rem))};
}

DensePoly poly_gcd(DensePoly a, DensePoly b) {
    require_same_modulus(a, b);
    u64 p = a.modulus();
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scaled(inv(FieldElement(a.leading(), p)).value);
}

DensePoly radical(const DensePoly& f) {
    if (f.is_zero()) throw EmptyInput("radical of the zero polynomial");
    u64 p = f.modulus();
    if (*f.degree() == 0) return DensePoly::constant(p, 1);
    DensePoly g = poly_gcd(f, derivative(f));
    auto [q, r] = divmod(f, g);
    if (!r.is_zero()) throw TheoremViolation("gcd(f, f') does not divide f");
    return q.scaled(inv(FieldElement(q.leading(), p)).value);
}

DensePoly interpolate(const std::vector<std::pair<FieldElement, FieldElement>>& points) {
    if (points.empty()) throw EmptyInput("interpolation needs at least one node");
    u64 p = points.front().first.modulus;
    for (const auto& [x, y] : points) {
        if (x.modulus != p || y.modulus != p) throw ModulusMismatch("interpolation nodes mix moduli");
    }
    {
        std::vector<u64> xs;
        xs.reserve(points.size());
        for (const auto& [x, y] : points) xs.push_back(x.value);
        std::sort(xs.begin(), xs.end());
        if (std::adjacent_find(xs.begin(), xs.end()) != xs.end())
            throw DuplicateNode("repeated interpolation node");
    }

    std::size_t n = points.size();
    // master product N(X) = prod (X - x_k)
    std::vector<u64> master(n + 1, 0);
    master[0] = 1;
    std::size_t len = 1;
    for (const auto& [x, y] : points) {
        u64 neg = x.value == 0 ? 0 : p - x.value;
        // multiply by (X - x): shift up, add neg * current
        for (std::size_t i = len; i-- > 0;) {
            master[i + 1] = modarith::add(master[i + 1], master[i], p);
            master[i] = modarith::mul(master[i], neg, p);
        }
        ++len;
    }

    std::vector<u64> out(n, 0), nj(n, 0);
    for (const auto& [x, y] : points) {
        // N_j = N / (X - x_j) by synthetic division, top down
        u64 carry = 0;
        for (std::size_t i = n; i-- > 0;) {
            u64 c = modarith::add(master[i + 1], modarith::mul(carry, x.value, p), p);
            nj[i] = c;
            carry = c;
        }
        // weight = y_j / N_j(x_j)
        u64 denom = 0;
        {
            u64 acc = 0;
            for (std::size_t i = n; i-- > 0;) acc = modarith::add(modarith::mul(acc, x.value, p), nj[i], p);
            denom = acc;
        }
        u64 w = modarith::mul(y.value, inv(FieldElement(denom, p)).value, p);
        for (std::size_t i = 0; i < n; ++i)
            out[i] = modarith::add(out[i], modarith::mul(w, nj[i], p), p);
    }
    return DensePoly(p, std::move(out));
}

DensePoly delta_at(FieldElement alpha, u64 m) {
    u64 p = alpha.modulus;
    if (alpha.value == 0) throw DivisionByZero("delta at alpha = 0");
    if (m == 0 || m % p == 0) throw DivisionByZero("coset size divisible by the characteristic");
    u64 inv_m = inv(FieldElement(m % p, p)).value;
    u64 inv_a = inv(alpha).value;
    std::vector<u64> c(m);
    u64 w = inv_m; // (1/m) * alpha^{-k}
    for (u64 k = 0; k < m; ++k) {
        c[k] = w;
        w = modarith::mul(w, inv_a, p);
    }
    return DensePoly(p, std::move(c));
}

} // namespace rootpoly
