#include "rootpoly/series.hpp"

#include <algorithm>

namespace rootpoly {

RationalSeries series_from(const std::vector<Rational>& poly, std::size_t terms) {
    RationalSeries out(terms);
    for (std::size_t i = 0; i < std::min(poly.size(), terms); ++i) out[i] = poly[i];
    return out;
}

RationalSeries series_add(const RationalSeries& a, const RationalSeries& b) {
    RationalSeries out(std::min(a.terms(), b.terms()));
    for (std::size_t i = 0; i < out.terms(); ++i) out[i] = a[i] + b[i];
    return out;
}

RationalSeries series_mul(const RationalSeries& a, const RationalSeries& b) {
    std::size_t n = std::min(a.terms(), b.terms());
    RationalSeries out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; i + j < n; ++j) {
            if (b[j] == 0) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

RationalSeries series_pow(const RationalSeries& a, unsigned long e) {
    RationalSeries result(a.terms());
    result[0] = 1;
    RationalSeries base = a;
    while (e) {
        if (e & 1) result = series_mul(result, base);
        e >>= 1;
        if (e) base = series_mul(base, base);
    }
    return result;
}

RationalSeries series_inverse(const RationalSeries& a) {
    if (a.terms() == 0 || a[0] == 0) throw DivisionByZero("series inverse needs a nonzero constant term");
    RationalSeries out(a.terms());
    Rational lead = 1 / a[0];
    out[0] = lead;
    for (std::size_t n = 1; n < a.terms(); ++n) {
        Rational acc(0);
        for (std::size_t k = 1; k <= n; ++k) acc += a[k] * out[n - k];
        out[n] = -acc * lead;
    }
    return out;
}

std::size_t default_terms(std::size_t deg_f, unsigned long s) { return s * deg_f * 8 + 16; }

namespace {

std::size_t poly_degree(const std::vector<Rational>& f) {
    std::size_t d = 0;
    for (std::size_t i = 0; i < f.size(); ++i)
        if (f[i] != 0) d = i;
    return d;
}

} // namespace

RationalSeries binomial_series(const std::vector<Rational>& f, long r, unsigned long s, std::size_t terms) {
    if (s == 0) throw HypothesisViolated("binomial series needs s >= 1");
    if (f.empty() || f[0] != 1) throw HypothesisViolated("binomial series needs f(0) = 1");
    std::size_t d = poly_degree(f);
    std::size_t N = terms ? terms : default_terms(d, s);

    // s n c_n = sum_{k=1..min(d,n)} (r k - s (n - k)) a_k c_{n-k}, c_0 = 1
    RationalSeries h(N);
    if (N == 0) return h;
    h[0] = 1;
    for (std::size_t n = 1; n < N; ++n) {
        Rational acc(0);
        std::size_t kmax = std::min<std::size_t>(d, n);
        for (std::size_t k = 1; k <= kmax; ++k) {
            if (k >= f.size() || f[k] == 0) continue;
            Rational weight = Rational(r) * static_cast<long>(k) - Rational(static_cast<long>(s)) * static_cast<long>(n - k);
            acc += weight * f[k] * h[n - k];
        }
        h[n] = acc / (Rational(static_cast<long>(s)) * static_cast<long>(n));
    }
    return h;
}

RationalSeries exp_series(const std::vector<Rational>& f, std::size_t terms) {
    if (!f.empty() && f[0] != 0) throw HypothesisViolated("exponential series needs f(0) = 0");
    std::size_t d = f.empty() ? 0 : poly_degree(f);
    std::size_t N = terms ? terms : default_terms(std::max<std::size_t>(d, 1), 1);

    // n c_n = sum_{k=1..min(d,n)} k a_k c_{n-k}, c_0 = 1
    RationalSeries h(N);
    if (N == 0) return h;
    h[0] = 1;
    for (std::size_t n = 1; n < N; ++n) {
        Rational acc(0);
        std::size_t kmax = std::min<std::size_t>(d, n);
        for (std::size_t k = 1; k <= kmax; ++k) {
            if (k >= f.size() || f[k] == 0) continue;
            acc += Rational(static_cast<long>(k)) * f[k] * h[n - k];
        }
        h[n] = acc / static_cast<long>(n);
    }
    return h;
}

} // namespace rootpoly
