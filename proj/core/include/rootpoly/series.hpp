#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "rootpoly/errors.hpp"

namespace rootpoly {

using Rational = mpq_class;

// Truncated power series over Q with exact coefficients, fixed window [0, N).
class RationalSeries {
  public:
    explicit RationalSeries(std::size_t terms) : c_(terms, Rational(0)) {}
    RationalSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {}

    std::size_t terms() const { return c_.size(); }
    const Rational& operator[](std::size_t i) const { return c_[i]; }
    Rational& operator[](std::size_t i) { return c_[i]; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool operator==(const RationalSeries& o) const { return c_ == o.c_; }

  private:
    std::vector<Rational> c_;
};

RationalSeries series_from(const std::vector<Rational>& poly, std::size_t terms);
RationalSeries series_add(const RationalSeries& a, const RationalSeries& b);
RationalSeries series_mul(const RationalSeries& a, const RationalSeries& b);
RationalSeries series_pow(const RationalSeries& a, unsigned long e);
// 1/a, needs a[0] != 0
RationalSeries series_inverse(const RationalSeries& a);

// Default truncation window for f^{r/s} checks: s * deg(f) * 8 + 16.
std::size_t default_terms(std::size_t deg_f, unsigned long s);

// h with h^s = f^r and h(0) = 1, via s f h' = r f' h. Requires f(0) = 1
// (throws HypothesisViolated otherwise) and s >= 1; r may be negative.
// terms = 0 picks the default window.
RationalSeries binomial_series(const std::vector<Rational>& f, long r, unsigned long s, std::size_t terms = 0);

// h = e^f with f(0) = 0 (throws HypothesisViolated otherwise), via h' = f' h.
RationalSeries exp_series(const std::vector<Rational>& f, std::size_t terms = 0);

} // namespace rootpoly
