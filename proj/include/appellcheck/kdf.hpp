// A two-variable hypergeometric series one level up from the four bivariate
// families: three Pochhammer products coupled through the index sum i+j in
// numerator and denominator, plus one separated pair per variable,
//
//   K(a,b; p1,p2; c; q1,q2 | x,y)
//     = sum_{i,j} (a)_{i+j} (b)_{i+j} (p1)_i (p2)_j
//                 / ( (c)_{i+j} (q1)_i (q2)_j i! j! ) x^i y^j.
//
// When a = c the coupled factors cancel and it collapses to the second-kind
// bivariate series.  The pair (p2, q2) = (-n, -2n) is meaningful only under
// the terminating convention: the j-sum is read as stopping at j = n, with
// (-n)_j / (-2n)_j the explicit partial products (both factors vanish for
// larger j, so the general prescan would reject the parameters).  This module
// also carries the closed gamma-product corner values of the series'
// square-of-Gauss connection, their independent series routes through the
// accelerated unit limit, the terminating Pochhammer-ratio limit that the
// corner analysis rests on, and the finite coefficient identity tying the
// two corner weights together.
#pragma once

#include <cmath>
#include <vector>

#include "appellcheck/accel.hpp"
#include "appellcheck/appell.hpp"
#include "appellcheck/arith.hpp"
#include "appellcheck/series.hpp"
#include "appellcheck/types.hpp"

namespace appellcheck {

namespace detail {

// Detects the terminating convention (p2, q2) = (-n, -2n): both exact
// nonpositive integers with q2 = 2 p2.  Returns n >= 0, or -1.
inline long kdf_terminating_order(const Complex& p2, const Complex& q2) {
  if (!is_nonpos_int(p2) || !is_nonpos_int(q2)) return -1;
  long n = std::llround(-p2.real());
  long m = std::llround(-q2.real());
  return (m == 2 * n) ? n : -1;
}

}  // namespace detail

// Row-wise evaluation, outer index i over powers of x.  Inside the double
// region |x| + |y| < 1 every ordering converges; under the terminating
// convention the j-sum is a polynomial and only |x| < 1 is needed.
inline Result<Complex> eval_kdf(Complex a, Complex b, Complex p1, Complex p2,
                                Complex c, Complex q1, Complex q2, Complex x,
                                Complex y, const EvalConfig& cfg = {}) {
  const long nterm = detail::kdf_terminating_order(p2, q2);
  const bool in_domain = (nterm >= 0) ? (std::abs(x) < 1.0)
                                      : (std::abs(x) + std::abs(y) < 1.0);
  if (!in_domain) {
    return {Complex(0.0, 0.0), Status::OutsideDomain, 0.0, 0};
  }
  // Outer-coefficient prescan: (a)_i (b)_i (p1)_i / ((c)_i (q1)_i i!).
  {
    long kt = -1;
    for (const Complex& num : {a, b, p1}) {
      long k = detail::first_poch_zero(num);
      if (k >= 0 && (kt < 0 || k < kt)) kt = k;
    }
    long kp = -1;
    for (const Complex& den : {c, q1}) {
      long k = detail::first_poch_zero(den);
      if (k >= 0 && (kp < 0 || k < kp)) kp = k;
    }
    if (kp >= 0 && (kt < 0 || kp <= kt)) {
      return {Complex(0.0, 0.0), Status::UndefinedCoefficient, 0.0, 0};
    }
  }

  auto ratio = [&](long m) {
    double mm = static_cast<double>(m);
    return (a + mm) * (b + mm) * (p1 + mm) /
           ((c + mm) * (q1 + mm) * (mm + 1.0));
  };

  if (nterm >= 0) {
    // Terminating convention: row i's inner sum is the explicit polynomial
    // sum_{j=0}^{n} prod_{m<j} (a+i+m)(b+i+m)(-n+m) / ((c+i+m)(-2n+m)(m+1)) y^j.
    auto inner = [&](long i, long& terms) {
      double ii = static_cast<double>(i);
      Complex t(1.0, 0.0);
      Complex s(1.0, 0.0);
      for (long j = 0; j < nterm; ++j) {
        double jj = static_cast<double>(j);
        t *= (a + ii + jj) * (b + ii + jj) * (-static_cast<double>(nterm) + jj) /
             ((c + ii + jj) * (-2.0 * static_cast<double>(nterm) + jj) *
              (jj + 1.0)) *
             y;
        s += t;
      }
      terms += nterm + 1;
      return Scaled(s);
    };
    return detail::appell_row_loop(inner, ratio, x, cfg);
  }

  auto inner = [&](long i, long& terms) {
    double ii = static_cast<double>(i);
    Result<Complex> r = eval_pfq({a + ii, b + ii, p2}, {c + ii, q2}, y, cfg);
    terms += r.terms_used;
    if (r.status != Status::Converged) {
      throw eval_error(r.status, "inner row evaluation failed");
    }
    return Scaled(r.value);
  };
  return detail::appell_row_loop(inner, ratio, x, cfg);
}

// ---------------------------------------------------------------------------
// Corner values of the square-of-Gauss connection.  The connection expresses
// the square of 2F1(a, b; c; z) through two 3F2-type series; its weights are
// fixed by the two corner values below, each a pure gamma product that the
// series routes must reproduce.  Both corner formulas hold for Re c < 1 and
// Re(c - a - b) > 1 (the region where both unit-argument series converge
// with margin and no gamma argument degenerates except through honest
// denominator poles, which rgamma maps to exact zeros).
// ---------------------------------------------------------------------------

inline bool kdf_corner_defined(const Complex& a, const Complex& b,
                               const Complex& c) {
  return c.real() < 1.0 && (c - a - b).real() > 1.0;
}

// Corner weight attached to the branch-power solution.  Vanishes identically
// whenever a denominator gamma sits at a pole (e.g. 1 + a - c a nonpositive
// integer), which is itself a checkable prediction.
inline Result<Complex> kdf_corner_z0(Complex a, Complex b, Complex c) {
  Result<Complex> res;
  if (!kdf_corner_defined(a, b, c)) {
    res.status = Status::OutsideDomain;
    return res;
  }
  try {
    res.value = gamma(Complex(0.5, 0.0)) * gamma(a + b + 0.5) * gamma(1.0 - c) *
                gamma(1.0 + a + b - c) * rgamma(a + 0.5) * rgamma(b + 0.5) *
                rgamma(1.0 + a - c) * rgamma(1.0 + b - c);
  } catch (const eval_error& e) {
    res.status = e.status();
  }
  return res;
}

// Corner weight attached to the analytic solution.
inline Result<Complex> kdf_corner_z1(Complex a, Complex b, Complex c) {
  Result<Complex> res;
  if (!kdf_corner_defined(a, b, c)) {
    res.status = Status::OutsideDomain;
    return res;
  }
  try {
    res.value = gamma(Complex(0.5, 0.0)) * gamma(a + b + 0.5) * gamma(c) *
                gamma(c - a - b) * rgamma(a + 0.5) * rgamma(b + 0.5) *
                rgamma(c - a) * rgamma(c - b);
  } catch (const eval_error& e) {
    res.status = e.status();
  }
  return res;
}

// Independent series routes to the same two corners: unit-argument 3F2 values
// obtained by extrapolating along z_j = 1 - 2^-j (direct summation at z = 1
// with convergence margin well below 1 is hopeless in double precision).
inline Result<Complex> kdf_corner_z0_series(Complex a, Complex b, Complex c,
                                            const EvalConfig& cfg = {}) {
  if (!kdf_corner_defined(a, b, c)) {
    return {Complex(0.0, 0.0), Status::OutsideDomain, 0.0, 0};
  }
  return unit_pfq_limit({2.0 * a, 2.0 * b, a + b - c + 0.5},
                        {a + b + 0.5, 2.0 * (a + b - c) + 1.0}, cfg);
}

inline Result<Complex> kdf_corner_z1_series(Complex a, Complex b, Complex c,
                                            const EvalConfig& cfg = {}) {
  if (!kdf_corner_defined(a, b, c)) {
    return {Complex(0.0, 0.0), Status::OutsideDomain, 0.0, 0};
  }
  return unit_pfq_limit({2.0 * a, 2.0 * b, c - 0.5}, {a + b + 0.5, 2.0 * c - 1.0},
                        cfg);
}

// ---------------------------------------------------------------------------
// The terminating Pochhammer-ratio limit underpinning the corner analysis:
//   lim_{e -> 0} (e - n)_{2n+1} / (2e - 2n)_{2n+1} = (-1)^n n! / (2^{2n+1} (1/2)_n).
// Closed value and a small-offset numerical probe (two-sided average, which
// cancels the O(e) error and leaves ~1e-12 at e = 1e-6).
// ---------------------------------------------------------------------------

inline double poch_ratio_limit(long n) {
  double num = 1.0;
  for (long k = 1; k <= n; ++k) num *= static_cast<double>(k);  // n!
  double half_poch = 1.0;
  for (long k = 0; k < n; ++k) half_poch *= 0.5 + static_cast<double>(k);
  double sign = (n % 2 == 0) ? 1.0 : -1.0;
  return sign * num / (std::ldexp(1.0, static_cast<int>(2 * n + 1)) * half_poch);
}

inline double poch_ratio_probe(long n, double eps = 1e-6) {
  auto ratio_at = [&](double e) {
    double num = 1.0, den = 1.0;
    for (long m = 0; m <= 2 * n; ++m) {
      num *= e - static_cast<double>(n) + static_cast<double>(m);
      den *= 2.0 * e - 2.0 * static_cast<double>(n) + static_cast<double>(m);
    }
    return num / den;
  };
  return 0.5 * (ratio_at(eps) + ratio_at(-eps));
}

// ---------------------------------------------------------------------------
// Squared-Gauss identities.
// ---------------------------------------------------------------------------

// Classical square: 2F1(a,b;a+b+1/2;z)^2 = 3F2(2a, 2b, a+b; 2a+2b, a+b+1/2; z).
inline Result<Complex> clausen_rhs(Complex a, Complex b, Complex z,
                                   const EvalConfig& cfg = {}) {
  return eval_pfq({2.0 * a, 2.0 * b, a + b}, {2.0 * (a + b), a + b + 0.5}, z,
                  cfg);
}

// Shifted square: for integer n >= 0,
//   2F1(a,b;a+b+n+1/2;z)^2
//     = (1/2)_n (a+b+1/2)_n / ((a+1/2)_n (b+1/2)_n)
//       * K(2a,2b; a+b+n,-n; a+b+1/2; 2a+2b+2n,-2n | z, 1-z),
// the K-series read under the terminating convention.
inline Result<Complex> gen_clausen_rhs(Complex a, Complex b, long n, Complex z,
                                       const EvalConfig& cfg = {}) {
  double nn = static_cast<double>(n);
  Complex pref = pochhammer(Complex(0.5, 0.0), n) * pochhammer(a + b + 0.5, n) /
                 (pochhammer(a + 0.5, n) * pochhammer(b + 0.5, n));
  Result<Complex> k =
      eval_kdf(2.0 * a, 2.0 * b, a + b + nn, Complex(-nn, 0.0), a + b + 0.5,
               2.0 * (a + b) + 2.0 * nn, Complex(-2.0 * nn, 0.0), z, 1.0 - z,
               cfg);
  k.value *= pref;
  k.err_estimate *= std::abs(pref);
  return k;
}

// Finite coefficient identity linking the two corner weights at shift n:
// returns LHS - RHS of
//   cos(pi a) cos(pi b) / cos(pi(a+b)) * R_n
//     - sin(pi a) sin(pi b) / cos(pi(a+b))
//       * (2a)_{2n+1} (2b)_{2n+1}
//         / (2^{4n+2} (1/2)_n (a+b+1/2)_n (a)_{n+1} (b)_{n+1})
//     = R_n,       R_n = (a+1/2)_n (b+1/2)_n / ((1/2)_n (a+b+1/2)_n).
inline Complex coeff_identity_gap(Complex a, Complex b, long n) {
  Complex rn = pochhammer(a + 0.5, n) * pochhammer(b + 0.5, n) /
               (pochhammer(Complex(0.5, 0.0), n) * pochhammer(a + b + 0.5, n));
  Complex cc = cos_pi(a) * cos_pi(b) / cos_pi(a + b);
  Complex ss = sin_pi(a) * sin_pi(b) / cos_pi(a + b);
  Complex big = pochhammer(2.0 * a, 2 * n + 1) * pochhammer(2.0 * b, 2 * n + 1) /
                (std::ldexp(1.0, static_cast<int>(4 * n + 2)) *
                 pochhammer(Complex(0.5, 0.0), n) * pochhammer(a + b + 0.5, n) *
                 pochhammer(a, n + 1) * pochhammer(b, n + 1));
  return cc * rn - ss * big - rn;
}

}  // namespace appellcheck
