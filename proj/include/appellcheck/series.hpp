// Generalised hypergeometric series evaluation: a pFq power-series engine
// with termination/pole bookkeeping and honest tail estimates (including on
// the unit circle), a 2F1 front-end that switches to the connection-at-1
// representation near z = 1, and the closed Gauss value at z = 1.
#pragma once

#include <cmath>
#include <vector>

#include "appellcheck/arith.hpp"
#include "appellcheck/types.hpp"

namespace appellcheck {

namespace detail {

// First index k at which (p)_k becomes zero, or -1 if never (p not a
// non-positive integer).  For p = -n the factor (p + n) enters at k = n + 1.
inline long first_poch_zero(const Complex& p) {
  if (!is_nonpos_int(p)) return -1;
  return static_cast<long>(std::llround(-p.real())) + 1;
}

}  // namespace detail

// pFq(upper; lower; z) by direct summation with term recurrence.
//
// Termination and degeneracy: if some lower parameter is a non-positive
// integer whose pochhammer zero strikes at or before any upper-parameter
// termination, the coefficients are undefined -> UndefinedCoefficient.
// Otherwise a terminating series is summed exactly.
//
// Radius: for p = q+1 the series converges for |z| < 1, and on |z| = 1 only
// when mu = Re(sum(lower) - sum(upper)) > 0; there the tail after term k is
// estimated algebraically as |t_k| * k / mu (terms decay like k^(-1-mu)).
inline Result<Complex> eval_pfq(const std::vector<Complex>& upper,
                                const std::vector<Complex>& lower, Complex z,
                                const EvalConfig& cfg = {}) {
  Result<Complex> res;

  long k_term = -1;  // first k with a zero numerator coefficient
  for (const auto& p : upper) {
    long k = detail::first_poch_zero(p);
    if (k >= 0 && (k_term < 0 || k < k_term)) k_term = k;
  }
  long k_pole = -1;  // first k with a zero denominator coefficient
  for (const auto& q : lower) {
    long k = detail::first_poch_zero(q);
    if (k >= 0 && (k_pole < 0 || k < k_pole)) k_pole = k;
  }
  if (k_pole >= 0 && (k_term < 0 || k_pole <= k_term)) {
    res.status = Status::UndefinedCoefficient;
    res.value = Complex(0.0, 0.0);
    return res;
  }

  const bool terminating = k_term >= 0;
  const double az = std::abs(z);
  double mu = 0.0;  // unit-circle decay exponent
  bool on_unit = false;
  if (!terminating && upper.size() == lower.size() + 1) {
    if (az > 1.0 + 1e-14) {
      res.status = Status::OutsideDomain;
      return res;
    }
    if (az > 1.0 - 1e-14) {
      on_unit = true;
      Complex s(0.0, 0.0);
      for (const auto& q : lower) s += q;
      for (const auto& p : upper) s -= p;
      mu = s.real();
      if (mu <= 0.0) {
        res.status = Status::OutsideDomain;
        return res;
      }
    }
  }

  Complex term(1.0, 0.0);
  Complex sum(1.0, 0.0);
  int small_run = 0;
  double prev_mag = 1.0;
  for (long k = 0; k < cfg.max_terms; ++k) {
    if (terminating && k + 1 == k_term) {
      res.value = sum;
      res.status = Status::Converged;
      res.err_estimate = 0.0;
      res.terms_used = k + 1;
      return res;
    }
    Complex num(1.0, 0.0), den(1.0, 0.0);
    for (const auto& p : upper) num *= p + static_cast<double>(k);
    for (const auto& q : lower) den *= q + static_cast<double>(k);
    term *= num / den * z / static_cast<double>(k + 1);
    sum += term;
    res.terms_used = k + 2;

    double tmag = std::abs(term);
    double smag = std::abs(sum);
    if (on_unit) {
      double tail = tmag * static_cast<double>(k + 1) / mu;
      if (tail <= cfg.rel_tol * (1.0 + smag)) {
        res.value = sum;
        res.status = Status::Converged;
        res.err_estimate = tail;
        return res;
      }
    } else {
      // Geometric tail bound: terms eventually decay like az^k, so the tail
      // after t_k is ~ |t_k| az/(1-az).  Using the bare last term would stop
      // far too early for az close to 1.
      double tail = tmag * std::max(1.0, az / std::max(1e-300, 1.0 - az));
      if (tail <= cfg.rel_tol * (1.0 + smag) && tmag <= prev_mag) {
        if (++small_run >= 3) {
          res.value = sum;
          res.status = Status::Converged;
          res.err_estimate = tail;
          return res;
        }
      } else {
        small_run = 0;
      }
    }
    prev_mag = tmag;
  }

  res.value = sum;
  res.status = Status::Truncated;
  res.err_estimate = on_unit
                         ? std::abs(term) * static_cast<double>(cfg.max_terms) / mu
                         : std::abs(term) / std::max(1e-300, 1.0 - az);
  return res;
}

// Closed Gauss value 2F1(a, b; c; 1) = G(c) G(c-a-b) / (G(c-a) G(c-b)).
// Requires Re(c - a - b) > 0; denominator poles give an exact zero.
inline Complex gauss_at_1(const Complex& a, const Complex& b, const Complex& c) {
  if ((c - a - b).real() <= 0.0) {
    throw eval_error(Status::OutsideDomain,
                     "gauss_at_1 requires Re(c-a-b) > 0");
  }
  return gamma(c) * gamma(c - a - b) * rgamma(c - a) * rgamma(c - b);
}

inline bool gauss_at_1_defined(const Complex& a, const Complex& b,
                               const Complex& c) {
  return (c - a - b).real() > 0.0;
}

namespace detail {

// Allocation-free direct 2F1 series for |z| < 1; used in hot row loops.
inline Complex gauss_series_double(const Complex& a, const Complex& b,
                                   const Complex& c, const Complex& z,
                                   double rel_tol, long max_terms,
                                   long* terms = nullptr) {
  Complex term(1.0, 0.0), sum(1.0, 0.0);
  const double tail_factor =
      std::max(1.0, std::abs(z) / std::max(1e-300, 1.0 - std::abs(z)));
  int small_run = 0;
  double prev = 1.0;
  long k = 0;
  for (; k < max_terms; ++k) {
    double kk = static_cast<double>(k);
    term *= (a + kk) * (b + kk) / ((c + kk) * (kk + 1.0)) * z;
    sum += term;
    double tmag = std::abs(term);
    if (tmag * tail_factor <= rel_tol * (1.0 + std::abs(sum)) && tmag <= prev) {
      if (++small_run >= 3) break;
    } else {
      small_run = 0;
    }
    prev = tmag;
  }
  if (terms) *terms += k + 1;
  return sum;
}

}  // namespace detail

// 2F1(a, b; c; z).  Inside the disc the direct series is used.  In the
// neighbourhood of z = 1 (0.5 < Re z < 1, |1-z| < 0.5) the two-term
// connection in powers of 1-z is applied when c-a-b is safely non-integer;
// the integer case falls back to the direct series and is tagged
// LogarithmicCase only if the budget runs out first.
inline Result<Complex> eval_2f1(Complex a, Complex b, Complex c, Complex z,
                                const EvalConfig& cfg = {}) {
  const bool near_one = z.real() > 0.5 && z.real() < 1.0 && std::abs(1.0 - z) < 0.5;
  const Complex cab = c - a - b;

  if (near_one && dist_to_int(cab) >= 1e-8 && !is_nonpos_int(c)) {
    // 2F1(a,b;c;z) = A * 2F1(a,b;a+b-c+1;w) + B * w^(c-a-b) * 2F1(c-a,c-b;c-a-b+1;w)
    // with w = 1-z.  Numerator gamma poles invalidate the representation ->
    // fall back to the direct series; denominator poles simply zero a term.
    if (!is_nonpos_int(cab) && !is_nonpos_int(-cab)) {
      Complex w = 1.0 - z;
      Complex A = gamma(c) * gamma(cab) * rgamma(c - a) * rgamma(c - b);
      Complex B = gamma(c) * gamma(-cab) * rgamma(a) * rgamma(b);
      Result<Complex> r1 = eval_pfq({a, b, }, {a + b - c + 1.0}, w, cfg);
      Result<Complex> r2 = eval_pfq({c - a, c - b}, {cab + 1.0}, w, cfg);
      if (r1.status == Status::Converged && r2.status == Status::Converged) {
        Result<Complex> res;
        res.value = A * r1.value + B * pow_branch(w, cab) * r2.value;
        res.status = Status::Converged;
        res.err_estimate = std::abs(A) * r1.err_estimate +
                           std::abs(B * pow_branch(w, cab)) * r2.err_estimate;
        res.terms_used = r1.terms_used + r2.terms_used;
        return res;
      }
    }
  }

  Result<Complex> res = eval_pfq({a, b}, {c}, z, cfg);
  if (res.status == Status::Truncated && near_one && dist_to_int(cab) < 1e-8) {
    res.status = Status::LogarithmicCase;
  }
  return res;
}

}  // namespace appellcheck
