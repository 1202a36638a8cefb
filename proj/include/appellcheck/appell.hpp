// The four bivariate hypergeometric double series, summed row-wise: the outer
// index runs over powers of u, each row contributing a coefficient times an
// inner Gauss series in v.  Inner sums are carried in mantissa/exponent form
// (Scaled) because near the domain boundary the inner values and the row
// coefficients separately leave double range even though each row's product
// is bounded.  The second-kind series additionally has a connection-based
// fast path for real v near 1, where direct inner summation would need
// billions of terms.
#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include "appellcheck/arith.hpp"
#include "appellcheck/series.hpp"
#include "appellcheck/types.hpp"

namespace appellcheck {

enum class AppellKind { F1, F2, F3, F4 };

constexpr const char* appell_name(AppellKind k) {
  switch (k) {
    case AppellKind::F1: return "F1";
    case AppellKind::F2: return "F2";
    case AppellKind::F3: return "F3";
    case AppellKind::F4: return "F4";
  }
  return "?";
}

// Convergence regions of the defining double series.
inline bool in_region(AppellKind k, const Complex& u, const Complex& v) {
  switch (k) {
    case AppellKind::F1:
    case AppellKind::F3:
      return std::abs(u) < 1.0 && std::abs(v) < 1.0;
    case AppellKind::F2:
      return std::abs(u) + std::abs(v) < 1.0;
    case AppellKind::F4:
      return std::sqrt(std::abs(u)) + std::sqrt(std::abs(v)) < 1.0;
  }
  return false;
}

namespace detail {

// Direct Gauss series in Scaled arithmetic.  Terms may climb to ~(1-v)^(-m)
// before decaying when the upper parameters are large, so the stopping rule
// requires the terms to be both small relative to the sum and decreasing.
// Throws eval_error on undefined coefficients or an exhausted budget.
inline Scaled scaled_2f1_direct(const Complex& a, const Complex& b,
                                const Complex& c, const Complex& v,
                                double rel_tol, long max_terms, long& terms) {
  long kt = -1;
  {
    long ka = first_poch_zero(a), kb = first_poch_zero(b);
    if (ka >= 0) kt = ka;
    if (kb >= 0 && (kt < 0 || kb < kt)) kt = kb;
  }
  long kp = first_poch_zero(c);
  if (kp >= 0 && (kt < 0 || kp <= kt)) {
    throw eval_error(Status::UndefinedCoefficient,
                     "inner series lower parameter at non-positive integer");
  }

  Scaled term(Complex(1.0, 0.0));
  Scaled sum = term;
  const double log_tol = std::log(rel_tol);
  const double av = std::abs(v);
  const double log_tail =
      std::log(std::max(1.0, av / std::max(1e-300, 1.0 - av)));
  int small_run = 0;
  double prev_lt = 0.0;
  for (long k = 0; k < max_terms; ++k) {
    if (kt >= 0 && k + 1 == kt) {
      ++terms;
      return sum;  // exact terminating sum
    }
    double kk = static_cast<double>(k);
    term = term * ((a + kk) * (b + kk) / ((c + kk) * (kk + 1.0)) * v);
    sum = sum + term;
    ++terms;
    double lt = term.log_abs();
    double ls = sum.log_abs();
    if (term.is_zero() || (lt + log_tail <= ls + log_tol && lt <= prev_lt)) {
      if (++small_run >= 3) return sum;
    } else {
      small_run = 0;
    }
    prev_lt = lt;
  }
  throw eval_error(Status::Truncated, "inner series budget exhausted");
}

// Shared outer loop.  inner(m, terms) -> Scaled row value; ratio(m) -> the
// coefficient ratio coeff_{m+1}/coeff_m divided by u.
template <typename InnerF, typename RatioF>
Result<Complex> appell_row_loop(InnerF&& inner, RatioF&& ratio, const Complex& u,
                                const EvalConfig& cfg) {
  Result<Complex> res;
  Scaled sum;
  Scaled rowcoef(Complex(1.0, 0.0));
  long terms = 0;
  int small_run = 0;
  const double log_tol = std::log(cfg.rel_tol);
  double prev_lt = std::numeric_limits<double>::infinity();
  try {
    for (long m = 0; m < cfg.max_terms; ++m) {
      Scaled in = inner(m, terms);
      Scaled term = rowcoef * in;
      sum = sum + term;
      ++terms;
      double lt = term.log_abs();
      double ls = sum.log_abs();
      // Ratio-aware tail: row magnitudes decay like r^m with r possibly very
      // close to 1 near the domain boundary, so the remaining tail is the
      // last row divided by (1 - r), estimated from consecutive rows.
      double log_tail = 0.0;
      if (std::isfinite(prev_lt) && std::isfinite(lt) && lt < prev_lt) {
        double r = std::exp(lt - prev_lt);
        if (r > 0.5) log_tail = std::log(r / (1.0 - r));
      }
      bool small = term.is_zero() || lt + log_tail <= ls + log_tol;
      bool decaying = term.is_zero() || lt <= prev_lt;
      if (small && decaying) {
        if (++small_run >= 3) {
          res.value = sum.to_complex();
          res.status = Status::Converged;
          res.err_estimate = term.is_zero() ? 0.0 : std::exp(lt + log_tail);
          res.terms_used = terms;
          return res;
        }
      } else {
        small_run = 0;
      }
      prev_lt = lt;
      rowcoef = rowcoef * (ratio(m) * u);
      if (rowcoef.is_zero()) {  // outer series terminated exactly
        res.value = sum.to_complex();
        res.status = Status::Converged;
        res.err_estimate = 0.0;
        res.terms_used = terms;
        return res;
      }
    }
  } catch (const eval_error& e) {
    res.value = Complex(0.0, 0.0);
    res.status = e.status();
    res.terms_used = terms;
    return res;
  }
  res.value = sum.to_complex();
  res.status = Status::Truncated;
  res.err_estimate = std::isfinite(prev_lt) ? std::exp(prev_lt) : 0.0;
  res.terms_used = terms;
  return res;
}

// Undefined-coefficient guard for an outer series with numerator pochhammers
// (n1)_m (n2)_m and denominator (d)_m.
inline bool outer_undefined(const Complex& n1, const Complex& n2, const Complex& d) {
  long kt = -1;
  long k1 = first_poch_zero(n1), k2 = first_poch_zero(n2);
  if (k1 >= 0) kt = k1;
  if (k2 >= 0 && (kt < 0 || k2 < kt)) kt = k2;
  long kp = first_poch_zero(d);
  return kp >= 0 && (kt < 0 || kp <= kt);
}

}  // namespace detail

// F1(a; b1, b2; c; u, v): inner row m is 2F1(a+m, b2; c+m; v) with row
// coefficient (a)_m (b1)_m / ((c)_m m!).
inline Result<Complex> eval_f1(Complex a, Complex b1, Complex b2, Complex c,
                               Complex u, Complex v, const EvalConfig& cfg = {}) {
  if (!in_region(AppellKind::F1, u, v)) {
    return {Complex(0.0, 0.0), Status::OutsideDomain, 0.0, 0};
  }
  if (detail::outer_undefined(a, b1, c)) {
    return {Complex(0.0, 0.0), Status::UndefinedCoefficient, 0.0, 0};
  }
  EvalConfig inner_cfg = cfg;
  auto inner = [&](long m, long& terms) {
    double mm = static_cast<double>(m);
    Result<Complex> r = eval_2f1(a + mm, b2, c + mm, v, inner_cfg);
    terms += r.terms_used;
    if (r.status != Status::Converged) {
      throw eval_error(r.status, "inner row evaluation failed");
    }
    return Scaled(r.value);
  };
  auto ratio = [&](long m) {
    double mm = static_cast<double>(m);
    return (a + mm) * (b1 + mm) / ((c + mm) * (mm + 1.0));
  };
  return detail::appell_row_loop(inner, ratio, u, cfg);
}

// F3(a1, a2; b1, b2; c; u, v): inner row m is 2F1(a2, b2; c+m; v) with row
// coefficient (a1)_m (b1)_m / ((c)_m m!).
inline Result<Complex> eval_f3(Complex a1, Complex a2, Complex b1, Complex b2,
                               Complex c, Complex u, Complex v,
                               const EvalConfig& cfg = {}) {
  if (!in_region(AppellKind::F3, u, v)) {
    return {Complex(0.0, 0.0), Status::OutsideDomain, 0.0, 0};
  }
  if (detail::outer_undefined(a1, b1, c)) {
    return {Complex(0.0, 0.0), Status::UndefinedCoefficient, 0.0, 0};
  }
  auto inner = [&](long m, long& terms) {
    double mm = static_cast<double>(m);
    Result<Complex> r = eval_2f1(a2, b2, c + mm, v, cfg);
    terms += r.terms_used;
    if (r.status != Status::Converged) {
      throw eval_error(r.status, "inner row evaluation failed");
    }
    return Scaled(r.value);
  };
  auto ratio = [&](long m) {
    double mm = static_cast<double>(m);
    return (a1 + mm) * (b1 + mm) / ((c + mm) * (mm + 1.0));
  };
  return detail::appell_row_loop(inner, ratio, u, cfg);
}

// F4(a; b; c1, c2; u, v): inner row m is 2F1(a+m, b+m; c2; v) with row
// coefficient (a)_m (b)_m / ((c1)_m m!).  Inner sums climb to ~(1-sqrt v)^(-2m)
// before decaying, hence Scaled arithmetic throughout.
inline Result<Complex> eval_f4(Complex a, Complex b, Complex c1, Complex c2,
                               Complex u, Complex v, const EvalConfig& cfg = {}) {
  if (!in_region(AppellKind::F4, u, v)) {
    return {Complex(0.0, 0.0), Status::OutsideDomain, 0.0, 0};
  }
  if (detail::outer_undefined(a, b, c1)) {
    return {Complex(0.0, 0.0), Status::UndefinedCoefficient, 0.0, 0};
  }
  auto inner = [&](long m, long& terms) {
    double mm = static_cast<double>(m);
    return detail::scaled_2f1_direct(a + mm, b + mm, c2, v, cfg.rel_tol,
                                     cfg.max_terms, terms);
  };
  auto ratio = [&](long m) {
    double mm = static_cast<double>(m);
    return (a + mm) * (b + mm) / ((c1 + mm) * (mm + 1.0));
  };
  return detail::appell_row_loop(inner, ratio, u, cfg);
}

// F2(a; b1, b2; c1, c2; u, v): inner row m is 2F1(a+m, b2; c2; v) with row
// coefficient (a)_m (b1)_m / ((c1)_m m!).
//
// For real v in (0.3, 1) the inner values grow like (1-v)^(-m) and the direct
// double series needs O(rows^2 v/(1-v)) terms; when that estimate crosses ~1e6
// and c2-a-b2 is safely non-integer, each inner value is assembled instead
// from the two-term connection at v = 1,
//   2F1(a+m,b2;c2;v) = A_m 2F1(a+m,b2;a+m+b2-c2+1;w)
//                    + B_m w^(c2-a-b2-m) 2F1(c2-a-m,c2-b2;c2-a-b2+1-m;w),
// w = 1-v, whose two series stay O(1) per row; A_m, B_m, and the w-power obey
// one-step recurrences, so each row costs O(-log rel_tol / -log w) flops.
// (The analogous rewrite is useless for the first-kind series, where the two
// connection pieces cancel catastrophically.)
inline Result<Complex> eval_f2(Complex a, Complex b1, Complex b2, Complex c1,
                               Complex c2, Complex u, Complex v,
                               const EvalConfig& cfg = {}) {
  if (!in_region(AppellKind::F2, u, v)) {
    return {Complex(0.0, 0.0), Status::OutsideDomain, 0.0, 0};
  }
  if (detail::outer_undefined(a, b1, c1)) {
    return {Complex(0.0, 0.0), Status::UndefinedCoefficient, 0.0, 0};
  }

  auto ratio = [&](long m) {
    double mm = static_cast<double>(m);
    return (a + mm) * (b1 + mm) / ((c1 + mm) * (mm + 1.0));
  };

  // Fast-path eligibility and cost estimate.
  bool fast = false;
  const double vr = v.real();
  if (std::abs(v.imag()) < 1e-14 && vr > 0.3 && vr < 1.0 &&
      dist_to_int(c2 - a - b2) >= 0.05 && !is_nonpos_int(c2)) {
    double rho = std::abs(u) / (1.0 - vr);
    if (rho > 0.0 && rho < 1.0) {
      double rows_est =
          std::min(static_cast<double>(cfg.max_terms), 34.0 / -std::log(rho));
      double inner_est = 0.75 * rows_est * vr / (1.0 - vr) + 40.0;
      fast = rows_est * inner_est > 1e6;
    }
  }

  if (!fast) {
    auto inner = [&](long m, long& terms) {
      double mm = static_cast<double>(m);
      return detail::scaled_2f1_direct(a + mm, b2, c2, v, cfg.rel_tol,
                                       cfg.max_terms, terms);
    };
    return detail::appell_row_loop(inner, ratio, u, cfg);
  }

  const Complex w(1.0 - vr, 0.0);
  const Complex cab = c2 - a - b2;
  Complex A, B;
  try {
    A = gamma(c2) * gamma(cab) * rgamma(c2 - a) * rgamma(c2 - b2);
    B = gamma(c2) * gamma(-cab) * rgamma(a) * rgamma(b2);
  } catch (const eval_error& e) {
    return {Complex(0.0, 0.0), e.status(), 0.0, 0};
  }
  Scaled wpow(pow_branch(w, cab));  // w^(c2-a-b2-m), advanced by 1/w per row
  const Complex winv = 1.0 / w;
  const long inner_budget = std::min<long>(cfg.max_terms, 4000);

  auto inner = [&, A, B, wpow](long m, long& terms) mutable {
    double mm = static_cast<double>(m);
    Scaled value;
    if ((a + b2 - c2 + 1.0 + mm).real() < 0.5) {
      // Connection lower parameter too close to the pole region: sum this
      // row directly (only small m can land here).
      value = detail::scaled_2f1_direct(a + mm, b2, c2, v, cfg.rel_tol,
                                        cfg.max_terms, terms);
    } else {
      Complex s1 = detail::gauss_series_double(a + mm, b2, a + mm + b2 - c2 + 1.0,
                                               w, cfg.rel_tol, inner_budget, &terms);
      Complex s2 = detail::gauss_series_double(c2 - a - mm, c2 - b2,
                                               cab + 1.0 - mm, w, cfg.rel_tol,
                                               inner_budget, &terms);
      value = Scaled(A * s1) + wpow * (B * s2);
    }
    // Advance the m-recurrences for the next row.
    A *= (c2 - a - mm - 1.0) / (cab - mm - 1.0);
    B *= (a + b2 - c2 + mm) / (a + mm);
    wpow = wpow * winv;
    return value;
  };
  return detail::appell_row_loop(inner, ratio, u, cfg);
}

// Uniform entry point used by the identity catalog and the CLI.  Parameter
// order: F1 (a, b1, b2, c); F2 (a, b1, b2, c1, c2); F3 (a1, a2, b1, b2, c);
// F4 (a, b, c1, c2).
inline Result<Complex> eval_appell(AppellKind k, const std::vector<Complex>& p,
                                   Complex u, Complex v,
                                   const EvalConfig& cfg = {}) {
  switch (k) {
    case AppellKind::F1:
      if (p.size() != 4) throw eval_error(Status::Degenerate, "F1 takes 4 parameters");
      return eval_f1(p[0], p[1], p[2], p[3], u, v, cfg);
    case AppellKind::F2:
      if (p.size() != 5) throw eval_error(Status::Degenerate, "F2 takes 5 parameters");
      return eval_f2(p[0], p[1], p[2], p[3], p[4], u, v, cfg);
    case AppellKind::F3:
      if (p.size() != 5) throw eval_error(Status::Degenerate, "F3 takes 5 parameters");
      return eval_f3(p[0], p[1], p[2], p[3], p[4], u, v, cfg);
    case AppellKind::F4:
      if (p.size() != 4) throw eval_error(Status::Degenerate, "F4 takes 4 parameters");
      return eval_f4(p[0], p[1], p[2], p[3], u, v, cfg);
  }
  throw eval_error(Status::Degenerate, "unknown series kind");
}

}  // namespace appellcheck
