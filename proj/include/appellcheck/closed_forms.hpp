// Closed-form and semi-closed evaluations used as identity sides: the
// elementary closed form for the second-kind series at unit parameters, its
// restrictions to the v = 1 edge and the u + v = 1 diagonal, the formal
// row-expansion probe at the edge, the (numerically implemented) mistaken
// reduction formulas that the verification catalog falsifies, the correct
// edge reductions for the first- and third-kind series, radial boundary
// limits, the Bailey-type product forms, and the two equivalent quadratic
// connection formulas for the fourth-kind series on its singular parabola.
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

// Generic-a elementary closed form of F2(a; 1,1; 2,2; x, y); degenerate
// denominators at a = 1, 2 are handled by the callers.
inline Complex f2_closed_generic(const Complex& a, const Complex& x,
                                 const Complex& y, BranchConvention bc) {
  Complex e = 2.0 - a;
  return (1.0 - pow_branch(1.0 - x, e, bc) - pow_branch(1.0 - y, e, bc) +
          pow_branch(1.0 - x - y, e, bc)) /
         ((1.0 - a) * (2.0 - a) * x * y);
}

// z log z with its removable singularity at z = 0 filled in, using the
// shared negative-axis branch convention.
inline Complex xlogx(const Complex& z, BranchConvention bc) {
  if (z == Complex(0.0, 0.0)) return Complex(0.0, 0.0);
  return z * log_branch(z, bc);
}

}  // namespace detail

// F2(a; 1,1; 2,2; x, y) in elementary closed form.  Exact logarithmic forms
// at a = 1 and a = 2; within 1e-6 of those points the generic expression
// loses all precision to cancellation, so a two-point average at a +/- 1e-5
// is used (second-order accurate in the offset; ~1e-10 relative).
inline Result<Complex> f2_closed(Complex a, Complex x, Complex y,
                                 BranchConvention bc = BranchConvention::PrincipalUpper) {
  Result<Complex> res;
  if (x == Complex(0.0, 0.0) || y == Complex(0.0, 0.0)) {
    res.status = Status::Degenerate;  // removable zero; callers use limits
    return res;
  }
  const double d1 = std::abs(a - Complex(1.0, 0.0));
  const double d2 = std::abs(a - Complex(2.0, 0.0));
  if (d1 < 1e-12) {
    res.value = (detail::xlogx(1.0 - x - y, bc) - detail::xlogx(1.0 - x, bc) -
                 detail::xlogx(1.0 - y, bc)) /
                (x * y);
    return res;
  }
  if (d2 < 1e-12) {
    res.value = (log_branch(1.0 - x, bc) + log_branch(1.0 - y, bc) -
                 log_branch(1.0 - x - y, bc)) /
                (x * y);
    return res;
  }
  if (d1 < 1e-6 || d2 < 1e-6) {
    const double eps = 1e-5;
    Complex lo = detail::f2_closed_generic(a - eps, x, y, bc);
    Complex hi = detail::f2_closed_generic(a + eps, x, y, bc);
    res.value = 0.5 * (lo + hi);
    res.err_estimate = std::abs(hi - lo);  // pessimistic; curvature is the real error
    return res;
  }
  res.value = detail::f2_closed_generic(a, x, y, bc);
  return res;
}

// Edge restriction F2(a; 1,1; 2,2; x, 1) (valid for Re a < 2, where the
// (1-y)-power vanishes as y -> 1).  a = 1 takes the exact logarithmic limit;
// within 1e-6 of it, a two-point average sidesteps the cancellation.
inline Result<Complex> f2_y1_closed(Complex a, Complex x,
                                    BranchConvention bc = BranchConvention::PrincipalUpper) {
  Result<Complex> res;
  if (a.real() >= 2.0) {
    res.status = Status::OutsideDomain;
    return res;
  }
  const double d1 = std::abs(a - Complex(1.0, 0.0));
  if (d1 < 1e-12) {
    res.value =
        (detail::xlogx(-x, bc) - detail::xlogx(1.0 - x, bc)) / x;
    return res;
  }
  auto generic = [&](const Complex& aa) {
    Complex e = 2.0 - aa;
    return (1.0 - pow_branch(1.0 - x, e, bc) + pow_branch(-x, e, bc)) /
           ((1.0 - aa) * (2.0 - aa) * x);
  };
  if (d1 < 1e-6) {
    const double eps = 1e-5;
    Complex lo = generic(a - eps), hi = generic(a + eps);
    res.value = 0.5 * (lo + hi);
    res.err_estimate = std::abs(hi - lo);
    return res;
  }
  res.value = generic(a);
  return res;
}

// Diagonal restriction F2(a; 1,1; 2,2; x, 1-x), reached as a limit along the
// ray (x, (1-x)t), t -> 1 (valid for Re a < 2).  Same a = 1 handling.
inline Result<Complex> f2_diag_closed(Complex a, Complex x,
                                      BranchConvention bc = BranchConvention::PrincipalUpper) {
  Result<Complex> res;
  if (a.real() >= 2.0) {
    res.status = Status::OutsideDomain;
    return res;
  }
  const double d1 = std::abs(a - Complex(1.0, 0.0));
  if (d1 < 1e-12) {
    res.value = -(detail::xlogx(1.0 - x, bc) + detail::xlogx(x, bc)) /
                (x * (1.0 - x));
    return res;
  }
  auto generic = [&](const Complex& aa) {
    Complex e = 2.0 - aa;
    return (1.0 - pow_branch(1.0 - x, e, bc) - pow_branch(x, e, bc)) /
           ((1.0 - aa) * (2.0 - aa) * x * (1.0 - x));
  };
  if (d1 < 1e-6) {
    const double eps = 1e-5;
    Complex lo = generic(a - eps), hi = generic(a + eps);
    res.value = 0.5 * (lo + hi);
    res.err_estimate = std::abs(hi - lo);
    return res;
  }
  res.value = generic(a);
  return res;
}

// What the mistaken edge/diagonal reductions evaluate to at the elementary
// parameter point (they drop the branch-power term):
inline Complex naive_edge_reduced(const Complex& a, const Complex& x,
                                  BranchConvention bc = BranchConvention::PrincipalUpper) {
  return (1.0 - pow_branch(1.0 - x, 2.0 - a, bc)) / ((1.0 - a) * (2.0 - a) * x);
}

inline Complex naive_diag_reduced(const Complex& a, const Complex& x,
                                  BranchConvention bc = BranchConvention::PrincipalUpper) {
  return (1.0 - pow_branch(1.0 - x, 2.0 - a, bc)) /
         ((1.0 - a) * (2.0 - a) * x * (1.0 - x));
}

// The exact difference (true restriction) - (mistaken formula): a pure branch
// power whose presence the fitting module detects from samples alone.
inline Complex predicted_edge_residual(const Complex& a, const Complex& x,
                                       BranchConvention bc = BranchConvention::PrincipalUpper) {
  return pow_branch(-x, 2.0 - a, bc) / ((1.0 - a) * (2.0 - a) * x);
}

inline Complex predicted_diag_residual(const Complex& a, const Complex& x,
                                       BranchConvention bc = BranchConvention::PrincipalUpper) {
  return -pow_branch(x, 2.0 - a, bc) / ((1.0 - a) * (2.0 - a) * x * (1.0 - x));
}

// Formal term-by-term edge expansion of the second-kind series: row k of
// F2(a; b1, b2; c1, c2; x, 1) would be C_k = (a)_k (b1)_k / ((c1)_k k!) *
// 2F1(a+k, b2; c2; 1), defined only while Re(c2 - a - b2) > k.  Reports each
// row's coefficient (or its first undefined index) without summing: the point
// is precisely that the expansion stops being defined.
struct FormalRow {
  long k = 0;
  bool defined = false;
  Complex coefficient{};  // meaningful only when defined
};

inline std::vector<FormalRow> f2_formal_row_expansion(Complex a, Complex b1,
                                                      Complex b2, Complex c1,
                                                      Complex c2, long rows) {
  std::vector<FormalRow> out;
  out.reserve(rows);
  Complex poch(1.0, 0.0);  // (a)_k (b1)_k / ((c1)_k k!)
  for (long k = 0; k < rows; ++k) {
    FormalRow row;
    row.k = k;
    double kk = static_cast<double>(k);
    row.defined = gauss_at_1_defined(a + kk, b2, c2);
    if (row.defined) {
      row.coefficient = poch * gauss_at_1(a + kk, b2, c2);
    }
    out.push_back(row);
    poch *= (a + kk) * (b1 + kk) / ((c1 + kk) * (kk + 1.0));
  }
  return out;
}

// ---------------------------------------------------------------------------
// The four mistaken reduction formulas, implemented exactly as stated so the
// catalog can demonstrate numerically that they are not identities.
// ---------------------------------------------------------------------------

// Claimed edge reduction of the second-kind series to a 3F2.
inline Result<Complex> naive_edge_pfq(Complex a, Complex b1, Complex b2,
                                      Complex c1, Complex c2, Complex x,
                                      const EvalConfig& cfg = {}) {
  Result<Complex> res;
  if ((c2 - a - b2).real() <= 0.0) {
    res.status = Status::OutsideDomain;
    return res;
  }
  Complex pref;
  try {
    pref = gamma(c2) * gamma(c2 - a - b2) * rgamma(c2 - a) * rgamma(c2 - b2);
  } catch (const eval_error& e) {
    res.status = e.status();
    return res;
  }
  Result<Complex> f = eval_pfq({a, b1, a - c2 + 1.0},
                               {c1, a + b2 - c2 + 1.0}, x, cfg);
  res = f;
  res.value = pref * f.value;
  res.err_estimate = std::abs(pref) * f.err_estimate;
  return res;
}

// Claimed diagonal reduction (the same 3F2 after an Euler-type argument map).
inline Result<Complex> naive_diag_pfq(Complex a, Complex b1, Complex b2,
                                      Complex c1, Complex c2, Complex x,
                                      const EvalConfig& cfg = {}) {
  Result<Complex> res;
  if ((c2 - a - b2).real() <= 0.0) {
    res.status = Status::OutsideDomain;
    return res;
  }
  Complex pref;
  try {
    pref = gamma(c2) * gamma(c2 - a - b2) * rgamma(c2 - a) * rgamma(c2 - b2) *
           pow_branch(1.0 - x, -a);
  } catch (const eval_error& e) {
    res.status = e.status();
    return res;
  }
  Result<Complex> f = eval_pfq({a, c1 - b1, a - c2 + 1.0},
                               {c1, a + b2 - c2 + 1.0}, x / (x - 1.0), cfg);
  res = f;
  res.value = pref * f.value;
  res.err_estimate = std::abs(pref) * f.err_estimate;
  return res;
}

// Claimed quadratic reduction A: fourth-kind series on the singular parabola
// equal to a single 3F2.  Requires Re(a+b) < 1/2 for its gamma prefactor.
inline Result<Complex> naive_quadratic_a(Complex a, Complex b, Complex c,
                                         Complex x, const EvalConfig& cfg = {}) {
  Result<Complex> res;
  if ((a + b).real() >= 0.5) {
    res.status = Status::OutsideDomain;
    return res;
  }
  Complex pref;
  try {
    pref = gamma(Complex(0.5, 0.0)) * gamma(0.5 - a - b) * rgamma(0.5 - a) *
           rgamma(0.5 - b);
  } catch (const eval_error& e) {
    res.status = e.status();
    return res;
  }
  Result<Complex> f =
      eval_pfq({2.0 * a, 2.0 * b, c}, {a + b + 0.5, 2.0 * c}, x, cfg);
  res = f;
  res.value = pref * f.value;
  res.err_estimate = std::abs(pref) * f.err_estimate;
  return res;
}

// Claimed quadratic reduction B: one-parameter family equal to a squared 2F1.
// Requires Re c < 1/2.
inline Result<Complex> naive_quadratic_b(Complex c, Complex x,
                                         const EvalConfig& cfg = {}) {
  Result<Complex> res;
  if (c.real() >= 0.5) {
    res.status = Status::OutsideDomain;
    return res;
  }
  Complex pref;
  try {
    pref = gamma(c + 0.5) * gamma(2.0 - 4.0 * c) * rgamma(1.0 - c) *
           rgamma(1.5 - 2.0 * c);
  } catch (const eval_error& e) {
    res.status = e.status();
    return res;
  }
  Result<Complex> f = eval_2f1(c, 3.0 * c - 1.0, 2.0 * c, x, cfg);
  res = f;
  res.value = pref * f.value * f.value;
  res.err_estimate = 2.0 * std::abs(pref * f.value) * f.err_estimate;
  return res;
}

// ---------------------------------------------------------------------------
// Correct edge reductions, summed through the gamma-ratio row recurrence
// (implementation-independent of the prefactor-times-pFq route they equal).
// ---------------------------------------------------------------------------

// F3(a1, a2; b1, b2; c; x, 1) = sum_m (a1)_m (b1)_m / ((c)_m m!) g_m x^m with
// g_m the Gauss value of row m; g_{m+1}/g_m = (c+m)(c+m-a2-b2) /
// ((c+m-a2)(c+m-b2)).  Requires Re(c - a2 - b2) > 0.
inline Result<Complex> f3_edge(Complex a1, Complex a2, Complex b1, Complex b2,
                               Complex c, Complex x, const EvalConfig& cfg = {}) {
  Result<Complex> res;
  if (!gauss_at_1_defined(a2, b2, c)) {
    res.status = Status::OutsideDomain;
    return res;
  }
  Complex coeff;
  try {
    coeff = gauss_at_1(a2, b2, c);
  } catch (const eval_error& e) {
    res.status = e.status();
    return res;
  }
  Complex sum = coeff;
  int small_run = 0;
  double prev = std::abs(coeff);
  for (long m = 0; m < cfg.max_terms; ++m) {
    double mm = static_cast<double>(m);
    coeff *= (a1 + mm) * (b1 + mm) / ((c + mm) * (mm + 1.0)) *
             ((c + mm) * (c + mm - a2 - b2) / ((c + mm - a2) * (c + mm - b2))) * x;
    sum += coeff;
    res.terms_used = m + 2;
    double tmag = std::abs(coeff);
    if (tmag <= cfg.rel_tol * (1.0 + std::abs(sum)) && tmag <= prev) {
      if (++small_run >= 3) {
        res.value = sum;
        res.err_estimate = tmag;
        return res;
      }
    } else {
      small_run = 0;
    }
    prev = tmag;
  }
  res.value = sum;
  res.status = Status::Truncated;
  res.err_estimate = std::abs(coeff);
  return res;
}

// F1(a; b1, b2; c; x, 1) = sum_m (a)_m (b1)_m / ((c)_m m!) g_m x^m with
// g_{m+1}/g_m = (c+m)/(c+m-b2).  Requires Re(c - a - b2) > 0.
inline Result<Complex> f1_edge(Complex a, Complex b1, Complex b2, Complex c,
                               Complex x, const EvalConfig& cfg = {}) {
  Result<Complex> res;
  if (!gauss_at_1_defined(a, b2, c)) {
    res.status = Status::OutsideDomain;
    return res;
  }
  Complex coeff;
  try {
    coeff = gauss_at_1(a, b2, c);
  } catch (const eval_error& e) {
    res.status = e.status();
    return res;
  }
  Complex sum = coeff;
  int small_run = 0;
  double prev = std::abs(coeff);
  for (long m = 0; m < cfg.max_terms; ++m) {
    double mm = static_cast<double>(m);
    coeff *= (a + mm) * (b1 + mm) / ((c + mm) * (mm + 1.0)) *
             ((c + mm) / (c + mm - b2)) * x;
    sum += coeff;
    res.terms_used = m + 2;
    double tmag = std::abs(coeff);
    if (tmag <= cfg.rel_tol * (1.0 + std::abs(sum)) && tmag <= prev) {
      if (++small_run >= 3) {
        res.value = sum;
        res.err_estimate = tmag;
        return res;
      }
    } else {
      small_run = 0;
    }
    prev = tmag;
  }
  res.value = sum;
  res.status = Status::Truncated;
  res.err_estimate = std::abs(coeff);
  return res;
}

// Matching prefactor-times-pFq routes (used as the opposite identity side).
inline Result<Complex> f3_edge_pfq(Complex a1, Complex a2, Complex b1,
                                   Complex b2, Complex c, Complex x,
                                   const EvalConfig& cfg = {}) {
  Result<Complex> res;
  if ((c - a2 - b2).real() <= 0.0) {
    res.status = Status::OutsideDomain;
    return res;
  }
  Complex pref;
  try {
    pref = gamma(c) * gamma(c - a2 - b2) * rgamma(c - a2) * rgamma(c - b2);
  } catch (const eval_error& e) {
    res.status = e.status();
    return res;
  }
  Result<Complex> f =
      eval_pfq({a1, b1, c - a2 - b2}, {c - a2, c - b2}, x, cfg);
  res = f;
  res.value = pref * f.value;
  res.err_estimate = std::abs(pref) * f.err_estimate;
  return res;
}

inline Result<Complex> f1_edge_pfq(Complex a, Complex b1, Complex b2, Complex c,
                                   Complex x, const EvalConfig& cfg = {}) {
  Result<Complex> res;
  if ((c - a - b2).real() <= 0.0) {
    res.status = Status::OutsideDomain;
    return res;
  }
  Complex pref;
  try {
    pref = gamma(c) * gamma(c - a - b2) * rgamma(c - a) * rgamma(c - b2);
  } catch (const eval_error& e) {
    res.status = e.status();
    return res;
  }
  Result<Complex> f = eval_2f1(a, b1, c - b2, x, cfg);
  res = f;
  res.value = pref * f.value;
  res.err_estimate = std::abs(pref) * f.err_estimate;
  return res;
}

// ---------------------------------------------------------------------------
// Radial boundary limits.  Node bases are calibrated per family (the
// diagonal of the second-kind region wants 0.5, the parabola of the
// fourth-kind region wants 0.6 to keep member costs affordable); depth is
// at least 12.  Member tolerance is pinned at 1e-13 for extrapolation noise.
// ---------------------------------------------------------------------------

inline Result<Complex> radial_f2_diag(Complex a, Complex b1, Complex b2,
                                      Complex c1, Complex c2, Complex x,
                                      const EvalConfig& cfg = {}) {
  EvalConfig rcfg = cfg;
  rcfg.accel_base = 0.5;
  rcfg.accel_depth = std::max(cfg.accel_depth, 12);
  rcfg.rel_tol = std::min(cfg.rel_tol, 1e-13);
  rcfg.max_terms = std::max(cfg.max_terms, 400000L);
  auto member = [&](double t) {
    return eval_f2(a, b1, b2, c1, c2, x, (1.0 - x) * t, rcfg);
  };
  return radial_limit(member, rcfg);
}

inline Result<Complex> radial_f4(Complex a, Complex b, Complex c1, Complex c2,
                                 Complex x, const EvalConfig& cfg = {}) {
  EvalConfig rcfg = cfg;
  rcfg.accel_base = 0.6;
  rcfg.accel_depth = std::max(cfg.accel_depth, 12);
  rcfg.rel_tol = std::min(cfg.rel_tol, 1e-13);
  rcfg.max_terms = std::max(cfg.max_terms, 400000L);
  auto member = [&](double t) {
    return eval_f4(a, b, c1, c2, t * x * x, t * (1.0 - x) * (1.0 - x), rcfg);
  };
  return radial_limit(member, rcfg);
}

// ---------------------------------------------------------------------------
// Product and connection forms for the fourth-kind series.
// ---------------------------------------------------------------------------

// Product side of the factorisation identity:
// F4(a; b; c, a+b-c+1; x(1-y), y(1-x)) = 2F1(a,b;c;x) * 2F1(a,b;a+b-c+1;y).
inline Result<Complex> bailey_product(Complex a, Complex b, Complex c,
                                      Complex x, Complex y,
                                      const EvalConfig& cfg = {}) {
  Result<Complex> r1 = eval_2f1(a, b, c, x, cfg);
  Result<Complex> r2 = eval_2f1(a, b, a + b - c + 1.0, y, cfg);
  Result<Complex> res;
  res.value = r1.value * r2.value;
  res.status = (r1.status == Status::Converged) ? r2.status : r1.status;
  res.err_estimate =
      std::abs(r1.value) * r2.err_estimate + std::abs(r2.value) * r1.err_estimate;
  res.terms_used = r1.terms_used + r2.terms_used;
  return res;
}

// Local two-term expansion of the same product on the diagonal y = 1-x,
// valid for Re c < 1 and Re(c-a-b) > 0.
inline Result<Complex> bailey_local(Complex a, Complex b, Complex c, Complex x,
                                    const EvalConfig& cfg = {}) {
  Result<Complex> res;
  if (c.real() >= 1.0 || (c - a - b).real() <= 0.0) {
    res.status = Status::OutsideDomain;
    return res;
  }
  Complex p1, p2;
  try {
    p1 = gamma(a + b - c + 1.0) * gamma(1.0 - c) * rgamma(a - c + 1.0) *
         rgamma(b - c + 1.0);
    p2 = gamma(a + b - c + 1.0) * gamma(c - 1.0) * rgamma(a) * rgamma(b);
  } catch (const eval_error& e) {
    res.status = e.status();
    return res;
  }
  Result<Complex> f = eval_2f1(a, b, c, x, cfg);
  Result<Complex> g = eval_2f1(a - c + 1.0, b - c + 1.0, 2.0 - c, x, cfg);
  res.value = p1 * f.value * f.value +
              p2 * pow_branch(x, 1.0 - c) * f.value * g.value;
  res.status = (f.status == Status::Converged) ? g.status : f.status;
  res.err_estimate = (std::abs(p1 * f.value) * 2.0 + std::abs(p2 * g.value)) *
                         f.err_estimate +
                     std::abs(p2 * f.value) * g.err_estimate;
  res.terms_used = f.terms_used + g.terms_used;
  return res;
}

// Correct two-term connection formulas for the fourth-kind series on its
// singular parabola (u, v) = (x^2, (1-x)^2) with second denominator parameter
// a+b-c+3/2.  Both require Re c < 1 and Re(c-a-b) > 1/2.  Form A carries
// trigonometric weights; form B trades the second term for a power of x.
// The two are equal wherever both are defined.
inline Result<Complex> f4_connection_a(Complex a, Complex b, Complex c,
                                       Complex x, const EvalConfig& cfg = {}) {
  Result<Complex> res;
  if (c.real() >= 1.0 || (c - a - b).real() <= 0.5) {
    res.status = Status::OutsideDomain;
    return res;
  }
  Complex p1, p2;
  try {
    p1 = gamma(a + b - c + 1.5) * gamma(1.5 - c) * rgamma(a - c + 1.5) *
         rgamma(b - c + 1.5) * cos_pi(c) * cos_pi(c - a - b) /
         (cos_pi(a) * cos_pi(b));
    p2 = gamma(c) * gamma(c - a - b) * rgamma(c - a) * rgamma(c - b) *
         sin_pi(c) * sin_pi(c - a - b) / (cos_pi(a) * cos_pi(b));
  } catch (const eval_error& e) {
    res.status = e.status();
    return res;
  }
  Result<Complex> f = eval_2f1(2.0 * a, 2.0 * b, 2.0 * c - 1.0, x, cfg);
  Result<Complex> g =
      eval_2f1(2.0 * a, 2.0 * b, 2.0 * (a + b - c + 1.0), 1.0 - x, cfg);
  res.value = p1 * f.value + p2 * g.value;
  res.status = (f.status == Status::Converged) ? g.status : f.status;
  res.err_estimate =
      std::abs(p1) * f.err_estimate + std::abs(p2) * g.err_estimate;
  res.terms_used = f.terms_used + g.terms_used;
  return res;
}

inline Result<Complex> f4_connection_b(Complex a, Complex b, Complex c,
                                       Complex x, const EvalConfig& cfg = {}) {
  Result<Complex> res;
  if (c.real() >= 1.0 || (c - a - b).real() <= 0.5) {
    res.status = Status::OutsideDomain;
    return res;
  }
  Complex p1, p2;
  try {
    p1 = gamma(a + b - c + 1.5) * gamma(1.5 - c) * rgamma(a - c + 1.5) *
         rgamma(b - c + 1.5);
    p2 = gamma(c) * gamma(a + b - c + 1.5) * gamma(2.0 * c - 2.0) *
         rgamma(c - a) * rgamma(c - b) * rgamma(2.0 * a) * rgamma(2.0 * b) *
         pow_branch(Complex(2.0, 0.0), 2.0 * (a + b - c) + 1.0) *
         std::sqrt(kPi) * sin_pi(c) / (cos_pi(a) * cos_pi(b));
  } catch (const eval_error& e) {
    res.status = e.status();
    return res;
  }
  Result<Complex> f = eval_2f1(2.0 * a, 2.0 * b, 2.0 * c - 1.0, x, cfg);
  Result<Complex> g = eval_2f1(2.0 * (a - c + 1.0), 2.0 * (b - c + 1.0),
                               3.0 - 2.0 * c, x, cfg);
  res.value = p1 * f.value + p2 * pow_branch(x, 2.0 - 2.0 * c) * g.value;
  res.status = (f.status == Status::Converged) ? g.status : f.status;
  res.err_estimate =
      std::abs(p1) * f.err_estimate + std::abs(p2) * g.err_estimate;
  res.terms_used = f.terms_used + g.terms_used;
  return res;
}

}  // namespace appellcheck
