// Detection of branch-power terms in sampled data.  Given samples y(s_i) of
// a function on a small positive interval and a candidate exponent set
// {e_j}, fits y(s) ~ sum_j c_j s^{e_j} by least squares and reports the
// coefficients, the residual 2-norm, and the design-matrix condition number.
// A fractional power that is genuinely present shows up as a stable, large
// coefficient whose removal inflates the residual by orders of magnitude --
// which is how the verification catalog demonstrates, from numbers alone,
// that a claimed elementary reduction is missing a branch term.
//
// The solver is a one-sided Jacobi SVD: for tiny systems (tens of rows, a
// handful of columns) it is simple, dependency-free, and computes small
// singular values of column-scaled matrices to high relative accuracy.
#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "appellcheck/types.hpp"

namespace appellcheck {

struct BranchFitResult {
  std::vector<Complex> coefficients;    // one per requested exponent
  std::vector<double> singular_values;  // of the raw design matrix, descending
  double residual_norm = 0.0;           // ||design * coeffs - y||_2
  double condition = 0.0;               // sigma_max / sigma_min
  Status status = Status::Converged;
};

namespace detail {

// In-place one-sided Jacobi: orthogonalises the columns of a (row-major,
// n x p), accumulating the rotations into v (p x p, preinitialised to the
// identity).  On exit column j of a equals u_j * sigma_j.
inline bool jacobi_orthogonalize(std::vector<double>& a, long n, long p,
                                 std::vector<double>& v) {
  const double tol = 1e-15;
  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0.0;
    for (long j = 0; j < p - 1; ++j) {
      for (long k = j + 1; k < p; ++k) {
        double ajj = 0.0, akk = 0.0, ajk = 0.0;
        for (long i = 0; i < n; ++i) {
          double x = a[i * p + j], y = a[i * p + k];
          ajj += x * x;
          akk += y * y;
          ajk += x * y;
        }
        if (ajj == 0.0 || akk == 0.0) continue;
        double denom = std::sqrt(ajj * akk);
        if (std::abs(ajk) <= tol * denom) continue;
        off = std::max(off, std::abs(ajk) / denom);
        double zeta = (akk - ajj) / (2.0 * ajk);
        double t = ((zeta >= 0.0) ? 1.0 : -1.0) /
                   (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        double c = 1.0 / std::sqrt(1.0 + t * t);
        double s = c * t;
        for (long i = 0; i < n; ++i) {
          double x = a[i * p + j], y = a[i * p + k];
          a[i * p + j] = c * x - s * y;
          a[i * p + k] = s * x + c * y;
        }
        for (long i = 0; i < p; ++i) {
          double x = v[i * p + j], y = v[i * p + k];
          v[i * p + j] = c * x - s * y;
          v[i * p + k] = s * x + c * y;
        }
      }
    }
    if (off < tol) return true;
  }
  return false;
}

}  // namespace detail

// Least-squares fit of y_i ~ sum_j c_j * s_i^{e_j}.  Requires s_i > 0 and
// at least as many samples as exponents.  Singular values below
// sigma_max * 1e-14 are treated as rank deficiency (their directions are
// dropped from the solution); condition > 1e12 is flagged IllConditioned
// but the fit is still returned.
inline BranchFitResult branch_fit(const std::vector<double>& s,
                                  const std::vector<Complex>& y,
                                  const std::vector<double>& exponents) {
  BranchFitResult out;
  const long n = static_cast<long>(s.size());
  const long p = static_cast<long>(exponents.size());
  if (n != static_cast<long>(y.size()) || n < p || p == 0) {
    out.status = Status::Degenerate;
    return out;
  }
  for (long i = 0; i < n; ++i) {
    if (!(s[i] > 0.0)) {
      out.status = Status::Degenerate;
      return out;
    }
  }

  std::vector<double> design(n * p);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < p; ++j)
      design[i * p + j] = std::pow(s[i], exponents[j]);
  std::vector<double> work = design;  // Jacobi consumes a copy
  std::vector<double> v(p * p, 0.0);
  for (long j = 0; j < p; ++j) v[j * p + j] = 1.0;

  if (!detail::jacobi_orthogonalize(work, n, p, v)) {
    out.status = Status::Truncated;  // sweep budget exhausted; keep going
  }

  std::vector<double> sigma(p);
  double smax = 0.0;
  for (long j = 0; j < p; ++j) {
    double nrm = 0.0;
    for (long i = 0; i < n; ++i) nrm += work[i * p + j] * work[i * p + j];
    sigma[j] = std::sqrt(nrm);
    smax = std::max(smax, sigma[j]);
  }
  double smin = smax;
  for (long j = 0; j < p; ++j) smin = std::min(smin, sigma[j]);
  out.singular_values = sigma;
  std::sort(out.singular_values.begin(), out.singular_values.end(),
            [](double lhs, double rhs) { return lhs > rhs; });
  out.condition = (smin > 0.0) ? smax / smin
                               : std::numeric_limits<double>::infinity();

  // w_j = u_j^T y / sigma_j, coeffs = V w  (directions with negligible
  // sigma_j are dropped).
  const double cutoff = smax * 1e-14;
  std::vector<Complex> w(p, Complex(0.0, 0.0));
  for (long j = 0; j < p; ++j) {
    if (sigma[j] <= cutoff) continue;
    Complex dot(0.0, 0.0);
    for (long i = 0; i < n; ++i) dot += work[i * p + j] * y[i];
    w[j] = dot / (sigma[j] * sigma[j]);  // u_j = col_j / sigma_j
  }
  out.coefficients.assign(p, Complex(0.0, 0.0));
  for (long j = 0; j < p; ++j) {
    Complex cj(0.0, 0.0);
    for (long k = 0; k < p; ++k) cj += v[j * p + k] * w[k];
    out.coefficients[j] = cj;
  }

  double res2 = 0.0;
  for (long i = 0; i < n; ++i) {
    Complex fit(0.0, 0.0);
    for (long j = 0; j < p; ++j) fit += design[i * p + j] * out.coefficients[j];
    Complex d = fit - y[i];
    res2 += std::norm(d);
  }
  out.residual_norm = std::sqrt(res2);
  if (out.status == Status::Converged && out.condition > 1e12) {
    out.status = Status::IllConditioned;
  }
  return out;
}

}  // namespace appellcheck
