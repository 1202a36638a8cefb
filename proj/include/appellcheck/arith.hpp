// Scalar building blocks: complex gamma (Lanczos), reciprocal gamma that is
// zero at the poles, exact-product pochhammer symbols, argument-reduced
// sin(pi z)/cos(pi z), branch-controlled fractional powers, and a
// mantissa/exponent "Scaled" complex type for series whose intermediate
// factors overflow double even though every row contribution is bounded.
#pragma once

#include <cmath>
#include <limits>

#include "appellcheck/types.hpp"

namespace appellcheck {

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kLn2 = 0.69314718055994530941723212145817657;

// True when z sits within `tol` of a non-positive integer (0, -1, -2, ...).
inline bool is_nonpos_int(const Complex& z, double tol = 1e-12) {
  if (std::abs(z.imag()) > tol) return false;
  double r = std::round(z.real());
  return r <= 0.5 && std::abs(z.real() - r) <= tol;
}

// Distance from the real part to the nearest integer (infinite if z is
// meaningfully complex, where integer degeneracies cannot occur).
inline double dist_to_int(const Complex& z) {
  if (std::abs(z.imag()) > 1e-12) return std::abs(z.imag());
  return std::abs(z.real() - std::round(z.real()));
}

// sin(pi z), cos(pi z) with the integer part of Re z removed exactly, so that
// values at (half-)integers come out clean to the last bit.
inline Complex sin_pi(const Complex& z) {
  double k = std::round(z.real());
  Complex w(z.real() - k, z.imag());
  Complex s = std::sin(kPi * w);
  return (std::fmod(std::fabs(k), 2.0) < 0.5) ? s : -s;
}

inline Complex cos_pi(const Complex& z) {
  double k = std::round(z.real());
  Complex w(z.real() - k, z.imag());
  Complex c = std::cos(kPi * w);
  return (std::fmod(std::fabs(k), 2.0) < 0.5) ? c : -c;
}

namespace detail {

// Classic Lanczos approximation, g = 7, 9 coefficients.
inline constexpr double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};

// Valid for Re z >= 0.5.
inline Complex gamma_lanczos_core(const Complex& z) {
  Complex x = z - 1.0;
  Complex a(kLanczos[0], 0.0);
  for (int i = 1; i < 9; ++i) a += kLanczos[i] / (x + static_cast<double>(i));
  Complex t = x + 7.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, x + 0.5) * std::exp(-t) * a;
}

}  // namespace detail

// Complex gamma function.  Throws eval_error(PoleEncountered) at the poles.
inline Complex gamma(const Complex& z) {
  if (is_nonpos_int(z)) {
    throw eval_error(Status::PoleEncountered, "gamma pole at non-positive integer");
  }
  if (z.real() < 0.5) {
    // Reflection: gamma(z) = pi / (sin(pi z) * gamma(1 - z)).
    return kPi / (sin_pi(z) * detail::gamma_lanczos_core(1.0 - z));
  }
  return detail::gamma_lanczos_core(z);
}

// 1/gamma(z); entire, exactly zero at the poles of gamma.
inline Complex rgamma(const Complex& z) {
  if (is_nonpos_int(z)) return Complex(0.0, 0.0);
  if (z.real() < 0.5) {
    return sin_pi(z) * detail::gamma_lanczos_core(1.0 - z) / kPi;
  }
  return 1.0 / detail::gamma_lanczos_core(z);
}

// Rising factorial (a)_n as an exact product of n complex factors.
inline Complex pochhammer(const Complex& a, long n) {
  Complex p(1.0, 0.0);
  for (long k = 0; k < n; ++k) p *= a + static_cast<double>(k);
  return p;
}

// log w with an explicit convention for arguments on the negative real axis,
// where the sign of a zero imaginary part would otherwise pick the branch
// (e.g. -x computed from real x > 0 carries imaginary part -0.0).
// PrincipalUpper takes arg(w) = +pi there (the usual principal value reached
// from Im w > 0), PrincipalLower takes -pi.
inline Complex log_branch(const Complex& w,
                          BranchConvention bc = BranchConvention::PrincipalUpper) {
  double arg = std::atan2(w.imag(), w.real());
  if (w.imag() == 0.0 && w.real() < 0.0) {
    arg = (bc == BranchConvention::PrincipalUpper) ? kPi : -kPi;
  }
  return Complex(std::log(std::abs(w)), arg);
}

// w^s under the same negative-axis convention.
inline Complex pow_branch(const Complex& w, const Complex& s,
                          BranchConvention bc = BranchConvention::PrincipalUpper) {
  if (w == Complex(0.0, 0.0)) {
    if (s == Complex(0.0, 0.0)) return Complex(1.0, 0.0);
    if (s.real() > 0.0) return Complex(0.0, 0.0);
    throw eval_error(Status::Degenerate, "0 raised to a non-positive power");
  }
  return std::exp(s * log_branch(w, bc));
}

// A complex number m * 2^e with |m| kept near 1 by renormalisation.  Used by
// the double-series engines, where single rows are bounded but the row
// coefficient and the inner sum separately overflow/underflow double.
struct Scaled {
  Complex m{0.0, 0.0};
  long e = 0;

  Scaled() = default;
  explicit Scaled(const Complex& v) : m(v), e(0) { normalize(); }
  Scaled(const Complex& mant, long ex) : m(mant), e(ex) { normalize(); }

  void normalize() {
    double a = std::abs(m);
    if (a == 0.0 || !std::isfinite(a)) {
      e = 0;
      return;
    }
    if (a >= 0.5 && a < 2.0) return;
    int k = std::ilogb(a);
    m = Complex(std::scalbn(m.real(), -k), std::scalbn(m.imag(), -k));
    e += k;
  }

  bool is_zero() const { return m == Complex(0.0, 0.0); }

  // log base-e of |value|; -inf for zero.
  double log_abs() const {
    if (is_zero()) return -std::numeric_limits<double>::infinity();
    return std::log(std::abs(m)) + static_cast<double>(e) * kLn2;
  }

  Complex to_complex() const {
    return Complex(std::scalbn(m.real(), static_cast<int>(e)),
                   std::scalbn(m.imag(), static_cast<int>(e)));
  }

  friend Scaled operator*(const Scaled& a, const Scaled& b) {
    Scaled r;
    r.m = a.m * b.m;
    r.e = a.e + b.e;
    r.normalize();
    return r;
  }

  friend Scaled operator*(const Scaled& a, const Complex& c) {
    Scaled r;
    r.m = a.m * c;
    r.e = a.e;
    r.normalize();
    return r;
  }

  friend Scaled operator*(const Scaled& a, double c) {
    return a * Complex(c, 0.0);
  }

  friend Scaled operator+(const Scaled& a, const Scaled& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    long de = a.e - b.e;
    // Beyond ~2^1000 apart the smaller addend cannot affect the larger.
    if (de > 1000) return a;
    if (de < -1000) return b;
    Scaled r;
    if (de >= 0) {
      r.m = a.m + Complex(std::scalbn(b.m.real(), static_cast<int>(-de)),
                          std::scalbn(b.m.imag(), static_cast<int>(-de)));
      r.e = a.e;
    } else {
      r.m = b.m + Complex(std::scalbn(a.m.real(), static_cast<int>(de)),
                          std::scalbn(a.m.imag(), static_cast<int>(de)));
      r.e = b.e;
    }
    r.normalize();
    return r;
  }
};

}  // namespace appellcheck
