#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <limits>

#include "appellcheck/arith.hpp"
#include "oracle_values.hpp"

using namespace appellcheck;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {
double rel(const Complex& got, const Complex& want) {
  return std::abs(got - want) / (1.0 + std::abs(want));
}
}  // namespace

TEST_CASE("integer predicates") {
  CHECK(is_nonpos_int(Complex(0.0, 0.0)));
  CHECK(is_nonpos_int(Complex(-3.0, 0.0)));
  CHECK(is_nonpos_int(Complex(-3.0 + 1e-13, 0.0)));
  CHECK_FALSE(is_nonpos_int(Complex(0.5, 0.0)));
  CHECK_FALSE(is_nonpos_int(Complex(2.0, 0.0)));  // positive integer
  CHECK_FALSE(is_nonpos_int(Complex(-3.0 + 1e-6, 0.0)));
  CHECK_FALSE(is_nonpos_int(Complex(-3.0, 0.1)));

  CHECK_THAT(dist_to_int(Complex(0.3, 0.0)), WithinAbs(0.3, 1e-15));
  CHECK_THAT(dist_to_int(Complex(-2.9, 0.0)), WithinAbs(0.1, 1e-12));
  CHECK(dist_to_int(Complex(5.0, 0.4)) >= 0.4);
}

TEST_CASE("argument-reduced trigonometric helpers") {
  CHECK_THAT(sin_pi(Complex(0.5, 0.0)).real(), WithinAbs(1.0, 1e-15));
  CHECK_THAT(sin_pi(Complex(7.0, 0.0)).real(), WithinAbs(0.0, 1e-15));
  CHECK_THAT(cos_pi(Complex(0.5, 0.0)).real(), WithinAbs(0.0, 1e-15));
  CHECK_THAT(cos_pi(Complex(6.0, 0.0)).real(), WithinAbs(1.0, 1e-15));
  // Large real shifts keep full precision (naive std::sin(pi*x) would not).
  CHECK_THAT(sin_pi(Complex(1000000.25, 0.0)).real(),
             WithinAbs(std::sqrt(0.5), 1e-14));
  // Complex arguments agree with the direct formula at moderate size.
  Complex z(0.3, 0.4);
  CHECK(rel(sin_pi(z), std::sin(kPi * z)) < 1e-14);
  CHECK(rel(cos_pi(z), std::cos(kPi * z)) < 1e-14);
}

TEST_CASE("gamma function against frozen references") {
  CHECK_THAT(gamma(Complex(4.7, 0.0)).real(),
             WithinRel(oracle::gamma_4_7, 1e-13));
  CHECK_THAT(gamma(Complex(-2.3, 0.0)).real(),
             WithinRel(oracle::gamma_m2_3, 1e-12));
  CHECK(rel(gamma(Complex(0.5, 1.2)), oracle::gamma_c) < 1e-13);
  CHECK_THAT(gamma(Complex(0.5, 0.0)).real(),
             WithinRel(std::sqrt(kPi), 1e-14));
  CHECK_THAT(gamma(Complex(6.0, 0.0)).real(), WithinRel(120.0, 1e-13));
}

TEST_CASE("reciprocal gamma vanishes at the poles") {
  CHECK(rgamma(Complex(0.0, 0.0)) == Complex(0.0, 0.0));
  CHECK(rgamma(Complex(-4.0, 0.0)) == Complex(0.0, 0.0));
  for (double x : {0.3, 1.7, -2.4}) {
    Complex z(x, 0.0);
    CHECK(rel(gamma(z) * rgamma(z), Complex(1.0, 0.0)) < 1e-13);
  }
  Complex zc(0.5, 1.2);
  CHECK(rel(gamma(zc) * rgamma(zc), Complex(1.0, 0.0)) < 1e-13);
}

TEST_CASE("pochhammer symbols") {
  CHECK_THAT(pochhammer(Complex(0.3, 0.0), 5).real(),
             WithinRel(oracle::poch_0_3_5, 1e-13));
  CHECK(rel(pochhammer(Complex(0.4, 0.2), 3), oracle::poch_c) < 1e-13);
  CHECK(pochhammer(Complex(0.7, 0.0), 0) == Complex(1.0, 0.0));
  CHECK(pochhammer(Complex(-2.0, 0.0), 3) == Complex(0.0, 0.0));
}

TEST_CASE("negative-axis branch is pinned, not sign-of-zero dependent") {
  // -x computed from positive real x carries imaginary part -0.0; the
  // branch helpers must not let that flip the logarithm's imaginary part.
  Complex x(0.25, 0.0);
  Complex minus_x = -x;  // imag is -0.0
  Complex lu = log_branch(minus_x, BranchConvention::PrincipalUpper);
  CHECK_THAT(lu.imag(), WithinAbs(kPi, 1e-15));
  CHECK_THAT(lu.real(), WithinAbs(std::log(0.25), 1e-15));
  Complex ll = log_branch(minus_x, BranchConvention::PrincipalLower);
  CHECK_THAT(ll.imag(), WithinAbs(-kPi, 1e-15));
  // Plain +0.0 imaginary part gives the same answer.
  CHECK(log_branch(Complex(-0.25, 0.0)) == lu);
  // Off the negative axis the conventions agree with std::log.
  Complex w(0.3, -0.7);
  CHECK(rel(log_branch(w, BranchConvention::PrincipalUpper), std::log(w)) <
        1e-15);
  CHECK(rel(log_branch(w, BranchConvention::PrincipalLower), std::log(w)) <
        1e-15);
}

TEST_CASE("branch-pinned powers") {
  Complex mi(-1.0, 0.0);
  Complex half(0.5, 0.0);
  Complex up = pow_branch(mi, half, BranchConvention::PrincipalUpper);
  CHECK(rel(up, Complex(0.0, 1.0)) < 1e-15);
  Complex dn = pow_branch(mi, half, BranchConvention::PrincipalLower);
  CHECK(rel(dn, Complex(0.0, -1.0)) < 1e-15);
  CHECK(rel(pow_branch(Complex(-4.0, -0.0), half), Complex(0.0, 2.0)) <
        1e-15);
  CHECK(rel(pow_branch(Complex(2.0, 0.0), Complex(3.0, 0.0)),
            Complex(8.0, 0.0)) < 1e-15);
  // Zero base conventions.
  CHECK(pow_branch(Complex(0.0, 0.0), Complex(0.0, 0.0)) == Complex(1.0, 0.0));
  CHECK(pow_branch(Complex(0.0, 0.0), Complex(2.5, 0.0)) == Complex(0.0, 0.0));
  CHECK_THROWS_AS(pow_branch(Complex(0.0, 0.0), Complex(-1.0, 0.0)),
                  eval_error);
}

TEST_CASE("scaled arithmetic keeps mantissas normalised") {
  Scaled a(Complex(3.0, 4.0));  // |m| = 5 -> renormalised
  CHECK(std::abs(a.m) >= 0.5);
  CHECK(std::abs(a.m) < 2.0);
  CHECK(rel(a.to_complex(), Complex(3.0, 4.0)) < 1e-15);

  // Round-trip through exponents far outside double range.
  Scaled big(Complex(1.2, 0.0), 3000);
  Scaled small(Complex(0.9, 0.0), -3000);
  Scaled prod = big * small;
  CHECK(rel(prod.to_complex(), Complex(1.08, 0.0)) < 1e-15);
  CHECK_THAT(big.log_abs(), WithinRel(std::log(1.2) + 3000.0 * kLn2, 1e-13));

  // Addition aligns exponents; a vastly smaller addend is absorbed.
  Scaled one(Complex(1.0, 0.0));
  Scaled tiny(Complex(1.0, 0.0), -1200);
  Scaled s = one + tiny;
  CHECK(s.to_complex() == Complex(1.0, 0.0));
  Scaled t = Scaled(Complex(1.5, 0.0), 2) + Scaled(Complex(1.0, 0.0), 0);
  CHECK(rel(t.to_complex(), Complex(7.0, 0.0)) < 1e-15);

  CHECK(Scaled().is_zero());
  CHECK(Scaled().log_abs() == -std::numeric_limits<double>::infinity());
  CHECK((a * 2.0).to_complex() == Complex(6.0, 8.0));
}
