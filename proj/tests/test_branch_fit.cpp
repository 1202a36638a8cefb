#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <vector>

#include "appellcheck/branch_fit.hpp"
#include "appellcheck/closed_forms.hpp"

using namespace appellcheck;

namespace {
std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> v;
  v.reserve(n);
  for (int i = 0; i < n; ++i)
    v.push_back(lo + (hi - lo) * static_cast<double>(i) /
                         static_cast<double>(n - 1));
  return v;
}
}  // namespace

TEST_CASE("exact recovery of a polynomial sample") {
  auto s = linspace(0.01, 0.1, 12);
  std::vector<Complex> y;
  for (double t : s) y.emplace_back(2.0 - 1.5 * t + 0.25 * t * t, 0.0);
  auto fit = branch_fit(s, y, {0.0, 1.0, 2.0});
  REQUIRE(fit.status == Status::Converged);
  REQUIRE(fit.coefficients.size() == 3);
  CHECK(std::abs(fit.coefficients[0] - Complex(2.0, 0)) < 1e-10);
  CHECK(std::abs(fit.coefficients[1] - Complex(-1.5, 0)) < 1e-8);
  CHECK(std::abs(fit.coefficients[2] - Complex(0.25, 0)) < 1e-6);
  CHECK(fit.residual_norm < 1e-12);
  CHECK(fit.condition < 1e6);
}

TEST_CASE("exact recovery with a fractional power") {
  auto s = linspace(0.005, 0.1, 20);
  std::vector<Complex> y;
  for (double t : s)
    y.emplace_back(1.0 + 0.5 * std::sqrt(t) - 2.0 * t, 0.0);
  auto fit = branch_fit(s, y, {0.0, 0.5, 1.0});
  REQUIRE(fit.status == Status::Converged);
  CHECK(std::abs(fit.coefficients[0] - Complex(1.0, 0)) < 1e-9);
  CHECK(std::abs(fit.coefficients[1] - Complex(0.5, 0)) < 1e-7);
  CHECK(std::abs(fit.coefficients[2] - Complex(-2.0, 0)) < 1e-6);
  CHECK(fit.residual_norm < 1e-12);
}

TEST_CASE("singular values are reported in descending order") {
  auto s = linspace(0.01, 0.1, 10);
  std::vector<Complex> y(s.size(), Complex(1.0, 0.0));
  auto fit = branch_fit(s, y, {0.0, 0.5, 1.0, 2.0});
  REQUIRE(fit.singular_values.size() == 4);
  for (std::size_t j = 1; j < fit.singular_values.size(); ++j) {
    CHECK(fit.singular_values[j - 1] >= fit.singular_values[j]);
  }
  CHECK(fit.singular_values.front() > 0.0);
}

TEST_CASE("degenerate inputs are rejected") {
  CHECK(branch_fit({0.1, 0.2}, {Complex(1, 0), Complex(1, 0)},
                   {0.0, 1.0, 2.0})
            .status == Status::Degenerate);  // fewer samples than exponents
  CHECK(branch_fit({0.1, -0.2, 0.3},
                   {Complex(1, 0), Complex(1, 0), Complex(1, 0)},
                   {0.0, 1.0})
            .status == Status::Degenerate);  // non-positive sample point
  CHECK(branch_fit({0.1, 0.2, 0.3}, {Complex(1, 0), Complex(1, 0)},
                   {0.0, 1.0})
            .status == Status::Degenerate);  // size mismatch
  CHECK(branch_fit({}, {}, {}).status == Status::Degenerate);
}

TEST_CASE("an exactly repeated exponent is flagged as ill-conditioned") {
  auto s = linspace(0.01, 0.1, 10);
  std::vector<Complex> y;
  for (double t : s) y.emplace_back(1.0 + t, 0.0);
  auto fit = branch_fit(s, y, {0.0, 1.0, 1.0, 2.0});
  CHECK(fit.status == Status::IllConditioned);
  CHECK(fit.condition > 1e12);
  // The rank-deficient direction is dropped, so the fit itself is still good.
  CHECK(fit.residual_norm < 1e-10);
}

TEST_CASE("detects the half-power branch term in the true edge residual") {
  // Samples of the closed edge restriction on x = -s, s in (0, 0.1]: its
  // expansion carries a genuine s^(1/2) branch term with coefficient -4/3.
  auto s = linspace(0.005, 0.1, 20);
  std::vector<Complex> y;
  for (double t : s) y.push_back(f2_y1_closed(0.5, -t).value);

  auto with_half = branch_fit(s, y, {0.0, 0.5, 1.0, 2.0, 3.0});
  REQUIRE(with_half.status == Status::Converged);
  CHECK(std::abs(with_half.coefficients[1] - Complex(-4.0 / 3.0, 0.0)) <
        1e-4);
  CHECK(with_half.residual_norm < 1e-6);

  // Removing the half power from the candidate set must inflate the
  // residual by orders of magnitude: the term is really there.
  auto without_half = branch_fit(s, y, {0.0, 1.0, 2.0, 3.0});
  REQUIRE(without_half.status == Status::Converged);
  CHECK(without_half.residual_norm > 1e3 * with_half.residual_norm);

  // An honest fit with the half power but a coarser exponent set loses the
  // coefficient accuracy; the full set is what the acceptance bar uses.
  auto coarse = branch_fit(s, y, {0.0, 0.5, 1.0, 2.0});
  CHECK(std::abs(coarse.coefficients[1] - Complex(-4.0 / 3.0, 0.0)) > 1e-5);
}
