// Acceptance gate: thirteen end-to-end criteria, one line each.  The exit
// code is the number of failed criteria, so CI can gate on zero.  Tolerances
// are pinned; evaluation budgets come from the shared audit configuration.
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <vector>

#include "appellcheck/appellcheck.hpp"
#include "oracle_values.hpp"

using namespace appellcheck;

namespace {

int g_failures = 0;
int g_criterion = 0;

void report(const char* label, bool ok) {
  ++g_criterion;
  std::printf("[%s] %02d %s\n", ok ? "PASS" : "FAIL", g_criterion, label);
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

double relgap(const Complex& got, const Complex& want) {
  return std::abs(got - want) / (1.0 + std::abs(want));
}

bool entry_passes(const char* id, const EvalConfig& cfg) {
  const IdentityEntry* e = find_entry(id);
  if (!e) return false;
  return verify_entry(*e, e->default_point, cfg).verdict == Verdict::Pass;
}

bool sweep_all_pass(const char* id, const EvalConfig& cfg, int expected) {
  const IdentityEntry* e = find_entry(id);
  if (!e) return false;
  SweepSummary s = summarize(run_sweep(*e, cfg));
  return s.total() == expected && s.pass == expected;
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();
  const EvalConfig cfg = audit_config();

  // 1. Unit-parameter closed form equals the double series across a grid that
  //    includes the near-degenerate parameter values where the closed form
  //    switches to its limit branch.
  {
    const auto tstart = clock::now();
    const double avals[] = {-1.5,       0.5,        3.0, 1.0 - 1e-7,
                            1.0 + 1e-7, 2.0 - 1e-7, 2.0 + 1e-7};
    const double xyvals[] = {-0.4, -0.25, -0.1, 0.1, 0.25, 0.4};
    int points = 0;
    double worst = 0.0;
    bool ok = true;
    for (double a : avals) {
      for (double x : xyvals) {
        for (double y : xyvals) {
          if (std::abs(x) + std::abs(y) > 0.8) continue;
          auto series = eval_f2(a, 1.0, 1.0, 2.0, 2.0, x, y, cfg);
          auto closed = f2_closed(a, x, y);
          if (series.status != Status::Converged ||
              closed.status != Status::Converged) {
            ok = false;
            continue;
          }
          double gap = relgap(series.value, closed.value);
          if (gap > worst) worst = gap;
          ++points;
        }
      }
    }
    double secs = std::chrono::duration<double>(clock::now() - tstart).count();
    ok = ok && points >= 75 && worst <= 1e-9 && secs < 5.0;
    report(
        "closed form at unit parameters matches the double series on a "
        "252-point grid including near-degenerate a (tol 1e-9, under 5 s)",
        ok);
  }

  // 2. Term-by-term substitution on the y=1 edge: the row expansion marks
  //    exactly the rows whose unit-argument value exists.
  {
    auto rows_a = f2_formal_row_expansion(0.5, 1.0, 1.0, 2.0, 2.0, 3);
    bool ok = rows_a.size() == 3 && rows_a[0].defined &&
              std::abs(rows_a[0].coefficient - Complex(2.0, 0.0)) <= 1e-12 &&
              !rows_a[1].defined && !rows_a[2].defined;
    auto rows_b = f2_formal_row_expansion(-5.5, 1.0, 1.0, 2.0, 2.0, 9);
    ok = ok && rows_b.size() == 9;
    if (ok) {
      for (int k = 0; k <= 6; ++k) ok = ok && rows_b[k].defined;
      ok = ok && !rows_b[7].defined && !rows_b[8].defined;
    }
    report(
        "row-by-row edge substitution flags exactly the rows with a finite "
        "unit-argument value (first coefficient 2 at a=1/2)",
        ok);
  }

  // 3. The mistaken edge reduction differs from the true edge value by
  //    exactly the dropped branch-power term: -2/3 at the spot check, and
  //    the predicted residual matches across the whole sweep.
  {
    auto lhs = f2_y1_closed(0.5, -0.25);
    auto rhs = naive_edge_pfq(0.5, 1.0, 1.0, 2.0, 2.0, -0.25, cfg);
    Complex predicted = predicted_edge_residual(0.5, -0.25);
    bool ok = lhs.status == Status::Converged &&
              rhs.status == Status::Converged &&
              std::abs(predicted - Complex(-2.0 / 3.0, 0.0)) <= 1e-13 &&
              std::abs((lhs.value - rhs.value) - predicted) <= 1e-9;
    ok = ok && sweep_all_pass("W-F2Y1", cfg, 12);
    report(
        "mistaken edge reduction is off by exactly the dropped branch power "
        "(-2/3 at the spot check; 12-point residual sweep passes)",
        ok);
  }

  // 4. Same falsification on the diagonal: residual exactly -8/9 at the spot
  //    check, predicted residual matches across the sweep.
  {
    auto lhs = f2_diag_closed(0.5, 0.25);
    auto rhs = naive_diag_pfq(0.5, 1.0, 1.0, 2.0, 2.0, 0.25, cfg);
    Complex predicted = predicted_diag_residual(0.5, 0.25);
    bool ok = lhs.status == Status::Converged &&
              rhs.status == Status::Converged &&
              std::abs(predicted - Complex(-8.0 / 9.0, 0.0)) <= 1e-13 &&
              std::abs((lhs.value - rhs.value) - predicted) <= 1e-9;
    ok = ok && sweep_all_pass("W-F2DIAG", cfg, 12);
    report(
        "mistaken diagonal reduction is off by exactly the dropped branch "
        "power (-8/9 at the spot check; 12-point residual sweep passes)",
        ok);
  }

  // 5. Fitting branch exponents to edge data detects the half-power term:
  //    its coefficient comes out at -4/3, and removing the half-power from
  //    the basis inflates the fit residual by three orders of magnitude.
  {
    const int n = 20;
    std::vector<double> s(n);
    std::vector<Complex> y(n);
    bool ok = true;
    for (int i = 0; i < n; ++i) {
      s[i] = 0.005 + (0.1 - 0.005) * static_cast<double>(i) / (n - 1);
      auto v = f2_y1_closed(0.5, Complex(-s[i], 0.0));
      ok = ok && v.status == Status::Converged;
      y[i] = v.value;
    }
    auto full = branch_fit(s, y, {0.0, 0.5, 1.0, 2.0, 3.0});
    auto dropped = branch_fit(s, y, {0.0, 1.0, 2.0, 3.0});
    ok = ok && full.status == Status::Converged &&
         dropped.status == Status::Converged &&
         std::abs(full.coefficients[1] - Complex(-4.0 / 3.0, 0.0)) <= 1e-4 &&
         full.residual_norm * 1e3 <= dropped.residual_norm;
    report(
        "least-squares exponent fit on edge data recovers the half-power "
        "branch term (coefficient -4/3; dropping it inflates the residual "
        "1000x)",
        ok);
  }

  // 6. One hundred random admissible draws per edge family: direct row
  //    summation equals the gamma-form reduction everywhere.
  {
    const auto tstart = clock::now();
    bool ok = sweep_all_pass("I-F3Y1", cfg, 100) &&
              sweep_all_pass("I-F1Y1", cfg, 100);
    double secs = std::chrono::duration<double>(clock::now() - tstart).count();
    ok = ok && secs < 30.0;
    report(
        "one hundred random draws per edge family confirm the gamma-form "
        "reductions (under 30 s)",
        ok);
  }

  // 7. Radial limits onto the singular curves match the closed/product forms.
  {
    bool ok = true;
    for (double x : {0.1, 0.25, 0.5}) {
      auto lim = radial_f2_diag(0.5, 1.0, 1.0, 2.0, 2.0, x, cfg);
      auto closed = f2_diag_closed(0.5, x);
      ok = ok && lim.status == Status::Converged &&
           closed.status == Status::Converged &&
           relgap(lim.value, closed.value) <= 1e-6;
    }
    auto lim4 = radial_f4(0.1, 0.2, 0.7, 0.6, 0.3, cfg);
    auto prod = bailey_product(0.1, 0.2, 0.7, 0.3, 0.7, cfg);
    ok = ok && lim4.status == Status::Converged &&
         prod.status == Status::Converged &&
         relgap(lim4.value, prod.value) <= 1e-6;
    report(
        "radial limits onto the diagonal and the parabola agree with the "
        "closed and product forms (tol 1e-6)",
        ok);
  }

  // 8. Two-term connections on the parabola: the locally expanded product
  //    form matches the product, forms A and B coincide along the curve, and
  //    the endpoint-fitted two-term form is compared against the measured
  //    radial limit.  The last comparison fails and must fail: every term of
  //    the double series is positive at these parameters, so the boundary
  //    value exceeds 1, while the two-term form evaluates to about 0.92 in
  //    mid-interval even though it matches the boundary value exactly at both
  //    endpoints.  The gap is reported rather than papered over.
  {
    bool local_ok = entry_passes("I-BAILEY-LOCAL", cfg);
    bool ab_ok = true;
    for (double x : {0.2, 0.4, 0.6}) {
      auto fa = f4_connection_a(0.1, 0.15, 0.8, x, cfg);
      auto fb = f4_connection_b(0.1, 0.15, 0.8, x, cfg);
      ab_ok = ab_ok && fa.status == Status::Converged &&
              fb.status == Status::Converged &&
              std::abs(fa.value - fb.value) <= 1e-9 * (1.0 + std::abs(fa.value));
    }
    auto lim = radial_f4(0.1, 0.15, 0.8, 0.1 + 0.15 - 0.8 + 1.5, 0.4, cfg);
    auto conn = f4_connection_a(0.1, 0.15, 0.8, 0.4, cfg);
    bool radial_ok = lim.status == Status::Converged &&
                     conn.status == Status::Converged &&
                     relgap(lim.value, conn.value) <= 1e-6;
    report(
        "two-term connections on the parabola: local product expansion (tol "
        "1e-9), forms A and B coincide (tol 1e-9), radial limit matches form "
        "A (tol 1e-6)",
        local_ok && ab_ok && radial_ok);
    if (!radial_ok) {
      std::printf(
          "          note: forms A and B agree with each other but not with "
          "the measured boundary value (radial %.9f vs form A %.9f, gap "
          "%.3e); all series terms are positive here, so the boundary value "
          "must exceed 1, and the endpoint-fitted combination cannot "
          "represent it in the interior\n",
          lim.value.real(), conn.value.real(),
          std::abs(lim.value - conn.value));
    }
  }

  // 9. The claimed one-term quadratic reductions are false: both sides are
  //    finite, pinned against independent references, and disagree by far
  //    more than the witness margin.
  {
    auto lhs_a = radial_f4(0.1, 0.15, 1.3, 0.5, 0.4, cfg);
    auto rhs_a = naive_quadratic_a(0.1, 0.15, 0.8, 0.4, cfg);
    bool ok = lhs_a.status == Status::Converged &&
              rhs_a.status == Status::Converged &&
              std::abs(lhs_a.value - Complex(oracle::w3_lhs_ref, 0.0)) <=
                  5e-3 * (1.0 + std::abs(oracle::w3_lhs_ref)) &&
              std::abs(lhs_a.value - rhs_a.value) >
                  1e-3 * (1.0 + std::abs(lhs_a.value));
    auto lhs_b = radial_f4(0.1, -0.1, 0.8, 0.8, 0.4, cfg);
    auto rhs_b = naive_quadratic_b(0.3, 0.4, cfg);
    ok = ok && lhs_b.status == Status::Converged &&
         rhs_b.status == Status::Converged &&
         std::abs(lhs_b.value - Complex(oracle::w4_lhs_ref, 0.0)) <=
             5e-3 * (1.0 + std::abs(oracle::w4_lhs_ref)) &&
         std::abs(lhs_b.value - rhs_b.value) >
             1e-3 * (1.0 + std::abs(lhs_b.value));
    auto fa = f4_connection_a(0.1, -0.1, 0.8, 0.4, cfg);
    auto fb = f4_connection_b(0.1, -0.1, 0.8, 0.4, cfg);
    ok = ok && fa.status == Status::Converged &&
         fb.status == Status::Converged &&
         std::abs(fa.value - fb.value) <= 1e-9 * (1.0 + std::abs(fa.value));
    ok = ok && entry_passes("W-F4-VIII", cfg) && entry_passes("W-F4-X", cfg);
    report(
        "claimed one-term quadratic reductions are falsified against pinned "
        "references while the correct two-term forms still agree",
        ok);
  }

  // 10. The four trigonometric weight identities hold to near machine
  //     precision over one thousand seeded random complex triples.
  {
    SplitMix64 rng(20240901ULL);
    bool ok = true;
    for (int i = 0; i < 1000 && ok; ++i) {
      Complex a(rng.uniform(-0.9, 0.9), rng.uniform(-0.9, 0.9));
      Complex b(rng.uniform(-0.9, 0.9), rng.uniform(-0.9, 0.9));
      Complex c(rng.uniform(-0.9, 0.9), rng.uniform(-0.9, 0.9));
      Complex cc = cos_pi(a) * cos_pi(b);
      Complex ss = sin_pi(a) * sin_pi(b);
      Complex r1 =
          cos_pi(c - a) * cos_pi(c - b) + sin_pi(c) * sin_pi(c - a - b);
      Complex r2 =
          sin_pi(c - a) * sin_pi(c - b) + cos_pi(c) * cos_pi(c - a - b);
      Complex r3 =
          sin_pi(c - a) * sin_pi(c - b) - sin_pi(c) * sin_pi(c - a - b);
      Complex r4 =
          cos_pi(c - a) * cos_pi(c - b) - cos_pi(c) * cos_pi(c - a - b);
      double tc = 1e-12 * (1.0 + std::abs(cc));
      double ts = 1e-12 * (1.0 + std::abs(ss));
      ok = std::abs(cc - r1) <= tc && std::abs(cc - r2) <= tc &&
           std::abs(ss - r3) <= ts && std::abs(ss - r4) <= ts;
    }
    report(
        "four trigonometric weight identities hold to 1e-12 across one "
        "thousand seeded complex parameter triples",
        ok);
  }

  // 11. Squared Gauss functions match their coupled-series forms, both the
  //     classical square and the whole shifted family.
  {
    auto base = eval_2f1(0.2, 0.3, 1.0, 0.4, cfg);
    auto crhs = clausen_rhs(0.2, 0.3, 0.4, cfg);
    Complex base2 = base.value * base.value;
    bool ok = base.status == Status::Converged &&
              crhs.status == Status::Converged &&
              std::abs(base2 - crhs.value) <= 1e-10 * (1.0 + std::abs(base2));
    for (double a : {0.1, 0.25, 0.4}) {
      for (double b : {0.15, 0.3, 0.45}) {
        for (double z : {0.2, 0.5, 0.8}) {
          for (long n = 0; n <= 3; ++n) {
            auto f = eval_2f1(a, b, a + b + static_cast<double>(n) + 0.5, z,
                              cfg);
            Complex f2v = f.value * f.value;
            auto rhs = gen_clausen_rhs(a, b, n, z, cfg);
            ok = ok && f.status == Status::Converged &&
                 rhs.status == Status::Converged &&
                 std::abs(f2v - rhs.value) <= 1e-8 * (1.0 + std::abs(f2v));
            if (n == 0) {
              auto c0 = clausen_rhs(a, b, z, cfg);
              ok = ok && c0.status == Status::Converged &&
                   std::abs(f2v - c0.value) <=
                       1e-10 * (1.0 + std::abs(f2v));
            }
          }
        }
      }
    }
    report(
        "squared Gauss functions equal their coupled-series forms across the "
        "shifted family (108 parameter points)",
        ok);
  }

  // 12. Corner weights: accelerated series limits equal the gamma products
  //     (including the exact zero), the claimed proportionality between the
  //     weights fails, and the finite coefficient identity holds over seeded
  //     random draws.
  {
    bool ok = entry_passes("I-KDF-Z0", cfg) && entry_passes("I-KDF-Z1", cfg) &&
              entry_passes("X-KDF-NONPROP", cfg);
    for (long n = 0; n <= 6; ++n) {
      ok = ok && std::abs(poch_ratio_probe(n) - poch_ratio_limit(n)) <=
                     1e-8 * (1.0 + std::abs(poch_ratio_limit(n)));
    }
    SplitMix64 rng(20240901ULL);
    int draws = 0;
    while (ok && draws < 100) {
      double a = rng.uniform(0.05, 0.45);
      double b = rng.uniform(0.05, 0.45);
      if (std::abs(a + b - 0.5) < 0.05) continue;  // keep cos(pi(a+b)) away from 0
      long n = draws % 5;
      ok = std::abs(coeff_identity_gap(a, b, n)) < 1e-11;
      ++draws;
    }
    report(
        "corner weights: series limits equal the gamma products, the claimed "
        "proportionality between them fails, and the finite coefficient "
        "identity holds over 100 seeded draws",
        ok);
  }

  // 13. The whole gate finishes within its time budget.
  {
    double total = std::chrono::duration<double>(clock::now() - t0).count();
    report("acceptance gate completes in under 180 s", total < 180.0);
    std::printf("%d/%d criteria passed, wall time %.1f s\n",
                g_criterion - g_failures, g_criterion, total);
  }

  return g_failures;
}
