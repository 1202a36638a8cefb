// Sequence acceleration: the Wynn epsilon algorithm over a finite sequence of
// partial results, and a radial-limit driver that evaluates a function on the
// geometric node ladder t_j = 1 - base^j and extrapolates to t = 1.
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "appellcheck/arith.hpp"
#include "appellcheck/series.hpp"
#include "appellcheck/types.hpp"

namespace appellcheck {

// Wynn epsilon table over `seq`.  Even columns are the estimates; the value
// returned is the deepest even-column entry reached before breakdown (a zero
// or non-finite difference), with the error estimated from the spread of the
// last two estimates.  A (near-)constant sequence short-circuits to its last
// element with zero error.
inline Result<Complex> wynn_epsilon(const std::vector<Complex>& seq) {
  Result<Complex> res;
  if (seq.empty()) {
    res.status = Status::Degenerate;
    return res;
  }
  std::vector<Complex> em1(seq.size() + 1, Complex(0.0, 0.0));
  std::vector<Complex> e0(seq.begin(), seq.end());
  std::vector<Complex> estimates;
  int col = 0;
  bool broke = false;
  while (e0.size() >= 2 && !broke) {
    std::vector<Complex> e1;
    e1.reserve(e0.size() - 1);
    for (std::size_t i = 0; i + 1 < e0.size(); ++i) {
      Complex d = e0[i + 1] - e0[i];
      double dm = std::abs(d);
      if (dm < 1e-290 || !std::isfinite(dm)) {
        broke = true;
        break;
      }
      e1.push_back(em1[i + 1] + 1.0 / d);
    }
    if (broke) break;
    ++col;
    if (col % 2 == 0 && !e1.empty()) estimates.push_back(e1.back());
    em1 = std::move(e0);
    e0 = std::move(e1);
  }
  if (estimates.empty()) {
    res.value = seq.back();
    res.status = Status::Converged;
    res.err_estimate = 0.0;
    res.terms_used = static_cast<long>(seq.size());
    return res;
  }
  res.value = estimates.back();
  res.err_estimate = estimates.size() >= 2
                         ? std::abs(estimates.back() - estimates[estimates.size() - 2])
                         : std::abs(estimates.back() - seq.back());
  res.status = Status::Converged;
  res.terms_used = static_cast<long>(seq.size());
  return res;
}

// pFq at unit argument via the geometric ladder z_j = 1 - 0.5^j,
// j = 1..max(16, accel_depth), extrapolated with the epsilon algorithm.  The
// deepest nodes need term budgets ~ 45/(1-z_j) to push the geometric tail
// below member tolerance, so budgets are sized per node (the configured
// budget acts as a floor).  Calibrated worst-case relative error with
// double-precision member noise, over decay margins down to 0.3: ~7e-9.
inline Result<Complex> unit_pfq_limit(const std::vector<Complex>& upper,
                                      const std::vector<Complex>& lower,
                                      const EvalConfig& cfg = {}) {
  const int depth = std::max(16, cfg.accel_depth);
  std::vector<Complex> members;
  members.reserve(depth);
  long terms = 0;
  double node = 1.0;
  for (int j = 1; j <= depth; ++j) {
    node *= 0.5;
    double z = 1.0 - node;
    EvalConfig mcfg = cfg;
    mcfg.rel_tol = std::min(cfg.rel_tol, 1e-13);
    mcfg.max_terms =
        std::max(cfg.max_terms, static_cast<long>(45.0 / node) + 1000);
    Result<Complex> r = eval_pfq(upper, lower, Complex(z, 0.0), mcfg);
    terms += r.terms_used;
    if (r.status != Status::Converged) {
      r.terms_used = terms;
      return r;
    }
    members.push_back(r.value);
  }
  Result<Complex> res = wynn_epsilon(members);
  res.terms_used = terms;
  return res;
}

// Limit of f(t) as t -> 1^- along t_j = 1 - base^j, j = 1..depth.  Any member
// whose status is not Converged aborts the extrapolation with that status.
inline Result<Complex> radial_limit(
    const std::function<Result<Complex>(double)>& f, const EvalConfig& cfg = {}) {
  std::vector<Complex> members;
  members.reserve(cfg.accel_depth);
  long terms = 0;
  double node = 1.0;
  for (int j = 1; j <= cfg.accel_depth; ++j) {
    node *= cfg.accel_base;
    Result<Complex> r = f(1.0 - node);
    terms += r.terms_used;
    if (r.status != Status::Converged) {
      r.terms_used = terms;
      return r;
    }
    members.push_back(r.value);
  }
  Result<Complex> res = wynn_epsilon(members);
  res.terms_used = terms;
  return res;
}

}  // namespace appellcheck
