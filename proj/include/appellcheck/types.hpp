// Core vocabulary types shared by every module: the complex scalar, evaluation
// status codes, the result wrapper carrying value + diagnostics, the knob set
// controlling series evaluation, and the exception used by scalar helpers.
#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace appellcheck {

using Complex = std::complex<double>;

// Outcome of a numerical evaluation.  Converged is the only "clean" state;
// everything else tells the caller precisely why the value is partial,
// missing, or meaningless.
enum class Status {
  Converged,             // tail estimate under tolerance
  Truncated,             // budget exhausted; value is the partial sum
  OutsideDomain,         // arguments outside the convergence/validity region
  PoleEncountered,       // a gamma-function pole (or equivalent) was hit
  UndefinedCoefficient,  // a series coefficient divides by a pochhammer zero
  LogarithmicCase,       // degenerate connection parameters; value is partial
  Degenerate,            // inputs make the requested quantity ill-posed
  IllConditioned,        // linear-algebra conditioning beyond trust threshold
};

constexpr const char* status_name(Status s) {
  switch (s) {
    case Status::Converged: return "Converged";
    case Status::Truncated: return "Truncated";
    case Status::OutsideDomain: return "OutsideDomain";
    case Status::PoleEncountered: return "PoleEncountered";
    case Status::UndefinedCoefficient: return "UndefinedCoefficient";
    case Status::LogarithmicCase: return "LogarithmicCase";
    case Status::Degenerate: return "Degenerate";
    case Status::IllConditioned: return "IllConditioned";
  }
  return "Unknown";
}

// Evaluation knobs.  Tolerances are targets for the *tail estimate*, not
// guarantees; err_estimate in Result reports what was actually achieved.
struct EvalConfig {
  double rel_tol = 1e-12;   // relative stopping tolerance for series tails
  long max_terms = 100000;  // per-series term budget
  int accel_depth = 12;     // number of nodes for sequence extrapolation
  double accel_base = 0.5;  // node geometry: t_j = 1 - accel_base^j
};

template <typename T = Complex>
struct Result {
  T value{};
  Status status = Status::Converged;
  double err_estimate = 0.0;  // absolute error estimate for `value`
  long terms_used = 0;

  bool ok() const { return status == Status::Converged; }
};

// Thrown by scalar helpers (gamma poles, branch-power degeneracies) so that
// higher-level drivers can translate the condition into a Status.
class eval_error : public std::runtime_error {
 public:
  eval_error(Status s, const std::string& what)
      : std::runtime_error(what), status_(s) {}
  Status status() const { return status_; }

 private:
  Status status_;
};

// Which side of the negative real axis a fractional power's argument is
// assigned to: PrincipalUpper uses arg = +pi on the cut, PrincipalLower -pi.
enum class BranchConvention { PrincipalUpper, PrincipalLower };

}  // namespace appellcheck
