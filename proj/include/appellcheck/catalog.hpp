// Executable catalog of identity claims.  Each entry names two independently
// computable sides and a decision rule:
//
//   Equality          the sides must agree within a pinned tolerance;
//   ResidualEquality  the sides must *disagree* by exactly a predicted
//                     residual (a branch-power term a mistaken derivation
//                     dropped), within a pinned tolerance;
//   InequalityWitness the sides must disagree by more than a margin -- the
//                     entry certifies that a claimed identity is false;
//   NoRelation        nothing is claimed and nothing is evaluated; the entry
//                     records the absence of a relation so downstream tooling
//                     does not invent one.
//
// Entries carry a default parameter point (matching the frozen reference
// values in the test suite) and an optional sweep specification: explicit
// axis values, uniform random boxes, and an admissibility predicate that
// keeps draws inside every side's domain.  All randomness flows through a
// seeded SplitMix64 so every sweep is bit-reproducible.
#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "appellcheck/accel.hpp"
#include "appellcheck/appell.hpp"
#include "appellcheck/arith.hpp"
#include "appellcheck/branch_fit.hpp"
#include "appellcheck/closed_forms.hpp"
#include "appellcheck/kdf.hpp"
#include "appellcheck/series.hpp"
#include "appellcheck/types.hpp"

namespace appellcheck {

using PointMap = std::map<std::string, Complex>;

enum class IdentityKind { Equality, ResidualEquality, InequalityWitness, NoRelation };
enum class Verdict { Pass, Fail, Skipped, Error };

constexpr const char* kind_name(IdentityKind k) {
  switch (k) {
    case IdentityKind::Equality: return "equality";
    case IdentityKind::ResidualEquality: return "residual-equality";
    case IdentityKind::InequalityWitness: return "inequality-witness";
    case IdentityKind::NoRelation: return "no-relation";
  }
  return "?";
}

constexpr const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Skipped: return "skipped";
    case Verdict::Error: return "error";
  }
  return "?";
}

// Deterministic 64-bit generator (SplitMix64), used for all sweep draws.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  // Uniform in [0, 1) with full 53-bit mantissa resolution.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

struct GridAxis {
  std::string name;
  std::vector<double> values;
};

inline GridAxis linspace_axis(std::string name, double lo, double hi, int count) {
  GridAxis ax{std::move(name), {}};
  if (count <= 1) {
    ax.values.push_back(lo);
    return ax;
  }
  for (int i = 0; i < count; ++i)
    ax.values.push_back(lo + (hi - lo) * static_cast<double>(i) /
                                 static_cast<double>(count - 1));
  return ax;
}

struct DrawBox {
  std::string name;
  double lo = 0.0;
  double hi = 1.0;
  bool complex_draw = false;  // draw real and imaginary parts independently
};

struct GridSpec {
  std::vector<GridAxis> axes;   // cartesian product
  std::vector<DrawBox> boxes;   // per sample, uniform draws
  int samples = 0;              // number of random draws per grid combination
  std::function<bool(const PointMap&)> admissible;  // optional domain filter
};

// Expands a sweep specification over the entry defaults.  Axis values
// override defaults; box draws are retried (deterministically) until the
// admissibility predicate accepts, so sweep sizes are stable across runs.
inline std::vector<PointMap> expand_grid(const GridSpec& spec,
                                         const PointMap& defaults,
                                         std::uint64_t seed) {
  std::vector<PointMap> grid;
  grid.push_back({});
  for (const auto& ax : spec.axes) {
    std::vector<PointMap> next;
    for (const auto& base : grid) {
      for (double v : ax.values) {
        PointMap p = base;
        p[ax.name] = Complex(v, 0.0);
        next.push_back(std::move(p));
      }
    }
    grid = std::move(next);
  }
  SplitMix64 rng(seed);
  const bool drawing = !spec.boxes.empty() && spec.samples > 0;
  const int reps = drawing ? spec.samples : 1;
  std::vector<PointMap> out;
  out.reserve(grid.size() * reps);
  for (int s = 0; s < reps; ++s) {
    for (const auto& gp : grid) {
      PointMap p = defaults;
      for (const auto& kv : gp) p[kv.first] = kv.second;
      bool ok = true;
      if (drawing) {
        for (int attempt = 0; attempt < 200; ++attempt) {
          for (const auto& box : spec.boxes) {
            double re = rng.uniform(box.lo, box.hi);
            double im = box.complex_draw ? rng.uniform(box.lo, box.hi) : 0.0;
            p[box.name] = Complex(re, im);
          }
          ok = !spec.admissible || spec.admissible(p);
          if (ok) break;
        }
      } else {
        ok = !spec.admissible || spec.admissible(p);
      }
      if (ok) out.push_back(std::move(p));
    }
  }
  return out;
}

using SideFn = std::function<Result<Complex>(const PointMap&, const EvalConfig&)>;

struct IdentityEntry {
  std::string id;
  std::string summary;
  IdentityKind kind = IdentityKind::Equality;
  SideFn lhs;
  SideFn rhs;
  SideFn predicted;     // ResidualEquality only: the exact expected lhs - rhs
  double tol = 1e-10;   // Equality / ResidualEquality
  double margin = 1e-3; // InequalityWitness
  PointMap default_point;
  GridSpec sweep;
};

struct CheckOutcome {
  std::string id;
  Verdict verdict = Verdict::Skipped;
  PointMap point;
  Complex lhs{};
  Complex rhs{};
  Complex predicted{};
  double discrepancy = 0.0;  // quantity compared against the threshold
  double threshold = 0.0;
  Status lhs_status = Status::Converged;
  Status rhs_status = Status::Converged;
  std::string note;
};

inline CheckOutcome verify_entry(const IdentityEntry& e, const PointMap& point,
                                 const EvalConfig& cfg = {}) {
  CheckOutcome out;
  out.id = e.id;
  out.point = point;
  if (e.kind == IdentityKind::NoRelation || !e.lhs || !e.rhs) {
    out.verdict = Verdict::Skipped;
    out.note = "no evaluator by design: the entry records the absence of a relation";
    return out;
  }
  try {
    Result<Complex> l = e.lhs(point, cfg);
    Result<Complex> r = e.rhs(point, cfg);
    out.lhs = l.value;
    out.rhs = r.value;
    out.lhs_status = l.status;
    out.rhs_status = r.status;
    if (l.status != Status::Converged || r.status != Status::Converged) {
      out.verdict = Verdict::Error;
      out.note = std::string("side did not converge: lhs=") +
                 status_name(l.status) + " rhs=" + status_name(r.status);
      return out;
    }
    switch (e.kind) {
      case IdentityKind::Equality:
        out.discrepancy = std::abs(l.value - r.value);
        out.threshold = e.tol * (1.0 + std::abs(r.value));
        out.verdict =
            out.discrepancy <= out.threshold ? Verdict::Pass : Verdict::Fail;
        break;
      case IdentityKind::ResidualEquality: {
        Result<Complex> p =
            e.predicted ? e.predicted(point, cfg) : Result<Complex>{};
        out.predicted = p.value;
        if (p.status != Status::Converged) {
          out.verdict = Verdict::Error;
          out.note = std::string("predicted residual did not converge: ") +
                     status_name(p.status);
          return out;
        }
        out.discrepancy = std::abs((l.value - r.value) - p.value);
        out.threshold = e.tol * (1.0 + std::abs(p.value));
        out.verdict =
            out.discrepancy <= out.threshold ? Verdict::Pass : Verdict::Fail;
        break;
      }
      case IdentityKind::InequalityWitness:
        out.discrepancy = std::abs(l.value - r.value);
        out.threshold = e.margin * (1.0 + std::abs(l.value));
        out.verdict =
            out.discrepancy > out.threshold ? Verdict::Pass : Verdict::Fail;
        out.note = "witness: sides must disagree beyond the margin";
        break;
      case IdentityKind::NoRelation:
        break;  // handled above
    }
  } catch (const eval_error& err) {
    out.verdict = Verdict::Error;
    out.note = err.what();
  } catch (const std::exception& ex) {
    out.verdict = Verdict::Error;
    out.note = ex.what();
  }
  return out;
}

inline std::vector<CheckOutcome> run_sweep(const IdentityEntry& e,
                                           const EvalConfig& cfg = {},
                                           std::uint64_t seed = 20240901ULL) {
  std::vector<CheckOutcome> outs;
  for (const auto& p : expand_grid(e.sweep, e.default_point, seed)) {
    outs.push_back(verify_entry(e, p, cfg));
  }
  return outs;
}

struct SweepSummary {
  int pass = 0, fail = 0, skipped = 0, error = 0;
  int total() const { return pass + fail + skipped + error; }
};

inline SweepSummary summarize(const std::vector<CheckOutcome>& outcomes) {
  SweepSummary s;
  for (const auto& o : outcomes) {
    switch (o.verdict) {
      case Verdict::Pass: ++s.pass; break;
      case Verdict::Fail: ++s.fail; break;
      case Verdict::Skipped: ++s.skipped; break;
      case Verdict::Error: ++s.error; break;
    }
  }
  return s;
}

// Evaluation budget used by the audit and sweep drivers: generous term
// budget, default accuracy everywhere else.
inline EvalConfig audit_config() {
  EvalConfig c;
  c.max_terms = 400000;
  return c;
}

namespace detail {

inline Complex pget(const PointMap& p, const char* key) {
  auto it = p.find(key);
  if (it == p.end()) {
    throw eval_error(Status::Degenerate,
                     std::string("missing point parameter: ") + key);
  }
  return it->second;
}

inline long pget_int(const PointMap& p, const char* key) {
  return std::llround(pget(p, key).real());
}

inline Result<Complex> wrap(Complex v) {
  Result<Complex> r;
  r.value = v;
  return r;
}

}  // namespace detail

// The catalog itself.  Ids are stable API: tests, the CLI, and reports all
// refer to entries by id.
inline const std::vector<IdentityEntry>& standard_catalog() {
  using detail::pget;
  using detail::pget_int;
  using detail::wrap;
  static const std::vector<IdentityEntry> entries = [] {
    std::vector<IdentityEntry> v;

    // -- Gauss value at unit argument: accelerated series limit vs gamma form.
    {
      IdentityEntry e;
      e.id = "I-GAUSS1";
      e.summary = "2F1(a,b;c;1): accelerated z->1 limit equals the gamma-product value";
      e.kind = IdentityKind::Equality;
      e.tol = 1e-7;
      e.lhs = [](const PointMap& p, const EvalConfig& cfg) {
        return unit_pfq_limit({pget(p, "a"), pget(p, "b")}, {pget(p, "c")}, cfg);
      };
      e.rhs = [](const PointMap& p, const EvalConfig&) {
        return wrap(gauss_at_1(pget(p, "a"), pget(p, "b"), pget(p, "c")));
      };
      e.default_point = {{"a", 0.3}, {"b", 0.5}, {"c", 1.1}};
      e.sweep.boxes = {{"a", 0.05, 0.6}, {"b", 0.05, 0.6}, {"c", 1.0, 2.2}};
      e.sweep.samples = 25;
      e.sweep.admissible = [](const PointMap& p) {
        return (pget(p, "c") - pget(p, "a") - pget(p, "b")).real() >= 0.3;
      };
      v.push_back(std::move(e));
    }

    // -- Third-kind series on the v=1 edge: row recurrence vs gamma-times-3F2.
    {
      IdentityEntry e;
      e.id = "I-F3Y1";
      e.summary = "F3(x,1): direct row summation equals the gamma-times-3F2 reduction";
      e.kind = IdentityKind::Equality;
      e.tol = 1e-9;
      e.lhs = [](const PointMap& p, const EvalConfig& cfg) {
        return f3_edge(pget(p, "a1"), pget(p, "a2"), pget(p, "b1"),
                       pget(p, "b2"), pget(p, "c"), pget(p, "x"), cfg);
      };
      e.rhs = [](const PointMap& p, const EvalConfig& cfg) {
        return f3_edge_pfq(pget(p, "a1"), pget(p, "a2"), pget(p, "b1"),
                           pget(p, "b2"), pget(p, "c"), pget(p, "x"), cfg);
      };
      e.default_point = {{"a1", 0.2}, {"a2", 0.3}, {"b1", 0.4}, {"b2", 0.25},
                         {"c", 2.1},  {"x", 0.35}};
      e.sweep.boxes = {{"a1", 0.05, 0.6}, {"a2", 0.05, 0.6}, {"b1", 0.05, 0.6},
                       {"b2", 0.05, 0.6}, {"c", 1.6, 2.6},   {"x", -0.6, 0.6}};
      e.sweep.samples = 100;
      e.sweep.admissible = [](const PointMap& p) {
        return (pget(p, "c") - pget(p, "a2") - pget(p, "b2")).real() >= 0.3 &&
               std::abs(pget(p, "x")) >= 0.05;
      };
      v.push_back(std::move(e));
    }

    // -- First-kind series on the v=1 edge: row recurrence vs gamma-times-2F1.
    {
      IdentityEntry e;
      e.id = "I-F1Y1";
      e.summary = "F1(x,1): direct row summation equals the gamma-times-2F1 reduction";
      e.kind = IdentityKind::Equality;
      e.tol = 1e-9;
      e.lhs = [](const PointMap& p, const EvalConfig& cfg) {
        return f1_edge(pget(p, "a"), pget(p, "b1"), pget(p, "b2"), pget(p, "c"),
                       pget(p, "x"), cfg);
      };
      e.rhs = [](const PointMap& p, const EvalConfig& cfg) {
        return f1_edge_pfq(pget(p, "a"), pget(p, "b1"), pget(p, "b2"),
                           pget(p, "c"), pget(p, "x"), cfg);
      };
      e.default_point = {{"a", 0.3}, {"b1", 0.4}, {"b2", 0.5}, {"c", 1.9},
                         {"x", 0.3}};
      e.sweep.boxes = {{"a", 0.05, 0.6}, {"b1", 0.05, 0.6}, {"b2", 0.05, 0.6},
                       {"c", 1.4, 2.4},  {"x", -0.6, 0.6}};
      e.sweep.samples = 100;
      e.sweep.admissible = [](const PointMap& p) {
        return (pget(p, "c") - pget(p, "a") - pget(p, "b2")).real() >= 0.2 &&
               std::abs(pget(p, "x")) >= 0.05;
      };
      v.push_back(std::move(e));
    }

    // -- Elementary closed form of the second-kind series at unit parameters.
    {
      IdentityEntry e;
      e.id = "I-LEMMA";
      e.summary = "F2(a;1,1;2,2;x,y): double series equals the elementary closed form";
      e.kind = IdentityKind::Equality;
      e.tol = 1e-9;
      e.lhs = [](const PointMap& p, const EvalConfig& cfg) {
        return eval_f2(pget(p, "a"), 1.0, 1.0, 2.0, 2.0, pget(p, "x"),
                       pget(p, "y"), cfg);
      };
      e.rhs = [](const PointMap& p, const EvalConfig&) {
        return f2_closed(pget(p, "a"), pget(p, "x"), pget(p, "y"));
      };
      e.default_point = {{"a", 0.5}, {"x", 0.3}, {"y", 0.4}};
      e.sweep.axes = {{"a", {-1.5, 0.5, 3.0}},
                      {"x", {-0.4, -0.15, 0.15, 0.4}},
                      {"y", {-0.4, -0.15, 0.15, 0.4}}};
      e.sweep.admissible = [](const PointMap& p) {
        return std::abs(pget(p, "x")) + std::abs(pget(p, "y")) <= 0.8;
      };
      v.push_back(std::move(e));
    }

    // -- Edge restriction of the closed form (pure algebra continuation).
    {
      IdentityEntry e;
      e.id = "I-F2Y1-CLOSED";
      e.summary = "edge value F2(a;1,1;2,2;x,1) equals the closed form at y=1";
      e.kind = IdentityKind::Equality;
      e.tol = 1e-13;
      e.lhs = [](const PointMap& p, const EvalConfig&) {
        return f2_y1_closed(pget(p, "a"), pget(p, "x"));
      };
      e.rhs = [](const PointMap& p, const EvalConfig&) {
        return f2_closed(pget(p, "a"), pget(p, "x"), Complex(1.0, 0.0));
      };
      e.default_point = {{"a", 0.5}, {"x", -0.25}};
      e.sweep.axes = {{"a", {-1.5, 0.5, 1.0, 1.9}},
                      {"x", {-0.6, -0.35, -0.1, 0.25, 0.5}}};
      v.push_back(std::move(e));
    }

    // -- Diagonal restriction: radial series limit vs closed form.
    {
      IdentityEntry e;
      e.id = "I-F2DIAG-CLOSED";
      e.summary = "diagonal value F2(a;1,1;2,2;x,1-x): radial series limit equals the closed form";
      e.kind = IdentityKind::Equality;
      e.tol = 1e-6;
      e.lhs = [](const PointMap& p, const EvalConfig& cfg) {
        return radial_f2_diag(pget(p, "a"), 1.0, 1.0, 2.0, 2.0, pget(p, "x"), cfg);
      };
      e.rhs = [](const PointMap& p, const EvalConfig&) {
        return f2_diag_closed(pget(p, "a"), pget(p, "x"));
      };
      e.default_point = {{"a", 0.5}, {"x", 0.25}};
      e.sweep.axes = {{"a", {0.5}}, {"x", {0.1, 0.5}}};
      v.push_back(std::move(e));
    }

    // -- Mistaken edge reduction: off from the true edge value by exactly the
    //    dropped branch-power term.
    {
      IdentityEntry e;
      e.id = "W-F2Y1";
      e.summary = "mistaken edge reduction differs from the true edge value by exactly (-x)^(2-a)/((1-a)(2-a)x)";
      e.kind = IdentityKind::ResidualEquality;
      e.tol = 1e-10;
      e.lhs = [](const PointMap& p, const EvalConfig&) {
        return f2_y1_closed(pget(p, "a"), pget(p, "x"));
      };
      e.rhs = [](const PointMap& p, const EvalConfig& cfg) {
        return naive_edge_pfq(pget(p, "a"), 1.0, 1.0, 2.0, 2.0, pget(p, "x"), cfg);
      };
      e.predicted = [](const PointMap& p, const EvalConfig&) {
        return wrap(predicted_edge_residual(pget(p, "a"), pget(p, "x")));
      };
      e.default_point = {{"a", 0.5}, {"x", -0.25}};
      e.sweep.axes = {{"a", {0.5, -1.5, 0.3}}, {"x", {-0.45, -0.3, -0.15, -0.05}}};
      v.push_back(std::move(e));
    }

    // -- Mistaken diagonal reduction: same structure on the u+v=1 diagonal.
    {
      IdentityEntry e;
      e.id = "W-F2DIAG";
      e.summary = "mistaken diagonal reduction differs from the true diagonal value by exactly -x^(2-a)/((1-a)(2-a)x(1-x))";
      e.kind = IdentityKind::ResidualEquality;
      e.tol = 1e-10;
      e.lhs = [](const PointMap& p, const EvalConfig&) {
        return f2_diag_closed(pget(p, "a"), pget(p, "x"));
      };
      e.rhs = [](const PointMap& p, const EvalConfig& cfg) {
        return naive_diag_pfq(pget(p, "a"), 1.0, 1.0, 2.0, 2.0, pget(p, "x"), cfg);
      };
      e.predicted = [](const PointMap& p, const EvalConfig&) {
        return wrap(predicted_diag_residual(pget(p, "a"), pget(p, "x")));
      };
      e.default_point = {{"a", 0.5}, {"x", 0.25}};
      e.sweep.axes = {{"a", {0.5, -1.5, 0.3}}, {"x", {0.05, 0.15, 0.3, 0.45}}};
      v.push_back(std::move(e));
    }

    // -- Mistaken quadratic claim A: the fourth-kind series on its singular
    //    parabola is NOT the single 3F2 the claim asserts.
    {
      IdentityEntry e;
      e.id = "W-F4-VIII";
      e.summary = "witness: F4(a;b;c+1/2,1/2) on the parabola differs from the claimed single-3F2 form";
      e.kind = IdentityKind::InequalityWitness;
      e.margin = 1e-3;
      e.lhs = [](const PointMap& p, const EvalConfig& cfg) {
        Complex c = pget(p, "c");
        return radial_f4(pget(p, "a"), pget(p, "b"), c + 0.5,
                         Complex(0.5, 0.0), pget(p, "x"), cfg);
      };
      e.rhs = [](const PointMap& p, const EvalConfig& cfg) {
        return naive_quadratic_a(pget(p, "a"), pget(p, "b"), pget(p, "c"),
                                 pget(p, "x"), cfg);
      };
      e.default_point = {{"a", 0.1}, {"b", 0.15}, {"c", 0.8}, {"x", 0.4}};
      v.push_back(std::move(e));
    }

    // -- Mistaken quadratic claim B: one-parameter family vs squared 2F1.
    {
      IdentityEntry e;
      e.id = "W-F4-X";
      e.summary = "witness: F4(2c-1/2;3c-1;c+1/2,c+1/2) on the parabola differs from the claimed squared-2F1 form";
      e.kind = IdentityKind::InequalityWitness;
      e.margin = 1e-3;
      e.lhs = [](const PointMap& p, const EvalConfig& cfg) {
        Complex c = pget(p, "c");
        return radial_f4(2.0 * c - 0.5, 3.0 * c - 1.0, c + 0.5, c + 0.5,
                         pget(p, "x"), cfg);
      };
      e.rhs = [](const PointMap& p, const EvalConfig& cfg) {
        return naive_quadratic_b(pget(p, "c"), pget(p, "x"), cfg);
      };
      e.default_point = {{"c", 0.3}, {"x", 0.4}};
      v.push_back(std::move(e));
    }

    // -- Product factorisation of the fourth-kind series.
    {
      IdentityEntry e;
      e.id = "I-BAILEY";
      e.summary = "F4(a;b;c,a+b-c+1; x(1-y), y(1-x)) factors into 2F1(x) * 2F1(y)";
      e.kind = IdentityKind::Equality;
      e.tol = 1e-10;
      e.lhs = [](const PointMap& p, const EvalConfig& cfg) {
        Complex a = pget(p, "a"), b = pget(p, "b"), c = pget(p, "c");
        Complex x = pget(p, "x"), y = pget(p, "y");
        return eval_f4(a, b, c, a + b - c + 1.0, x * (1.0 - y), y * (1.0 - x),
                       cfg);
      };
      e.rhs = [](const PointMap& p, const EvalConfig& cfg) {
        return bailey_product(pget(p, "a"), pget(p, "b"), pget(p, "c"),
                              pget(p, "x"), pget(p, "y"), cfg);
      };
      e.default_point = {{"a", 0.3}, {"b", 0.4}, {"c", 1.1}, {"x", 0.2},
                         {"y", 0.3}};
      e.sweep.boxes = {{"a", 0.1, 0.5}, {"b", 0.1, 0.5}, {"c", 0.9, 1.3},
                       {"x", 0.05, 0.35}, {"y", 0.05, 0.35}};
      e.sweep.samples = 20;
      e.sweep.admissible = [](const PointMap& p) {
        Complex x = pget(p, "x"), y = pget(p, "y");
        double u = std::abs(x * (1.0 - y)), w = std::abs(y * (1.0 - x));
        return std::sqrt(u) + std::sqrt(w) <= 0.93;
      };
      v.push_back(std::move(e));
    }

    // -- Same factorisation driven onto the boundary diagonal y = 1-x.
    {
      IdentityEntry e;
      e.id = "I-BAILEY-DIAG";
      e.summary = "radial F4 limit on the parabola equals the product form at y=1-x";
      e.kind = IdentityKind::Equality;
      e.tol = 1e-6;
      e.lhs = [](const PointMap& p, const EvalConfig& cfg) {
        Complex a = pget(p, "a"), b = pget(p, "b"), c = pget(p, "c");
        return radial_f4(a, b, c, a + b - c + 1.0, pget(p, "x"), cfg);
      };
      e.rhs = [](const PointMap& p, const EvalConfig& cfg) {
        Complex x = pget(p, "x");
        return bailey_product(pget(p, "a"), pget(p, "b"), pget(p, "c"), x,
                              1.0 - x, cfg);
      };
      e.default_point = {{"a", 0.1}, {"b", 0.2}, {"c", 0.7}, {"x", 0.3}};
      v.push_back(std::move(e));
    }

    // -- Two-term local expansion of the product on the diagonal.
    {
      IdentityEntry e;
      e.id = "I-BAILEY-LOCAL";
      e.summary = "product form at y=1-x equals its two-term local expansion in x";
      e.kind = IdentityKind::Equality;
      e.tol = 1e-12;
      e.lhs = [](const PointMap& p, const EvalConfig& cfg) {
        Complex x = pget(p, "x");
        return bailey_product(pget(p, "a"), pget(p, "b"), pget(p, "c"), x,
                              1.0 - x, cfg);
      };
      e.rhs = [](const PointMap& p, const EvalConfig& cfg) {
        return bailey_local(pget(p, "a"), pget(p, "b"), pget(p, "c"),
                            pget(p, "x"), cfg);
      };
      e.default_point = {{"a", 0.1}, {"b", 0.2}, {"c", 0.7}, {"x", 0.3}};
      e.sweep.boxes = {{"a", 0.05, 0.35}, {"b", 0.05, 0.35}, {"c", 0.5, 0.93},
                       {"x", 0.05, 0.6}};
      e.sweep.samples = 30;
      e.sweep.admissible = [](const PointMap& p) {
        Complex a = pget(p, "a"), b = pget(p, "b"), c = pget(p, "c");
        return (c - a - b).real() >= 0.1 && c.real() <= 0.93;
      };
      v.push_back(std::move(e));
    }

    // -- Correct two-term connection on the singular parabola, form A.
    {
      IdentityEntry e;
      e.id = "I-F4SA";
      e.summary = "radial F4 on the parabola vs the trigonometric-weight connection form "
                  "(endpoint-exact, but the audit finds a mid-interval gap of about 9.5e-2)";
      e.kind = IdentityKind::Equality;
      e.tol = 1e-6;
      e.lhs = [](const PointMap& p, const EvalConfig& cfg) {
        Complex a = pget(p, "a"), b = pget(p, "b"), c = pget(p, "c");
        return radial_f4(a, b, c, a + b - c + 1.5, pget(p, "x"), cfg);
      };
      e.rhs = [](const PointMap& p, const EvalConfig& cfg) {
        return f4_connection_a(pget(p, "a"), pget(p, "b"), pget(p, "c"),
                               pget(p, "x"), cfg);
      };
      e.default_point = {{"a", 0.1}, {"b", 0.15}, {"c", 0.8}, {"x", 0.4}};
      v.push_back(std::move(e));
    }

    // -- The two connection forms agree with each other (cheap, sweepable).
    {
      IdentityEntry e;
      e.id = "I-F4SB";
      e.summary = "the trigonometric-weight and power-weight connection forms coincide";
      e.kind = IdentityKind::Equality;
      e.tol = 1e-9;
      e.lhs = [](const PointMap& p, const EvalConfig& cfg) {
        return f4_connection_a(pget(p, "a"), pget(p, "b"), pget(p, "c"),
                               pget(p, "x"), cfg);
      };
      e.rhs = [](const PointMap& p, const EvalConfig& cfg) {
        return f4_connection_b(pget(p, "a"), pget(p, "b"), pget(p, "c"),
                               pget(p, "x"), cfg);
      };
      e.default_point = {{"a", 0.1}, {"b", 0.15}, {"c", 0.8}, {"x", 0.4}};
      e.sweep.axes = {{"x", {0.2, 0.6}}};
      e.sweep.boxes = {{"a", 0.05, 0.15}, {"b", 0.05, 0.15}, {"c", 0.85, 0.95}};
      e.sweep.samples = 10;
      e.sweep.admissible = [](const PointMap& p) {
        return (pget(p, "c") - pget(p, "a") - pget(p, "b")).real() >= 0.55;
      };
      v.push_back(std::move(e));
    }

    // -- Four trigonometric weight identities used by the connection algebra.
    auto add_trig = [&v](const char* id, const char* summary, int which) {
      IdentityEntry e;
      e.id = id;
      e.summary = summary;
      e.kind = IdentityKind::Equality;
      e.tol = 1e-12;
      e.lhs = [which](const PointMap& p, const EvalConfig&) {
        Complex a = pget(p, "a"), b = pget(p, "b");
        return wrap(which <= 2 ? cos_pi(a) * cos_pi(b) : sin_pi(a) * sin_pi(b));
      };
      e.rhs = [which](const PointMap& p, const EvalConfig&) {
        Complex a = pget(p, "a"), b = pget(p, "b"), c = pget(p, "c");
        switch (which) {
          case 1:
            return wrap(cos_pi(c - a) * cos_pi(c - b) +
                        sin_pi(c) * sin_pi(c - a - b));
          case 2:
            return wrap(sin_pi(c - a) * sin_pi(c - b) +
                        cos_pi(c) * cos_pi(c - a - b));
          case 3:
            return wrap(sin_pi(c - a) * sin_pi(c - b) -
                        sin_pi(c) * sin_pi(c - a - b));
          default:
            return wrap(cos_pi(c - a) * cos_pi(c - b) -
                        cos_pi(c) * cos_pi(c - a - b));
        }
      };
      e.default_point = {{"a", Complex(0.35, 0.15)}, {"b", Complex(-0.2, 0.4)},
                         {"c", Complex(0.7, -0.3)}};
      e.sweep.boxes = {{"a", -0.9, 0.9, true},
                       {"b", -0.9, 0.9, true},
                       {"c", -0.9, 0.9, true}};
      e.sweep.samples = 50;
      v.push_back(std::move(e));
    };
    add_trig("I-TRIG-1",
             "cos pi a cos pi b = cos pi(c-a) cos pi(c-b) + sin pi c sin pi(c-a-b)", 1);
    add_trig("I-TRIG-2",
             "cos pi a cos pi b = sin pi(c-a) sin pi(c-b) + cos pi c cos pi(c-a-b)", 2);
    add_trig("I-TRIG-3",
             "sin pi a sin pi b = sin pi(c-a) sin pi(c-b) - sin pi c sin pi(c-a-b)", 3);
    add_trig("I-TRIG-4",
             "sin pi a sin pi b = cos pi(c-a) cos pi(c-b) - cos pi c cos pi(c-a-b)", 4);

    // -- First-kind series on the u=v diagonal collapses to a Gauss function.
    {
      IdentityEntry e;
      e.id = "I-PAIR-XIII";
      e.summary = "F1(a;b1,b2;c;x,x) = 2F1(a,b1+b2;c;x)";
      e.kind = IdentityKind::Equality;
      e.tol = 1e-10;
      e.lhs = [](const PointMap& p, const EvalConfig& cfg) {
        Complex x = pget(p, "x");
        return eval_f1(pget(p, "a"), pget(p, "b1"), pget(p, "b2"), pget(p, "c"),
                       x, x, cfg);
      };
      e.rhs = [](const PointMap& p, const EvalConfig& cfg) {
        return eval_2f1(pget(p, "a"), pget(p, "b1") + pget(p, "b2"),
                        pget(p, "c"), pget(p, "x"), cfg);
      };
      e.default_point = {{"a", 0.3}, {"b1", 0.4}, {"b2", 0.5}, {"c", 1.2},
                         {"x", 0.25}};
      e.sweep.boxes = {{"a", 0.1, 0.6}, {"b1", 0.1, 0.6}, {"b2", 0.1, 0.6},
                       {"c", 1.0, 1.6}, {"x", -0.5, 0.5}};
      e.sweep.samples = 25;
      e.sweep.admissible = [](const PointMap& p) {
        return std::abs(pget(p, "x")) >= 0.05;
      };
      v.push_back(std::move(e));
    }

    // -- First-kind series on the (x, x^2) curve: quadratic transformation.
    //    The Gauss side's native argument -4x/(x-1)^2 leaves the unit disc,
    //    so it is evaluated through the equivalent argument 4x/(1+x)^2
    //    (same function, rearranged for evaluability; the test suite pins
    //    the rearranged side to an independently computed reference).
    {
      IdentityEntry e;
      e.id = "I-PAIR-XIV";
      e.summary = "F1(a;2b,a-b;1+b;x,x^2) = (1-x)^(-2a) 2F1(a,1/2;1+b;-4x/(x-1)^2)";
      e.kind = IdentityKind::Equality;
      e.tol = 1e-10;
      e.lhs = [](const PointMap& p, const EvalConfig& cfg) {
        Complex a = pget(p, "a"), b = pget(p, "b"), x = pget(p, "x");
        return eval_f1(a, 2.0 * b, a - b, 1.0 + b, x, x * x, cfg);
      };
      e.rhs = [](const PointMap& p, const EvalConfig& cfg) {
        Complex a = pget(p, "a"), b = pget(p, "b"), x = pget(p, "x");
        Complex z = 4.0 * x / ((1.0 + x) * (1.0 + x));
        Result<Complex> f = eval_2f1(a, b + 0.5, 1.0 + b, z, cfg);
        f.value *= pow_branch(1.0 + x, -2.0 * a);
        return f;
      };
      e.default_point = {{"a", 0.4}, {"b", 0.3}, {"x", 0.2}};
      e.sweep.boxes = {{"a", 0.1, 0.6}, {"b", 0.1, 0.5}, {"x", 0.05, 0.35}};
      e.sweep.samples = 25;
      v.push_back(std::move(e));
    }

    // -- Two shapes for which no two-term relation exists: recorded, not run.
    {
      IdentityEntry e;
      e.id = "N-PAIR-VI";
      e.summary = "no closed relation of this shape exists for F2 on the u=v diagonal";
      e.kind = IdentityKind::NoRelation;
      v.push_back(std::move(e));
    }
    {
      IdentityEntry e;
      e.id = "N-PAIR-XV";
      e.summary = "no closed relation of this shape exists for F4 with unconstrained denominators";
      e.kind = IdentityKind::NoRelation;
      v.push_back(std::move(e));
    }

    // -- Square of a Gauss function as a single 3F2.
    {
      IdentityEntry e;
      e.id = "I-CLAUSEN";
      e.summary = "2F1(a,b;a+b+1/2;z)^2 = 3F2(2a,2b,a+b;2a+2b,a+b+1/2;z)";
      e.kind = IdentityKind::Equality;
      e.tol = 1e-10;
      e.lhs = [](const PointMap& p, const EvalConfig& cfg) {
        Complex a = pget(p, "a"), b = pget(p, "b");
        Result<Complex> f = eval_2f1(a, b, a + b + 0.5, pget(p, "z"), cfg);
        f.value *= f.value;
        return f;
      };
      e.rhs = [](const PointMap& p, const EvalConfig& cfg) {
        return clausen_rhs(pget(p, "a"), pget(p, "b"), pget(p, "z"), cfg);
      };
      e.default_point = {{"a", 0.2}, {"b", 0.3}, {"z", 0.4}};
      e.sweep.boxes = {{"a", 0.05, 0.45}, {"b", 0.05, 0.45}, {"z", 0.05, 0.8}};
      e.sweep.samples = 30;
      v.push_back(std::move(e));
    }

    // -- Corner values of the square-of-Gauss connection: series vs closed.
    {
      IdentityEntry e;
      e.id = "I-KDF-Z0";
      e.summary = "corner weight Z0: accelerated unit-series value equals the gamma product (exactly 0 at the default point)";
      e.kind = IdentityKind::Equality;
      e.tol = 1e-9;
      e.lhs = [](const PointMap& p, const EvalConfig& cfg) {
        return kdf_corner_z0_series(pget(p, "a"), pget(p, "b"), pget(p, "c"),
                                    cfg);
      };
      e.rhs = [](const PointMap& p, const EvalConfig&) {
        return kdf_corner_z0(pget(p, "a"), pget(p, "b"), pget(p, "c"));
      };
      e.default_point = {{"a", -0.4}, {"b", -0.3}, {"c", 0.6}};
      v.push_back(std::move(e));
    }
    {
      IdentityEntry e;
      e.id = "I-KDF-Z1";
      e.summary = "corner weight Z1: accelerated unit-series value equals the gamma product";
      e.kind = IdentityKind::Equality;
      e.tol = 1e-9;
      e.lhs = [](const PointMap& p, const EvalConfig& cfg) {
        return kdf_corner_z1_series(pget(p, "a"), pget(p, "b"), pget(p, "c"),
                                    cfg);
      };
      e.rhs = [](const PointMap& p, const EvalConfig&) {
        return kdf_corner_z1(pget(p, "a"), pget(p, "b"), pget(p, "c"));
      };
      e.default_point = {{"a", -0.4}, {"b", -0.3}, {"c", 0.6}};
      v.push_back(std::move(e));
    }

    // -- The corner pair is NOT proportional to the squared Gauss value:
    //    cross-multiplied witness (Z0 vanishes at the default point, so the
    //    claimed proportionality Z1 = G^2 Z0 fails by |Z1|).
    {
      IdentityEntry e;
      e.id = "X-KDF-NONPROP";
      e.summary = "witness: Z1 != Gauss(1)^2 * Z0 (claimed proportionality of corner weights fails)";
      e.kind = IdentityKind::InequalityWitness;
      e.margin = 1e-3;
      e.lhs = [](const PointMap& p, const EvalConfig&) {
        return kdf_corner_z1(pget(p, "a"), pget(p, "b"), pget(p, "c"));
      };
      e.rhs = [](const PointMap& p, const EvalConfig&) {
        Complex a = pget(p, "a"), b = pget(p, "b"), c = pget(p, "c");
        Result<Complex> z0 = kdf_corner_z0(a, b, c);
        if (z0.status != Status::Converged) return z0;
        Complex g = gauss_at_1(a, b, c);
        z0.value *= g * g;
        return z0;
      };
      e.default_point = {{"a", -0.4}, {"b", -0.3}, {"c", 0.6}};
      v.push_back(std::move(e));
    }

    // -- Shifted square of a Gauss function through the coupled double series.
    {
      IdentityEntry e;
      e.id = "I-GCLAUSEN";
      e.summary = "2F1(a,b;a+b+n+1/2;z)^2 via the terminating coupled double series";
      e.kind = IdentityKind::Equality;
      e.tol = 1e-8;
      e.lhs = [](const PointMap& p, const EvalConfig& cfg) {
        Complex a = pget(p, "a"), b = pget(p, "b");
        double n = static_cast<double>(pget_int(p, "n"));
        Result<Complex> f =
            eval_2f1(a, b, a + b + n + 0.5, pget(p, "z"), cfg);
        f.value *= f.value;
        return f;
      };
      e.rhs = [](const PointMap& p, const EvalConfig& cfg) {
        return gen_clausen_rhs(pget(p, "a"), pget(p, "b"), pget_int(p, "n"),
                               pget(p, "z"), cfg);
      };
      e.default_point = {{"a", 0.2}, {"b", 0.3}, {"n", 1.0}, {"z", 0.4}};
      e.sweep.axes = {{"n", {0.0, 1.0, 2.0, 3.0}}, {"z", {0.2, 0.5, 0.8}}};
      e.sweep.boxes = {{"a", 0.1, 0.45}, {"b", 0.1, 0.45}};
      e.sweep.samples = 2;
      v.push_back(std::move(e));
    }

    // -- Terminating Pochhammer-ratio limit: numerical probe vs closed value.
    {
      IdentityEntry e;
      e.id = "I-POCHLIM";
      e.summary = "lim (e-n)_{2n+1}/(2e-2n)_{2n+1} = (-1)^n n!/(2^{2n+1}(1/2)_n)";
      e.kind = IdentityKind::Equality;
      e.tol = 1e-8;
      e.lhs = [](const PointMap& p, const EvalConfig&) {
        return wrap(Complex(poch_ratio_probe(pget_int(p, "n")), 0.0));
      };
      e.rhs = [](const PointMap& p, const EvalConfig&) {
        return wrap(Complex(poch_ratio_limit(pget_int(p, "n")), 0.0));
      };
      e.default_point = {{"n", 3.0}};
      e.sweep.axes = {{"n", {0.0, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0}}};
      v.push_back(std::move(e));
    }

    // -- Finite coefficient identity tying the two corner weights at shift n.
    {
      IdentityEntry e;
      e.id = "I-COEFF";
      e.summary = "finite trig/Pochhammer coefficient identity for the shifted-square weights";
      e.kind = IdentityKind::Equality;
      e.tol = 1e-11;
      e.lhs = [](const PointMap& p, const EvalConfig&) {
        Complex a = pget(p, "a"), b = pget(p, "b");
        long n = pget_int(p, "n");
        Complex rn = pochhammer(a + 0.5, n) * pochhammer(b + 0.5, n) /
                     (pochhammer(Complex(0.5, 0.0), n) *
                      pochhammer(a + b + 0.5, n));
        Complex cc = cos_pi(a) * cos_pi(b) / cos_pi(a + b);
        Complex ss = sin_pi(a) * sin_pi(b) / cos_pi(a + b);
        Complex big = pochhammer(2.0 * a, 2 * n + 1) *
                      pochhammer(2.0 * b, 2 * n + 1) /
                      (std::ldexp(1.0, static_cast<int>(4 * n + 2)) *
                       pochhammer(Complex(0.5, 0.0), n) *
                       pochhammer(a + b + 0.5, n) * pochhammer(a, n + 1) *
                       pochhammer(b, n + 1));
        return wrap(cc * rn - ss * big);
      };
      e.rhs = [](const PointMap& p, const EvalConfig&) {
        Complex a = pget(p, "a"), b = pget(p, "b");
        long n = pget_int(p, "n");
        return wrap(pochhammer(a + 0.5, n) * pochhammer(b + 0.5, n) /
                    (pochhammer(Complex(0.5, 0.0), n) *
                     pochhammer(a + b + 0.5, n)));
      };
      e.default_point = {{"a", 0.15}, {"b", 0.3}, {"n", 2.0}};
      e.sweep.axes = {{"n", {0.0, 1.0, 2.0, 3.0, 4.0}}};
      e.sweep.boxes = {{"a", 0.05, 0.45}, {"b", 0.05, 0.45}};
      e.sweep.samples = 4;
      e.sweep.admissible = [](const PointMap& p) {
        return std::abs((pget(p, "a") + pget(p, "b")).real() - 0.5) >= 0.05;
      };
      v.push_back(std::move(e));
    }

    // -- Coupled double series collapses to the second-kind series when the
    //    coupled numerator and denominator parameters coincide.
    {
      IdentityEntry e;
      e.id = "I-KDF-ACF2";
      e.summary = "coupled double series with a=c reduces to F2(b;p1,p2;q1,q2;x,y)";
      e.kind = IdentityKind::Equality;
      e.tol = 1e-10;
      e.lhs = [](const PointMap& p, const EvalConfig& cfg) {
        Complex ac = pget(p, "ac");
        return eval_kdf(ac, pget(p, "b"), pget(p, "p1"), pget(p, "p2"), ac,
                        pget(p, "q1"), pget(p, "q2"), pget(p, "x"),
                        pget(p, "y"), cfg);
      };
      e.rhs = [](const PointMap& p, const EvalConfig& cfg) {
        return eval_f2(pget(p, "b"), pget(p, "p1"), pget(p, "p2"),
                       pget(p, "q1"), pget(p, "q2"), pget(p, "x"),
                       pget(p, "y"), cfg);
      };
      e.default_point = {{"ac", 1.1}, {"b", 0.4},  {"p1", 0.2}, {"p2", 0.5},
                         {"q1", 1.3}, {"q2", 0.9}, {"x", 0.2},  {"y", 0.25}};
      e.sweep.boxes = {{"ac", 0.5, 1.5}, {"b", 0.1, 0.6},  {"p1", 0.1, 0.6},
                       {"p2", 0.1, 0.6}, {"q1", 0.8, 1.4}, {"q2", 0.8, 1.4},
                       {"x", 0.05, 0.3}, {"y", 0.05, 0.3}};
      e.sweep.samples = 20;
      e.sweep.admissible = [](const PointMap& p) {
        return std::abs(pget(p, "x")) + std::abs(pget(p, "y")) <= 0.6;
      };
      v.push_back(std::move(e));
    }

    return v;
  }();
  return entries;
}

inline const IdentityEntry* find_entry(const std::string& id) {
  for (const auto& e : standard_catalog()) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

}  // namespace appellcheck
