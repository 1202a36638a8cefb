// appellcheck command-line tool: evaluate the bivariate hypergeometric
// families (and their relatives) at a point, and run the identity catalog's
// checks individually, as sweeps, or as a full audit.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "appellcheck/appellcheck.hpp"

namespace {

using namespace appellcheck;

PointMap parse_point_args(const std::vector<std::string>& defs) {
  PointMap point;
  for (const auto& def : defs) {
    auto eq = def.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw std::invalid_argument("expected key=value, got: " + def);
    }
    point[def.substr(0, eq)] = parse_complex(def.substr(eq + 1));
  }
  return point;
}

Complex need(const PointMap& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) {
    throw std::invalid_argument("missing required parameter -P " + key + "=...");
  }
  return it->second;
}

std::vector<Complex> parse_complex_list(const std::vector<std::string>& raw) {
  std::vector<Complex> out;
  out.reserve(raw.size());
  for (const auto& s : raw) out.push_back(parse_complex(s));
  return out;
}

void print_result(const Result<Complex>& r) {
  std::cout << format_complex(r.value) << "\n";
  std::cout << "status: " << status_name(r.status)
            << "  terms: " << r.terms_used
            << "  err-estimate: " << format_double(r.err_estimate) << "\n";
}

void print_outcome(const CheckOutcome& o, bool with_point) {
  std::cout << o.id << ": " << verdict_name(o.verdict);
  if (with_point) std::cout << "  [" << format_point(o.point) << "]";
  if (o.verdict == Verdict::Pass || o.verdict == Verdict::Fail) {
    std::cout << "  discrepancy=" << format_double(o.discrepancy)
              << " threshold=" << format_double(o.threshold);
  }
  if (!o.note.empty()) std::cout << "  (" << o.note << ")";
  std::cout << "\n";
}

int write_reports(const std::vector<CheckOutcome>& outcomes,
                  const EvalConfig& cfg, std::uint64_t seed,
                  const std::string& json_path, const std::string& csv_path) {
  if (!json_path.empty()) {
    std::ofstream f(json_path);
    if (!f) {
      std::cerr << "cannot open for writing: " << json_path << "\n";
      return 2;
    }
    f << report_json(outcomes, cfg, seed).dump(2) << "\n";
  }
  if (!csv_path.empty()) {
    std::ofstream f(csv_path);
    if (!f) {
      std::cerr << "cannot open for writing: " << csv_path << "\n";
      return 2;
    }
    f << report_csv(outcomes);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "appellcheck: evaluation and identity verification for the four "
      "bivariate hypergeometric series families, their boundary "
      "restrictions, and a coupled two-variable extension"};
  app.require_subcommand(1);

  EvalConfig cfg = audit_config();
  std::uint64_t seed = 20240901ULL;
  std::string json_path, csv_path;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--rel-tol", cfg.rel_tol, "target relative tolerance");
    sub->add_option("--max-terms", cfg.max_terms, "series term budget");
    sub->add_option("--accel-depth", cfg.accel_depth,
                    "extrapolation ladder depth");
    sub->add_option("--accel-base", cfg.accel_base,
                    "extrapolation node base in (0,1)");
    sub->add_option("--seed", seed, "random draw seed for sweeps");
    sub->add_option("--json", json_path, "write a JSON report to this path");
    sub->add_option("--csv", csv_path, "write a CSV report to this path");
  };

  // ---- eval ----------------------------------------------------------------
  auto* eval_cmd = app.add_subcommand(
      "eval", "evaluate one function at a point given by -P key=value pairs");
  std::string fn;
  std::vector<std::string> point_defs, upper_raw, lower_raw;
  std::string z_raw;
  eval_cmd->add_option("--fn", fn,
                       "function: 2f1 | pfq | f1 | f2 | f3 | f4 | kdf")
      ->required();
  eval_cmd->add_option("-P,--param", point_defs,
                       "parameter key=value (values may be complex: 0.3+0.2i)");
  eval_cmd->add_option("--upper", upper_raw, "pfq upper parameters");
  eval_cmd->add_option("--lower", lower_raw, "pfq lower parameters");
  eval_cmd->add_option("--z", z_raw, "pfq argument");
  add_common(eval_cmd);

  // ---- verify --------------------------------------------------------------
  auto* verify_cmd = app.add_subcommand(
      "verify", "check one catalog entry at its default (or overridden) point");
  std::string verify_id;
  std::vector<std::string> verify_point_defs;
  verify_cmd->add_option("--id", verify_id, "catalog entry id")->required();
  verify_cmd->add_option("-P,--param", verify_point_defs,
                         "override point parameters key=value");
  add_common(verify_cmd);

  // ---- sweep ---------------------------------------------------------------
  auto* sweep_cmd = app.add_subcommand(
      "sweep", "check one catalog entry across its sweep specification");
  std::string sweep_id;
  sweep_cmd->add_option("--id", sweep_id, "catalog entry id")->required();
  add_common(sweep_cmd);

  // ---- audit ---------------------------------------------------------------
  auto* audit_cmd = app.add_subcommand(
      "audit", "check every catalog entry at its default point and sweep");
  add_common(audit_cmd);

  // ---- list ----------------------------------------------------------------
  auto* list_cmd =
      app.add_subcommand("list", "list the identity catalog entries");
  (void)list_cmd;

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (list_cmd->parsed()) {
      for (const auto& e : standard_catalog()) {
        std::printf("%-16s %-19s %s\n", e.id.c_str(), kind_name(e.kind),
                    e.summary.c_str());
      }
      return 0;
    }

    if (eval_cmd->parsed()) {
      PointMap p = parse_point_args(point_defs);
      Result<Complex> out;
      if (fn == "2f1") {
        out = eval_2f1(need(p, "a"), need(p, "b"), need(p, "c"), need(p, "z"),
                       cfg);
      } else if (fn == "pfq") {
        if (z_raw.empty()) {
          throw std::invalid_argument("pfq requires --z");
        }
        out = eval_pfq(parse_complex_list(upper_raw),
                       parse_complex_list(lower_raw), parse_complex(z_raw),
                       cfg);
      } else if (fn == "f1") {
        out = eval_f1(need(p, "a"), need(p, "b1"), need(p, "b2"), need(p, "c"),
                      need(p, "u"), need(p, "v"), cfg);
      } else if (fn == "f2") {
        out = eval_f2(need(p, "a"), need(p, "b1"), need(p, "b2"), need(p, "c1"),
                      need(p, "c2"), need(p, "u"), need(p, "v"), cfg);
      } else if (fn == "f3") {
        out = eval_f3(need(p, "a1"), need(p, "a2"), need(p, "b1"),
                      need(p, "b2"), need(p, "c"), need(p, "u"), need(p, "v"),
                      cfg);
      } else if (fn == "f4") {
        out = eval_f4(need(p, "a"), need(p, "b"), need(p, "c1"), need(p, "c2"),
                      need(p, "u"), need(p, "v"), cfg);
      } else if (fn == "kdf") {
        out = eval_kdf(need(p, "a"), need(p, "b"), need(p, "p1"), need(p, "p2"),
                       need(p, "c"), need(p, "q1"), need(p, "q2"), need(p, "x"),
                       need(p, "y"), cfg);
      } else {
        std::cerr << "unknown function: " << fn
                  << " (expected 2f1, pfq, f1, f2, f3, f4, or kdf)\n";
        return 2;
      }
      print_result(out);
      return out.status == Status::Converged ? 0 : 1;
    }

    if (verify_cmd->parsed()) {
      const IdentityEntry* e = find_entry(verify_id);
      if (!e) {
        std::cerr << "unknown catalog id: " << verify_id
                  << " (use `appellcheck list`)\n";
        return 2;
      }
      PointMap pt = e->default_point;
      for (const auto& kv : parse_point_args(verify_point_defs)) {
        pt[kv.first] = kv.second;
      }
      CheckOutcome o = verify_entry(*e, pt, cfg);
      print_outcome(o, true);
      std::cout << "lhs: " << format_complex(o.lhs)
                << "\nrhs: " << format_complex(o.rhs) << "\n";
      if (e->kind == IdentityKind::ResidualEquality) {
        std::cout << "predicted residual: " << format_complex(o.predicted)
                  << "\n";
      }
      int rc = write_reports({o}, cfg, seed, json_path, csv_path);
      if (rc != 0) return rc;
      return (o.verdict == Verdict::Pass || o.verdict == Verdict::Skipped) ? 0
                                                                           : 1;
    }

    if (sweep_cmd->parsed()) {
      const IdentityEntry* e = find_entry(sweep_id);
      if (!e) {
        std::cerr << "unknown catalog id: " << sweep_id
                  << " (use `appellcheck list`)\n";
        return 2;
      }
      std::vector<CheckOutcome> outs = run_sweep(*e, cfg, seed);
      for (const auto& o : outs) print_outcome(o, true);
      SweepSummary s = summarize(outs);
      std::cout << "summary: " << s.pass << " pass, " << s.fail << " fail, "
                << s.skipped << " skipped, " << s.error << " error\n";
      int rc = write_reports(outs, cfg, seed, json_path, csv_path);
      if (rc != 0) return rc;
      return (s.fail == 0 && s.error == 0) ? 0 : 1;
    }

    if (audit_cmd->parsed()) {
      std::vector<CheckOutcome> all;
      for (const auto& e : standard_catalog()) {
        std::vector<CheckOutcome> outs;
        outs.push_back(verify_entry(e, e.default_point, cfg));
        for (auto& o : run_sweep(e, cfg, seed)) outs.push_back(std::move(o));
        SweepSummary s = summarize(outs);
        double worst = 0.0;
        for (const auto& o : outs) {
          if (o.verdict == Verdict::Pass || o.verdict == Verdict::Fail) {
            worst = std::max(worst, o.discrepancy);
          }
        }
        std::printf("%-16s %3d pass %3d fail %3d skipped %3d error   worst discrepancy %.3g\n",
                    e.id.c_str(), s.pass, s.fail, s.skipped, s.error, worst);
        for (auto& o : outs) all.push_back(std::move(o));
      }
      SweepSummary s = summarize(all);
      std::cout << "audit total: " << s.pass << " pass, " << s.fail
                << " fail, " << s.skipped << " skipped, " << s.error
                << " error\n";
      int rc = write_reports(all, cfg, seed, json_path, csv_path);
      if (rc != 0) return rc;
      return (s.fail == 0 && s.error == 0) ? 0 : 1;
    }
  } catch (const eval_error& e) {
    std::cerr << "evaluation error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
