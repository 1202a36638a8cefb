#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>
#include <string>
#include <vector>

#include "appellcheck/report.hpp"

using namespace appellcheck;

TEST_CASE("double and complex formatting") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(-3.0) == "-3");
  CHECK(format_complex(Complex(0.5, 0.0)) == "0.5");
  CHECK(format_complex(Complex(1.0, 2.0)) == "1+2i");
  CHECK(format_complex(Complex(1.0, -2.0)) == "1-2i");
  CHECK(format_complex(Complex(0.0, 1.0)) == "0+1i");
  CHECK(format_complex(Complex(0.0, -0.5)) == "0-0.5i");
  CHECK(format_complex(Complex(-0.25, 0.0)) == "-0.25");
}

TEST_CASE("complex literals parse") {
  CHECK(parse_complex("i") == Complex(0.0, 1.0));
  CHECK(parse_complex("+i") == Complex(0.0, 1.0));
  CHECK(parse_complex("-i") == Complex(0.0, -1.0));
  CHECK(parse_complex("2i") == Complex(0.0, 2.0));
  CHECK(parse_complex("-0.5i") == Complex(0.0, -0.5));
  CHECK(parse_complex("1+i") == Complex(1.0, 1.0));
  CHECK(parse_complex("1-i") == Complex(1.0, -1.0));
  CHECK(parse_complex("0.3+0.2i") == Complex(0.3, 0.2));
  CHECK(parse_complex(" 0.3 - 0.2 i ") == Complex(0.3, -0.2));
  CHECK(parse_complex("-2e-3") == Complex(-2e-3, 0.0));
  CHECK(parse_complex("1.5e2-2.5e-1i") == Complex(150.0, -0.25));

  CHECK_THROWS_AS(parse_complex(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_complex("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_complex("1+"), std::invalid_argument);
  CHECK_THROWS_AS(parse_complex("1+2j"), std::invalid_argument);
}

TEST_CASE("formatting round-trips bit-exactly through parsing") {
  const std::vector<Complex> zs = {
      Complex(0.5, 0.0),
      Complex(-2e-3, 0.0),
      Complex(1.0 / 3.0, -2.0 / 7.0),
      Complex(0.0, 2.0),
      Complex(-1.234567890123456e+100, 9.87654321e-200),
      Complex(3.141592653589793, -2.718281828459045),
  };
  for (const Complex& z : zs) {
    INFO("z = " << format_complex(z));
    CHECK(parse_complex(format_complex(z)) == z);
  }
}

TEST_CASE("points format in key order") {
  PointMap p = {{"x", Complex(-0.25, 0.0)}, {"a", Complex(0.5, 0.0)}};
  CHECK(format_point(p) == "a=0.5;x=-0.25");
  CHECK(format_point({}) == "");
  PointMap q = {{"b", Complex(0.0, 1.0)}};
  CHECK(format_point(q) == "b=0+1i");
}

TEST_CASE("outcome serialization carries every field") {
  CheckOutcome o;
  o.id = "SYN";
  o.verdict = Verdict::Fail;
  o.point = {{"a", Complex(0.5, 0.0)}};
  o.lhs = Complex(1.0, 0.0);
  o.rhs = Complex(2.0, 0.0);
  o.predicted = Complex(0.0, 0.0);
  o.discrepancy = 1.0;
  o.threshold = 1e-10;
  o.lhs_status = Status::Converged;
  o.rhs_status = Status::Truncated;
  o.note = "synthetic";

  nlohmann::json j = outcome_to_json(o);
  CHECK(j["id"] == "SYN");
  CHECK(j["verdict"] == "fail");
  CHECK(j["point"]["a"] == "0.5");
  CHECK(j["lhs"] == "1");
  CHECK(j["rhs"] == "2");
  CHECK(j["discrepancy"] == "1");
  CHECK(j["lhs_status"] == std::string(status_name(Status::Converged)));
  CHECK(j["rhs_status"] == std::string(status_name(Status::Truncated)));
  CHECK(j["note"] == "synthetic");
}

TEST_CASE("json reports are byte-identical across identical runs") {
  const IdentityEntry* e = find_entry("I-F2Y1-CLOSED");
  REQUIRE(e != nullptr);
  EvalConfig cfg = audit_config();
  auto run = [&] {
    std::vector<CheckOutcome> outs = run_sweep(*e, cfg, 20240901ULL);
    return report_json(outs, cfg, 20240901ULL).dump(2);
  };
  std::string r1 = run();
  std::string r2 = run();
  CHECK(r1 == r2);

  nlohmann::json parsed = nlohmann::json::parse(r1);
  CHECK(parsed["meta"]["tool"] == "appellcheck");
  CHECK(parsed["meta"]["seed"] == 20240901ULL);
  CHECK(parsed["results"].size() == 20);
  CHECK(parsed["summary"]["pass"] == 20);
  CHECK(parsed["summary"]["fail"] == 0);
  CHECK(parsed["summary"]["total"] == 20);
}

TEST_CASE("csv escaping quotes fields that need it") {
  CHECK(detail::csv_escape("plain") == "plain");
  CHECK(detail::csv_escape("a,b") == "\"a,b\"");
  CHECK(detail::csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(detail::csv_escape("two\nlines") == "\"two\nlines\"");
}

TEST_CASE("csv reports have a header and one line per outcome") {
  CheckOutcome o;
  o.id = "SYN";
  o.verdict = Verdict::Pass;
  o.point = {{"a", Complex(0.5, 0.0)}, {"x", Complex(-0.25, 0.0)}};
  o.lhs = Complex(1.0, 0.0);
  o.rhs = Complex(1.0, 0.0);
  o.note = "note, with \"quotes\"";

  std::string csv = report_csv({o, o});
  std::size_t lines = 0;
  for (char ch : csv) lines += (ch == '\n');
  CHECK(lines == 3);  // header + two outcomes
  CHECK(csv.rfind("id,verdict,point,", 0) == 0);
  CHECK(csv.find("SYN,pass,a=0.5;x=-0.25,1,1,0,") != std::string::npos);
  CHECK(csv.find("\"note, with \"\"quotes\"\"\"") != std::string::npos);
}
