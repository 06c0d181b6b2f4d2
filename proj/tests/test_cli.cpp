#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "abc/survey.hpp"
#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = abc::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("integer expressions") {
  using abc::cli::parse_int_expr;
  CHECK(parse_int_expr("1e18") == abc::Int("1000000000000000000"));
  CHECK(parse_int_expr("21^12") == abc::Int("7355827511386641"));
  CHECK(parse_int_expr("2^64+1") == abc::Int("18446744073709551617"));
  CHECK(parse_int_expr("3^10*109") == 6436341);
  CHECK(parse_int_expr("2^3^2") == 512);
  CHECK(parse_int_expr(" (2+3)*4 ") == 20);
  CHECK_THROWS_AS(parse_int_expr("2^"), abc::cli::UsageError);
  CHECK_THROWS_AS(parse_int_expr("1-2"), abc::cli::UsageError);
  CHECK_THROWS_AS(parse_int_expr("abc"), abc::cli::UsageError);
}

TEST_CASE("cli verify and classify") {
  const auto v = run({"verify", "--c", "9"});
  CHECK(v.code == 0);
  CHECK(has(v.out, "is_abc=true"));
  CHECK(has(v.out, "cosocle(8)=4"));
  CHECK(has(v.out, "rad(9)=3"));

  const auto c = run({"classify", "--c", "21", "--k", "12"});
  CHECK(c.code == 0);
  CHECK(has(c.out, "verdict=NotAbc"));
  CHECK(has(c.out, "2^{f_2+w_2-1} = 8 < rad(21) = 21"));

  const auto j = run({"verify", "--c", "2^10+1", "--format", "json"});
  CHECK(has(j.out, "\"is_abc\": true"));
  CHECK(has(j.out, "\"rad_c\": \"1025\"") == false);
}

TEST_CASE("cli family, transfer and least-divisor") {
  const auto e = run({"family", "enumerate", "--id", "cor3.9", "--limit", "1e18", "--count"});
  CHECK(e.code == 0);
  CHECK(e.out == "81\n");
  const auto g = run({"family", "generate", "--id", "cor3.2", "--n", "55"});
  CHECK(g.code == 1);
  CHECK(has(g.err, "cor3.2"));
  const auto g2 = run({"family", "generate", "--id", "cor3.7", "--n", "3"});
  CHECK(g2.code == 0);
  CHECK(has(g2.out, "checked=true"));
  const auto t = run({"transfer", "--map", "cube", "--c", "2304"});
  CHECK(has(t.out, "c=12214672128"));
  const auto l = run({"least-divisor", "--c", "676"});
  CHECK(has(l.out, "m=675"));
  const auto nl = run({"least-divisor", "--c", "10"});
  CHECK(nl.code == 1);
}

TEST_CASE("cli usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"verify"}).code == 2);
  CHECK(run({"verify", "--c", "x"}).code == 2);
  CHECK(run({"scan", "--limit", "10", "--format", "xml"}).code == 2);
  CHECK(run({"family", "generate", "--id", "cor9.9"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("cli scan output is stable and round-trips") {
  const auto a = run({"scan", "--limit", "1e6", "--format", "csv"});
  const auto b = run({"scan", "--limit", "1e6", "--segments", "9", "--threads", "3", "--format", "csv"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  std::istringstream in(a.out);
  const auto recs = abc::load_triples(in);
  CHECK(recs.size() == abc::scan_unit_triples(1000000).size());
  const auto first = run({"scan", "--limit", "2305"});
  CHECK(has(first.out, "3^2 = 2^3+1"));
}

TEST_CASE("cli analyze writes a parseable report") {
  const std::string path = "cli_analyze_report.json";
  const auto r = run({"analyze", "--limit", "1000001", "--format", "json", "--output", path});
  CHECK(r.code == 0);
  const auto rep = abc::report_from_json(r.out);
  CHECK(rep.counts.at("T") == 78);
  std::ifstream in(path);
  std::stringstream file;
  file << in.rdbuf();
  CHECK(abc::report_from_json(file.str()).counts.at("D") == 38);
  std::remove(path.c_str());

  const auto csv = run({"least-divisor", "--limit", "4000", "--format", "csv"});
  std::istringstream ld(csv.out);
  const auto rows = abc::read_least_divisor_csv(ld);
  CHECK(rows.size() == 15);
  CHECK(rows[1].m == 16);
}
