#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "abc/survey.hpp"
#include "abc/triple.hpp"
#include "oracle.hpp"

using abc::Int;

namespace {

std::vector<Int> cs(const std::vector<abc::TripleRecord>& recs) {
  std::vector<Int> out;
  for (const auto& r : recs) out.push_back(r.c);
  return out;
}

}  // namespace

TEST_CASE("sieve_radicals") {
  const auto r = abc::sieve_radicals(2, 10);
  CHECK(r == std::vector<std::uint64_t>{2, 3, 2, 5, 6, 7, 2, 3});
  const auto spf = oracle::spf_table(1 << 20);
  const std::uint64_t lo = 123456;
  const auto big = abc::sieve_radicals(lo, lo + 500000);
  for (std::uint64_t i = 0; i < big.size(); i += 7) CHECK(big[i] == oracle::rad_from_spf(spf, lo + i));
  CHECK_THROWS_AS(abc::sieve_radicals(1, 1000, 10), abc::SegmentTooLarge);

  std::mt19937_64 rng(7);
  const std::uint64_t base = 99000000;
  const auto window = abc::sieve_radicals(base, base + 1000000);
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t off = rng() % 1000000;
    CHECK(window[off] == abc::radical(Int(static_cast<unsigned long>(base + off))));
  }
}

TEST_CASE("scan") {
  const auto first = abc::scan_unit_triples(2305);
  const std::vector<Int> expected = {9, 49, 64, 81, 225, 243, 289, 513, 625, 676, 729, 961, 1025, 1216, 2304};
  CHECK(cs(first) == expected);
  CHECK(abc::scan_unit_triples(9).empty());
  CHECK(first[0].power_minus == abc::PowerForm{Int(3), 2});
  CHECK(first[0].power_plus == abc::PowerForm{Int(2), 3});
  CHECK_FALSE(first[13].power_minus.has_value());  // 1216

  std::vector<Int> brute;
  for (unsigned c = 2; c < 20000; ++c) {
    if (oracle::is_abc_unit(Int(c))) brute.push_back(Int(c));
  }
  CHECK(cs(abc::scan_unit_triples(20000)) == brute);

  const auto mono = abc::scan_unit_triples(300000);
  const auto seg = abc::scan_unit_triples(300000, abc::ScanOptions{13, 4});
  REQUIRE(mono.size() == seg.size());
  for (std::size_t i = 0; i < mono.size(); ++i) CHECK(abc::same_content(mono[i], seg[i]));
}

TEST_CASE("T, C and D") {
  const auto recs = abc::scan_unit_triples(10);
  const auto T = abc::build_T(recs, Int(10));
  REQUIRE(T.size() == 1);
  CHECK(T[0].c == 9);
  CHECK(T[0].power_minus.has_value());
  CHECK(T[0].power_plus.has_value());

  const auto C = abc::build_C(Int(9));
  CHECK(C.all.empty());

  const auto D = abc::build_D({Int(9)}, Int(1000));
  // 9 -> 81 (square), 729 (cube power), 513 (cube map), 64 (square map), ...
  for (int c : {9, 81, 729, 513, 64, 8 * 8 * 8 + 1}) {
    CHECK(std::binary_search(D.members.begin(), D.members.end(), Int(c)));
  }
  CHECK(D.derivation.at(Int(513)).parent == 9);
  for (const Int& c : D.members) CHECK(oracle::is_abc_unit(c));
}

TEST_CASE("delta") {
  const std::vector<Int> Y = {9, 49, 64, 81, 225};
  const std::vector<Int> X = {9, 64};
  CHECK(abc::delta(X, Y, Int(100)) == doctest::Approx(50.0));
  CHECK(abc::delta(Y, Y, Int(1000)) == doctest::Approx(100.0));
  CHECK_THROWS_AS(abc::delta(X, Y, Int(5)), abc::EmptyDenominator);
  CHECK_THROWS_AS(abc::delta(std::vector<Int>{10}, Y, Int(100)), std::invalid_argument);

  const auto recs = abc::scan_unit_triples(1000001);
  abc::AnalyzeOptions opts;
  opts.delta_points = {Int(10000), Int(1000000)};
  const auto rep = abc::analyze(recs, Int(1000001), opts);
  CHECK(std::abs(*rep.delta_rows[0].t_s - 80.0) <= 0.1);
  CHECK(std::abs(*rep.delta_rows[1].d_t - 48.7) <= 0.1);
}

TEST_CASE("least divisors") {
  CHECK(abc::least_divisor_search(Int(49), abc::DivisorSide::Minus) == 16);
  CHECK(abc::least_divisor_search(Int(676), abc::DivisorSide::Minus) == 675);
  CHECK(abc::least_divisor_search(Int(9), abc::DivisorSide::Plus) == 9);
  CHECK_THROWS_AS(abc::least_divisor_search(Int(10), abc::DivisorSide::Minus), abc::NotAbc);
  for (const auto& r : abc::scan_unit_triples(20000)) {
    CHECK(abc::least_divisor_search(r.c, abc::DivisorSide::Minus) == oracle::least_divisor(r.c - 1, oracle::rad(r.c)));
    CHECK(abc::least_divisor_search(r.c, abc::DivisorSide::Plus) == oracle::least_divisor(r.c, oracle::rad(r.c - 1)));
  }
}

TEST_CASE("least-divisor tables round-trip through CSV") {
  const auto recs = abc::scan_unit_triples(600000);
  const auto T = abc::build_T(recs, Int(600000));
  const auto rows = abc::least_divisor_table(T, abc::DivisorSide::Plus);
  // Plus rows need an odd maximal exponent: 1025 = 2^10 + 1 is not one.
  for (const auto& r : rows) CHECK(r.c != 1025);
  REQUIRE(rows.size() >= 3);
  CHECK(rows[1].c == 513);
  CHECK(rows[1].n == 2);
  CHECK(rows[1].l == 9);
  std::stringstream ss;
  abc::write_least_divisor_csv(ss, rows);
  const auto back = abc::read_least_divisor_csv(ss);
  REQUIRE(back.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(back[i].c == rows[i].c);
    CHECK(back[i].m == rows[i].m);
    CHECK(std::abs(back[i].quality - rows[i].quality) <= 5e-5);
  }
  std::stringstream bad("a,b,c,n,l,m,quality\n1,8,9\n");
  CHECK_THROWS_AS(abc::read_least_divisor_csv(bad), abc::ParseError);
}

TEST_CASE("histograms") {
  const auto h = abc::quality_histogram(std::vector<double>{1.2263}, 0.05);
  CHECK(h.total() == 1);
  for (std::size_t i = 0; i < h.counts.size(); ++i) {
    if (h.counts[i]) {
      CHECK(h.edges[i] == doctest::Approx(1.20));
      CHECK(h.edges[i + 1] == doctest::Approx(1.25));
    }
  }
  const std::vector<double> table = {1.2263, 1.0412, 1.1127, 1.2920, 1.0129, 1.3111, 1.2252, 1.3176,
                                     1.0790, 1.0922, 1.0459, 1.0048, 1.1523, 1.1194, 1.0204};
  const auto h1 = abc::quality_histogram(table, 0.1);
  CHECK(h1.counts[0] == 7);
  CHECK(h1.total() == 15);
  const auto eq = abc::equal_count_histogram(table, 4);
  CHECK(eq.counts == std::vector<std::size_t>{4, 4, 4, 3});
  CHECK_THROWS_AS(abc::quality_histogram(std::vector<double>{}), std::invalid_argument);
  CHECK_THROWS_AS(abc::quality_histogram(table, 0.0), std::invalid_argument);
}

TEST_CASE("ingestion") {
  std::stringstream one("1,8,9\n");
  const auto r = abc::load_triples(one);
  REQUIRE(r.size() == 1);
  CHECK(r[0].c == 9);
  CHECK(r[0].provenance == abc::Provenance::Ingested);

  std::stringstream bad("1,8,9\n1,2,3\n");
  try {
    abc::load_triples(bad);
    FAIL("expected VerificationFailed");
  } catch (const abc::VerificationFailed& e) {
    CHECK(e.lines() == std::vector<std::size_t>{2});
  }
  std::stringstream trusted("1,2,3\n");
  CHECK(abc::load_triples(trusted, abc::LoadOptions{true, {}}).size() == 1);

  std::stringstream garbage("1,8,x\n");
  CHECK_THROWS_AS(abc::load_triples(garbage), abc::ParseError);
  std::stringstream wrong_sum("1,8,10\n");
  CHECK_THROWS_AS(abc::load_triples(wrong_sum), abc::ParseError);

  std::stringstream general("5,27,32\n");
  const auto g = abc::load_triples(general);
  CHECK_FALSE(g[0].is_unit());
}

TEST_CASE("save and load of a scan is lossless") {
  const auto recs = abc::scan_unit_triples(1000000);
  std::stringstream ss;
  abc::save_triples(ss, recs);
  const auto back = abc::load_triples(ss);
  REQUIRE(back.size() == recs.size());
  for (std::size_t i = 0; i < recs.size(); ++i) {
    CHECK(back[i].c == recs[i].c);
    CHECK(back[i].quality == recs[i].quality);
    CHECK(back[i].power_minus == recs[i].power_minus);
    CHECK(back[i].power_plus == recs[i].power_plus);
  }
}

TEST_CASE("report JSON round-trip") {
  const auto recs = abc::scan_unit_triples(100001);
  const auto rep = abc::analyze(recs, Int(100001));
  CHECK(rep.counts.at("S") == recs.size());
  CHECK(rep.counts.at("T_both") == 1);
  const std::string text = abc::report_to_json(rep);
  const auto back = abc::report_from_json(text);
  CHECK(abc::report_to_json(back) == text);
  CHECK_THROWS_AS(abc::report_from_json("{"), abc::ParseError);
  CHECK_THROWS_AS(abc::report_from_json("{\"schema_version\": 99}"), abc::ParseError);
}

TEST_CASE("power-form survey agrees with the scan") {
  const std::uint64_t L = 20000000;
  const auto pf = abc::power_form_survey(Int(static_cast<unsigned long>(L)));
  const auto T = abc::build_T(abc::scan_unit_triples(L), Int(static_cast<unsigned long>(L)));
  CHECK(pf.all == cs(T));
  CHECK(pf.both == std::vector<Int>{9});
}
