#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "abc/power.hpp"
#include "abc/survey.hpp"
#include "abc/triple.hpp"

namespace abc {

namespace {

using nlohmann::json;

Int parse_decimal(const std::string& s, std::size_t line) {
  std::size_t b = s.find_first_not_of(" \t");
  std::size_t e = s.find_last_not_of(" \t");
  if (b == std::string::npos) throw ParseError(line, "empty field");
  const std::string t = s.substr(b, e - b + 1);
  if (!std::all_of(t.begin(), t.end(), [](unsigned char ch) { return std::isdigit(ch); })) {
    throw ParseError(line, "not a decimal integer: '" + t + "'");
  }
  return Int(t);
}

}  // namespace

// Accepted lines: "a,b,c" or "a,b,c,quality". The quality column is only
// used in trust mode; otherwise it is recomputed. '#' starts a comment line.
std::vector<TripleRecord> load_triples(std::istream& is, const LoadOptions& options) {
  std::vector<TripleRecord> out;
  std::vector<std::size_t> failed;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos || line[line.find_first_not_of(" \t")] == '#') continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) f.push_back(cell);
    if (f.size() != 3 && f.size() != 4) throw ParseError(lineno, "expected a,b,c");
    if (lineno == 1 && f[0] == "a") continue;  // header
    TripleRecord r;
    try {
      const GeneralTriple t(parse_decimal(f[0], lineno), parse_decimal(f[1], lineno), parse_decimal(f[2], lineno));
      r.a = t.a();
      r.b = t.b();
      r.c = t.c();
    } catch (const InvalidTriple& e) {
      throw ParseError(lineno, e.what());
    }
    r.provenance = Provenance::Ingested;
    if (options.trust && f.size() == 4) {
      try {
        r.quality = std::stod(f[3]);
      } catch (const std::exception&) {
        throw ParseError(lineno, "bad quality '" + f[3] + "'");
      }
    } else {
      Int rad;
      if (r.is_unit()) {
        rad = factorize_structured(r.c, options.budget).radical() *
              factorize_structured(r.b, options.budget).radical();
      } else {
        rad = radical(r.a, options.budget) * radical(r.b, options.budget) * radical(r.c, options.budget);
      }
      if (!options.trust && rad >= r.c) failed.push_back(lineno);
      r.quality = quality_from_radical(r.c, rad);
    }
    tag_forms(r);
    out.push_back(std::move(r));
  }
  if (!failed.empty()) throw VerificationFailed(std::move(failed));
  return out;
}

std::vector<TripleRecord> load_triples(const std::string& path, const LoadOptions& options) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return load_triples(in, options);
}

void save_triples(std::ostream& os, const std::vector<TripleRecord>& records) {
  char q[32];
  for (const auto& r : records) {
    std::snprintf(q, sizeof q, "%.6f", r.quality);
    os << r.a << ',' << r.b << ',' << r.c << ',' << q << '\n';
  }
}

void save_triples(const std::string& path, const std::vector<TripleRecord>& records) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  save_triples(out, records);
}

SurveyReport analyze(const std::vector<TripleRecord>& records, const Int& c_limit, const AnalyzeOptions& options) {
  SurveyReport rep;
  rep.c_limit = c_limit;

  std::set<Int> s_set;
  std::vector<double> qualities;
  for (const auto& r : records) {
    if (r.is_unit() && r.c < c_limit && s_set.insert(r.c).second) qualities.push_back(r.quality);
  }
  const std::vector<Int> S(s_set.begin(), s_set.end());

  const auto t_records = build_T(records, c_limit);
  std::vector<Int> T;
  std::uint64_t minus = 0, plus = 0, both = 0;
  for (const auto& r : t_records) {
    T.push_back(r.c);
    minus += r.power_minus.has_value();
    plus += r.power_plus.has_value();
    both += r.power_minus && r.power_plus;
  }

  const FamilySets C = build_C(c_limit, options.budget);
  const ClosureSet D = build_D(C.all, c_limit);

  rep.counts = {{"S", S.size()},      {"T", T.size()},         {"T_minus", minus},      {"T_plus", plus},
                {"T_both", both},     {"C", C.all.size()},     {"D", D.members.size()}};
  for (const auto& [id, cs] : C.per_family) rep.c_i.emplace_back(family_name(id), cs.size());

  std::vector<Int> points = options.delta_points;
  if (points.empty()) {
    for (Int x = 10000; x < c_limit; x *= 100) points.push_back(x);
  }
  auto ratio = [](const std::vector<Int>& X, const std::vector<Int>& Y, const Int& x) -> std::optional<double> {
    try {
      return delta(X, Y, x);
    } catch (const EmptyDenominator&) {
      return std::nullopt;
    }
  };
  for (const Int& x : points) {
    rep.delta_rows.push_back(DeltaRow{x, ratio(T, S, x), ratio(D.members, S, x), ratio(D.members, T, x)});
  }

  if (!qualities.empty()) {
    rep.histogram = options.equal_count > 0 ? equal_count_histogram(qualities, options.equal_count)
                                            : quality_histogram(qualities, options.bin_width);
  }
  return rep;
}

std::string report_to_json(const SurveyReport& report) {
  json j;
  j["schema_version"] = SurveyReport::kSchemaVersion;
  j["c_limit"] = report.c_limit.get_str();
  j["counts"] = report.counts;
  json ci = json::array();
  for (const auto& [name, n] : report.c_i) ci.push_back({{"family", name}, {"count", n}});
  j["c_i"] = ci;
  json rows = json::array();
  for (const auto& r : report.delta_rows) {
    auto opt = [](const std::optional<double>& v) { return v ? json(*v) : json(nullptr); };
    rows.push_back({{"x", r.x.get_str()}, {"T_S", opt(r.t_s)}, {"D_S", opt(r.d_s)}, {"D_T", opt(r.d_t)}});
  }
  j["delta"] = rows;
  j["histogram"] = {{"bin_width", report.histogram.bin_width},
                    {"edges", report.histogram.edges},
                    {"counts", report.histogram.counts}};
  return j.dump(2);
}

SurveyReport report_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(1, e.what());
  }
  try {
    if (j.at("schema_version").get<int>() != SurveyReport::kSchemaVersion) {
      throw ParseError(1, "unsupported schema_version " + j.at("schema_version").dump());
    }
    SurveyReport rep;
    rep.c_limit = Int(j.at("c_limit").get<std::string>());
    rep.counts = j.at("counts").get<std::map<std::string, std::uint64_t>>();
    for (const auto& e : j.at("c_i")) rep.c_i.emplace_back(e.at("family").get<std::string>(), e.at("count").get<std::uint64_t>());
    for (const auto& e : j.at("delta")) {
      auto opt = [](const json& v) { return v.is_null() ? std::nullopt : std::optional<double>(v.get<double>()); };
      rep.delta_rows.push_back(DeltaRow{Int(e.at("x").get<std::string>()), opt(e.at("T_S")), opt(e.at("D_S")), opt(e.at("D_T"))});
    }
    const json& h = j.at("histogram");
    rep.histogram.bin_width = h.at("bin_width").get<double>();
    rep.histogram.edges = h.at("edges").get<std::vector<double>>();
    rep.histogram.counts = h.at("counts").get<std::vector<std::size_t>>();
    return rep;
  } catch (const json::exception& e) {
    throw ParseError(1, e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(1, e.what());
  }
}

void save_report(const SurveyReport& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << report_to_json(report) << '\n';
}

}  // namespace abc
