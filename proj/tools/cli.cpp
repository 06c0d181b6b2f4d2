#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "abc/error.hpp"
#include "abc/families.hpp"
#include "abc/power.hpp"
#include "abc/survey.hpp"
#include "abc/triple.hpp"

namespace abc::cli {

namespace {

using nlohmann::json;

enum class Format { Table, Csv, Json };

// Big integers travel as decimal strings in JSON.
json J(const Int& x) { return x.get_str(); }

std::string cell_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v.get<double>());
    return buf;
  }
  if (v.is_null()) return "";
  return v.dump();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string r = "\"";
  for (char c : s) {
    if (c == '"') r += '"';
    r += c;
  }
  return r + "\"";
}

struct Field {
  std::string key;
  json value;
  std::string label;  // table-mode name; key when empty
};
using Record = std::vector<Field>;

void emit(std::ostream& out, Format fmt, const Record& rec) {
  switch (fmt) {
    case Format::Table:
      for (const auto& f : rec) out << (f.label.empty() ? f.key : f.label) << '=' << cell_text(f.value) << '\n';
      break;
    case Format::Csv: {
      for (std::size_t i = 0; i < rec.size(); ++i) out << (i ? "," : "") << csv_escape(rec[i].key);
      out << '\n';
      for (std::size_t i = 0; i < rec.size(); ++i) out << (i ? "," : "") << csv_escape(cell_text(rec[i].value));
      out << '\n';
      break;
    }
    case Format::Json: {
      json j = json::object();
      for (const auto& f : rec) j[f.key] = f.value;
      out << j.dump(2) << '\n';
      break;
    }
  }
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<json>> rows;
  std::size_t csv_columns = 0;  // 0: all columns
};

void emit(std::ostream& out, Format fmt, const Table& t) {
  switch (fmt) {
    case Format::Table: {
      std::vector<std::size_t> width(t.header.size());
      for (std::size_t i = 0; i < t.header.size(); ++i) width[i] = t.header[i].size();
      for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], cell_text(row[i]).size());
      }
      auto line = [&](auto get) {
        std::string s;
        for (std::size_t i = 0; i < width.size(); ++i) {
          std::string c = get(i);
          if (i + 1 < width.size()) c.resize(width[i], ' ');
          s += (i ? "  " : "") + c;
        }
        out << s << '\n';
      };
      line([&](std::size_t i) { return t.header[i]; });
      for (const auto& row : t.rows) line([&](std::size_t i) { return cell_text(row[i]); });
      break;
    }
    case Format::Csv: {
      const std::size_t n = t.csv_columns ? t.csv_columns : t.header.size();
      for (std::size_t i = 0; i < n; ++i) out << (i ? "," : "") << csv_escape(t.header[i]);
      out << '\n';
      for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < n; ++i) out << (i ? "," : "") << csv_escape(cell_text(row[i]));
        out << '\n';
      }
      break;
    }
    case Format::Json: {
      json arr = json::array();
      for (const auto& row : t.rows) {
        json o = json::object();
        for (std::size_t i = 0; i < row.size(); ++i) o[t.header[i]] = row[i];
        arr.push_back(std::move(o));
      }
      out << arr.dump(2) << '\n';
      break;
    }
  }
}

std::uint64_t u64_arg(const std::string& s, const char* what) {
  const Int v = parse_int_expr(s);
  if (!fits_u64(v)) throw UsageError(std::string(what) + " does not fit in 64 bits");
  return to_u64(v);
}

std::string form_text(const TripleRecord& r) {
  std::string s;
  if (r.power_minus) s = r.power_minus->n.get_str() + "^" + std::to_string(r.power_minus->l);
  if (r.power_plus) {
    if (!s.empty()) s += " = ";
    s += r.power_plus->n.get_str() + "^" + std::to_string(r.power_plus->l) + "+1";
  }
  return s;
}

Table triples_table(const std::vector<TripleRecord>& records) {
  Table t{{"a", "b", "c", "quality", "form"}, {}, 4};
  for (const auto& r : records) t.rows.push_back({J(r.a), J(r.b), J(r.c), r.quality, form_text(r)});
  return t;
}

DivisorSide parse_side(const std::string& s) { return s == "plus" ? DivisorSide::Plus : DivisorSide::Minus; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"abc triples: verification, power classification, families and surveys"};
  app.name("abc");
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "table";
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  std::uint64_t trial_bound = 0, rho_cap = 0;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "csv", "json"}));
  app.add_option("--threads", threads, "Worker threads for scan and power-forms")->check(CLI::PositiveNumber);
  app.add_option("--trial-bound", trial_bound, "Trial division bound (default ABC_TRIAL_BOUND or 65536)");
  app.add_option("--rho-cap", rho_cap, "Rho iterations per split (default ABC_RHO_CAP or 2^28)");

  std::function<void()> action;
  Format fmt = Format::Table;
  FactorBudget budget;

  // verify
  std::string v_c, v_a, v_b;
  auto* verify = app.add_subcommand("verify", "Check whether (a, b, c) is an abc triple; a defaults to 1");
  verify->add_option("--c", v_c, "c (integer expression)")->required();
  verify->add_option("--a", v_a);
  verify->add_option("--b", v_b);
  verify->callback([&] {
    action = [&] {
      const Int c = parse_int_expr(v_c);
      if (!v_a.empty() || !v_b.empty()) {
        const Int a = v_a.empty() ? c - parse_int_expr(v_b) : parse_int_expr(v_a);
        const Int b = v_b.empty() ? c - a : parse_int_expr(v_b);
        const GeneralTriple t(a, b, c);
        const Int rad = radical(t.a(), budget) * radical(t.b(), budget) * radical(t.c(), budget);
        emit(out, fmt,
             Record{{"a", J(t.a()), ""},
                    {"b", J(t.b()), ""},
                    {"c", J(t.c()), ""},
                    {"is_abc", rad < t.c(), ""},
                    {"rad_abc", J(rad), "rad(abc)"},
                    {"quality", quality_from_radical(t.c(), rad), ""}});
        return;
      }
      const UnitTriple t(c);
      const VerificationEvidence ev = verify_unit(c, budget);
      const std::string cs = c.get_str(), bs = t.b().get_str();
      emit(out, fmt,
           Record{{"c", J(c), ""},
                  {"is_abc", ev.is_abc, ""},
                  {"exact", ev.exact, ""},
                  {"rad_c", J(ev.rad_c), "rad(" + cs + ")"},
                  {"rad_c_minus_1", J(ev.rad_c_minus_1), "rad(" + bs + ")"},
                  {"cosocle_c", J(ev.cosocle_c), "cosocle(" + cs + ")"},
                  {"cosocle_c_minus_1", J(ev.cosocle_c_minus_1), "cosocle(" + bs + ")"},
                  {"quality", quality_from_radical(c, ev.rad_c * ev.rad_c_minus_1), ""}});
    };
  });

  // quality
  std::string q_a = "1", q_b, q_c;
  auto* qual = app.add_subcommand("quality", "log c / log rad(abc)");
  qual->add_option("--c", q_c)->required();
  qual->add_option("--a", q_a, "default 1");
  qual->add_option("--b", q_b, "default c - a");
  qual->callback([&] {
    action = [&] {
      const Int c = parse_int_expr(q_c);
      const Int a = parse_int_expr(q_a);
      const GeneralTriple t(a, q_b.empty() ? c - a : parse_int_expr(q_b), c);
      emit(out, fmt, Record{{"a", J(t.a()), ""}, {"b", J(t.b()), ""}, {"c", J(t.c()), ""}, {"quality", quality(t, budget), ""}});
    };
  });

  // classify
  std::string cl_c;
  std::uint64_t cl_k = 0, cl_pool = 1000000;
  auto* classify = app.add_subcommand("classify", "Decide whether (1, c^k - 1, c^k) is abc from the structure of c^k - 1");
  classify->add_option("--c", cl_c)->required();
  classify->add_option("--k", cl_k)->required()->check(CLI::PositiveNumber);
  classify->add_option("--pool", cl_pool, "Prime screening bound");
  classify->callback([&] {
    action = [&] {
      const Classification r = classify_power(parse_int_expr(cl_c), cl_k, ClassifyOptions{cl_pool, budget});
      Record rec{{"c", J(r.c), ""},
                 {"k", r.k, ""},
                 {"verdict", to_string(r.verdict), ""},
                 {"condition", to_string(r.condition), ""},
                 {"rad_c", J(r.radical_c), "rad(c)"},
                 {"evidence", r.describe(), ""}};
      if (r.condition == Condition::LargePrime || r.condition == Condition::SmallPrime) {
        rec.push_back({"prime", J(r.prime), "p"});
        rec.push_back({"f", r.f, "f_p"});
        rec.push_back({"w", r.w, "w_p"});
        if (r.condition == Condition::SmallPrime) rec.push_back({"m_p", r.m_p, ""});
      }
      if (!r.exponents.empty()) {
        std::string s;
        for (const auto& e : r.exponents) s += (s.empty() ? "" : " * ") + e.prime.get_str() + "^" + std::to_string(e.exponent);
        rec.push_back({"exponents", s, ""});
        rec.push_back({"product", J(r.product), ""});
      }
      rec.push_back({"full_profile", r.used_full_profile, ""});
      if (!r.reason.empty()) rec.push_back({"reason", r.reason, ""});
      emit(out, fmt, rec);
    };
  });

  // power-factor
  std::string pf_c;
  std::uint64_t pf_k = 0;
  auto* pfac = app.add_subcommand("power-factor", "Factor c^k - 1 with per-prime order, f_p and w_p");
  pfac->add_option("--c", pf_c)->required();
  pfac->add_option("--k", pf_k)->required()->check(CLI::PositiveNumber);
  pfac->callback([&] {
    action = [&] {
      const PowerProfile prof = power_factorization(parse_int_expr(pf_c), pf_k, budget);
      Table t{{"p", "order", "f", "w", "valuation"}, {}, 0};
      for (const auto& [p, e] : prof.entries()) t.rows.push_back({J(p), e.order, e.f, e.w, e.valuation()});
      emit(out, fmt, t);
    };
  });

  // family generate / enumerate
  auto* family = app.add_subcommand("family", "Certified infinite families");
  family->require_subcommand(1);
  std::string fg_id, fg_n = "0", fg_p = "0", fg_m = "0", fg_variant = "lambda";
  std::uint64_t fg_j = 0, fg_k = 1;
  auto* gen = family->add_subcommand("generate", "One certified member");
  gen->add_option("--id", fg_id, "cor3.2 ... cor3.12")->required();
  gen->add_option("--n", fg_n, "base");
  gen->add_option("--p", fg_p, "prime (cor3.5, cor3.6)");
  gen->add_option("--m", fg_m, "modulus (cor3.4)");
  gen->add_option("--j", fg_j, "exponent (cor3.9, cor3.10, cor3.12)");
  gen->add_option("--variant", fg_variant, "cor3.4: lambda or phi")->check(CLI::IsMember({"lambda", "phi"}));
  gen->add_option("--k", fg_k, "default 1")->check(CLI::PositiveNumber);
  gen->footer(
      "Families:\n"
      "  cor3.2   --n (odd)          c = n^(phi(n) k)\n"
      "  cor3.3   --n                c = n^(phi(n) k)\n"
      "  cor3.4   --n --m [--variant] c = n^(lambda(m) k) or n^(phi(m) k)\n"
      "  cor3.5   --n --p            c = n^(p (p - 1) k)\n"
      "  cor3.6   --n --p            c = n^(p ord_p(n) k)\n"
      "  cor3.7   --n                c = n^((n - 1) k)\n"
      "  cor3.8   --n                c = n^((n + 1) k), (n + 1) k even\n"
      "  cor3.9   --j (>= 2)         c = (2^j - 1)^(2k)\n"
      "  cor3.10  --n --j            c = (n^j - 1)^(n k), n k even\n"
      "  cor3.11  --n (even)         b = n^((n + 1) k), k odd\n"
      "  cor3.12  --n (odd) --j      b = (n^j - 1)^(n k), k odd");
  gen->callback([&] {
    action = [&] {
      const auto id = parse_family(fg_id);
      if (!id) throw UsageError("unknown family '" + fg_id + "'");
      const FamilyParams params{parse_int_expr(fg_n), parse_int_expr(fg_p), parse_int_expr(fg_m), fg_j,
                                fg_variant == "phi" ? CarmichaelVariant::Phi : CarmichaelVariant::Lambda};
      const FamilyCertificate cert = generate(*id, params, fg_k, budget);
      const bool plus = cert.side == WitnessSide::BPlusOne;
      const std::string expr =
          cert.base.get_str() + "^" + std::to_string(cert.exponent) + (plus ? " + 1" : "");
      emit(out, fmt,
           Record{{"family", family_name(cert.family), ""},
                  {"params", params.to_string(cert.family), ""},
                  {"k", cert.k, ""},
                  {"c_expr", expr, "c"},
                  {"c", J(cert.c), "c (decimal)"},
                  {"side", plus ? "b+1" : "c-1", "witness side"},
                  {"witness_m", J(cert.witness_m), "m"},
                  {"checked", check_certificate(cert, budget), ""}});
    };
  });
  std::string fe_id, fe_limit;
  bool fe_count = false;
  auto* en = family->add_subcommand("enumerate", "All members with c below a limit");
  en->add_option("--id", fe_id, "default: every family");
  en->add_option("--limit", fe_limit, "c limit (exclusive)")->required();
  en->add_flag("--count", fe_count, "Print counts only");
  en->callback([&] {
    action = [&] {
      const Int limit = parse_int_expr(fe_limit);
      std::vector<FamilyId> ids;
      if (fe_id.empty()) {
        ids.assign(kAllFamilies.begin(), kAllFamilies.end());
      } else {
        const auto id = parse_family(fe_id);
        if (!id) throw UsageError("unknown family '" + fe_id + "'");
        ids.push_back(*id);
      }
      if (fe_count) {
        if (ids.size() == 1) {
          const auto n = enumerate_family(ids[0], limit, budget).size();
          if (fmt == Format::Table) out << n << '\n';
          else emit(out, fmt, Record{{"family", family_name(ids[0]), ""}, {"count", n, ""}});
          return;
        }
        const FamilySets sets = build_C(limit, budget);
        Table t{{"family", "count"}, {}, 0};
        for (const auto& [id, cs] : sets.per_family) t.rows.push_back({family_name(id), cs.size()});
        t.rows.push_back({"C", sets.all.size()});
        emit(out, fmt, t);
        return;
      }
      Table t{{"family", "params", "k", "c", "witness_m"}, {}, 0};
      for (FamilyId id : ids) {
        for (const auto& cert : enumerate_family(id, limit, budget)) {
          t.rows.push_back({family_name(id), cert.params.to_string(id), cert.k, J(cert.c), J(cert.witness_m)});
        }
      }
      emit(out, fmt, t);
    };
  });

  // transfer
  std::string tr_map, tr_c, tr_a, tr_b;
  std::uint64_t tr_k = 0, tr_n = 0;
  auto* transfer = app.add_subcommand("transfer", "New abc triples from known ones");
  transfer->add_option("--map", tr_map, "power | odd-power | cube | square | binomial")
      ->required()
      ->check(CLI::IsMember({"power", "odd-power", "cube", "square", "binomial"}));
  transfer->add_option("--c", tr_c, "power, cube, square: c of an abc triple (1, c - 1, c)");
  transfer->add_option("--b", tr_b, "odd-power: b of an abc triple (1, b, b + 1); binomial: b");
  transfer->add_option("--a", tr_a, "binomial: a");
  transfer->add_option("--k", tr_k);
  transfer->add_option("--n", tr_n, "binomial: exponent n");
  transfer->callback([&] {
    action = [&] {
      auto need = [](const std::string& v, const char* name) {
        if (v.empty()) throw UsageError(std::string("transfer needs --") + name);
        return parse_int_expr(v);
      };
      if (tr_map == "binomial") {
        const BinomialSplit s = binomial_split_identity(need(tr_a, "a"), need(tr_b, "b"), tr_n, tr_k);
        emit(out, fmt, Record{{"first", J(s.first), ""}, {"second", J(s.second), ""}, {"total", J(s.total), ""}});
        return;
      }
      std::optional<GeneralTriple> t;
      if (tr_map == "odd-power") {
        t = transfer_odd_power(need(tr_b, "b"), tr_k, budget);
      } else {
        const Int c = need(tr_c, "c");
        const UnitTriple u = tr_map == "power" ? transfer_power(c, tr_k, budget)
                             : tr_map == "cube" ? transfer_cube(c, budget)
                                                : transfer_square(c, budget);
        t = GeneralTriple::from_unit(u);
      }
      emit(out, fmt,
           Record{{"a", J(t->a()), ""},
                  {"b", J(t->b()), ""},
                  {"c", J(t->c()), ""},
                  {"is_abc", verify_general(*t, budget), ""},
                  {"quality", quality(*t, budget), ""}});
    };
  });

  // scan
  std::string sc_limit;
  std::uint64_t sc_segments = 1;
  auto* scan = app.add_subcommand("scan", "All abc triples (1, c - 1, c) with c below a limit");
  scan->add_option("--limit", sc_limit, "c limit (exclusive)")->required();
  scan->add_option("--segments", sc_segments, "Number of c-ranges")->check(CLI::PositiveNumber);
  scan->callback([&] {
    action = [&] {
      const auto records = scan_unit_triples(u64_arg(sc_limit, "--limit"), ScanOptions{sc_segments, threads});
      emit(out, fmt, triples_table(records));
    };
  });

  // least-divisor
  std::string ld_c, ld_limit, ld_input, ld_side = "minus";
  auto* least = app.add_subcommand("least-divisor", "Smallest divisor whose cosocle exceeds the opposite radical");
  least->add_option("--c", ld_c, "Single c");
  least->add_option("--limit", ld_limit, "Table for power-form triples found by scanning below this limit");
  least->add_option("--input", ld_input, "Table for power-form triples in an a,b,c file");
  least->add_option("--side", ld_side, "minus: m | c - 1 against rad(c); plus: m | c against rad(c - 1)")
      ->check(CLI::IsMember({"minus", "plus"}));
  least->callback([&] {
    action = [&] {
      const DivisorSide side = parse_side(ld_side);
      if (!ld_c.empty()) {
        const Int c = parse_int_expr(ld_c);
        const Int m = least_divisor_search(c, side, budget);
        emit(out, fmt, Record{{"c", J(c), ""}, {"side", ld_side, ""}, {"m", J(m), ""}, {"cosocle_m", J(cosocle(m, budget)), "cosocle(m)"}});
        return;
      }
      std::vector<TripleRecord> records;
      Int limit;
      if (!ld_input.empty()) {
        records = load_triples(ld_input, LoadOptions{false, budget});
        limit = 0;
        for (const auto& r : records) limit = std::max(limit, Int(r.c + 1));
      } else if (!ld_limit.empty()) {
        limit = parse_int_expr(ld_limit);
        records = scan_unit_triples(u64_arg(ld_limit, "--limit"), ScanOptions{1, threads});
      } else {
        throw UsageError("least-divisor needs --c, --limit or --input");
      }
      const auto rows = least_divisor_table(build_T(records, limit), side, budget);
      if (fmt == Format::Csv) {
        write_least_divisor_csv(out, rows);
        return;
      }
      Table t{{"a", "b", "c", "n", "l", "m", "quality"}, {}, 0};
      for (const auto& r : rows) t.rows.push_back({J(r.a), J(r.b), J(r.c), J(r.n), r.l, J(r.m), r.quality});
      emit(out, fmt, t);
    };
  });

  // analyze
  std::string an_input, an_limit, an_delta, an_output;
  bool an_trust = false;
  double an_bin = kDefaultBinWidth;
  std::size_t an_equal = 0;
  auto* analyze_cmd = app.add_subcommand("analyze", "Counts, delta ratios and quality histogram");
  analyze_cmd->add_option("--input", an_input, "a,b,c file (S); without it S is scanned");
  analyze_cmd->add_option("--limit", an_limit, "c limit (exclusive); default max c + 1 of the input");
  analyze_cmd->add_flag("--trust", an_trust, "Skip re-verification of ingested triples");
  analyze_cmd->add_option("--delta", an_delta, "Comma-separated x values (default 10^4, 10^6, ...)");
  analyze_cmd->add_option("--bin-width", an_bin, "Histogram bin width")->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--equal-count", an_equal, "Values per bin; switches to equal-count bins");
  analyze_cmd->add_option("--output", an_output, "Also write the JSON report here");
  analyze_cmd->callback([&] {
    action = [&] {
      std::vector<TripleRecord> records;
      Int limit;
      if (!an_input.empty()) {
        records = load_triples(an_input, LoadOptions{an_trust, budget});
        if (!an_limit.empty()) {
          limit = parse_int_expr(an_limit);
        } else {
          limit = 0;
          for (const auto& r : records) limit = std::max(limit, Int(r.c + 1));
        }
      } else if (!an_limit.empty()) {
        limit = parse_int_expr(an_limit);
        records = scan_unit_triples(u64_arg(an_limit, "--limit"), ScanOptions{1, threads});
      } else {
        throw UsageError("analyze needs --input or --limit");
      }
      AnalyzeOptions opts;
      opts.bin_width = an_bin;
      opts.equal_count = an_equal;
      opts.budget = budget;
      std::stringstream ds(an_delta);
      for (std::string x; std::getline(ds, x, ',');) opts.delta_points.push_back(parse_int_expr(x));
      const SurveyReport rep = analyze(records, limit, opts);
      if (!an_output.empty()) save_report(rep, an_output);
      auto opt = [](const std::optional<double>& v) { return v ? json(*v) : json(nullptr); };
      Table delta{{"x", "T_S", "D_S", "D_T"}, {}, 0};
      for (const auto& r : rep.delta_rows) delta.rows.push_back({J(r.x), opt(r.t_s), opt(r.d_s), opt(r.d_t)});
      switch (fmt) {
        case Format::Json:
          out << report_to_json(rep) << '\n';
          break;
        case Format::Csv:
          emit(out, fmt, delta);
          break;
        case Format::Table: {
          Record counts{{"c_limit", J(rep.c_limit), ""}};
          for (const auto& [k, v] : rep.counts) counts.push_back({k, v, "#" + k});
          for (const auto& [k, v] : rep.c_i) counts.push_back({k, v, "#" + k});
          emit(out, fmt, counts);
          out << '\n';
          emit(out, fmt, delta);
          out << '\n';
          Table h{{"from", "to", "count"}, {}, 0};
          for (std::size_t i = 0; i < rep.histogram.counts.size(); ++i) {
            h.rows.push_back({rep.histogram.edges[i], rep.histogram.edges[i + 1], rep.histogram.counts[i]});
          }
          emit(out, fmt, h);
          break;
        }
      }
    };
  });

  // power-forms
  std::string pw_limit = "1e18";
  bool pw_progress = false;
  auto* pforms = app.add_subcommand(
      "power-forms", "Every abc triple with c = n^l or c = n^l + 1 below a limit, without a dataset (minutes at 1e18)");
  pforms->add_option("--limit", pw_limit, "c limit (exclusive), at most 2^62");
  pforms->add_flag("--progress", pw_progress, "Progress lines on stderr");
  pforms->callback([&] {
    action = [&] {
      const PowerFormCounts r = power_form_survey(parse_int_expr(pw_limit), threads, pw_progress ? &err : nullptr);
      std::string both;
      for (const Int& c : r.both) both += (both.empty() ? "" : " ") + c.get_str();
      emit(out, fmt,
           Record{{"T", r.all.size(), "#T"},
                  {"T_minus", r.minus.size(), "#T_minus"},
                  {"T_plus", r.plus.size(), "#T_plus"},
                  {"T_both", r.both.size(), "#T_both"},
                  {"T_plus_odd", r.plus_odd, "#T_plus (odd l)"},
                  {"both", both, "overlap"}});
    };
  });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    fmt = format == "csv" ? Format::Csv : format == "json" ? Format::Json : Format::Table;
    budget = FactorBudget::from_env();
    if (trial_bound) budget.max_trial_prime = trial_bound;
    if (rho_cap) budget.rho_iteration_cap = rho_cap;
    if (!action) throw UsageError("no command");
    action();
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace abc::cli
