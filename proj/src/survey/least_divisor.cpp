#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "abc/power.hpp"
#include "abc/survey.hpp"
#include "abc/triple.hpp"

namespace abc {

namespace {

// Smallest divisor with cosocle above `bound`, walking exponent vectors.
std::optional<Int> least_qualifying(const Factorization& f, const Int& bound) {
  std::optional<Int> best;
  const auto& e = f.entries();
  auto rec = [&](auto&& self, std::size_t i, const Int& value, const Int& cos) -> void {
    if (best && value >= *best) return;
    if (i == e.size()) {
      if (cos > bound) best = value;
      return;
    }
    Int v = value;
    Int c = cos;
    for (unsigned a = 0; a <= e[i].exponent; ++a) {
      self(self, i + 1, v, c);
      if (a > 0) c *= e[i].prime;
      v *= e[i].prime;
      if (best && v >= *best) break;
    }
  };
  rec(rec, 0, Int(1), Int(1));
  return best;
}

}  // namespace

Int least_divisor_search(const Int& c, DivisorSide side, const FactorBudget& budget) {
  if (c < 2) throw InvalidTriple("least_divisor_search needs c >= 2");
  const bool minus = side == DivisorSide::Minus;
  const Int target = minus ? c - 1 : c;
  const Int bound = factorize_structured(minus ? c : c - 1, budget).radical();
  const auto m = least_qualifying(factorize_structured(target, budget), bound);
  if (!m) {
    throw NotAbc("no divisor of " + target.get_str() + " has cosocle above " + bound.get_str());
  }
  return *m;
}

std::vector<LeastDivisorRow> least_divisor_table(const std::vector<TripleRecord>& records, DivisorSide side,
                                                 const FactorBudget& budget) {
  std::vector<LeastDivisorRow> rows;
  for (const auto& r : records) {
    if (!r.is_unit()) continue;
    LeastDivisorRow row;
    if (side == DivisorSide::Minus) {
      if (!r.power_minus) continue;
      row.n = r.power_minus->n;
      row.l = r.power_minus->l;
    } else {
      if (!r.power_plus) continue;
      if (r.power_plus->l % 2 == 0) continue;
      row.n = r.power_plus->n;
      row.l = r.power_plus->l;
    }
    row.a = r.a;
    row.b = r.b;
    row.c = r.c;
    row.m = least_divisor_search(r.c, side, budget);
    row.quality = r.quality;
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_least_divisor_csv(std::ostream& os, const std::vector<LeastDivisorRow>& rows) {
  os << "a,b,c,n,l,m,quality\n";
  char q[32];
  for (const auto& r : rows) {
    std::snprintf(q, sizeof q, "%.4f", r.quality);
    os << r.a << ',' << r.b << ',' << r.c << ',' << r.n << ',' << r.l << ',' << r.m << ',' << q << '\n';
  }
}

std::vector<LeastDivisorRow> read_least_divisor_csv(std::istream& is) {
  std::vector<LeastDivisorRow> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (lineno == 1) {
      if (line != "a,b,c,n,l,m,quality") throw ParseError(lineno, "expected header a,b,c,n,l,m,quality");
      continue;
    }
    std::vector<std::string> f;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) f.push_back(cell);
    if (f.size() != 7) throw ParseError(lineno, "expected 7 fields");
    try {
      LeastDivisorRow r;
      r.a = Int(f[0]);
      r.b = Int(f[1]);
      r.c = Int(f[2]);
      r.n = Int(f[3]);
      r.l = static_cast<unsigned>(std::stoul(f[4]));
      r.m = Int(f[5]);
      r.quality = std::stod(f[6]);
      rows.push_back(std::move(r));
    } catch (const std::exception& e) {
      throw ParseError(lineno, e.what());
    }
  }
  return rows;
}

}  // namespace abc
