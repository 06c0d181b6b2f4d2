#pragma once

// Bulk enumeration and dataset analysis: radical sieve, unit-triple scans,
// the sets T, C, D, least-divisor tables, quality histograms, delta ratios,
// ingestion and reports.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "abc/arith.hpp"
#include "abc/families.hpp"

namespace abc {

// ---- sieve ----------------------------------------------------------------

inline constexpr std::uint64_t kDefaultMaxSegment = 1ull << 27;

// r[i] = rad(lo + i) for lo <= n < hi, by marking prime multiples.
// Throws SegmentTooLarge when hi - lo exceeds max_segment.
std::vector<std::uint64_t> sieve_radicals(std::uint64_t lo, std::uint64_t hi,
                                          std::uint64_t max_segment = kDefaultMaxSegment);

// ---- records --------------------------------------------------------------

struct PowerForm {
  Int n;           // minimal base
  unsigned l = 0;  // l >= 2

  friend bool operator==(const PowerForm&, const PowerForm&) = default;
};

enum class Provenance { Sieved, Ingested, Family };

struct TripleRecord {
  Int a{1};
  Int b;
  Int c;
  double quality = 0;
  std::optional<PowerForm> power_minus;  // c = n^l
  std::optional<PowerForm> power_plus;   // c = n^l + 1
  Provenance provenance = Provenance::Sieved;
  std::optional<FamilyId> family;

  bool is_unit() const { return a == 1; }
  bool in_T() const { return is_unit() && (power_minus || power_plus); }
};

// Same triple, quality and form tags; provenance is not compared.
bool same_content(const TripleRecord& x, const TripleRecord& y);

// Sets power_minus / power_plus from perfect-power detection on c and c - 1.
void tag_forms(TripleRecord& r);

// ---- scan -----------------------------------------------------------------

struct ScanOptions {
  std::uint64_t segments = 1;  // number of c-ranges the scan is split into
  unsigned threads = 1;
  std::uint64_t max_segment = kDefaultMaxSegment;
};

// Every c < c_limit with rad(c) rad(c - 1) < c, sorted, quality and forms
// filled in. c_limit < 3 yields an empty list.
std::vector<TripleRecord> scan_unit_triples(std::uint64_t c_limit, const ScanOptions& options = {});

// ---- sets -----------------------------------------------------------------

// Unit records below c_limit carrying a form tag, one per c, sorted by c.
std::vector<TripleRecord> build_T(const std::vector<TripleRecord>& source, const Int& c_limit);

struct FamilySets {
  std::map<FamilyId, std::vector<Int>> per_family;  // sorted c values
  std::vector<Int> all;                             // union, sorted
};
FamilySets build_C(const Int& c_limit, const FactorBudget& budget = FactorBudget{});

struct ClosureStep {
  Int parent;
  std::string map;  // "power", "odd-power", "square", "cube"
  std::uint64_t k = 0;
};

struct ClosureSet {
  std::vector<Int> members;             // sorted
  std::map<Int, ClosureStep> derivation;  // for members outside the seed set
};

// Closure of seeds under c -> c^k (k >= 2), c -> (c - 1)^k + 1 (k >= 3 odd),
// c -> (c - 1)^2, c -> c (c^2 - 3c + 3), keeping values below c_limit.
ClosureSet build_D(const std::vector<Int>& seeds, const Int& c_limit);
inline ClosureSet build_D(const Int& c_limit) { return build_D(build_C(c_limit).all, c_limit); }

// Percentage |{c in X : c <= x}| / |{c in Y : c <= x}|, X and Y sorted.
// Throws EmptyDenominator, std::invalid_argument when the prefix of X is not
// contained in Y.
double delta(const std::vector<Int>& X, const std::vector<Int>& Y, const Int& x);

// ---- least divisors -------------------------------------------------------

enum class DivisorSide {
  Minus,  // divisors of c - 1 against rad(c)
  Plus,   // divisors of c against rad(c - 1)
};

// Smallest divisor m of the side's number with cosocle(m) exceeding the
// side's radical. Throws NotAbc when none exists.
Int least_divisor_search(const Int& c, DivisorSide side, const FactorBudget& budget = FactorBudget{});

struct LeastDivisorRow {
  Int a, b, c, n;
  unsigned l = 0;
  Int m;
  double quality = 0;

  friend bool operator==(const LeastDivisorRow&, const LeastDivisorRow&) = default;
};

// Rows for records of the form (1, n^l - 1, n^l) (Minus) or (1, n^l, n^l + 1)
// with l odd (Plus). Forms use the minimal base, so 2^10 + 1 = 4^5 + 1 is
// not a Plus row.
std::vector<LeastDivisorRow> least_divisor_table(const std::vector<TripleRecord>& records, DivisorSide side,
                                                 const FactorBudget& budget = FactorBudget{});

void write_least_divisor_csv(std::ostream& os, const std::vector<LeastDivisorRow>& rows);
std::vector<LeastDivisorRow> read_least_divisor_csv(std::istream& is);

// ---- histogram ------------------------------------------------------------

struct Histogram {
  double bin_width = 0;       // 0 in equal-count mode
  std::vector<double> edges;  // bins are [edges[i], edges[i + 1])
  std::vector<std::size_t> counts;

  std::size_t total() const;
};

inline constexpr double kDefaultBinWidth = 0.005;

// Fixed-width bins starting at 1.0. Throws std::invalid_argument on empty
// input, non-positive width or a quality below 1.
Histogram quality_histogram(const std::vector<double>& qualities, double bin_width = kDefaultBinWidth);
Histogram quality_histogram(const std::vector<TripleRecord>& records, double bin_width = kDefaultBinWidth);
// Bins holding per_bin values each (the last may hold fewer).
Histogram equal_count_histogram(std::vector<double> qualities, std::size_t per_bin);

// ---- ingestion and reports -------------------------------------------------

struct LoadOptions {
  bool trust = false;  // skip the abc re-verification
  FactorBudget budget;
};

// Lines "a,b,c" in decimal. Throws ParseError, VerificationFailed.
std::vector<TripleRecord> load_triples(std::istream& is, const LoadOptions& options = {});
std::vector<TripleRecord> load_triples(const std::string& path, const LoadOptions& options = {});
void save_triples(std::ostream& os, const std::vector<TripleRecord>& records);
void save_triples(const std::string& path, const std::vector<TripleRecord>& records);

struct DeltaRow {
  Int x;
  std::optional<double> t_s, d_s, d_t;  // empty when the denominator is 0
};

struct SurveyReport {
  static constexpr int kSchemaVersion = 1;
  Int c_limit;
  std::map<std::string, std::uint64_t> counts;  // S, T, T_minus, T_plus, T_both, C, D
  std::vector<std::pair<std::string, std::uint64_t>> c_i;
  std::vector<DeltaRow> delta_rows;
  Histogram histogram;
};

struct AnalyzeOptions {
  std::vector<Int> delta_points;  // defaults to powers of 10 up to the limit
  double bin_width = kDefaultBinWidth;
  std::size_t equal_count = 0;  // > 0 switches the histogram to equal-count bins
  FactorBudget budget;
};

// S is every unit record in `records` below c_limit.
SurveyReport analyze(const std::vector<TripleRecord>& records, const Int& c_limit, const AnalyzeOptions& options = {});

std::string report_to_json(const SurveyReport& report);
SurveyReport report_from_json(const std::string& text);
void save_report(const SurveyReport& report, const std::string& path);

// ---- full power-form survey ------------------------------------------------

struct PowerFormCounts {
  std::vector<Int> minus;  // c = n^l, l >= 2, abc
  std::vector<Int> plus;   // c = n^l + 1, l >= 2, abc
  std::vector<Int> both;
  std::vector<Int> all;  // union, sorted
  std::uint64_t plus_odd = 0;  // plus-form whose maximal exponent is odd
};

// All abc triples (1, c - 1, c) of power form with c < c_limit, without a
// dataset: l = 2 through radical and square-part sieves, l >= 3 by factoring.
// About a minute and a half on one core at c_limit = 10^18.
PowerFormCounts power_form_survey(const Int& c_limit, unsigned threads = 1, std::ostream* progress = nullptr);

}  // namespace abc
