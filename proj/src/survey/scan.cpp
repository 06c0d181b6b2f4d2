#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "abc/survey.hpp"
#include "abc/triple.hpp"

namespace abc {

namespace {

Int from_u64(std::uint64_t x) { return Int(static_cast<unsigned long>(x)); }

std::vector<TripleRecord> scan_range(std::uint64_t first, std::uint64_t last, std::uint64_t max_segment) {
  // c in [first, last); radicals of c - 1 and c from one overlapping sieve.
  std::vector<TripleRecord> out;
  if (first >= last) return out;
  if (last - first > max_segment) {
    throw SegmentTooLarge("scan segment of " + std::to_string(last - first) + " values exceeds the limit of " +
                          std::to_string(max_segment));
  }
  const std::vector<std::uint64_t> r = sieve_radicals(first - 1, last, max_segment + 1);
  for (std::uint64_t c = first; c < last; ++c) {
    const std::size_t i = c - first + 1;
    const unsigned __int128 prod = static_cast<unsigned __int128>(r[i]) * r[i - 1];
    if (prod >= c) continue;
    TripleRecord rec;
    rec.c = from_u64(c);
    rec.b = from_u64(c - 1);
    rec.quality = quality_from_radical(rec.c, from_u64(static_cast<std::uint64_t>(prod)));
    tag_forms(rec);
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace

bool same_content(const TripleRecord& x, const TripleRecord& y) {
  return x.a == y.a && x.b == y.b && x.c == y.c && x.quality == y.quality && x.power_minus == y.power_minus &&
         x.power_plus == y.power_plus;
}

void tag_forms(TripleRecord& r) {
  r.power_minus.reset();
  r.power_plus.reset();
  if (!r.is_unit() || r.c < 4) return;
  if (const PerfectPower pp = perfect_power(r.c); pp.exponent > 1) r.power_minus = PowerForm{pp.base, pp.exponent};
  if (const PerfectPower pp = perfect_power(r.c - 1); pp.exponent > 1) r.power_plus = PowerForm{pp.base, pp.exponent};
}

std::vector<TripleRecord> scan_unit_triples(std::uint64_t c_limit, const ScanOptions& options) {
  if (c_limit < 3) return {};
  const std::uint64_t first = 2;
  const std::uint64_t span = c_limit - first;
  const std::uint64_t parts = std::max<std::uint64_t>(1, std::min(options.segments, span));

  auto at = [&](std::uint64_t t) {
    return first + static_cast<std::uint64_t>(static_cast<unsigned __int128>(span) * t / parts);
  };

  std::vector<std::vector<TripleRecord>> results(parts);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::uint64_t s; (s = next.fetch_add(1)) < parts;) {
      try {
        results[s] = scan_range(at(s), at(s + 1), options.max_segment);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned threads = static_cast<unsigned>(std::clamp<std::uint64_t>(options.threads, 1, parts));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<TripleRecord> out;
  for (auto& part : results) {
    for (auto& rec : part) out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace abc
