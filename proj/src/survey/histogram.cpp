#include <algorithm>
#include <cmath>
#include <numeric>

#include "abc/survey.hpp"

namespace abc {

std::size_t Histogram::total() const { return std::accumulate(counts.begin(), counts.end(), std::size_t{0}); }

Histogram quality_histogram(const std::vector<double>& qualities, double bin_width) {
  if (qualities.empty()) throw std::invalid_argument("quality_histogram: no values");
  if (!(bin_width > 0)) throw std::invalid_argument("quality_histogram: bin width must be positive");
  const double qmax = *std::max_element(qualities.begin(), qualities.end());
  if (*std::min_element(qualities.begin(), qualities.end()) < 1.0) {
    throw std::invalid_argument("quality_histogram: quality below 1");
  }
  const auto bins = static_cast<std::size_t>(std::floor((qmax - 1.0) / bin_width)) + 1;
  Histogram h;
  h.bin_width = bin_width;
  h.counts.assign(bins, 0);
  for (std::size_t i = 0; i <= bins; ++i) h.edges.push_back(1.0 + static_cast<double>(i) * bin_width);
  for (double q : qualities) {
    const auto i = std::min(bins - 1, static_cast<std::size_t>(std::floor((q - 1.0) / bin_width)));
    ++h.counts[i];
  }
  return h;
}

Histogram quality_histogram(const std::vector<TripleRecord>& records, double bin_width) {
  std::vector<double> q;
  q.reserve(records.size());
  for (const auto& r : records) q.push_back(r.quality);
  return quality_histogram(q, bin_width);
}

Histogram equal_count_histogram(std::vector<double> qualities, std::size_t per_bin) {
  if (qualities.empty()) throw std::invalid_argument("equal_count_histogram: no values");
  if (per_bin == 0) throw std::invalid_argument("equal_count_histogram: per_bin must be positive");
  std::sort(qualities.begin(), qualities.end());
  Histogram h;
  for (std::size_t i = 0; i < qualities.size(); i += per_bin) {
    h.edges.push_back(qualities[i]);
    h.counts.push_back(std::min(per_bin, qualities.size() - i));
  }
  h.edges.push_back(std::nextafter(qualities.back(), HUGE_VAL));
  return h;
}

}  // namespace abc
