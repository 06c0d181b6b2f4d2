#include "abc/survey.hpp"

namespace abc {

std::vector<std::uint64_t> sieve_radicals(std::uint64_t lo, std::uint64_t hi, std::uint64_t max_segment) {
  if (lo < 1 || hi <= lo) throw std::invalid_argument("sieve_radicals: need 1 <= lo < hi");
  if (hi - lo > max_segment) {
    throw SegmentTooLarge("segment of " + std::to_string(hi - lo) + " values exceeds the limit of " +
                          std::to_string(max_segment));
  }
  const std::uint64_t root = iroot_u64(hi - 1, 2);
  if (root > prime_table_limit()) throw std::invalid_argument("sieve_radicals: hi beyond the prime table range");

  const std::size_t len = hi - lo;
  std::vector<std::uint64_t> rad(len, 1);
  // found[i] is the part of lo + i made of primes up to the root.
  std::vector<std::uint64_t> found(len, 1);
  for (std::uint32_t p : prime_table()) {
    if (p > root) break;
    std::uint64_t pk = p;
    for (bool first = true;; first = false) {
      const std::uint64_t start = (lo + pk - 1) / pk * pk;
      for (std::uint64_t m = start; m < hi; m += pk) {
        const std::size_t i = m - lo;
        if (first) rad[i] *= p;
        found[i] *= p;
      }
      if (pk > (hi - 1) / p) break;
      pk *= p;
    }
  }
  // At most one prime above the root remains.
  for (std::size_t i = 0; i < len; ++i) {
    const std::uint64_t n = lo + i;
    if (found[i] != n) rad[i] *= n / found[i];
  }
  return rad;
}

}  // namespace abc
