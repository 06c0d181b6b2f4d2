#include <array>
#include <random>

#include "abc/arith.hpp"
#include "montgomery.hpp"

namespace abc {

namespace {

constexpr std::uint64_t kTableLimit = 1u << 22;

std::vector<std::uint32_t> build_table() {
  std::vector<bool> composite(kTableLimit, false);
  std::vector<std::uint32_t> primes;
  primes.reserve(300000);
  for (std::uint64_t i = 2; i < kTableLimit; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j < kTableLimit; j += i) composite[j] = true;
  }
  return primes;
}

bool strong_probable_prime(const detail::Montgomery64& mont, std::uint64_t n, std::uint64_t a) {
  a %= n;
  if (a == 0) return true;
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  const std::uint64_t one = mont.one();
  const std::uint64_t minus_one = mont.sub(0, one);
  std::uint64_t x = mont.pow(mont.to(a), d);
  if (x == one || x == minus_one) return true;
  for (int r = 1; r < s; ++r) {
    x = mont.mul(x, x);
    if (x == minus_one) return true;
    if (x == one) return false;
  }
  return false;
}

bool strong_probable_prime(const Int& n, const Int& a) {
  Int d = n - 1;
  const unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  Int x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  const Int minus_one = n - 1;
  if (x == 1 || x == minus_one) return true;
  for (unsigned long r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == minus_one) return true;
    if (x == 1) return false;
  }
  return false;
}

}  // namespace

const std::vector<std::uint32_t>& prime_table() {
  static const std::vector<std::uint32_t> table = build_table();
  return table;
}

std::uint64_t prime_table_limit() { return kTableLimit; }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::array<std::uint32_t, 12> small = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint32_t p : small) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  if (n < 41 * 41) return true;
  // Deterministic for every n < 2^64.
  static constexpr std::array<std::uint64_t, 7> bases = {2, 325, 9375, 28178, 450775, 9780504, 1795265022};
  const detail::Montgomery64 mont(n);
  for (std::uint64_t a : bases) {
    if (!strong_probable_prime(mont, n, a)) return false;
  }
  return true;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (fits_u64(n)) return is_prime(n.get_ui());
  for (std::uint32_t p : prime_table()) {
    if (p > 1000) break;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  if (!strong_probable_prime(n, Int(2))) return false;
  // Bases are pseudo-random but seeded from n so results are reproducible.
  std::mt19937_64 rng(mpz_get_ui(n.get_mpz_t()) ^ 0x9e3779b97f4a7c15ull);
  const Int span = n - 3;
  for (int round = 0; round < 63; ++round) {
    Int a = Int(static_cast<unsigned long>(rng()));
    a += Int(static_cast<unsigned long>(rng())) << 64;
    a = a % span + 2;
    if (!strong_probable_prime(n, a)) return false;
  }
  return true;
}

bool is_certified_prime(const Int& n) { return fits_u64(n) && is_prime(n.get_ui()); }

}  // namespace abc
