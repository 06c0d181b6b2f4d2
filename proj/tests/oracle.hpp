#pragma once

// Slow, obviously-correct reference implementations. Nothing here calls into
// abc_core, so agreement with the library is evidence rather than tautology.

#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Int = mpz_class;

// Trial division by every d >= 2; fine up to about 10^12.
inline std::map<Int, unsigned> factor(Int n) {
  std::map<Int, unsigned> f;
  for (Int d = 2; d * d <= n; ++d) {
    while (n % d == 0) {
      ++f[d];
      n /= d;
    }
  }
  if (n > 1) ++f[n];
  return f;
}

inline Int rad(const Int& n) {
  Int r = 1;
  for (const auto& [p, e] : factor(n)) r *= p;
  return r;
}

inline Int cosocle(const Int& n) { return n / rad(n); }

inline unsigned valuation(Int n, const Int& p) {
  unsigned v = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

inline Int pow(const Int& b, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Least t >= 1 with n^t = 1 mod m, by stepping through powers.
inline std::uint64_t order(const Int& n, const Int& m) {
  Int x = n % m;
  for (std::uint64_t t = 1;; ++t) {
    if (x == 1 % m) return t;
    x = x * n % m;
  }
}

inline Int phi(const Int& n) {
  Int count = 0;
  for (Int k = 1; k <= n; ++k) {
    if (gcd(k, n) == 1) ++count;
  }
  return count;
}

// Least t with k^t = 1 mod n for every unit k.
inline std::uint64_t lambda(const Int& n) {
  if (n == 1) return 1;
  for (std::uint64_t t = 1;; ++t) {
    bool all = true;
    for (Int k = 1; k < n && all; ++k) {
      if (gcd(k, n) != 1) continue;
      Int r;
      mpz_powm_ui(r.get_mpz_t(), k.get_mpz_t(), t, n.get_mpz_t());
      all = r == 1;
    }
    if (all) return t;
  }
}

inline bool is_abc_unit(const Int& c) { return rad(c) * rad(c - 1) < c; }

// Every divisor of n, by testing each candidate up to sqrt(n).
inline std::vector<Int> divisors(const Int& n) {
  std::vector<Int> small, large;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Smallest divisor m of n with cosocle(m) > bound.
inline Int least_divisor(const Int& n, const Int& bound) {
  for (const Int& d : divisors(n)) {
    if (cosocle(d) > bound) return d;
  }
  return 0;
}

// Smallest-prime-factor table on [0, n).
inline std::vector<std::uint32_t> spf_table(std::uint32_t n) {
  std::vector<std::uint32_t> spf(n, 0);
  for (std::uint32_t i = 2; i < n; ++i) {
    if (spf[i]) continue;
    for (std::uint64_t j = i; j < n; j += i) {
      if (!spf[j]) spf[j] = i;
    }
  }
  return spf;
}

inline std::uint64_t rad_from_spf(const std::vector<std::uint32_t>& spf, std::uint64_t n) {
  std::uint64_t r = 1;
  while (n > 1) {
    const std::uint32_t p = spf[n];
    r *= p;
    while (n % p == 0) n /= p;
  }
  return r;
}

inline double quality(const Int& c, const Int& rad_abc) {
  return std::log(c.get_d()) / std::log(rad_abc.get_d());
}

}  // namespace oracle
