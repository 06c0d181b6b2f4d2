#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <ostream>
#include <set>
#include <thread>

#include "../arith/montgomery.hpp"
#include "abc/survey.hpp"
#include "abc/triple.hpp"

namespace abc {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kSmallRootPrime = 1u << 16;
constexpr u64 kBlock = 1u << 22;

Int from_u64(u64 x) { return Int(static_cast<unsigned long>(x)); }

// A root r of x^2 = -1 mod p^e; the other root is p^e - r.
struct RootLevel {
  u64 p;
  u64 pe;
  u64 r;
};

// x^2 = -1 mod p for a prime p = 1 mod 4.
u64 sqrt_minus_one(u64 p) {
  const detail::Montgomery64 mg(p);
  const u64 minus_one = mg.to(p - 1);
  u64 a = (p % 8 == 5) ? 2 : 3;
  for (;; ++a) {
    const u64 am = mg.to(a);
    if (mg.pow(am, (p - 1) / 2) == minus_one) return mg.from(mg.pow(am, (p - 1) / 4));
  }
}

// Lift a root mod q = p^e to one mod q * p. Needs q * p < 2^63.
u64 lift_root(u64 r, u64 q, u64 p) {
  const u64 qp = q * p;
  // r' = r - (r^2 + 1) / (2r) mod qp; (r^2 + 1) is divisible by q.
  const u128 rr = static_cast<u128>(r) * r + 1;
  const u64 t = static_cast<u64>((rr / q) % p);
  const u64 inv2r = powmod_u64(2 * r % p, p - 2, p);
  const u64 s = static_cast<u64>(static_cast<u128>(p - t) % p * inv2r % p);
  return static_cast<u64>((static_cast<u128>(r) + static_cast<u128>(s) * q) % qp);
}

// Primes in (lo, hi] by a segmented sieve over the shared table.
template <class F>
void for_primes(u64 lo, u64 hi, F&& f) {
  const u64 root = iroot_u64(hi, 2);
  constexpr u64 seg = 1u << 20;
  std::vector<char> comp(seg);
  for (u64 a = lo + 1; a <= hi; a += seg) {
    const u64 b = std::min(hi + 1, a + seg);
    std::fill(comp.begin(), comp.end(), 0);
    for (std::uint32_t p : prime_table()) {
      if (p > root) break;
      u64 m = std::max<u64>(static_cast<u64>(p) * p, (a + p - 1) / p * p);
      for (; m < b; m += p) comp[m - a] = 1;
    }
    for (u64 n = std::max<u64>(a, 2); n < b; ++n) {
      if (!comp[n - a]) f(n);
    }
  }
}

// cosocle(x) for x = A * Q, with gcd(A, Q) only divisible by primes < 128.
u64 cosocle_of_pieces(u64 A, u64 Q) {
  u64 cos = 1;
  std::vector<std::pair<u64, unsigned>> small;
  auto strip_small = [&](u64& x) {
    for (std::uint32_t p : prime_table()) {
      if (p >= 128) break;
      unsigned e = 0;
      while (x % p == 0) {
        x /= p;
        ++e;
      }
      if (!e) continue;
      auto it = std::find_if(small.begin(), small.end(), [&](const auto& s) { return s.first == p; });
      if (it == small.end()) small.emplace_back(p, e);
      else it->second += e;
    }
  };
  strip_small(A);
  strip_small(Q);
  for (const auto& [p, e] : small) {
    for (unsigned i = 1; i < e; ++i) cos *= p;
  }
  for (u64 x : {A, Q}) {
    for (std::uint32_t p : prime_table()) {
      if (p < 128) continue;
      if (static_cast<u128>(p) * p * p > x) break;
      if (x % p) continue;
      x /= p;
      while (x % p == 0) {
        x /= p;
        cos *= p;
      }
    }
    // x now has at most two prime factors, both above the cube root.
    if (x > 1) {
      const u64 s = iroot_u64(x, 2);
      if (s * s == x) cos *= s;
    }
  }
  return cos;
}

struct Shared {
  u64 n_minus;  // n^2 < L
  u64 n_plus;   // n^2 + 1 < L
  std::vector<RootLevel> small_roots;
  std::vector<std::pair<u64, u64>> hits;  // (n, p^(e-1)) for primes above kSmallRootPrime
};

void scan_squares(const Shared& sh, u64 lo, u64 hi, std::vector<u64>& minus, std::vector<u64>& plus) {
  const std::vector<u64> rad = sieve_radicals(lo - 1, hi + 1, kBlock + 2);
  std::vector<u64> cos(hi - lo, 1);
  for (const auto& [p, pe, r] : sh.small_roots) {
    for (u64 root : {r, pe - r}) {
      u64 n = lo + (root + pe - lo % pe) % pe;
      for (; n < hi; n += pe) cos[n - lo] *= p;
    }
  }
  auto it = std::lower_bound(sh.hits.begin(), sh.hits.end(), std::make_pair(lo, u64{0}));
  for (; it != sh.hits.end() && it->first < hi; ++it) cos[it->first - lo] *= it->second;

  for (u64 n = lo; n < hi; ++n) {
    const std::size_t i = n - lo + 1;
    if (n <= sh.n_minus) {
      const u64 rad_c1 = rad[i - 1] * rad[i + 1] / ((n & 1) ? 2 : 1);
      if (static_cast<u128>(rad[i]) * rad_c1 < static_cast<u128>(n) * n) minus.push_back(n);
    }
    if (n <= sh.n_plus && cos[n - lo] > rad[i]) plus.push_back(n);
  }
}

}  // namespace

PowerFormCounts power_form_survey(const Int& c_limit, unsigned threads, std::ostream* progress) {
  if (c_limit > Int(1) << 62) throw std::invalid_argument("power_form_survey: c_limit above 2^62");
  PowerFormCounts out;
  if (c_limit <= 9) return out;
  const u64 L = to_u64(c_limit);
  std::mutex log_mutex;
  auto log = [&](const std::string& s) {
    if (!progress) return;
    std::lock_guard<std::mutex> lock(log_mutex);
    *progress << s << std::endl;
  };

  Shared sh;
  sh.n_minus = iroot_u64(L - 1, 2);
  sh.n_plus = iroot_u64(L - 2, 2);
  const u64 n_max = sh.n_minus;
  const u64 top = static_cast<u64>(static_cast<u128>(sh.n_plus) * sh.n_plus + 1);

  // Roots of -1 modulo prime powers dividing some n^2 + 1 with n <= n_plus.
  for (std::uint32_t p : prime_table()) {
    if (p > kSmallRootPrime) break;
    if (p % 4 != 1 || static_cast<u64>(p) * p > top) continue;
    u64 r = sqrt_minus_one(p);
    for (u64 q = p; static_cast<u128>(q) * p <= top; q *= p) {
      r = lift_root(r, q, p);
      sh.small_roots.push_back({p, q * p, r});
    }
  }
  log("power-form survey: " + std::to_string(sh.small_roots.size()) + " small root levels");
  const u64 p_max = iroot_u64(top, 2);
  for_primes(kSmallRootPrime, p_max, [&](u64 p) {
    if (p % 4 != 1) return;
    const u64 r = lift_root(sqrt_minus_one(p), p, p);
    const u64 p2 = p * p;
    for (u64 n : {r, p2 - r}) {
      if (n > sh.n_plus) continue;
      u64 f = p;
      u128 v = static_cast<u128>(n) * n + 1;
      v /= p2;
      while (v % p == 0) {
        v /= p;
        f *= p;
      }
      sh.hits.emplace_back(n, f);
    }
  });
  std::sort(sh.hits.begin(), sh.hits.end());
  log("power-form survey: " + std::to_string(sh.hits.size()) + " large-prime square hits");

  // l = 2 over blocks of n.
  const u64 first = 2;
  const u64 blocks = n_max >= first ? (n_max - first) / kBlock + 1 : 0;
  std::vector<std::vector<u64>> minus_parts(blocks), plus_parts(blocks);
  std::atomic<u64> next{0};
  std::atomic<u64> done{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (u64 b; (b = next.fetch_add(1)) < blocks;) {
      try {
        const u64 lo = first + b * kBlock;
        const u64 hi = std::min(n_max + 1, lo + kBlock);
        scan_squares(sh, lo, hi, minus_parts[b], plus_parts[b]);
        const u64 d = ++done;
        if (d % 16 == 0 || d == blocks) log("power-form survey: l = 2 block " + std::to_string(d) + "/" + std::to_string(blocks));
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  threads = std::max(1u, threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  std::set<Int> minus, plus;
  for (const auto& part : minus_parts) {
    for (u64 n : part) minus.insert(from_u64(n * n));
  }
  for (const auto& part : plus_parts) {
    for (u64 n : part) plus.insert(from_u64(n * n + 1));
  }

  // Odd prime exponents l >= 3: c = n^l and c = n^l + 1 from the two
  // cyclotomic pieces of n^l -+ 1.
  const u64 cube_max = iroot_u64(L - 1, 3);
  const std::vector<u64> rad_small = sieve_radicals(1, cube_max + 2, cube_max + 2);
  for (unsigned l = 3; (u64{1} << l) < L; l += 2) {
    if (!is_prime(static_cast<u64>(l))) continue;
    const u64 nmax = iroot_u64(L - 1, l);
    for (u64 n = 2; n <= nmax; ++n) {
      u64 x = 1;
      for (unsigned i = 0; i < l; ++i) x *= n;
      const u64 radn = rad_small[n - 1];
      if (cosocle_of_pieces(n - 1, (x - 1) / (n - 1)) > radn) minus.insert(from_u64(x));
      if (x + 1 < L && cosocle_of_pieces(n + 1, (x + 1) / (n + 1)) > radn) plus.insert(from_u64(x + 1));
    }
    log("power-form survey: l = " + std::to_string(l) + " done");
  }

  // Every hit is re-verified from full factorizations of c and c - 1.
  const FactorBudget budget;
  for (const auto* s : {&minus, &plus}) {
    for (const Int& c : *s) {
      if (!verify_unit(c, budget).is_abc) {
        throw std::logic_error("power-form survey: " + c.get_str() + " failed re-verification");
      }
    }
  }
  log("power-form survey: re-verified " + std::to_string(minus.size() + plus.size()) + " hits");

  out.minus.assign(minus.begin(), minus.end());
  out.plus.assign(plus.begin(), plus.end());
  std::set_intersection(minus.begin(), minus.end(), plus.begin(), plus.end(), std::back_inserter(out.both));
  std::set_union(minus.begin(), minus.end(), plus.begin(), plus.end(), std::back_inserter(out.all));
  for (const Int& c : out.plus) {
    if (perfect_power(c - 1).exponent % 2 == 1) ++out.plus_odd;
  }
  return out;
}

}  // namespace abc
