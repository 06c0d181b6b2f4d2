#include <algorithm>
#include <cstdlib>
#include <map>
#include <utility>

#include "abc/arith.hpp"
#include "montgomery.hpp"

namespace abc {

namespace {

using detail::Montgomery64;
using detail::u64;

constexpr u64 kBatch = 128;

// Brent's variant of Pollard rho on an odd composite. Returns a proper
// factor, or 0 once `budget` iterations are spent.
u64 rho_u64(u64 n, u64& budget) {
  const Montgomery64 mont(n);
  for (u64 seed = 1; budget > 0; ++seed) {
    const u64 c = mont.to(seed);
    auto f = [&](u64 v) { return mont.add(mont.mul(v, v), c); };
    u64 y = mont.to(seed + 1);
    u64 x = y;
    u64 ys = y;
    u64 q = mont.one();
    u64 g = 1;
    for (u64 r = 1; g == 1; r <<= 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      for (u64 k = 0; k < r && g == 1; k += kBatch) {
        ys = y;
        const u64 lim = std::min(kBatch, r - k);
        for (u64 i = 0; i < lim; ++i) {
          y = f(y);
          q = mont.mul(q, x > y ? x - y : y - x);
        }
        g = gcd_u64(q, n);
        const u64 spent = lim + (k == 0 ? r : 0);
        if (spent >= budget) {
          budget = 0;
          break;
        }
        budget -= spent;
      }
      if (budget == 0 && g == 1) return 0;
    }
    if (g == n) {
      // The batch overshot; replay it one step at a time.
      do {
        ys = f(ys);
        g = gcd_u64(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
  return 0;
}

Int rho_mpz(const Int& n, u64& budget) {
  for (unsigned long seed = 1; budget > 0; ++seed) {
    const Int c(seed);
    Int y(seed + 1);
    Int x = y;
    Int ys = y;
    Int q(1);
    Int g(1);
    Int diff;
    auto step = [&](Int& v) {
      mpz_mul(v.get_mpz_t(), v.get_mpz_t(), v.get_mpz_t());
      v += c;
      mpz_tdiv_r(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    for (u64 r = 1; g == 1; r <<= 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) step(y);
      for (u64 k = 0; k < r && g == 1; k += kBatch) {
        ys = y;
        const u64 lim = std::min(kBatch, r - k);
        for (u64 i = 0; i < lim; ++i) {
          step(y);
          diff = x - y;
          mpz_mul(q.get_mpz_t(), q.get_mpz_t(), diff.get_mpz_t());
          mpz_tdiv_r(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        const u64 spent = lim + (k == 0 ? r : 0);
        if (spent >= budget) {
          budget = 0;
          break;
        }
        budget -= spent;
      }
      if (budget == 0 && g == 1) return Int(0);
    }
    if (g == n) {
      do {
        step(ys);
        diff = x - ys;
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
  return Int(0);
}

struct Pending {
  Int value;
  unsigned multiplicity;
};

}  // namespace

FactorBudget FactorBudget::from_env() {
  FactorBudget b;
  if (const char* s = std::getenv("ABC_TRIAL_BOUND")) b.max_trial_prime = std::strtoull(s, nullptr, 10);
  if (const char* s = std::getenv("ABC_RHO_CAP")) b.rho_iteration_cap = std::strtoull(s, nullptr, 10);
  b.validate();
  return b;
}

void FactorBudget::validate() const {
  if (max_trial_prime == 0 || rho_iteration_cap == 0) {
    throw std::invalid_argument("factor budget caps must be positive");
  }
}

Factorization factorize(const Int& n, const FactorBudget& budget) {
  budget.validate();
  if (n < 1) throw std::invalid_argument("factorize: n must be positive, got " + n.get_str());

  std::map<Int, unsigned> found;
  Int rest = n;

  const unsigned long twos = mpz_scan1(rest.get_mpz_t(), 0);
  if (twos > 0) {
    found[Int(2)] = static_cast<unsigned>(twos);
    mpz_tdiv_q_2exp(rest.get_mpz_t(), rest.get_mpz_t(), twos);
  }

  const u64 trial_bound = std::min<u64>(budget.max_trial_prime, prime_table_limit());
  bool rest_is_prime = false;
  for (std::uint32_t p : prime_table()) {
    if (p == 2) continue;
    if (p > trial_bound || rest == 1) break;
    if (Int(static_cast<unsigned long>(p) * p) > rest) {
      rest_is_prime = true;
      break;
    }
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      unsigned e = 0;
      do {
        mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
        ++e;
      } while (mpz_divisible_ui_p(rest.get_mpz_t(), p));
      found[Int(p)] = e;
    }
  }

  std::vector<Pending> work;
  if (rest > 1) {
    if (rest_is_prime) {
      found[rest] += 1;
    } else {
      work.push_back({rest, 1});
    }
  }

  while (!work.empty()) {
    Pending item = std::move(work.back());
    work.pop_back();
    const Int& x = item.value;
    if (x == 1) continue;

    if (is_prime(x)) {
      if (!budget.allow_probable_prime && !fits_u64(x)) {
        throw BudgetExceeded(x.get_str(), "probable prime above 2^64 not allowed by budget");
      }
      found[x] += item.multiplicity;
      continue;
    }
    const PerfectPower pp = perfect_power(x);
    if (pp.exponent > 1) {
      work.push_back({pp.base, item.multiplicity * pp.exponent});
      continue;
    }

    u64 iterations = budget.rho_iteration_cap;
    Int d;
    if (fits_u64(x)) {
      d = Int(static_cast<unsigned long>(rho_u64(x.get_ui(), iterations)));
    } else {
      d = rho_mpz(x, iterations);
    }
    if (d == 0) throw BudgetExceeded(x.get_str(), "rho iteration cap reached");
    work.push_back({x / d, item.multiplicity});
    work.push_back({std::move(d), item.multiplicity});
  }

  std::vector<PrimePower> entries;
  entries.reserve(found.size());
  for (auto& [p, e] : found) entries.push_back({p, e});
  return Factorization(std::move(entries), Factorization::Unchecked{});
}

Factorization merge_factorizations(std::span<const Factorization> parts) {
  std::map<Int, unsigned> acc;
  for (const auto& f : parts) {
    for (const auto& pe : f.entries()) acc[pe.prime] += pe.exponent;
  }
  std::vector<PrimePower> entries;
  entries.reserve(acc.size());
  for (auto& [p, e] : acc) entries.push_back({p, e});
  return Factorization(std::move(entries), Factorization::Unchecked{});
}

}  // namespace abc
