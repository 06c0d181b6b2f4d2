#pragma once

// Integer primitives: primality, factorization, radical, cosocle, p-adic
// valuation, multiplicative order, Euler phi and Carmichael lambda.
//
// All values are arbitrary precision (GMP). Fast paths for 64-bit inputs
// are internal.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "abc/error.hpp"

namespace abc {

using Int = mpz_class;

struct PrimePower {
  Int prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Limits on the work spent splitting composites.
//
// Trial division runs over primes up to max_trial_prime; whatever survives is
// split with Brent's rho, at most rho_iteration_cap iterations per split.
// Above 2^64 primality is probabilistic (strong base-2 test plus 63 further
// Miller-Rabin rounds, error below 2^-128); allow_probable_prime = false turns
// such factors into BudgetExceeded.
struct FactorBudget {
  std::uint64_t max_trial_prime = 1u << 16;
  std::uint64_t rho_iteration_cap = 1ull << 28;
  bool allow_probable_prime = true;

  // Defaults overridden by ABC_TRIAL_BOUND / ABC_RHO_CAP when set.
  static FactorBudget from_env();
  void validate() const;
};

class Factorization {
 public:
  Factorization() = default;
  // Validates the invariants: primes strictly increasing and prime,
  // exponents positive.
  explicit Factorization(std::vector<PrimePower> entries);

  const std::vector<PrimePower>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  std::size_t size() const noexcept { return entries_.size(); }

  Int value() const;
  Int radical() const;
  Int cosocle() const;
  // 0 when p does not occur.
  unsigned exponent_of(const Int& p) const;

  // "2^4 * 5 * 11"; "1" for the empty product.
  std::string to_string() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  struct Unchecked {};
  Factorization(std::vector<PrimePower> entries, Unchecked) : entries_(std::move(entries)) {}
  friend Factorization factorize(const Int&, const FactorBudget&);
  friend Factorization merge_factorizations(std::span<const Factorization>);

  std::vector<PrimePower> entries_;
};

// Primes below the fixed table limit; built once on first use.
const std::vector<std::uint32_t>& prime_table();
std::uint64_t prime_table_limit();

bool is_prime(std::uint64_t n);
bool is_prime(const Int& n);
// True when n is prime and the answer is deterministic (n < 2^64).
bool is_certified_prime(const Int& n);

Factorization factorize(const Int& n, const FactorBudget& budget = FactorBudget{});
// Product of the given factorizations.
Factorization merge_factorizations(std::span<const Factorization> parts);

Int radical(const Int& n, const FactorBudget& budget = FactorBudget{});
Int cosocle(const Int& n, const FactorBudget& budget = FactorBudget{});

// Largest e with p^e | n. Throws NotPrime when p is not prime.
unsigned p_adic_valuation(const Int& n, const Int& p);

// Least t >= 1 with n^t = 1 (mod p), found by factoring p - 1 and walking
// down its divisor lattice.
Int multiplicative_order(const Int& n, const Int& p);
// Same, when a multiple of the order is already known (n^multiple = 1 mod p).
std::uint64_t order_dividing(const Int& n, const Int& p, std::uint64_t multiple);

Int euler_phi(const Int& n, const FactorBudget& budget = FactorBudget{});
Int euler_phi(const Factorization& f);
Int carmichael_lambda(const Int& n, const FactorBudget& budget = FactorBudget{});
Int carmichael_lambda(const Factorization& f);

// ---- small helpers shared across modules ---------------------------------

Int ipow(const Int& base, std::uint64_t e);
std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t e, std::uint64_t mod);
std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

// Floor of the l-th root.
std::uint64_t iroot_u64(std::uint64_t x, unsigned l);

struct PerfectPower {
  Int base;
  unsigned exponent = 1;  // 1 when x is not a perfect power
};
// Minimal base: x = base^exponent with exponent maximal. x >= 1.
PerfectPower perfect_power(const Int& x);

// Sorted positive divisors. Exponential in the number of prime factors.
std::vector<Int> divisors(const Factorization& f);

std::uint64_t to_u64(const Int& x);  // throws std::overflow_error
bool fits_u64(const Int& x);

}  // namespace abc
