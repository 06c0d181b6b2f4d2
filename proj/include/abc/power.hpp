#pragma once

// Valuations of c^k - 1 and the exact criterion for (1, c^k - 1, c^k).
//
// For a prime p with ord_p(c) | k,
//     v_p(c^k - 1) = f_p + w_p,   w_p = v_p(k),
// where f_p = v_2(c^2 - 1) - 1 if p = 2, c = 3 (mod 4) and k is even, and
// f_p = v_p(c^ord_p(c) - 1) otherwise. Primes with ord_p(c) not dividing k
// do not divide c^k - 1 at all.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "abc/arith.hpp"

namespace abc {

struct PowerEntry {
  std::uint64_t order = 0;  // ord_p(c)
  unsigned f = 0;
  unsigned w = 0;
  unsigned valuation() const { return f + w; }

  friend bool operator==(const PowerEntry&, const PowerEntry&) = default;
};

class PowerProfile {
 public:
  PowerProfile(Int c, std::uint64_t k, std::map<Int, PowerEntry> entries);

  const Int& c() const noexcept { return c_; }
  std::uint64_t k() const noexcept { return k_; }
  const std::map<Int, PowerEntry>& entries() const noexcept { return entries_; }

  // prod p^(f_p + w_p); equals c^k - 1 for a complete profile.
  Int reconstruct() const;
  // prod p^(f_p + w_p - 1) = cosocle(c^k - 1).
  Int cosocle() const;
  Factorization factorization() const;

 private:
  Int c_;
  std::uint64_t k_;
  std::map<Int, PowerEntry> entries_;
};

// Throws NotCoprime when p | c, OrderDoesNotDivide when ord_p(c) does not
// divide k, NotPrime when p is not prime.
unsigned f_p(const Int& c, std::uint64_t k, const Int& p);

// v_p(c^k - 1) without forming c^k - 1; 0 when ord_p(c) does not divide k.
unsigned power_valuation(const Int& c, std::uint64_t k, const Int& p);

// Complete factorization of c^k - 1 with per-prime (ord, f, w), built by
// factoring the cyclotomic pieces Phi_d(c), d | k, in increasing d.
// Each f/w pair is recomputed from the valuation formulas and must match the
// exponent the factorization found. Throws BudgetExceeded.
PowerProfile power_factorization(const Int& c, std::uint64_t k, const FactorBudget& budget = FactorBudget{});

// Factorization of x that recognizes x = n^l, x = n^l - 1 and x = b^l + 1
// (l >= 2) and routes them through the cyclotomic split; anything else goes
// to factorize. b^l + 1 is handled as (b^(2l) - 1) / (b^l - 1).
Factorization factorize_structured(const Int& x, const FactorBudget& budget = FactorBudget{});

// Least m >= 1 with p^m > r.
unsigned least_mp(const Int& p, const Int& r);

enum class Verdict { Abc, NotAbc, Inconclusive };

enum class Condition {
  None,
  LargePrime,      // p > rad(c), ord_p(c) | k, f_p >= 2 or w_p >= 1
  SmallPrime,      // p < rad(c), ord_p(c) | k, f_p + w_p - 1 >= m_p
  ExponentVector,  // prod p^(f_p + w_p - 1) > rad(c)
};

struct ExponentTerm {
  Int prime;
  unsigned exponent = 0;  // a_p = f_p + w_p - 1
};

struct Classification {
  Verdict verdict = Verdict::Inconclusive;
  Condition condition = Condition::None;
  Int c;
  std::uint64_t k = 0;
  Int radical_c;
  // LargePrime / SmallPrime: the prime used, its f_p, w_p and (SmallPrime) m_p.
  Int prime;
  unsigned f = 0;
  unsigned w = 0;
  unsigned m_p = 0;
  // ExponentVector and NotAbc: the nonzero a_p and their product.
  std::vector<ExponentTerm> exponents;
  Int product;
  bool used_full_profile = false;
  std::string reason;  // why the verdict is Inconclusive

  std::string describe() const;
};

struct ClassifyOptions {
  // Primes up to this bound (and the primes dividing k) are screened for
  // conditions (i) and (ii) before anything is factored.
  std::uint64_t prime_pool_limit = 1000000;
  FactorBudget budget;
};

Classification classify_power(const Int& c, std::uint64_t k, const ClassifyOptions& options);
inline Classification classify_power(const Int& c, std::uint64_t k, const FactorBudget& budget = FactorBudget{}) {
  return classify_power(c, k, ClassifyOptions{1000000, budget});
}

const char* to_string(Verdict v);
const char* to_string(Condition c);

}  // namespace abc
