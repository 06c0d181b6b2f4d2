#include <algorithm>
#include <set>
#include <vector>

#include "abc/power.hpp"

namespace abc {

namespace {

void require_prime(const Int& p, const char* who) {
  if (!is_prime(p)) throw NotPrime(std::string(who) + ": " + p.get_str() + " is not prime");
}

void require_coprime(const Int& c, const Int& p, const char* who) {
  if (c % p == 0) throw NotCoprime(std::string(who) + ": " + p.get_str() + " divides " + c.get_str());
}

unsigned v_u64(std::uint64_t k, const Int& p) {
  if (!fits_u64(p)) return 0;
  const std::uint64_t q = p.get_ui();
  unsigned v = 0;
  while (k % q == 0) {
    k /= q;
    ++v;
  }
  return v;
}

// v_p(c^t - 1) for c^t = 1 (mod p), by doubling the working precision
// until c^t - 1 is nonzero mod p^J.
unsigned lift_valuation(const Int& c, std::uint64_t t, const Int& p) {
  const Int e(static_cast<unsigned long>(t));
  for (unsigned J = 4;; J *= 2) {
    const Int mod = ipow(p, J);
    Int x;
    mpz_powm(x.get_mpz_t(), c.get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());
    x -= 1;
    if (x < 0) x += mod;
    if (x != 0) {
      Int rest;
      return static_cast<unsigned>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()));
    }
  }
}

std::vector<std::uint64_t> divisors_u64(std::uint64_t k) {
  std::vector<std::uint64_t> out;
  for (const Int& d : divisors(factorize(Int(static_cast<unsigned long>(k))))) out.push_back(d.get_ui());
  return out;
}

}  // namespace

PowerProfile::PowerProfile(Int c, std::uint64_t k, std::map<Int, PowerEntry> entries)
    : c_(std::move(c)), k_(k), entries_(std::move(entries)) {
  if (c_ < 2) throw std::invalid_argument("PowerProfile needs c >= 2");
  if (k_ < 1) throw std::invalid_argument("PowerProfile needs k >= 1");
}

Int PowerProfile::reconstruct() const {
  Int v(1);
  for (const auto& [p, e] : entries_) v *= ipow(p, e.valuation());
  return v;
}

Int PowerProfile::cosocle() const {
  Int v(1);
  for (const auto& [p, e] : entries_) v *= ipow(p, e.valuation() - 1);
  return v;
}

Factorization PowerProfile::factorization() const {
  std::vector<PrimePower> pp;
  pp.reserve(entries_.size());
  for (const auto& [p, e] : entries_) pp.push_back({p, e.valuation()});
  return Factorization(std::move(pp));
}

unsigned f_p(const Int& c, std::uint64_t k, const Int& p) {
  if (k < 1) throw std::invalid_argument("f_p: k must be positive");
  require_prime(p, "f_p");
  require_coprime(c, p, "f_p");
  if (p == 2) {
    if (c % 4 == 3 && k % 2 == 0) return p_adic_valuation(c * c - 1, p) - 1;
    return p_adic_valuation(c - 1, p);
  }
  const std::uint64_t ord = order_dividing(c, p, k);
  return lift_valuation(c, ord, p);
}

unsigned power_valuation(const Int& c, std::uint64_t k, const Int& p) {
  if (k < 1) throw std::invalid_argument("power_valuation: k must be positive");
  require_prime(p, "power_valuation");
  require_coprime(c, p, "power_valuation");
  Int x;
  const Int e(static_cast<unsigned long>(k));
  mpz_powm(x.get_mpz_t(), c.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  if (x != 1) return 0;
  return f_p(c, k, p) + v_u64(k, p);
}

PowerProfile power_factorization(const Int& c, std::uint64_t k, const FactorBudget& budget) {
  if (c < 2) throw std::invalid_argument("power_factorization: c must be >= 2");
  if (k < 1) throw std::invalid_argument("power_factorization: k must be positive");

  // Phi_d(c) = (c^d - 1) / prod_{e | d, e < d} Phi_e(c); the pieces for d | k
  // multiply to c^k - 1 and are mostly much smaller than it.
  const std::vector<std::uint64_t> ds = divisors_u64(k);
  std::map<std::uint64_t, Int> phi;
  std::set<Int> known;
  std::map<Int, unsigned> exponents;

  for (std::uint64_t d : ds) {
    Int piece = ipow(c, d) - 1;
    for (const auto& [e, val] : phi) {
      if (d % e == 0) mpz_divexact(piece.get_mpz_t(), piece.get_mpz_t(), val.get_mpz_t());
    }
    phi.emplace(d, piece);

    Int rest = piece;
    for (const Int& p : known) {
      if (rest == 1) break;
      Int q;
      const auto v = static_cast<unsigned>(mpz_remove(q.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t()));
      if (v) {
        exponents[p] += v;
        rest = q;
      }
    }
    if (rest == 1) continue;
    const Factorization fr = factorize(rest, budget);
    for (const auto& [p, e] : fr.entries()) {
      exponents[p] += e;
      known.insert(p);
    }
  }

  std::map<Int, PowerEntry> entries;
  for (const auto& [p, v] : exponents) {
    PowerEntry pe;
    pe.order = p == 2 ? 1 : order_dividing(c, p, k);
    pe.f = f_p(c, k, p);
    pe.w = v_u64(k, p);
    if (pe.valuation() != v) {
      throw std::logic_error("valuation mismatch at p = " + p.get_str() + " for " + c.get_str() + "^" +
                             std::to_string(k) + " - 1");
    }
    entries.emplace(p, pe);
  }
  PowerProfile profile(c, k, std::move(entries));
  if (profile.reconstruct() != ipow(c, k) - 1) throw std::logic_error("power profile does not reconstruct c^k - 1");
  return profile;
}

namespace {

Factorization scaled(const Factorization& f, unsigned l) {
  std::vector<PrimePower> pp = f.entries();
  for (auto& e : pp) e.exponent *= l;
  return Factorization(std::move(pp));
}

Factorization quotient(const Factorization& num, const Factorization& den) {
  std::vector<PrimePower> pp;
  for (const auto& [p, e] : num.entries()) {
    const unsigned d = den.exponent_of(p);
    if (d > e) throw std::logic_error("quotient is not integral");
    if (e > d) pp.push_back({p, e - d});
  }
  return Factorization(std::move(pp));
}

}  // namespace

Factorization factorize_structured(const Int& x, const FactorBudget& budget) {
  if (x < 1) throw std::invalid_argument("factorize_structured: x must be positive");
  if (x < 4) return factorize(x, budget);
  if (const PerfectPower pp = perfect_power(x); pp.exponent > 1) return scaled(factorize(pp.base, budget), pp.exponent);
  if (const PerfectPower pp = perfect_power(x + 1); pp.exponent > 1) {
    return power_factorization(pp.base, pp.exponent, budget).factorization();
  }
  if (const PerfectPower pp = perfect_power(x - 1); pp.exponent > 1) {
    return quotient(power_factorization(pp.base, 2 * pp.exponent, budget).factorization(),
                    power_factorization(pp.base, pp.exponent, budget).factorization());
  }
  return factorize(x, budget);
}

unsigned least_mp(const Int& p, const Int& r) {
  if (p < 2) throw std::invalid_argument("least_mp: p must be >= 2");
  if (r < 1) throw std::invalid_argument("least_mp: r must be >= 1");
  unsigned m = 1;
  Int pm = p;
  while (pm <= r) {
    pm *= p;
    ++m;
  }
  return m;
}

}  // namespace abc
