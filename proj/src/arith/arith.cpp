#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "abc/arith.hpp"

namespace abc {

namespace {

void require_prime(const Int& p, const char* who) {
  if (!is_prime(p)) throw NotPrime(std::string(who) + ": " + p.get_str() + " is not prime");
}

bool overflows_pow(std::uint64_t r, unsigned l, std::uint64_t limit) {
  // true when r^l > limit
  unsigned __int128 acc = 1;
  for (unsigned i = 0; i < l; ++i) {
    acc *= r;
    if (acc > limit) return true;
  }
  return false;
}

// Least t | multiple with n^t = 1 (mod p), given the factorization of multiple.
Int order_from_multiple(const Int& n, const Int& p, const Int& multiple, const Factorization& f) {
  Int t = multiple;
  Int x;
  for (const auto& [q, e] : f.entries()) {
    for (unsigned i = 0; i < e; ++i) {
      const Int candidate = t / q;
      mpz_powm(x.get_mpz_t(), n.get_mpz_t(), candidate.get_mpz_t(), p.get_mpz_t());
      if (x != 1) break;
      t = candidate;
    }
  }
  return t;
}

}  // namespace

// ---- Factorization --------------------------------------------------------

Factorization::Factorization(std::vector<PrimePower> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& pe = entries_[i];
    if (pe.exponent == 0) throw std::invalid_argument("factorization exponent must be positive");
    if (i > 0 && !(entries_[i - 1].prime < pe.prime)) {
      throw std::invalid_argument("factorization primes must be strictly increasing");
    }
    if (!is_prime(pe.prime)) throw NotPrime("factorization entry " + pe.prime.get_str() + " is not prime");
  }
}

Int Factorization::value() const {
  Int v(1);
  for (const auto& pe : entries_) v *= ipow(pe.prime, pe.exponent);
  return v;
}

Int Factorization::radical() const {
  Int r(1);
  for (const auto& pe : entries_) r *= pe.prime;
  return r;
}

Int Factorization::cosocle() const {
  Int c(1);
  for (const auto& pe : entries_) c *= ipow(pe.prime, pe.exponent - 1);
  return c;
}

unsigned Factorization::exponent_of(const Int& p) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), p,
                             [](const PrimePower& pe, const Int& q) { return pe.prime < q; });
  return (it != entries_.end() && it->prime == p) ? it->exponent : 0;
}

std::string Factorization::to_string() const {
  if (entries_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << " * ";
    os << entries_[i].prime;
    if (entries_[i].exponent > 1) os << "^" << entries_[i].exponent;
  }
  return os.str();
}

// ---- radical / cosocle / valuation ---------------------------------------

Int radical(const Int& n, const FactorBudget& budget) { return factorize(n, budget).radical(); }

Int cosocle(const Int& n, const FactorBudget& budget) {
  const Int r = radical(n, budget);
  Int q;
  mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), r.get_mpz_t());
  return q;
}

unsigned p_adic_valuation(const Int& n, const Int& p) {
  if (n == 0) throw std::invalid_argument("p_adic_valuation: n must be nonzero");
  require_prime(p, "p_adic_valuation");
  Int rest;
  return static_cast<unsigned>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

// ---- orders ---------------------------------------------------------------

Int multiplicative_order(const Int& n, const Int& p) {
  require_prime(p, "multiplicative_order");
  Int r;
  mpz_mod(r.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
  if (r == 0) throw NotCoprime("multiplicative_order: " + p.get_str() + " divides " + n.get_str());
  const Int pm1 = p - 1;
  const Int t = order_from_multiple(r, p, pm1, factorize(pm1));
  if (pm1 % t != 0) throw std::logic_error("order does not divide p - 1");
  return t;
}

std::uint64_t order_dividing(const Int& n, const Int& p, std::uint64_t multiple) {
  if (multiple == 0) throw std::invalid_argument("order_dividing: multiple must be positive");
  Int r;
  mpz_mod(r.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
  if (r == 0) throw NotCoprime("order_dividing: " + p.get_str() + " divides " + n.get_str());
  const Int m(static_cast<unsigned long>(multiple));
  Int x;
  mpz_powm(x.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
  if (x != 1) {
    throw OrderDoesNotDivide("order of " + n.get_str() + " mod " + p.get_str() + " does not divide " +
                             std::to_string(multiple));
  }
  return order_from_multiple(r, p, m, factorize(m)).get_ui();
}

// ---- totients -------------------------------------------------------------

Int euler_phi(const Factorization& f) {
  Int phi(1);
  for (const auto& [p, e] : f.entries()) phi *= ipow(p, e - 1) * (p - 1);
  return phi;
}

Int euler_phi(const Int& n, const FactorBudget& budget) { return euler_phi(factorize(n, budget)); }

Int carmichael_lambda(const Factorization& f) {
  Int lambda(1);
  for (const auto& [p, e] : f.entries()) {
    Int part;
    if (p == 2) {
      part = e == 1 ? Int(1) : e == 2 ? Int(2) : ipow(Int(2), e - 2);
    } else {
      part = ipow(p, e - 1) * (p - 1);
    }
    mpz_lcm(lambda.get_mpz_t(), lambda.get_mpz_t(), part.get_mpz_t());
  }
  return lambda;
}

Int carmichael_lambda(const Int& n, const FactorBudget& budget) {
  const Factorization f = factorize(n, budget);
  Int lambda = carmichael_lambda(f);
  if (euler_phi(f) % lambda != 0) throw std::logic_error("lambda does not divide phi");
  return lambda;
}

// ---- helpers --------------------------------------------------------------

Int ipow(const Int& base, std::uint64_t e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t e, std::uint64_t mod) {
  if (mod == 1) return 0;
  unsigned __int128 r = 1;
  unsigned __int128 b = base % mod;
  while (e) {
    if (e & 1) r = r * b % mod;
    b = b * b % mod;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t iroot_u64(std::uint64_t x, unsigned l) {
  if (l == 0) throw std::invalid_argument("iroot_u64: l must be positive");
  if (l == 1 || x < 2) return x;
  if (l >= 64) return 1;
  auto r = static_cast<std::uint64_t>(std::pow(static_cast<double>(x), 1.0 / l));
  while (r > 0 && overflows_pow(r, l, x)) --r;
  while (!overflows_pow(r + 1, l, x)) ++r;
  return r;
}

PerfectPower perfect_power(const Int& x) {
  if (x < 1) throw std::invalid_argument("perfect_power: x must be positive");
  if (x < 4) return {x, 1};
  if (fits_u64(x)) {
    const std::uint64_t v = x.get_ui();
    for (unsigned l = 63; l >= 2; --l) {
      const std::uint64_t r = iroot_u64(v, l);
      if (r >= 2 && !overflows_pow(r, l, v) && overflows_pow(r, l, v - 1)) {
        return {Int(static_cast<unsigned long>(r)), l};
      }
    }
    return {x, 1};
  }
  if (!mpz_perfect_power_p(x.get_mpz_t())) return {x, 1};
  const auto bits = static_cast<unsigned>(mpz_sizeinbase(x.get_mpz_t(), 2));
  Int r;
  for (unsigned l = bits; l >= 2; --l) {
    if (mpz_root(r.get_mpz_t(), x.get_mpz_t(), l) != 0 && r >= 2) return {r, l};
  }
  return {x, 1};
}

std::vector<Int> divisors(const Factorization& f) {
  std::vector<Int> out{Int(1)};
  for (const auto& [p, e] : f.entries()) {
    const std::size_t before = out.size();
    Int pk(1);
    for (unsigned i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < before; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool fits_u64(const Int& x) { return sgn(x) >= 0 && mpz_fits_ulong_p(x.get_mpz_t()); }

std::uint64_t to_u64(const Int& x) {
  if (!fits_u64(x)) throw std::overflow_error(x.get_str() + " does not fit in 64 bits");
  return x.get_ui();
}

}  // namespace abc
