#include <cmath>
#include <optional>
#include <set>
#include <utility>

#include "abc/power.hpp"
#include "abc/triple.hpp"

namespace abc {

UnitTriple::UnitTriple(Int c) : c_(std::move(c)) {
  if (c_ < 2) throw InvalidTriple("unit triple needs c >= 2, got " + c_.get_str());
}

GeneralTriple::GeneralTriple(Int a, Int b, Int c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (a_ < 1 || b_ < 1 || c_ < 1) throw InvalidTriple("triple entries must be positive");
  if (a_ + b_ != c_) {
    throw InvalidTriple(a_.get_str() + " + " + b_.get_str() + " != " + c_.get_str());
  }
  if (a_ == b_) throw InvalidTriple("a and b must differ");
  Int g;
  mpz_gcd(g.get_mpz_t(), a_.get_mpz_t(), b_.get_mpz_t());
  if (g != 1) throw InvalidTriple("gcd(a, b) = " + g.get_str());
  if (b_ < a_) std::swap(a_, b_);
}

namespace {

// prod p^(v_p(x) - 1) over the given primes dividing x; a lower bound for
// cosocle(x).
Int partial_cosocle(const Int& x, const std::set<Int>& primes) {
  Int out = 1;
  for (const Int& p : primes) {
    const unsigned v = p_adic_valuation(x, p);
    if (v > 1) out *= ipow(p, v - 1);
  }
  return out;
}

// For x = n^k - 1 (plus = false) or n^k + 1 (plus = true): primes of the
// divisors n^d -/+ 1, d | k, d < k (k / d odd when plus), smallest d first,
// stopping once the partial cosocle of x exceeds `target`. Pieces that do not
// factor within budget are skipped.
std::optional<Int> certify_power_side(const Int& x, const Int& n, std::uint64_t k, bool plus, const Int& target,
                                      const FactorBudget& budget) {
  std::set<Int> primes;
  for (std::uint64_t d = 1; d < k; ++d) {
    if (k % d != 0 || (plus && (k / d) % 2 == 0)) continue;
    const Int piece = plus ? Int(ipow(n, d) + 1) : Int(ipow(n, d) - 1);
    if (piece < 2) continue;
    try {
      const Factorization f = factorize_structured(piece, budget);
      for (const PrimePower& pp : f.entries()) primes.insert(pp.prime);
    } catch (const BudgetExceeded&) {
      continue;
    }
    if (const Int bound = partial_cosocle(x, primes); bound > target) return bound;
  }
  return std::nullopt;
}

}  // namespace

VerificationEvidence verify_unit(const Int& c, const FactorBudget& budget) {
  if (c < 2) throw InvalidTriple("unit triple needs c >= 2, got " + c.get_str());
  Factorization fc, fb;
  try {
    fc = factorize_structured(c, budget);
    fb = factorize_structured(c - 1, budget);
  } catch (const BudgetExceeded&) {
    // c = n^k: (i) cosocle(c - 1) > rad(c); c - 1 = n^k: (ii) cosocle(c) > rad(c - 1).
    if (const PerfectPower pp = perfect_power(c); pp.exponent > 1) {
      const Factorization fn = factorize(pp.base, budget);
      if (auto bound = certify_power_side(c - 1, pp.base, pp.exponent, false, fn.radical(), budget)) {
        VerificationEvidence ev;
        ev.is_abc = true;
        ev.exact = false;
        ev.rad_c = fn.radical();
        ev.cosocle_c = c / fn.radical();
        ev.cosocle_c_minus_1 = *bound;
        ev.rad_c_minus_1 = (c - 1) / *bound;
        return ev;
      }
    }
    if (const PerfectPower pp = perfect_power(c - 1); pp.exponent > 1) {
      const Factorization fn = factorize(pp.base, budget);
      if (auto bound = certify_power_side(c, pp.base, pp.exponent, true, fn.radical(), budget)) {
        VerificationEvidence ev;
        ev.is_abc = true;
        ev.exact = false;
        ev.rad_c_minus_1 = fn.radical();
        ev.cosocle_c_minus_1 = (c - 1) / fn.radical();
        ev.cosocle_c = *bound;
        ev.rad_c = c / *bound;
        return ev;
      }
    }
    throw;
  }

  VerificationEvidence ev;
  ev.rad_c = fc.radical();
  ev.rad_c_minus_1 = fb.radical();
  ev.cosocle_c = fc.cosocle();
  ev.cosocle_c_minus_1 = fb.cosocle();

  const bool i = ev.cosocle_c_minus_1_exceeds_rad_c();
  const bool ii = ev.cosocle_c_exceeds_rad_c_minus_1();
  const bool iii = ev.radical_product_below(c);
  if (i != ii || ii != iii) {
    throw std::logic_error("abc criteria disagree for c = " + c.get_str());
  }
  ev.is_abc = iii;
  return ev;
}

bool verify_general(const GeneralTriple& t, const FactorBudget& budget) {
  // Pairwise coprime, so rad(abc) = rad(a) rad(b) rad(c).
  const Int r = factorize_structured(t.a(), budget).radical() * factorize_structured(t.b(), budget).radical() * factorize_structured(t.c(), budget).radical();
  return r < t.c();
}

double log_int(const Int& x) {
  if (x <= 0) throw std::domain_error("log_int of non-positive value");
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, x.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

double quality_from_radical(const Int& c, const Int& rad_abc) {
  if (rad_abc < 2) throw std::domain_error("quality needs rad(abc) >= 2");
  return log_int(c) / log_int(rad_abc);
}

double quality(const GeneralTriple& t, const FactorBudget& budget) {
  const Int r = factorize_structured(t.a(), budget).radical() * factorize_structured(t.b(), budget).radical() * factorize_structured(t.c(), budget).radical();
  return quality_from_radical(t.c(), r);
}

}  // namespace abc
