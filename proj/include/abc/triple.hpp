#pragma once

#include "abc/arith.hpp"

namespace abc {

// The candidate (1, c - 1, c).
class UnitTriple {
 public:
  explicit UnitTriple(Int c);

  const Int& c() const noexcept { return c_; }
  Int b() const { return c_ - 1; }

  friend bool operator==(const UnitTriple&, const UnitTriple&) = default;

 private:
  Int c_;
};

// a + b = c with gcd(a, b) = 1, stored with a < b.
class GeneralTriple {
 public:
  // Throws InvalidTriple unless the values are positive, sum correctly, are
  // coprime and a != b. Swaps a and b if needed.
  GeneralTriple(Int a, Int b, Int c);
  static GeneralTriple from_unit(const UnitTriple& t) { return GeneralTriple(Int(1), t.b(), t.c()); }

  const Int& a() const noexcept { return a_; }
  const Int& b() const noexcept { return b_; }
  const Int& c() const noexcept { return c_; }

  friend bool operator==(const GeneralTriple&, const GeneralTriple&) = default;

 private:
  Int a_, b_, c_;
};

// When exact is false the full factorization ran out of budget and the
// verdict rests on a partial one: the cosocle field of the power side is a
// lower bound and its radical field an upper bound; the other fields are exact.
struct VerificationEvidence {
  bool is_abc = false;
  bool exact = true;
  Int rad_c;
  Int rad_c_minus_1;
  Int cosocle_c;
  Int cosocle_c_minus_1;

  // The three equivalent criteria, recomputed from the fields.
  bool cosocle_c_minus_1_exceeds_rad_c() const { return cosocle_c_minus_1 > rad_c; }
  bool cosocle_c_exceeds_rad_c_minus_1() const { return cosocle_c > rad_c_minus_1; }
  bool radical_product_below(const Int& c) const { return rad_c * rad_c_minus_1 < c; }
};

// Factors c and c - 1 and evaluates all three criteria; a disagreement
// between them is a logic_error. If c = n^k or c - 1 = n^k does not factor
// within budget, primes of the algebraic divisors n^d - 1 (resp. n^d + 1) may
// still certify abc; otherwise BudgetExceeded propagates.
VerificationEvidence verify_unit(const Int& c, const FactorBudget& budget = FactorBudget{});

// rad(abc) < c.
bool verify_general(const GeneralTriple& t, const FactorBudget& budget = FactorBudget{});

// log c / log rad(abc), with the radical computed exactly.
double quality(const GeneralTriple& t, const FactorBudget& budget = FactorBudget{});
double quality_from_radical(const Int& c, const Int& rad_abc);

// Natural log of a positive big integer.
double log_int(const Int& x);

}  // namespace abc
