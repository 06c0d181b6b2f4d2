#include "abc/families.hpp"

namespace abc {

namespace {

void require_abc(const Int& c, const FactorBudget& budget) {
  if (c < 2 || !verify_unit(c, budget).is_abc) {
    throw NotAbcInput("(1, " + Int(c - 1).get_str() + ", " + c.get_str() + ") is not an abc triple");
  }
}

}  // namespace

UnitTriple transfer_power(const Int& c, std::uint64_t k, const FactorBudget& budget) {
  if (k < 1) throw std::invalid_argument("transfer_power: k must be positive");
  require_abc(c, budget);
  return UnitTriple(ipow(c, k));
}

GeneralTriple transfer_odd_power(const Int& b, std::uint64_t k, const FactorBudget& budget) {
  if (k % 2 == 0) throw EvenExponent("transfer_odd_power: k = " + std::to_string(k) + " is even");
  if (b < 1) throw NotAbcInput("b must be positive");
  require_abc(b + 1, budget);
  const Int bk = ipow(b, k);
  return GeneralTriple(Int(1), bk, bk + 1);
}

UnitTriple transfer_cube(const Int& c, const FactorBudget& budget) {
  require_abc(c, budget);
  return UnitTriple(c * (c * c - 3 * c + 3));
}

UnitTriple transfer_square(const Int& c, const FactorBudget& budget) {
  require_abc(c, budget);
  return UnitTriple((c - 1) * (c - 1));
}

BinomialSplit binomial_split_identity(const Int& a, const Int& b, std::uint64_t n, std::uint64_t k) {
  if (n < 1) throw std::invalid_argument("binomial_split_identity: n must be positive");
  if (k > n - 1) throw std::invalid_argument("binomial_split_identity: k must be at most n - 1");
  auto binom = [n](std::uint64_t j) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, j);
    return r;
  };
  Int s1(0);
  for (std::uint64_t j = 0; j <= k; ++j) s1 += binom(j) * ipow(a, k - j) * ipow(b, j);
  Int s2(0);
  for (std::uint64_t j = 0; j + k + 1 <= n; ++j) s2 += binom(j) * ipow(a, j) * ipow(b, n - k - 1 - j);
  BinomialSplit out;
  out.first = ipow(a, n - k) * s1;
  out.second = ipow(b, k + 1) * s2;
  out.total = ipow(a + b, n);
  if (out.first + out.second != out.total) throw std::logic_error("binomial split does not sum to (a + b)^n");
  return out;
}

}  // namespace abc
