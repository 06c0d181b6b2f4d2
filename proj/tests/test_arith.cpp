#include <doctest.h>

#include <random>

#include "abc/arith.hpp"
#include "oracle.hpp"

using abc::Int;

TEST_CASE("factorize small and structured values") {
  CHECK(abc::factorize(Int(675)).to_string() == "3^3 * 5^2");
  CHECK(abc::factorize(Int(1)).empty());
  const Int x = oracle::pow(Int(21), 12) - 1;
  CHECK(abc::factorize(x).to_string() == "2^4 * 5 * 11 * 13 * 17 * 61 * 421 * 463 * 3181");
  CHECK_THROWS_AS(abc::factorize(Int(0)), std::invalid_argument);
}

TEST_CASE("factorize agrees with trial division") {
  std::mt19937_64 rng(12345);
  for (int i = 0; i < 300; ++i) {
    const Int n(static_cast<unsigned long>(rng() % 1000000000000ull + 1));
    const auto f = abc::factorize(n);
    std::map<Int, unsigned> got;
    for (const auto& pp : f.entries()) got[pp.prime] = pp.exponent;
    CHECK_MESSAGE(got == oracle::factor(n), n.get_str());
    CHECK(f.value() == n);
  }
}

TEST_CASE("factorize above 64 bits") {
  const Int p("18446744073709551629");  // next prime after 2^64
  const Int q("1000000007");
  const auto f = abc::factorize(p * p * q * 8);
  CHECK(f.to_string() == "2^3 * " + q.get_str() + " * " + p.get_str() + "^2");
}

TEST_CASE("factor budget is enforced") {
  abc::FactorBudget tight;
  tight.max_trial_prime = 100;
  tight.rho_iteration_cap = 10;
  const Int semiprime = Int("1000000007") * Int("998244353");
  CHECK_THROWS_AS(abc::factorize(semiprime, tight), abc::BudgetExceeded);
  abc::FactorBudget zero;
  zero.rho_iteration_cap = 0;
  CHECK_THROWS_AS(abc::factorize(Int(12), zero), std::invalid_argument);
}

TEST_CASE("radical and cosocle") {
  CHECK(abc::radical(Int(75)) == 15);
  CHECK(abc::radical(Int(1)) == 1);
  CHECK(abc::radical(Int(676)) == 26);
  CHECK(abc::cosocle(Int(32)) == 16);
  CHECK(abc::cosocle(Int(30)) == 1);
  CHECK(abc::cosocle(oracle::pow(Int(55), 40) - 1) == 288);
  for (unsigned n = 1; n < 2000; ++n) {
    CHECK(abc::radical(Int(n)) == oracle::rad(Int(n)));
    CHECK(abc::radical(Int(n)) * abc::cosocle(Int(n)) == n);
  }
}

TEST_CASE("p-adic valuation") {
  CHECK(abc::p_adic_valuation(Int(3024), Int(2)) == oracle::valuation(Int(3024), Int(2)));
  CHECK(abc::p_adic_valuation(Int(3024), Int(2)) == 4);
  CHECK(abc::p_adic_valuation(Int(1), Int(7)) == 0);
  CHECK(abc::p_adic_valuation(oracle::pow(Int(55), 40) - 1, Int(2)) == 6);
  CHECK_THROWS_AS(abc::p_adic_valuation(Int(12), Int(4)), abc::NotPrime);
}

TEST_CASE("multiplicative order") {
  CHECK(abc::multiplicative_order(Int(16), Int(5)) == 1);
  CHECK(abc::multiplicative_order(Int(3), Int(5)) == 4);
  CHECK(abc::multiplicative_order(Int(1), Int(7)) == 1);
  for (unsigned p : {3u, 7u, 11u, 101u, 65537u}) {
    for (unsigned n = 2; n < 40; ++n) {
      if (n % p == 0) continue;
      CHECK(abc::multiplicative_order(Int(n), Int(p)) == oracle::order(Int(n), Int(p)));
    }
  }
  CHECK_THROWS_AS(abc::multiplicative_order(Int(5), Int(5)), abc::NotCoprime);
}

TEST_CASE("Euler phi and Carmichael lambda") {
  CHECK(abc::euler_phi(Int(75)) == 40);
  CHECK(abc::euler_phi(Int(55)) == 40);
  CHECK(abc::euler_phi(Int(1)) == 1);
  CHECK(abc::carmichael_lambda(Int(32)) == 8);
  CHECK(abc::carmichael_lambda(Int(25)) == 20);
  CHECK(abc::carmichael_lambda(Int(1)) == 1);
  for (unsigned n = 1; n <= 300; ++n) {
    CHECK(abc::euler_phi(Int(n)) == oracle::phi(Int(n)));
    CHECK(abc::carmichael_lambda(Int(n)) == static_cast<unsigned long>(oracle::lambda(Int(n))));
  }
}

TEST_CASE("perfect powers use the minimal base") {
  CHECK(abc::perfect_power(Int(8)).base == 2);
  CHECK(abc::perfect_power(Int(8)).exponent == 3);
  CHECK(abc::perfect_power(Int(1024)).base == 2);
  CHECK(abc::perfect_power(Int(1024)).exponent == 10);
  CHECK(abc::perfect_power(Int(12)).exponent == 1);
  const auto big = abc::perfect_power(oracle::pow(Int(6), 35));
  CHECK(big.base == 6);
  CHECK(big.exponent == 35);
}

TEST_CASE("primality") {
  CHECK(abc::is_prime(std::uint64_t{2}));
  CHECK_FALSE(abc::is_prime(std::uint64_t{1}));
  CHECK_FALSE(abc::is_prime(std::uint64_t{3215031751}));  // strong pseudoprime to bases 2, 3, 5, 7
  CHECK(abc::is_prime(Int("18446744073709551557")));      // largest prime below 2^64
  CHECK(abc::is_certified_prime(Int("18446744073709551557")));
  CHECK_FALSE(abc::is_certified_prime(Int("18446744073709551629")));
  for (unsigned n = 0; n < 5000; ++n) {
    CHECK(abc::is_prime(std::uint64_t{n}) == (mpz_probab_prime_p(Int(n).get_mpz_t(), 30) != 0));
  }
}
