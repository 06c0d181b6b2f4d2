#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace props {

struct SuiteResult {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string first_failure;

  bool ok() const { return cases > 0 && failures == 0; }
};

// rad(mn) = rad(m) rad(n) for coprime m, n; rad(m) <= m; rad(m^k) = rad(m).
SuiteResult radical_multiplicative();
// m | n implies rad(n) = rad(n / cosocle(m)).
SuiteResult radical_after_cosocle();
// v_p(xy) <= v_p(C(y, j) x^j) for p | x, 2 <= j <= y, with equality exactly
// when (p, j) = (2, 2), x = 2 mod 4 and y even.
SuiteResult binomial_valuation();
// n^(2^k) = 1 mod 2^(k+2) for odd n.
SuiteResult odd_power_congruence();
// cosocle(c-1) > rad(c), cosocle(c) > rad(c-1) and rad(c(c-1)) < c agree.
SuiteResult three_criteria(std::uint64_t c_max = 200000);
// Every enumerated certificate below c_limit checks out against oracles.
SuiteResult certificate_soundness(const std::string& c_limit = "1000000000000");
// Both halves of the binomial split sum to (a + b)^n and match direct sums.
SuiteResult binomial_split();

std::vector<SuiteResult> all_suites();

}  // namespace props
