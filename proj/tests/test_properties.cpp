#include <doctest.h>

#include "properties.hpp"

namespace {

void expect(const props::SuiteResult& r) {
  INFO(r.name << ": " << r.failures << " of " << r.cases << " failed; first: " << r.first_failure);
  CHECK(r.ok());
}

}  // namespace

TEST_CASE("property: radical multiplicative") { expect(props::radical_multiplicative()); }
TEST_CASE("property: radical after dividing out a cosocle") { expect(props::radical_after_cosocle()); }
TEST_CASE("property: binomial valuation equality case") { expect(props::binomial_valuation()); }
TEST_CASE("property: odd square-power congruence") { expect(props::odd_power_congruence()); }
TEST_CASE("property: three abc criteria agree") { expect(props::three_criteria(50000)); }
TEST_CASE("property: certificates below 10^9") { expect(props::certificate_soundness("1000000000")); }
TEST_CASE("property: binomial split") { expect(props::binomial_split()); }
