#include <doctest.h>

#include "abc/families.hpp"
#include "abc/triple.hpp"
#include "oracle.hpp"

using abc::FamilyId;
using abc::FamilyParams;
using abc::Int;

TEST_CASE("family names") {
  CHECK(abc::family_name(FamilyId::EulerPhi) == "cor3.2");
  CHECK(abc::family_name(FamilyId::OddPowerPlus) == "cor3.12");
  for (FamilyId id : abc::kAllFamilies) CHECK(abc::parse_family(abc::family_name(id)) == id);
  CHECK_FALSE(abc::parse_family("cor3.13").has_value());
}

TEST_CASE("generators") {
  const auto c37 = abc::generate(FamilyId::OddOrNonSquarefree, FamilyParams::with_n(Int(3)), 1);
  CHECK(c37.c == 9);
  CHECK(c37.witness_m == 8);
  CHECK(abc::check_certificate(c37));

  const auto c311 = abc::generate(FamilyId::EvenNPlusOnePlus, FamilyParams::with_n(Int(4)), 1);
  CHECK(c311.c == 1025);
  CHECK(c311.side == abc::WitnessSide::BPlusOne);
  CHECK(abc::check_certificate(c311));

  const auto c32 = abc::generate(FamilyId::EulerPhi, FamilyParams::with_n(Int(75)), 1);
  CHECK(c32.witness_m == 32);
  CHECK(c32.c == oracle::pow(Int(75), 40));
  CHECK(abc::check_certificate(c32));

  CHECK_THROWS_AS(abc::generate(FamilyId::EulerPhi, FamilyParams::with_n(Int(55)), 1), abc::HypothesisViolated);
  CHECK_THROWS_AS(abc::generate(FamilyId::EulerPhi, FamilyParams::with_n(Int(4)), 1), abc::HypothesisViolated);

  const auto c34 = abc::generate(FamilyId::Carmichael, FamilyParams::with_nm(Int(11), Int(32)), 1);
  CHECK(c34.c == oracle::pow(Int(11), 8));
  CHECK(abc::check_certificate(c34));
}

TEST_CASE("tampered certificates are rejected") {
  auto cert = abc::generate(FamilyId::OddOrNonSquarefree, FamilyParams::with_n(Int(3)), 1);
  cert.witness_m = 2;
  CHECK_FALSE(abc::check_certificate(cert));
  cert = abc::generate(FamilyId::OddOrNonSquarefree, FamilyParams::with_n(Int(3)), 1);
  cert.c += 2;
  CHECK_FALSE(abc::check_certificate(cert));
}

TEST_CASE("enumeration") {
  CHECK(abc::enumerate_family(FamilyId::PowerOfTwoMinusOne, Int("1000000000000000000")).size() == 81);
  CHECK(abc::enumerate_family(FamilyId::GranvilleTucker, Int("1000000000000000000")).size() == 12);
  for (FamilyId id : abc::kAllFamilies) CHECK(abc::enumerate_family(id, Int(3)).empty());
  const auto small = abc::enumerate_family(FamilyId::OddOrNonSquarefree, Int(10000));
  for (std::size_t i = 1; i < small.size(); ++i) CHECK(small[i - 1].c < small[i].c);
}

TEST_CASE("transfers") {
  CHECK(abc::transfer_power(Int(9), 2).c() == 81);
  CHECK(abc::verify_unit(Int(81)).is_abc);
  CHECK(abc::transfer_power(Int(9), 1).c() == 9);
  CHECK(abc::transfer_power(Int(49), 2).c() == 2401);
  CHECK(abc::transfer_odd_power(Int(8), 3).c() == 513);
  CHECK(abc::transfer_odd_power(Int(8), 1).c() == 9);
  CHECK(abc::transfer_odd_power(Int(8), 5).b() == 32768);
  CHECK(abc::transfer_square(Int(49)).c() == 2304);
  CHECK(abc::transfer_cube(Int(2304)).c() == Int("12214672128"));
  CHECK(abc::transfer_cube(Int(9)).c() == 513);
  CHECK(oracle::is_abc_unit(Int(513)));
  CHECK_THROWS_AS(abc::transfer_power(Int(10), 2), abc::NotAbcInput);
  CHECK_THROWS_AS(abc::transfer_odd_power(Int(8), 2), abc::EvenExponent);
}

TEST_CASE("binomial split") {
  const auto s = abc::binomial_split_identity(Int(1), Int(8), 2, 0);
  CHECK(s.first == 1);
  CHECK(s.second == 80);
  CHECK(s.total == 81);
  const auto t = abc::binomial_split_identity(Int(1), Int(48), 2, 1);
  CHECK(t.total == 2401);
  CHECK(t.first + t.second == 2401);
  const auto u = abc::binomial_split_identity(Int(3), Int(5), 1, 0);
  CHECK(u.first == 3);
  CHECK(u.second == 5);
  CHECK_THROWS_AS(abc::binomial_split_identity(Int(1), Int(2), 2, 2), std::invalid_argument);
}
