#pragma once

// Certified generators for the eleven parametric families, the transfer maps
// and the split binomial identity.
//
// Every certificate carries a witness m. On the minus side m | c - 1 and
// cosocle(m) > rad(c), so (1, c - 1, c) is abc; on the plus side m | b + 1 and
// cosocle(m) > rad(b), so (1, b, b + 1) is abc for b = c - 1.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "abc/arith.hpp"
#include "abc/triple.hpp"

namespace abc {

enum class FamilyId {
  EulerPhi,             // cor3.2   n odd:             c = n^(phi(n) k)
  EulerPhiRefined,      // cor3.3   n:                 c = n^(phi(n) k)
  Carmichael,           // cor3.4   n, m:              c = n^(lambda(m) k) or n^(phi(m) k)
  GranvilleTucker,      // cor3.5   n, p:              c = n^(p (p - 1) k)
  OrderRefined,         // cor3.6   n, p:              c = n^(p ord_p(n) k)
  OddOrNonSquarefree,   // cor3.7   n:                 c = n^((n - 1) k)
  NPlusOne,             // cor3.8   n, (n + 1) k even: c = n^((n + 1) k)
  PowerOfTwoMinusOne,   // cor3.9   j >= 2:            c = (2^j - 1)^(2k)
  GeneralPower,         // cor3.10  n, j, n k even:    c = (n^j - 1)^(n k)
  EvenNPlusOnePlus,     // cor3.11  n even, k odd:     b = n^((n + 1) k)
  OddPowerPlus,         // cor3.12  n odd, j, k odd:   b = (n^j - 1)^(n k)
};

inline constexpr std::array<FamilyId, 11> kAllFamilies = {
    FamilyId::EulerPhi,           FamilyId::EulerPhiRefined,  FamilyId::Carmichael,
    FamilyId::GranvilleTucker,    FamilyId::OrderRefined,     FamilyId::OddOrNonSquarefree,
    FamilyId::NPlusOne,           FamilyId::PowerOfTwoMinusOne, FamilyId::GeneralPower,
    FamilyId::EvenNPlusOnePlus,   FamilyId::OddPowerPlus,
};

// "cor3.2" ... "cor3.12"
std::string family_name(FamilyId id);
std::optional<FamilyId> parse_family(const std::string& name);

enum class CarmichaelVariant { Lambda, Phi };

// Unused fields stay zero. n: base; p: prime (cor3.5, cor3.6); m: modulus
// (cor3.4); j: exponent (cor3.9, cor3.10, cor3.12).
struct FamilyParams {
  Int n;
  Int p;
  Int m;
  std::uint64_t j = 0;
  CarmichaelVariant variant = CarmichaelVariant::Lambda;

  static FamilyParams with_n(Int n) { return {std::move(n), 0, 0, 0, CarmichaelVariant::Lambda}; }
  static FamilyParams with_np(Int n, Int p) { return {std::move(n), std::move(p), 0, 0, CarmichaelVariant::Lambda}; }
  static FamilyParams with_nm(Int n, Int m, CarmichaelVariant v = CarmichaelVariant::Lambda) {
    return {std::move(n), 0, std::move(m), 0, v};
  }
  static FamilyParams with_j(std::uint64_t j) { return {0, 0, 0, j, CarmichaelVariant::Lambda}; }
  static FamilyParams with_nj(Int n, std::uint64_t j) { return {std::move(n), 0, 0, j, CarmichaelVariant::Lambda}; }

  std::string to_string(FamilyId id) const;
};

enum class WitnessSide {
  CMinusOne,  // m | c - 1, cosocle(m) > rad(c)
  BPlusOne,   // m | b + 1, cosocle(m) > rad(b)
};

struct FamilyCertificate {
  FamilyId family{};
  FamilyParams params;
  std::uint64_t k = 1;
  // c = base^exponent on the minus side, b = base^exponent on the plus side.
  Int base;
  std::uint64_t exponent = 0;
  Int c;
  WitnessSide side = WitnessSide::CMinusOne;
  Int witness_m;

  Int b() const { return c - 1; }
};

// Validates the family hypotheses and returns the certificate for k.
// Throws HypothesisViolated naming the first condition that fails.
FamilyCertificate generate(FamilyId family, const FamilyParams& params, std::uint64_t k,
                           const FactorBudget& budget = FactorBudget{});

// Witness checks only: m divides its side and cosocle(m) exceeds the radical.
bool check_certificate(const FamilyCertificate& cert, const FactorBudget& budget = FactorBudget{});

// All certificates with c < c_limit, one per c, sorted by c.
std::vector<FamilyCertificate> enumerate_family(FamilyId family, const Int& c_limit,
                                                const FactorBudget& budget = FactorBudget{});

// ---- transfer maps --------------------------------------------------------

// (1, c - 1, c) abc  =>  (1, c^k - 1, c^k) abc. Throws NotAbcInput.
UnitTriple transfer_power(const Int& c, std::uint64_t k, const FactorBudget& budget = FactorBudget{});
// (1, b, b + 1) abc, k odd  =>  (1, b^k, b^k + 1) abc. Throws NotAbcInput, EvenExponent.
GeneralTriple transfer_odd_power(const Int& b, std::uint64_t k, const FactorBudget& budget = FactorBudget{});
// (1, c - 1, c) abc  =>  (1, (c - 1)^3, c (c^2 - 3c + 3)) abc.
UnitTriple transfer_cube(const Int& c, const FactorBudget& budget = FactorBudget{});
// (1, c - 1, c) abc  =>  (1, c (c - 2), (c - 1)^2) abc.
UnitTriple transfer_square(const Int& c, const FactorBudget& budget = FactorBudget{});

struct BinomialSplit {
  Int first;   // a^(n-k) sum_{j=0..k} C(n,j) a^(k-j) b^j
  Int second;  // b^(k+1) sum_{j=0..n-k-1} C(n,j) a^j b^(n-k-1-j)
  Int total;   // (a + b)^n
};

// Requires n >= 1 and k <= n - 1.
BinomialSplit binomial_split_identity(const Int& a, const Int& b, std::uint64_t n, std::uint64_t k);

}  // namespace abc
