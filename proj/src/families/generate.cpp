#include <sstream>

#include "abc/families.hpp"
#include "abc/power.hpp"

namespace abc {

namespace {

constexpr std::uint64_t kMaxBits = 1u << 24;

[[noreturn]] void violated(FamilyId id, const std::string& what) {
  throw HypothesisViolated(family_name(id) + ": " + what);
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 r = static_cast<unsigned __int128>(a) * b;
  if (r >> 64) throw std::overflow_error("exponent overflow");
  return static_cast<std::uint64_t>(r);
}

Int checked_pow(const Int& base, std::uint64_t e) {
  const std::uint64_t bits = mpz_sizeinbase(base.get_mpz_t(), 2);
  if (base > 1 && e > kMaxBits / bits) {
    throw std::invalid_argument("power " + base.get_str() + "^" + std::to_string(e) + " is too large");
  }
  return ipow(base, e);
}

std::uint64_t u64_param(FamilyId id, const Int& x, const char* name) {
  if (!fits_u64(x)) violated(id, std::string(name) + " out of range");
  return x.get_ui();
}

unsigned v2(std::uint64_t x) { return x ? static_cast<unsigned>(__builtin_ctzll(x)) : 0; }

Int cosocle_of(const Int& m, const FactorBudget& budget) {
  const Factorization f = factorize_structured(m, budget);
  return f.cosocle();
}

void require_cosocle_above(FamilyId id, const Int& m, const Int& rad_n, const FactorBudget& budget) {
  const Int cm = cosocle_of(m, budget);
  if (cm <= rad_n) {
    violated(id, "cosocle(m) = " + cm.get_str() + " <= rad(n) = " + rad_n.get_str() + " for m = " + m.get_str());
  }
}

FamilyCertificate minus_side(FamilyId id, const FamilyParams& params, std::uint64_t k, Int base,
                             std::uint64_t exponent, Int m) {
  FamilyCertificate cert;
  cert.family = id;
  cert.params = params;
  cert.k = k;
  cert.c = checked_pow(base, exponent);
  cert.base = std::move(base);
  cert.exponent = exponent;
  cert.side = WitnessSide::CMinusOne;
  cert.witness_m = std::move(m);
  return cert;
}

FamilyCertificate plus_side(FamilyId id, const FamilyParams& params, std::uint64_t k, Int base,
                            std::uint64_t exponent, Int m) {
  FamilyCertificate cert = minus_side(id, params, k, std::move(base), exponent, std::move(m));
  cert.c += 1;
  cert.side = WitnessSide::BPlusOne;
  return cert;
}

}  // namespace

std::string family_name(FamilyId id) { return "cor3." + std::to_string(static_cast<int>(id) + 2); }

std::optional<FamilyId> parse_family(const std::string& name) {
  for (FamilyId id : kAllFamilies) {
    if (family_name(id) == name) return id;
  }
  return std::nullopt;
}

std::string FamilyParams::to_string(FamilyId id) const {
  std::ostringstream os;
  switch (id) {
    case FamilyId::EulerPhi:
    case FamilyId::EulerPhiRefined:
    case FamilyId::OddOrNonSquarefree:
    case FamilyId::NPlusOne:
    case FamilyId::EvenNPlusOnePlus:
      os << "n=" << n;
      break;
    case FamilyId::Carmichael:
      os << "n=" << n << " m=" << m << " variant=" << (variant == CarmichaelVariant::Lambda ? "lambda" : "phi");
      break;
    case FamilyId::GranvilleTucker:
    case FamilyId::OrderRefined:
      os << "n=" << n << " p=" << p;
      break;
    case FamilyId::PowerOfTwoMinusOne:
      os << "j=" << j;
      break;
    case FamilyId::GeneralPower:
    case FamilyId::OddPowerPlus:
      os << "n=" << n << " j=" << j;
      break;
  }
  return os.str();
}

FamilyCertificate generate(FamilyId id, const FamilyParams& params, std::uint64_t k, const FactorBudget& budget) {
  if (k < 1) violated(id, "k must be positive");
  const Int& n = params.n;

  switch (id) {
    case FamilyId::EulerPhi: {
      if (n <= 1 || n % 2 == 0) violated(id, "n must be odd and > 1");
      const std::uint64_t phi = u64_param(id, euler_phi(n, budget), "phi(n)");
      const std::uint64_t d = gcd_u64(u64_param(id, n - 1, "n"), phi);
      // m = 2^(v_2(4 phi) - 2 v_2(d)) d^2
      const Int m = ipow(Int(2), v2(phi) + 2 - 2 * v2(d)) * ipow(Int(static_cast<unsigned long>(d)), 2);
      require_cosocle_above(id, m, radical(n, budget), budget);
      return minus_side(id, params, k, n, checked_mul(phi, k), m);
    }
    case FamilyId::EulerPhiRefined: {
      if (n <= 1) violated(id, "n must be > 1");
      const std::uint64_t phi = u64_param(id, euler_phi(n, budget), "phi(n)");
      const Int big = checked_pow(n, phi) - 1;
      Int d;
      mpz_gcd_ui(d.get_mpz_t(), big.get_mpz_t(), phi);
      Int m(1);
      const Factorization fd = factorize(d);
      for (const auto& [p, e] : fd.entries()) m *= ipow(p, p_adic_valuation(big, p));
      require_cosocle_above(id, m, radical(n, budget), budget);
      return minus_side(id, params, k, n, checked_mul(phi, k), m);
    }
    case FamilyId::Carmichael: {
      const Int& m = params.m;
      if (n <= 1) violated(id, "rad(n) must be > 1");
      if (m < 1) violated(id, "m must be positive");
      Int g;
      mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), n.get_mpz_t());
      if (g != 1) violated(id, "m and n must be coprime");
      require_cosocle_above(id, m, radical(n, budget), budget);
      const Factorization fm = factorize(m, budget);
      const Int t = params.variant == CarmichaelVariant::Lambda ? carmichael_lambda(fm) : euler_phi(fm);
      return minus_side(id, params, k, n, checked_mul(u64_param(id, t, "lambda(m)"), k), m);
    }
    case FamilyId::GranvilleTucker:
    case FamilyId::OrderRefined: {
      const Int& p = params.p;
      if (n <= 1) violated(id, "n must be > 1");
      if (p < 3 || !is_prime(p)) violated(id, "p must be an odd prime");
      if (p <= radical(n, budget)) violated(id, "p must exceed rad(n)");
      const std::uint64_t pu = u64_param(id, p, "p");
      const std::uint64_t e0 = id == FamilyId::GranvilleTucker ? checked_mul(pu, pu - 1)
                                                               : checked_mul(pu, multiplicative_order(n, p).get_ui());
      return minus_side(id, params, k, n, checked_mul(e0, k), p * p);
    }
    case FamilyId::OddOrNonSquarefree: {
      if (n <= 1) violated(id, "n must be > 1");
      if (n % 2 == 0 && radical(n, budget) == n) violated(id, "n must be odd or even and non-squarefree");
      const std::uint64_t e0 = u64_param(id, n - 1, "n");
      return minus_side(id, params, k, n, checked_mul(e0, k), checked_pow(n, e0) - 1);
    }
    case FamilyId::NPlusOne: {
      if (n <= 1) violated(id, "n must be > 1");
      const std::uint64_t n1 = u64_param(id, n + 1, "n");
      if (n1 % 2 == 1 && k % 2 == 1) violated(id, "(n + 1) k must be even");
      const std::uint64_t l = n1 % 2 == 0 ? n1 : 2 * n1;
      return minus_side(id, params, k, n, checked_mul(n1, k), checked_pow(n, l) - 1);
    }
    case FamilyId::PowerOfTwoMinusOne: {
      if (params.j < 2) violated(id, "j must be >= 2");
      const Int base = checked_pow(Int(2), params.j) - 1;
      return minus_side(id, params, k, base, checked_mul(2, k), base * base - 1);
    }
    case FamilyId::GeneralPower: {
      if (n < 3) violated(id, "n must be >= 3");
      if (params.j < 1) violated(id, "j must be >= 1");
      const std::uint64_t nu = u64_param(id, n, "n");
      if (nu % 2 == 1 && k % 2 == 1) violated(id, "n k must be even");
      const Int base = checked_pow(n, params.j) - 1;
      return minus_side(id, params, k, base, checked_mul(nu, k), checked_pow(n, params.j + 1));
    }
    case FamilyId::EvenNPlusOnePlus: {
      if (n < 2 || n % 2 == 1) violated(id, "n must be a positive even integer");
      if (k % 2 == 0) violated(id, "k must be odd");
      const std::uint64_t n1 = u64_param(id, n + 1, "n");
      return plus_side(id, params, k, n, checked_mul(n1, k), checked_pow(n, n1) + 1);
    }
    case FamilyId::OddPowerPlus: {
      if (n < 3 || n % 2 == 0) violated(id, "n must be an odd integer >= 3");
      if (params.j < 1) violated(id, "j must be >= 1");
      if (k % 2 == 0) violated(id, "k must be odd");
      const Int base = checked_pow(n, params.j) - 1;
      return plus_side(id, params, k, base, checked_mul(u64_param(id, n, "n"), k), checked_pow(n, params.j + 1));
    }
  }
  throw std::invalid_argument("unknown family");
}

bool check_certificate(const FamilyCertificate& cert, const FactorBudget& budget) {
  if (cert.witness_m < 1 || cert.base < 2 || cert.exponent < 1) return false;
  const Int power = checked_pow(cert.base, cert.exponent);
  const bool minus = cert.side == WitnessSide::CMinusOne;
  if (cert.c != (minus ? power : power + 1)) return false;
  // minus: m | c - 1 against rad(c); plus: m | b + 1 = c against rad(b).
  const Int side = minus ? cert.c - 1 : cert.c;
  if (side % cert.witness_m != 0) return false;
  return cosocle_of(cert.witness_m, budget) > radical(cert.base, budget);
}

}  // namespace abc
