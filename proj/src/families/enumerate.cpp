#include <algorithm>
#include <cmath>
#include <functional>

#include "abc/families.hpp"

namespace abc {

namespace {

// base^e < limit, without forming huge powers.
bool below(const Int& base, std::uint64_t e, const Int& limit) {
  if (limit <= 1) return false;
  if (base <= 1) return base < limit;
  const double lhs = static_cast<double>(e) * std::log2(mpz_get_d(base.get_mpz_t()));
  const double rhs = static_cast<double>(mpz_sizeinbase(limit.get_mpz_t(), 2));
  if (lhs > rhs + 1) return false;
  return ipow(base, e) < limit;
}

class Collector {
 public:
  Collector(FamilyId id, const FactorBudget& budget) : id_(id), budget_(budget) {}

  void add(const FamilyParams& params, std::uint64_t k) { out_.push_back(generate(id_, params, k, budget_)); }

  // True when the family hypotheses hold for k = k0.
  bool admissible(const FamilyParams& params, std::uint64_t k0 = 1) {
    try {
      generate(id_, params, k0, budget_);
      return true;
    } catch (const HypothesisViolated&) {
      return false;
    }
  }

  std::vector<FamilyCertificate> finish() {
    std::stable_sort(out_.begin(), out_.end(), [](const auto& a, const auto& b) { return a.c < b.c; });
    auto last = std::unique(out_.begin(), out_.end(), [](const auto& a, const auto& b) { return a.c == b.c; });
    out_.erase(last, out_.end());
    return std::move(out_);
  }

 private:
  FamilyId id_;
  const FactorBudget& budget_;
  std::vector<FamilyCertificate> out_;
};

Int from_u64(std::uint64_t x) { return Int(static_cast<unsigned long>(x)); }

// Primes dividing some m coprime to n with lambda(m) | e, with their largest
// admissible exponents; only exponents >= 2 contribute to the cosocle.
Int squareful_carmichael_part(std::uint64_t e, const Int& n) {
  Int m(1);
  for (std::uint64_t p = 2; p <= e + 1; ++p) {
    if (!is_prime(p) || mpz_divisible_ui_p(n.get_mpz_t(), p)) continue;
    unsigned a = 0;
    if (p == 2) {
      a = e % 2 ? 1 : static_cast<unsigned>(__builtin_ctzll(e)) + 2;
    } else if (e % (p - 1) == 0) {
      a = 1;
      for (std::uint64_t r = e; r % p == 0; r /= p) ++a;
    }
    if (a >= 2) m *= ipow(from_u64(p), a);
  }
  return m;
}

// Every n in [2, nmax] with rad(n) < bound, by extending over primes < bound.
void smooth_radical_numbers(const Int& nmax, std::uint64_t bound, const std::function<void(const Int&)>& visit) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; p < bound; ++p)
    if (is_prime(p)) primes.push_back(p);
  std::function<void(std::size_t, const Int&, std::uint64_t)> rec = [&](std::size_t from, const Int& v,
                                                                         std::uint64_t r) {
    for (std::size_t i = from; i < primes.size(); ++i) {
      const std::uint64_t p = primes[i];
      if (static_cast<unsigned __int128>(r) * p >= bound) break;
      Int x = v * from_u64(p);
      while (x <= nmax) {
        visit(x);
        rec(i + 1, x, r * p);
        x *= from_u64(p);
      }
    }
  };
  rec(0, Int(1), 1);
}

void enumerate_phi(Collector& col, FamilyId id, const Int& limit, const FactorBudget& budget) {
  // phi(n) >= sqrt(n / 2) bounds the loop.
  const double log_limit = static_cast<double>(mpz_sizeinbase(limit.get_mpz_t(), 2));
  for (std::uint64_t n = 2;; ++n) {
    if (std::sqrt(n / 2.0) * std::log2(static_cast<double>(n)) > log_limit + 1) break;
    if (id == FamilyId::EulerPhi && n % 2 == 0) continue;
    const Int nn = from_u64(n);
    const std::uint64_t phi = euler_phi(nn, budget).get_ui();
    if (!below(nn, phi, limit) || !col.admissible(FamilyParams::with_n(nn))) continue;
    for (std::uint64_t k = 1; below(nn, phi * k, limit); ++k) col.add(FamilyParams::with_n(nn), k);
  }
}

void enumerate_carmichael(Collector& col, const Int& limit, const FactorBudget& budget) {
  // c = n^e is produced exactly when the largest m coprime to n with
  // lambda(m) | e has cosocle(m) > rad(n).
  for (std::uint64_t e = 2; below(Int(2), e, limit); ++e) {
    const Int bound = squareful_carmichael_part(e, Int(1));
    const Int cos_bound = cosocle(bound, budget);
    if (cos_bound <= 2) continue;
    Int nmax;
    const Int lm1 = limit - 1;
    mpz_root(nmax.get_mpz_t(), lm1.get_mpz_t(), e);
    smooth_radical_numbers(nmax, cos_bound.get_ui(), [&](const Int& n) {
      if (!below(n, e, limit)) return;
      const Int m = squareful_carmichael_part(e, n);
      const Int rad_n = radical(n, budget);
      if (cosocle(m, budget) <= rad_n) return;
      const std::uint64_t lam = carmichael_lambda(m, budget).get_ui();
      col.add(FamilyParams::with_nm(n, m), e / lam);
    });
  }
}

void enumerate_prime_pair(Collector& col, FamilyId id, const Int& limit) {
  // Exponent is at least p >= 3, and at least 6 for cor3.5.
  const std::uint64_t min_e = id == FamilyId::GranvilleTucker ? 6 : 3;
  for (std::uint64_t n = 2; below(from_u64(n), min_e, limit); ++n) {
    const Int nn = from_u64(n);
    // p > rad(n) and n^p < limit: only n built from primes below the
    // largest usable exponent can qualify.
    const auto emax = static_cast<std::uint64_t>(
        static_cast<double>(mpz_sizeinbase(limit.get_mpz_t(), 2)) / std::log2(static_cast<double>(n)) + 1);
    std::uint64_t rest = n, rad_n = 1;
    for (std::uint64_t q = 2; q <= emax && rest > 1; ++q) {
      if (rest % q) continue;
      rad_n *= q;
      while (rest % q == 0) rest /= q;
    }
    if (rest != 1) continue;
    for (std::uint64_t p = rad_n + 1;; ++p) {
      if (p < 3 || !is_prime(p)) continue;
      if (!below(nn, p, limit)) break;
      const Int pp = from_u64(p);
      const std::uint64_t e0 =
          id == FamilyId::GranvilleTucker ? p * (p - 1) : p * multiplicative_order(nn, pp).get_ui();
      for (std::uint64_t k = 1; below(nn, e0 * k, limit); ++k) col.add(FamilyParams::with_np(nn, pp), k);
    }
  }
}

}  // namespace

std::vector<FamilyCertificate> enumerate_family(FamilyId id, const Int& limit, const FactorBudget& budget) {
  Collector col(id, budget);
  if (limit < 3) return {};

  switch (id) {
    case FamilyId::EulerPhi:
    case FamilyId::EulerPhiRefined:
      enumerate_phi(col, id, limit, budget);
      break;
    case FamilyId::Carmichael:
      enumerate_carmichael(col, limit, budget);
      break;
    case FamilyId::GranvilleTucker:
    case FamilyId::OrderRefined:
      enumerate_prime_pair(col, id, limit);
      break;
    case FamilyId::OddOrNonSquarefree:
      for (std::uint64_t n = 3; below(from_u64(n), n - 1, limit); ++n) {
        const auto params = FamilyParams::with_n(from_u64(n));
        if (!col.admissible(params)) continue;
        for (std::uint64_t k = 1; below(params.n, (n - 1) * k, limit); ++k) col.add(params, k);
      }
      break;
    case FamilyId::NPlusOne:
      for (std::uint64_t n = 2; below(from_u64(n), n + 1, limit); ++n) {
        const auto params = FamilyParams::with_n(from_u64(n));
        const std::uint64_t step = n % 2 ? 1 : 2;
        for (std::uint64_t k = step; below(params.n, (n + 1) * k, limit); k += step) col.add(params, k);
      }
      break;
    case FamilyId::PowerOfTwoMinusOne:
      for (std::uint64_t j = 2; below(ipow(Int(2), j) - 1, 2, limit); ++j) {
        const Int base = ipow(Int(2), j) - 1;
        for (std::uint64_t k = 1; below(base, 2 * k, limit); ++k) col.add(FamilyParams::with_j(j), k);
      }
      break;
    case FamilyId::GeneralPower:
      for (std::uint64_t n = 3; below(from_u64(n - 1), n, limit); ++n) {
        const std::uint64_t step = n % 2 ? 2 : 1;
        for (std::uint64_t j = 1;; ++j) {
          const Int base = ipow(from_u64(n), j) - 1;
          if (!below(base, n * step, limit)) break;
          for (std::uint64_t k = step; below(base, n * k, limit); k += step) {
            col.add(FamilyParams::with_nj(from_u64(n), j), k);
          }
        }
      }
      break;
    case FamilyId::EvenNPlusOnePlus: {
      const Int bl = limit - 1;  // b + 1 < limit
      for (std::uint64_t n = 2; below(from_u64(n), n + 1, bl); n += 2) {
        for (std::uint64_t k = 1; below(from_u64(n), (n + 1) * k, bl); k += 2) {
          col.add(FamilyParams::with_n(from_u64(n)), k);
        }
      }
      break;
    }
    case FamilyId::OddPowerPlus: {
      const Int bl = limit - 1;
      for (std::uint64_t n = 3; below(from_u64(n - 1), n, bl); n += 2) {
        for (std::uint64_t j = 1;; ++j) {
          const Int base = ipow(from_u64(n), j) - 1;
          if (!below(base, n, bl)) break;
          for (std::uint64_t k = 1; below(base, n * k, bl); k += 2) {
            col.add(FamilyParams::with_nj(from_u64(n), j), k);
          }
        }
      }
      break;
    }
  }
  return col.finish();
}

}  // namespace abc
