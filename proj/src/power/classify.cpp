#include <algorithm>
#include <optional>
#include <sstream>

#include "abc/power.hpp"

namespace abc {

namespace {

unsigned v_u64(std::uint64_t k, std::uint64_t q) {
  unsigned v = 0;
  while (k % q == 0) {
    k /= q;
    ++v;
  }
  return v;
}

// Conditions (i) and (ii) for one prime p with ord_p(c) | k.
bool try_prime(Classification& out, const Int& p, unsigned f, unsigned w) {
  if (p > out.radical_c) {
    if (f >= 2 || w >= 1) {
      out.condition = Condition::LargePrime;
    } else {
      return false;
    }
  } else {
    const unsigned mp = least_mp(p, out.radical_c);
    if (f + w < mp + 1) return false;
    out.condition = Condition::SmallPrime;
    out.m_p = mp;
  }
  out.verdict = Verdict::Abc;
  out.prime = p;
  out.f = f;
  out.w = w;
  return true;
}

std::string join_terms(const std::vector<ExponentTerm>& terms) {
  std::ostringstream os;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) os << " * ";
    const std::string p = terms[i].prime.get_str();
    os << p << "^{f_" << p << "+w_" << p << "-1}";
  }
  return os.str();
}

}  // namespace

Classification classify_power(const Int& c, std::uint64_t k, const ClassifyOptions& options) {
  if (c < 2) throw std::invalid_argument("classify_power: c must be >= 2");
  if (k < 1) throw std::invalid_argument("classify_power: k must be positive");

  Classification out;
  out.c = c;
  out.k = k;
  try {
    out.radical_c = radical(c, options.budget);
  } catch (const BudgetExceeded& e) {
    out.reason = e.what();
    return out;
  }

  // Fast path over the bounded prime pool.
  const auto& table = prime_table();
  const std::uint64_t pool = std::min<std::uint64_t>(options.prime_pool_limit, prime_table_limit());
  for (std::uint32_t q : table) {
    if (q > pool) break;
    const std::uint64_t cm = mpz_fdiv_ui(c.get_mpz_t(), q);
    if (cm == 0 || powmod_u64(cm, k, q) != 1) continue;
    const Int p(q);
    if (try_prime(out, p, f_p(c, k, p), v_u64(k, q))) return out;
  }
  const Factorization fk = factorize(Int(static_cast<unsigned long>(k)));
  for (const auto& [p, e] : fk.entries()) {
    if (p <= pool || c % p == 0) continue;
    if (power_valuation(c, k, p) == 0) continue;
    if (try_prime(out, p, f_p(c, k, p), e)) return out;
  }

  // Complete path.
  std::optional<PowerProfile> profile;
  try {
    profile.emplace(power_factorization(c, k, options.budget));
  } catch (const BudgetExceeded& e) {
    out.reason = e.what();
    return out;
  }
  out.used_full_profile = true;
  for (const auto& [p, e] : profile->entries()) {
    if (try_prime(out, p, e.f, e.w)) return out;
  }
  for (const auto& [p, e] : profile->entries()) {
    if (e.valuation() > 1) out.exponents.push_back({p, e.valuation() - 1});
  }
  out.product = profile->cosocle();
  if (out.product > out.radical_c) {
    out.verdict = Verdict::Abc;
    out.condition = Condition::ExponentVector;
  } else {
    out.verdict = Verdict::NotAbc;
  }
  return out;
}

std::string Classification::describe() const {
  std::ostringstream os;
  const std::string rad = "rad(" + c.get_str() + ") = " + radical_c.get_str();
  switch (verdict) {
    case Verdict::Inconclusive:
      os << "inconclusive: " << reason;
      break;
    case Verdict::NotAbc:
      if (exponents.empty()) {
        os << "cosocle(c^k-1) = 1 < " << rad;
      } else {
        os << join_terms(exponents) << " = " << product << " < " << rad;
      }
      break;
    case Verdict::Abc:
      if (condition == Condition::LargePrime) {
        os << "condition (i): p = " << prime << " > " << rad << ", f_p = " << f << ", w_p = " << w;
      } else if (condition == Condition::SmallPrime) {
        os << "condition (ii): p = " << prime << " < " << rad << ", f_p + w_p - 1 = " << (f + w - 1)
           << " >= m_p = " << m_p;
      } else {
        os << "condition (iii): " << join_terms(exponents) << " = " << product << " > " << rad;
      }
      break;
  }
  return os.str();
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Abc:
      return "Abc";
    case Verdict::NotAbc:
      return "NotAbc";
    case Verdict::Inconclusive:
      return "Inconclusive";
  }
  return "?";
}

const char* to_string(Condition c) {
  switch (c) {
    case Condition::None:
      return "none";
    case Condition::LargePrime:
      return "i";
    case Condition::SmallPrime:
      return "ii";
    case Condition::ExponentVector:
      return "iii";
  }
  return "?";
}

}  // namespace abc
