#include <algorithm>
#include <set>

#include "abc/survey.hpp"

namespace abc {

std::vector<TripleRecord> build_T(const std::vector<TripleRecord>& source, const Int& c_limit) {
  std::vector<TripleRecord> out;
  for (const auto& r : source) {
    if (r.c < c_limit && r.in_T()) out.push_back(r);
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.c < y.c; });
  out.erase(std::unique(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.c == y.c; }), out.end());
  return out;
}

FamilySets build_C(const Int& c_limit, const FactorBudget& budget) {
  FamilySets sets;
  std::set<Int> all;
  for (FamilyId id : kAllFamilies) {
    auto& cs = sets.per_family[id];
    for (const auto& cert : enumerate_family(id, c_limit, budget)) {
      cs.push_back(cert.c);
      all.insert(cert.c);
    }
  }
  sets.all.assign(all.begin(), all.end());
  return sets;
}

ClosureSet build_D(const std::vector<Int>& seeds, const Int& c_limit) {
  ClosureSet out;
  std::set<Int> members;
  std::set<Int> pending;
  for (const Int& c : seeds) {
    if (c < c_limit && members.insert(c).second) pending.insert(c);
  }
  auto offer = [&](const Int& x, const Int& parent, const char* map, std::uint64_t k) {
    if (x >= c_limit || !members.insert(x).second) return;
    pending.insert(x);
    out.derivation.emplace(x, ClosureStep{parent, map, k});
  };
  // Ascending c; each map strictly increases c, so every value is final
  // when it is taken from the front.
  while (!pending.empty()) {
    const Int c = *pending.begin();
    pending.erase(pending.begin());
    for (std::uint64_t k = 2;; ++k) {
      Int x = ipow(c, k);
      if (x >= c_limit) break;
      offer(x, c, "power", k);
    }
    const Int b = c - 1;
    if (b >= 2) {
      for (std::uint64_t k = 3;; k += 2) {
        Int x = ipow(b, k) + 1;
        if (x >= c_limit) break;
        offer(x, c, "odd-power", k);
      }
    }
    offer(b * b, c, "square", 2);
    offer(c * (c * c - 3 * c + 3), c, "cube", 3);
  }
  out.members.assign(members.begin(), members.end());
  return out;
}

double delta(const std::vector<Int>& X, const std::vector<Int>& Y, const Int& x) {
  const auto nx = static_cast<std::size_t>(std::upper_bound(X.begin(), X.end(), x) - X.begin());
  const auto ny = static_cast<std::size_t>(std::upper_bound(Y.begin(), Y.end(), x) - Y.begin());
  if (ny == 0) throw EmptyDenominator("no elements <= " + x.get_str() + " in the denominator set");
  for (std::size_t i = 0; i < nx; ++i) {
    if (!std::binary_search(Y.begin(), Y.begin() + static_cast<std::ptrdiff_t>(ny), X[i])) {
      throw std::invalid_argument("delta: " + X[i].get_str() + " is in X but not in Y");
    }
  }
  return 100.0 * static_cast<double>(nx) / static_cast<double>(ny);
}

}  // namespace abc
