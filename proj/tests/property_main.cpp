// Runs every property suite at full size; exit status 1 on any failure.

#include <cstdio>

#include "properties.hpp"

int main() {
  int failed = 0;
  for (const auto& s : props::all_suites()) {
    std::printf("%s  %-24s %llu cases", s.ok() ? "PASS" : "FAIL", s.name.c_str(),
                static_cast<unsigned long long>(s.cases));
    if (!s.ok()) {
      ++failed;
      std::printf(", %llu failures, first: %s", static_cast<unsigned long long>(s.failures), s.first_failure.c_str());
    }
    std::printf("\n");
  }
  return failed ? 1 : 0;
}
