#pragma once

#include <cstdint>

namespace abc::detail {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Montgomery arithmetic modulo an odd 64-bit n, R = 2^64.
class Montgomery64 {
 public:
  explicit Montgomery64(u64 n) : n_(n) {
    u64 inv = n;  // n * inv = 1 mod 2^3 for odd n; each step doubles the bits
    for (int i = 0; i < 5; ++i) inv *= 2 - n * inv;
    inv_ = inv;
    const u64 r1 = (0 - n) % n;
    r2_ = static_cast<u64>(static_cast<u128>(r1) * r1 % n);
    one_ = r1;
  }

  u64 modulus() const { return n_; }
  u64 one() const { return one_; }

  // t < n * 2^64  ->  t / 2^64 mod n
  u64 reduce(u128 t) const {
    const u64 m = static_cast<u64>(t) * inv_;
    const u64 hi = static_cast<u64>(t >> 64);
    const u64 mn = static_cast<u64>((static_cast<u128>(m) * n_) >> 64);
    return hi >= mn ? hi - mn : hi - mn + n_;
  }
  u64 to(u64 x) const { return reduce(static_cast<u128>(x % n_) * r2_); }
  u64 from(u64 x) const { return reduce(x); }
  u64 mul(u64 a, u64 b) const { return reduce(static_cast<u128>(a) * b); }
  u64 add(u64 a, u64 b) const {
    const u64 s = a + b;
    return (s >= n_ || s < a) ? s - n_ : s;
  }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a - b + n_; }

  u64 pow(u64 base_m, u64 e) const {
    u64 r = one_;
    while (e) {
      if (e & 1) r = mul(r, base_m);
      base_m = mul(base_m, base_m);
      e >>= 1;
    }
    return r;
  }

 private:
  u64 n_;
  u64 inv_;
  u64 r2_;
  u64 one_;
};

}  // namespace abc::detail
