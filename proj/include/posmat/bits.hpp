#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace posmat {

// Subsets of a ground set {0, ..., n-1} with n <= kMaxElements.
using Mask = std::uint32_t;

inline constexpr int kMaxElements = 16;

constexpr Mask bit(int i) { return Mask{1} << i; }
constexpr bool has(Mask m, int i) { return (m >> i) & 1u; }
constexpr int count(Mask m) { return std::popcount(m); }
constexpr int lowest(Mask m) { return std::countr_zero(m); }
constexpr Mask full_mask(int n) { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }
constexpr bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

// Spreads the low bits of `compact` onto the set bits of `where` (pdep).
constexpr Mask deposit(Mask compact, Mask where) {
  Mask out = 0;
  for (Mask w = where; w != 0 && compact != 0; w &= w - 1, compact >>= 1) {
    if (compact & 1u) out |= w & (~w + 1);
  }
  return out;
}

// Gathers the bits of `m` that sit on `where` into the low bits (pext).
constexpr Mask extract(Mask m, Mask where) {
  Mask out = 0;
  int k = 0;
  for (Mask w = where; w != 0; w &= w - 1, ++k) {
    if (m & w & (~w + 1)) out |= Mask{1} << k;
  }
  return out;
}

template <class F>
void for_each_bit(Mask m, F&& f) {
  for (; m != 0; m &= m - 1) f(lowest(m));
}

inline std::vector<int> elements_of(Mask m) {
  std::vector<int> out;
  for_each_bit(m, [&](int i) { out.push_back(i); });
  return out;
}

// Next mask with the same popcount (Gosper's hack).
constexpr Mask next_same_size(Mask v) {
  Mask t = v | (v - 1);
  return (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
}

// Calls f on every k-subset of {0..n-1}.
template <class F>
void for_each_k_subset(int n, int k, F&& f) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    f(Mask{0});
    return;
  }
  const Mask limit = Mask{1} << n;
  for (Mask m = full_mask(k); m < limit; m = next_same_size(m)) f(m);
}

}  // namespace posmat
