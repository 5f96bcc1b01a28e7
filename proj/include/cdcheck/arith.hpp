#pragma once

// Small-integer helpers shared by the polynomial and divisor modules.

#include <cstdint>
#include <map>
#include <vector>

namespace cdcheck::arith {

inline std::vector<unsigned> divisors(unsigned n) {
  std::vector<unsigned> lo, hi;
  for (unsigned d = 1; d * d <= n; ++d) {
    if (n % d)
      continue;
    lo.push_back(d);
    if (d != n / d)
      hi.push_back(n / d);
  }
  lo.insert(lo.end(), hi.rbegin(), hi.rend());
  return lo;
}

/// Prime factorization of a machine integer by trial division.
inline std::map<std::uint64_t, unsigned> factor_small(std::uint64_t n) {
  std::map<std::uint64_t, unsigned> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  if (n > 1)
    ++out[n];
  return out;
}

inline bool is_prime_small(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2))
    if (n % p == 0)
      return false;
  return true;
}

inline unsigned totient(unsigned n) {
  unsigned r = n;
  for (auto [p, e] : factor_small(n))
    r = r / static_cast<unsigned>(p) * static_cast<unsigned>(p - 1);
  return r;
}

/// Largest prime dividing n (0 for n = 1).
inline std::uint64_t largest_prime_factor(std::uint64_t n) {
  auto f = factor_small(n);
  return f.empty() ? 0 : f.rbegin()->first;
}

/// If n = p^f with p prime and f >= 1, returns {p, f}; otherwise {0, 0}.
inline std::pair<std::uint64_t, unsigned> prime_power_parts(std::uint64_t n) {
  auto f = factor_small(n);
  if (f.size() != 1)
    return {0, 0};
  return *f.begin();
}

inline bool is_prime_power(std::uint64_t n) {
  return prime_power_parts(n).first != 0;
}

inline std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

} // namespace cdcheck::arith
