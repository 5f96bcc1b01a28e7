#pragma once

// Slow, independent reference computations. Nothing here calls into the
// library's cyclotomic, factoring or ppd code.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

using Z = mpz_class;

inline int mobius(unsigned n) {
  int mu = 1;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p)
      continue;
    n /= p;
    if (n % p == 0)
      return 0;
    mu = -mu;
  }
  return n > 1 ? -mu : mu;
}

/// Phi_n(x) as prod_{d | n} (x^d - 1)^mu(n/d), evaluated numerically.
inline Z phi_value(unsigned n, const Z &x) {
  Z num = 1, den = 1;
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d)
      continue;
    Z t;
    mpz_pow_ui(t.get_mpz_t(), x.get_mpz_t(), d);
    t -= 1;
    int mu = mobius(n / d);
    if (mu == 1)
      num *= t;
    else if (mu == -1)
      den *= t;
  }
  return num / den;
}

/// Coefficients of Phi_n by the same Mobius product, carried out on
/// polynomials with 64-bit coefficients (ample for n <= 64).
inline std::vector<std::int64_t> phi_coeffs(unsigned n) {
  std::vector<std::int64_t> num{1};
  std::vector<unsigned> den_d;
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d)
      continue;
    int mu = mobius(n / d);
    if (mu == 1) {
      // multiply by x^d - 1
      std::vector<std::int64_t> r(num.size() + d, 0);
      for (std::size_t i = 0; i < num.size(); ++i) {
        r[i + d] += num[i];
        r[i] -= num[i];
      }
      num = r;
    } else if (mu == -1) {
      den_d.push_back(d);
    }
  }
  // divide by each x^d - 1: q = num / (x^d - 1) via q[i] = num[i+d] + q[i+d]
  for (unsigned d : den_d) {
    std::size_t deg = num.size() - 1 - d;
    std::vector<std::int64_t> q(deg + 1, 0);
    for (std::size_t i = deg + 1; i-- > 0;)
      q[i] = num[i + d] + (i + d <= deg ? q[i + d] : 0);
    num = q;
  }
  while (num.size() > 1 && num.back() == 0)
    num.pop_back();
  return num;
}

inline bool is_prime(const Z &v) {
  return mpz_probab_prime_p(v.get_mpz_t(), 40) > 0;
}

/// Pollard rho with Floyd cycle detection; v composite and odd.
inline Z rho(const Z &v) {
  for (unsigned long c = 1;; ++c) {
    Z x = 2, y = 2, d = 1;
    auto f = [&](const Z &t) {
      Z r = t * t + c;
      mpz_mod(r.get_mpz_t(), r.get_mpz_t(), v.get_mpz_t());
      return r;
    };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      Z diff = x - y;
      mpz_abs(diff.get_mpz_t(), diff.get_mpz_t());
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), v.get_mpz_t());
    }
    if (d != v)
      return d;
  }
}

inline void factor_into(const Z &v, std::map<Z, unsigned> &out) {
  if (v == 1)
    return;
  if (is_prime(v)) {
    ++out[v];
    return;
  }
  Z d = rho(v);
  factor_into(d, out);
  factor_into(Z(v / d), out);
}

/// Trial division by every integer up to `limit`, then rho on what remains.
inline std::map<Z, unsigned> factor(Z v, unsigned long limit = 100000) {
  std::map<Z, unsigned> out;
  for (unsigned long d = 2; d <= limit && mpz_cmp_ui(v.get_mpz_t(), d * d) >= 0;
       ++d)
    while (mpz_divisible_ui_p(v.get_mpz_t(), d)) {
      ++out[Z(d)];
      v /= d;
    }
  if (v > 1)
    factor_into(v, out);
  return out;
}

/// Order of x mod ell by repeated multiplication.
inline unsigned long naive_order(const Z &x, const Z &ell,
                                 unsigned long cap = 1000) {
  Z r = x % ell, acc = r;
  for (unsigned long k = 1; k <= cap; ++k) {
    if (acc == 1)
      return k;
    acc = acc * r % ell;
  }
  return 0;
}

/// Smallest prime of order exactly n dividing q^n - 1, or 0.
inline Z smallest_ppd(unsigned n, unsigned long q) {
  Z v;
  mpz_ui_pow_ui(v.get_mpz_t(), q, n);
  v -= 1;
  for (const auto &[ell, e] : factor(v))
    if (naive_order(Z(q), ell) == n)
      return ell;
  return 0;
}

inline bool is_prime_power(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0)
        n /= p;
      return n == 1;
    }
  return true;
}

} // namespace oracle
