#pragma once

// Prime factorization of the moderately sized integers that show up as
// cyclotomic values: trial division, a short Pollard-Brent run, Lenstra's
// elliptic curve method (Montgomery curves, two stages) and a quadratic sieve.

#include "cdcheck/bigint.hpp"
#include "cdcheck/siqs.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <cmath>
#include <cstdint>
#include <iterator>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <vector>

namespace cdcheck {

namespace detail {

inline std::vector<std::uint32_t> sieve_primes(std::uint32_t limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 2; i <= limit; ++i) {
    if (composite[i])
      continue;
    out.push_back(i);
    for (std::uint64_t j = std::uint64_t(i) * i; j <= limit; j += i)
      composite[j] = true;
  }
  return out;
}

inline const std::vector<std::uint32_t> &small_primes() {
  static const std::vector<std::uint32_t> primes = sieve_primes(1u << 16);
  return primes;
}

/// A nontrivial factor of odd composite n (Brent's variant of rho), or
/// nothing within max_steps iterations.
inline std::optional<BigInt> pollard_brent(const BigInt &n,
                                           unsigned long max_steps,
                                           unsigned long c = 1) {
  constexpr unsigned long batch = 128;
  BigInt y = 2, x, ys, g = 1, prod = 1;
  unsigned long r = 1, steps = 0;
  auto step = [&](BigInt &v) {
    v = v * v + c;
    v %= n;
  };
  while (g == 1) {
    if (steps > max_steps)
      return std::nullopt;
    x = y;
    for (unsigned long i = 0; i < r; ++i)
      step(y);
    unsigned long k = 0;
    while (k < r && g == 1) {
      ys = y;
      for (unsigned long i = 0; i < std::min(batch, r - k); ++i) {
        step(y);
        prod = prod * abs(x - y) % n;
      }
      g = gcd(prod, n);
      k += batch;
    }
    steps += 2 * r;
    r *= 2;
  }
  if (g == n) {
    // batch overshot; walk one step at a time from the saved point
    do {
      step(ys);
      g = gcd(abs(x - ys), n);
    } while (g == 1);
  }
  if (g == n)
    return std::nullopt;
  return g;
}

/// Residues mod odd n in Montgomery form over a fixed number of 64-bit limbs.
template <std::size_t L> class MontField {
public:
  using Elem = std::array<std::uint64_t, L>;

  explicit MontField(const BigInt &n) : nbig_(n) {
    export_limbs(n, n_);
    // -n^{-1} mod 2^64 by Newton iteration
    std::uint64_t inv = 1;
    for (int i = 0; i < 6; ++i)
      inv *= 2 - n_[0] * inv;
    ninv_ = ~inv + 1;
    BigInt r2 = (BigInt(1) << (2 * 64 * L)) % n;
    export_limbs(r2, r2_);
    one_ = to_mont(BigInt(1));
  }

  Elem to_mont(const BigInt &x) const {
    BigInt y = x % nbig_;
    if (y < 0)
      y += nbig_;
    Elem e{};
    export_limbs(y, e);
    return mul(e, r2_);
  }

  BigInt from_mont(const Elem &a) const {
    Elem one{};
    one[0] = 1;
    Elem r = mul(a, one);
    BigInt out;
    mpz_import(out.get_mpz_t(), L, -1, sizeof(std::uint64_t), 0, 0, r.data());
    return out;
  }

  /// Any representative of a; gcd with n is unaffected by the R factor.
  BigInt raw(const Elem &a) const {
    BigInt out;
    mpz_import(out.get_mpz_t(), L, -1, sizeof(std::uint64_t), 0, 0, a.data());
    return out;
  }

  const Elem &one() const { return one_; }

  Elem mul(const Elem &a, const Elem &b) const {
    using u128 = unsigned __int128;
    std::array<std::uint64_t, L + 2> t{};
#pragma GCC unroll 8
    for (std::size_t i = 0; i < L; ++i) {
      std::uint64_t c = 0;
#pragma GCC unroll 8
      for (std::size_t j = 0; j < L; ++j) {
        u128 s = u128(t[j]) + u128(a[j]) * b[i] + c;
        t[j] = static_cast<std::uint64_t>(s);
        c = static_cast<std::uint64_t>(s >> 64);
      }
      u128 s = u128(t[L]) + c;
      t[L] = static_cast<std::uint64_t>(s);
      t[L + 1] = static_cast<std::uint64_t>(s >> 64);
      std::uint64_t m = t[0] * ninv_;
      s = u128(t[0]) + u128(m) * n_[0];
      c = static_cast<std::uint64_t>(s >> 64);
#pragma GCC unroll 8
      for (std::size_t j = 1; j < L; ++j) {
        s = u128(t[j]) + u128(m) * n_[j] + c;
        t[j - 1] = static_cast<std::uint64_t>(s);
        c = static_cast<std::uint64_t>(s >> 64);
      }
      s = u128(t[L]) + c;
      t[L - 1] = static_cast<std::uint64_t>(s);
      t[L] = t[L + 1] + static_cast<std::uint64_t>(s >> 64);
    }
    Elem r;
    for (std::size_t i = 0; i < L; ++i)
      r[i] = t[i];
    if (t[L] || !less(r, n_))
      sub_n(r);
    return r;
  }

  Elem add(const Elem &a, const Elem &b) const {
    Elem r;
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < L; ++i) {
      unsigned __int128 s = (unsigned __int128)a[i] + b[i] + c;
      r[i] = static_cast<std::uint64_t>(s);
      c = static_cast<std::uint64_t>(s >> 64);
    }
    if (c || !less(r, n_))
      sub_n(r);
    return r;
  }

  Elem sub(const Elem &a, const Elem &b) const {
    Elem r;
    std::uint64_t borrow = 0;
    for (std::size_t i = 0; i < L; ++i) {
      std::uint64_t d = a[i] - b[i] - borrow;
      borrow = (a[i] < b[i] || (a[i] == b[i] && borrow)) ? 1 : 0;
      r[i] = d;
    }
    if (borrow) {
      std::uint64_t c = 0;
      for (std::size_t i = 0; i < L; ++i) {
        unsigned __int128 s = (unsigned __int128)r[i] + n_[i] + c;
        r[i] = static_cast<std::uint64_t>(s);
        c = static_cast<std::uint64_t>(s >> 64);
      }
    }
    return r;
  }

private:
  static void export_limbs(const BigInt &v, Elem &out) {
    out.fill(0);
    std::size_t count = 0;
    mpz_export(out.data(), &count, -1, sizeof(std::uint64_t), 0, 0,
               v.get_mpz_t());
  }

  static bool less(const Elem &a, const Elem &b) {
    for (std::size_t i = L; i-- > 0;)
      if (a[i] != b[i])
        return a[i] < b[i];
    return false;
  }

  void sub_n(Elem &r) const {
    std::uint64_t borrow = 0;
    for (std::size_t i = 0; i < L; ++i) {
      std::uint64_t d = r[i] - n_[i] - borrow;
      borrow = (r[i] < n_[i] || (r[i] == n_[i] && borrow)) ? 1 : 0;
      r[i] = d;
    }
  }

  BigInt nbig_;
  Elem n_{}, r2_{}, one_{};
  std::uint64_t ninv_ = 0;
};

/// The same interface on plain GMP integers, for moduli too wide for the
/// fixed-limb fields.
class MpzField {
public:
  using Elem = BigInt;
  explicit MpzField(const BigInt &n) : n_(n) {}
  Elem to_mont(const BigInt &x) const {
    BigInt y = x % n_;
    return y < 0 ? y + n_ : y;
  }
  BigInt from_mont(const Elem &a) const { return a; }
  BigInt raw(const Elem &a) const { return a; }
  Elem one() const { return 1; }
  Elem mul(const Elem &a, const Elem &b) const {
    BigInt r;
    mpz_mul(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n_.get_mpz_t());
    return r;
  }
  Elem add(const Elem &a, const Elem &b) const {
    BigInt r = a + b;
    if (r >= n_)
      r -= n_;
    return r;
  }
  Elem sub(const Elem &a, const Elem &b) const {
    BigInt r = a - b;
    if (r < 0)
      r += n_;
    return r;
  }

private:
  BigInt n_;
};

/// Montgomery-curve x-only arithmetic, (X : Z) coordinates.
template <class Field> class EcmCurve {
public:
  using Elem = typename Field::Elem;
  struct Point {
    Elem x, z;
  };

  EcmCurve(const Field &f, Elem a24) : f_(f), a24_(std::move(a24)) {}

  Point dbl(const Point &p) const {
    Elem s = f_.add(p.x, p.z), d = f_.sub(p.x, p.z);
    Elem t1 = f_.mul(s, s), t2 = f_.mul(d, d);
    Elem t3 = f_.sub(t1, t2);
    return {f_.mul(t1, t2), f_.mul(t3, f_.add(t2, f_.mul(a24_, t3)))};
  }

  /// p + q given diff = p - q.
  Point add(const Point &p, const Point &q, const Point &diff) const {
    Elem u = f_.mul(f_.sub(p.x, p.z), f_.add(q.x, q.z));
    Elem v = f_.mul(f_.add(p.x, p.z), f_.sub(q.x, q.z));
    Elem s = f_.add(u, v), d = f_.sub(u, v);
    return {f_.mul(diff.z, f_.mul(s, s)), f_.mul(diff.x, f_.mul(d, d))};
  }

  Point mul(const Point &p, std::uint64_t k) const {
    if (k == 1)
      return p;
    Point r0 = p, r1 = dbl(p);
    for (int i = 62 - __builtin_clzll(k); i >= 0; --i) {
      if ((k >> i) & 1) {
        r0 = add(r1, r0, p);
        r1 = dbl(r1);
      } else {
        r1 = add(r1, r0, p);
        r0 = dbl(r0);
      }
    }
    return r0;
  }

private:
  const Field &f_;
  Elem a24_;
};

/// Primes up to b1 for stage 1 and a primality table for (b1, b2].
struct EcmBounds {
  std::uint32_t b1 = 0;
  std::uint64_t b2 = 0;
  std::vector<std::uint32_t> primes;
  std::vector<bool> stage2_prime;

  EcmBounds(std::uint32_t b1_, std::uint64_t b2_) : b1(b1_), b2(b2_) {
    primes = sieve_primes(std::max<std::uint32_t>(
        b1, static_cast<std::uint32_t>(std::sqrt(double(b2))) + 1));
    stage2_prime.assign(b2 - b1 + 1, true);
    for (std::uint32_t p : primes) {
      if (std::uint64_t(p) * p > b2)
        break;
      std::uint64_t start = std::max<std::uint64_t>(std::uint64_t(p) * p,
                                                    (b1 + p - 1) / p * p);
      for (std::uint64_t m = start; m <= b2; m += p)
        stage2_prime[m - b1] = false;
    }
  }

  bool prime_in_stage2(std::uint64_t m) const {
    return m > b1 && m <= b2 && stage2_prime[m - b1];
  }
};

/// One ECM curve (Suyama parametrization with the given sigma). Returns a
/// factor of n, possibly n itself, or nothing.
template <class Field>
std::optional<BigInt> ecm_curve(const Field &f, const BigInt &n,
                                unsigned long sigma, const EcmBounds &bounds) {
  BigInt s = sigma;
  BigInt u = (s * s - 5) % n, v = 4 * s % n;
  BigInt x0 = u * u * u % n, z0 = v * v * v % n;
  BigInt vu = v - u;
  BigInt num = vu * vu * vu * (3 * u + v) % n;
  BigInt den = 16 * x0 * v % n;
  if (den < 0)
    den += n;
  BigInt inv;
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), n.get_mpz_t()) == 0) {
    BigInt g = gcd(den, n);
    if (g > 1 && g < n)
      return g;
    return std::nullopt;
  }
  using Curve = EcmCurve<Field>;
  using Point = typename Curve::Point;
  Curve curve(f, f.to_mont(num * inv));
  Point q{f.to_mont(x0), f.to_mont(z0)};

  // stage 1: multiply by every prime power up to b1
  for (std::uint32_t p : bounds.primes) {
    if (p > bounds.b1)
      break;
    std::uint64_t pk = p;
    while (pk * p <= bounds.b1)
      pk *= p;
    q = curve.mul(q, pk);
  }
  BigInt g = gcd(f.raw(q.z), n);
  if (g > 1)
    return g;

  // stage 2: one prime in (b1, b2], baby steps j < d/2, giant steps m*d
  constexpr unsigned d = 2310;
  std::vector<unsigned> js;
  for (unsigned j = 1; j < d / 2; j += 2)
    if (std::gcd(j, d) == 1)
      js.push_back(j);
  std::vector<Point> baby(d / 2 + 1);
  Point q2 = curve.dbl(q);
  baby[1] = q;
  baby[3] = curve.add(q2, q, q);
  for (unsigned j = 5; j < d / 2; j += 2)
    baby[j] = curve.add(baby[j - 2], q2, baby[j - 4]);

  std::uint64_t m0 = std::max<std::uint64_t>(2, bounds.b1 / d);
  Point step = curve.mul(q, d);
  Point prev = curve.mul(q, (m0 - 1) * d);
  Point cur = curve.mul(q, m0 * d);
  auto acc = f.one();
  for (std::uint64_t m = m0; m * d < bounds.b2 + d; ++m) {
    for (unsigned j : js) {
      if (bounds.prime_in_stage2(m * d + j) ||
          bounds.prime_in_stage2(m * d - j))
        acc = f.mul(acc, f.sub(f.mul(cur.x, baby[j].z),
                               f.mul(baby[j].x, cur.z)));
    }
    Point next = curve.add(cur, step, prev);
    prev = cur;
    cur = next;
  }
  g = gcd(f.raw(acc), n);
  if (g > 1)
    return g;
  return std::nullopt;
}

inline constexpr std::uint32_t ecm_b1[] = {2000, 11000, 50000, 250000, 1000000};
inline constexpr unsigned ecm_curves[] = {25, 90, 300, 700, 1800};
inline constexpr std::size_t ecm_levels = std::size(ecm_b1);

/// Bounds for schedule row i, built on first use (the later rows sieve
/// up to 10^8).
inline const EcmBounds &ecm_bounds(std::size_t i) {
  static std::array<std::once_flag, ecm_levels> once;
  static std::array<std::unique_ptr<EcmBounds>, ecm_levels> table;
  std::call_once(once[i], [i] {
    table[i] = std::make_unique<EcmBounds>(ecm_b1[i],
                                           std::uint64_t(ecm_b1[i]) * 100);
  });
  return *table[i];
}

/// Runs the first `levels` rows of the curve schedule.
template <class Field>
std::optional<BigInt> ecm(const BigInt &n, std::size_t levels) {
  Field f(n);
  unsigned long sigma = 6;
  for (std::size_t i = 0; i < std::min(levels, ecm_levels); ++i)
    for (unsigned c = 0; c < ecm_curves[i]; ++c, ++sigma)
      if (auto g = ecm_curve(f, n, sigma, ecm_bounds(i)); g && *g != n)
        return g;
  return std::nullopt;
}

inline std::optional<BigInt> ecm_any(const BigInt &n, std::size_t levels) {
  switch (mpz_size(n.get_mpz_t())) {
  case 1: return ecm<MontField<1>>(n, levels);
  case 2: return ecm<MontField<2>>(n, levels);
  case 3: return ecm<MontField<3>>(n, levels);
  case 4: return ecm<MontField<4>>(n, levels);
  case 5: return ecm<MontField<5>>(n, levels);
  case 6: return ecm<MontField<6>>(n, levels);
  default: return ecm<MpzField>(n, levels);
  }
}

/// A nontrivial factor of composite n, not a perfect power. The curve
/// sequence is fixed, so results are reproducible.
inline BigInt find_factor(const BigInt &n) {
  if (auto f = pollard_brent(n, 1ul << 15))
    return *f;
  // ECM finds small factors cheaply; the sieve's cost depends only on the
  // size of n, so it takes over once ECM stops paying off
  const auto digits = mpz_sizeinbase(n.get_mpz_t(), 10);
  if (digits >= 26 && digits <= 80) {
    if (auto g = ecm_any(n, 1))
      return *g;
    static const std::vector<std::uint32_t> primes = sieve_primes(1u << 20);
    if (auto g = siqs_factor(n, primes))
      return *g;
  }
  if (auto g = ecm_any(n, ecm_levels))
    return *g;
  // last resort
  for (unsigned long c = 2;; ++c)
    if (auto f = pollard_brent(n, ~0ul, c))
      return *f;
}

inline void factor_into(const BigInt &n, unsigned mult,
                        std::map<BigInt, unsigned> &out) {
  if (n == 1)
    return;
  if (is_probable_prime(n)) {
    out[n] += mult;
    return;
  }
  if (mpz_perfect_power_p(n.get_mpz_t())) {
    for (unsigned long k = mpz_sizeinbase(n.get_mpz_t(), 2); k >= 2; --k) {
      if (auto r = exact_root(n, k)) {
        factor_into(*r, mult * static_cast<unsigned>(k), out);
        return;
      }
    }
  }
  BigInt d = find_factor(n);
  factor_into(d, mult, out);
  factor_into(n / d, mult, out);
}

} // namespace detail

/// Full prime factorization of n >= 1 (prime -> exponent, ascending primes).
inline std::map<BigInt, unsigned> factorize(BigInt n) {
  if (n < 1)
    throw InvalidArgument("factorize: n must be positive");
  std::map<BigInt, unsigned> out;
  for (std::uint32_t p : detail::small_primes()) {
    if (n == 1)
      break;
    if (BigInt(p) * p > n)
      break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      ++out[BigInt(p)];
      n /= p;
    }
  }
  if (n > 1)
    detail::factor_into(n, 1, out);
  return out;
}

inline std::vector<BigInt> prime_divisors(const BigInt &n) {
  std::vector<BigInt> out;
  for (auto &[p, e] : factorize(n))
    out.push_back(p);
  return out;
}

} // namespace cdcheck
