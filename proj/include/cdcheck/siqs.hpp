#pragma once

// Self-initializing quadratic sieve for composites of roughly 25 to 80
// digits, with the single large prime variation.

#include "cdcheck/bigint.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <iterator>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cdcheck::detail {

namespace siqs {

inline std::uint32_t mulmod32(std::uint32_t a, std::uint32_t b, std::uint32_t m) {
  return static_cast<std::uint32_t>(std::uint64_t(a) * b % m);
}

inline std::uint32_t powmod32(std::uint32_t a, std::uint32_t e, std::uint32_t m) {
  std::uint32_t r = 1 % m;
  while (e) {
    if (e & 1)
      r = mulmod32(r, a, m);
    a = mulmod32(a, a, m);
    e >>= 1;
  }
  return r;
}

inline std::uint32_t invmod32(std::uint32_t a, std::uint32_t m) {
  std::int64_t t = 0, nt = 1, r = m, nr = a % m;
  while (nr) {
    std::int64_t q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  return static_cast<std::uint32_t>(t < 0 ? t + m : t);
}

/// Square root of a quadratic residue a mod odd prime p (Tonelli-Shanks).
inline std::uint32_t sqrtmod32(std::uint32_t a, std::uint32_t p) {
  a %= p;
  if (a == 0)
    return 0;
  if (p % 4 == 3)
    return powmod32(a, (p + 1) / 4, p);
  std::uint32_t q = p - 1, s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  std::uint32_t z = 2;
  while (powmod32(z, (p - 1) / 2, p) != p - 1)
    ++z;
  std::uint32_t m = s, c = powmod32(z, q, p), t = powmod32(a, q, p),
                r = powmod32(a, (q + 1) / 2, p);
  while (t != 1) {
    std::uint32_t i = 0, tt = t;
    while (tt != 1) {
      tt = mulmod32(tt, tt, p);
      ++i;
    }
    std::uint32_t b = c;
    for (std::uint32_t j = 0; j + 1 < m - i; ++j)
      b = mulmod32(b, b, p);
    m = i;
    c = mulmod32(b, b, p);
    t = mulmod32(t, c, p);
    r = mulmod32(r, b, p);
  }
  return r;
}

struct Params {
  unsigned digits;
  std::uint32_t fb_size;
  std::uint32_t half_width;
};

inline Params params_for(unsigned digits) {
  static constexpr Params table[] = {
      {24, 100, 16384},  {30, 200, 16384},  {36, 300, 32768},
      {40, 450, 32768},  {45, 800, 32768},  {50, 1200, 32768},
      {55, 1800, 65536}, {60, 2400, 65536}, {65, 3200, 65536},
      {70, 4200, 98304}, {75, 5500, 98304}, {80, 7000, 131072},
  };
  for (const auto &p : table)
    if (digits <= p.digits)
      return p;
  return table[std::size(table) - 1];
}

/// Knuth-Schroeppel choice of a small squarefree multiplier.
inline std::uint32_t choose_multiplier(const BigInt &n,
                                       const std::vector<std::uint32_t> &primes) {
  static constexpr std::uint32_t candidates[] = {
      1,  2,  3,  5,  6,  7,  10, 11, 13, 14, 15, 17, 19, 21, 22, 23,
      26, 29, 30, 31, 33, 34, 35, 37, 38, 39, 41, 42, 43, 46, 47, 51};
  std::uint32_t best = 1;
  double best_score = -1e300;
  for (std::uint32_t k : candidates) {
    BigInt kn = n * k;
    double score = -0.5 * std::log(double(k));
    std::uint32_t m8 = static_cast<std::uint32_t>(mpz_fdiv_ui(kn.get_mpz_t(), 8));
    if (m8 == 1)
      score += 2 * std::log(2.0);
    else if (m8 == 5)
      score += std::log(2.0);
    else if (m8 == 3 || m8 == 7)
      score += 0.5 * std::log(2.0);
    for (std::uint32_t p : primes) {
      if (p == 2)
        continue;
      if (p > 1000)
        break;
      std::uint32_t r = static_cast<std::uint32_t>(mpz_fdiv_ui(kn.get_mpz_t(), p));
      if (r == 0)
        score += std::log(double(p)) / p;
      else if (powmod32(r, (p - 1) / 2, p) == 1)
        score += 2 * std::log(double(p)) / (p - 1);
    }
    if (score > best_score) {
      best_score = score;
      best = k;
    }
  }
  return best;
}

struct Relation {
  BigInt x;                        // Ax + B, squared on the left
  std::vector<std::uint32_t> fb;   // factor base indices, with multiplicity
  bool negative = false;
  BigInt large = 1;                // product of large primes seen squared
};

} // namespace siqs

/// A nontrivial factor of n (odd, composite, not a perfect power, no prime
/// factor below the small-prime table), or nothing if the sieve gives up.
inline std::optional<BigInt> siqs_factor(const BigInt &n,
                                         const std::vector<std::uint32_t> &primes) {
  using namespace siqs;
  const std::uint32_t k = choose_multiplier(n, primes);
  if (k > 1) {
    BigInt g = gcd(n, BigInt(k));
    if (g > 1 && g < n)
      return g;
  }
  const BigInt kn = n * k;
  const unsigned digits = static_cast<unsigned>(mpz_sizeinbase(kn.get_mpz_t(), 10));
  const Params prm = params_for(digits);
  const std::uint32_t M = prm.half_width;

  // factor base: -1 is column 0; fb[i] is column i + 1
  std::vector<std::uint32_t> fb, root;
  std::vector<std::uint8_t> logp;
  for (std::uint32_t p : primes) {
    if (fb.size() >= prm.fb_size)
      break;
    std::uint32_t r = static_cast<std::uint32_t>(mpz_fdiv_ui(kn.get_mpz_t(), p));
    if (p == 2) {
      fb.push_back(2);
      root.push_back(r % 2);
      logp.push_back(1);
      continue;
    }
    if (mpz_divisible_ui_p(n.get_mpz_t(), p))
      return BigInt(p);
    if (r == 0 || powmod32(r, (p - 1) / 2, p) == 1) {
      fb.push_back(p);
      root.push_back(sqrtmod32(r, p));
      logp.push_back(static_cast<std::uint8_t>(std::lround(std::log2(double(p)))));
    }
  }
  const std::size_t F = fb.size();
  if (F < 30)
    return std::nullopt;
  const std::uint32_t pmax = fb.back();
  const std::uint64_t large_bound = std::uint64_t(pmax) * 64;

  // A = q_1 ... q_s close to sqrt(2kN) / M, q_j drawn from the middle of fb
  BigInt target;
  mpz_sqrt(target.get_mpz_t(), BigInt(2 * kn).get_mpz_t());
  target /= M;
  double target_bits = double(mpz_sizeinbase(target.get_mpz_t(), 2));
  std::size_t lo = std::max<std::size_t>(F / 10, 5), hi = std::max(lo + 8, F / 3);
  hi = std::min(hi, F - 1);
  double mid_bits = std::log2(double(fb[(lo + hi) / 2]));
  unsigned s = std::max(1u, static_cast<unsigned>(std::lround(target_bits / mid_bits)));
  if (s > 20)
    return std::nullopt;

  // sieve threshold: bits of |g(x)| near the interval ends, less the large
  // prime allowance and what the unsieved small primes would have added
  constexpr std::uint32_t sieve_from = 30;
  double gbits = std::log2(double(M)) + double(mpz_sizeinbase(kn.get_mpz_t(), 2)) / 2.0 - 0.5;
  int thresh = static_cast<int>(gbits - std::log2(double(large_bound)) - 6);
  thresh = std::clamp(thresh, 10, 127);
  const std::uint8_t init = static_cast<std::uint8_t>(128 - thresh);

  std::mt19937_64 rng(0x5eed0001u);
  std::set<std::vector<std::size_t>> used_a;
  std::vector<Relation> full;
  std::unordered_map<std::uint64_t, Relation> partial;
  std::set<BigInt> seen_x;
  const std::size_t wanted = F + 1 + 48;

  std::vector<std::uint8_t> sieve(2 * std::size_t(M) + 8);
  std::vector<std::uint32_t> r1(F), r2(F), ainv(F);
  std::vector<bool> in_a(F);
  std::vector<std::vector<std::uint32_t>> bainv2;

  auto trial_divide = [&](long x, const BigInt &a, const BigInt &b,
                          const BigInt &c,
                          const std::vector<std::size_t> &aidx) {
    BigInt xb = a * x + b;
    BigInt g = (a * x + 2 * b) * x + c;
    Relation rel;
    if (g < 0) {
      rel.negative = true;
      g = -g;
    }
    if (g == 0)
      return;
    for (std::size_t j : aidx)
      rel.fb.push_back(static_cast<std::uint32_t>(j));
    std::uint32_t idx = static_cast<std::uint32_t>(x + long(M));
    for (std::size_t i = 0; i < F; ++i) {
      std::uint32_t p = fb[i];
      bool check;
      if (p == 2 || in_a[i] || root[i] == 0)
        check = true;
      else {
        std::uint32_t m = idx % p;
        check = m == r1[i] || m == r2[i];
      }
      if (!check)
        continue;
      while (mpz_divisible_ui_p(g.get_mpz_t(), p)) {
        mpz_divexact_ui(g.get_mpz_t(), g.get_mpz_t(), p);
        rel.fb.push_back(static_cast<std::uint32_t>(i));
      }
    }
    if (!seen_x.insert(xb).second)
      return;
    rel.x = xb % n;
    if (g == 1) {
      full.push_back(std::move(rel));
      return;
    }
    if (g > large_bound)
      return;
    std::uint64_t lp = g.get_ui();
    auto it = partial.find(lp);
    if (it == partial.end()) {
      partial.emplace(lp, std::move(rel));
      return;
    }
    Relation comb = it->second;
    comb.x = comb.x * rel.x % n;
    comb.fb.insert(comb.fb.end(), rel.fb.begin(), rel.fb.end());
    comb.negative = comb.negative != rel.negative;
    comb.large = comb.large * BigInt(static_cast<unsigned long>(lp));
    full.push_back(std::move(comb));
  };

  unsigned attempts = 0;
  while (full.size() < wanted) {
    if (++attempts > 200000)
      return std::nullopt;
    // choose A
    std::vector<std::size_t> aidx;
    BigInt a = 1;
    std::uniform_int_distribution<std::size_t> pick(lo, hi);
    while (aidx.size() + 1 < s) {
      std::size_t j = pick(rng);
      if (fb[j] == 2 || root[j] == 0 ||
          std::find(aidx.begin(), aidx.end(), j) != aidx.end())
        continue;
      aidx.push_back(j);
      a *= fb[j];
    }
    {
      BigInt want = target / a;
      std::size_t best = F;
      BigInt best_err;
      for (std::size_t j = 1; j < F; ++j) {
        if (root[j] == 0 || std::find(aidx.begin(), aidx.end(), j) != aidx.end())
          continue;
        BigInt err = abs(BigInt(fb[j]) - want);
        if (best == F || err < best_err) {
          best = j;
          best_err = err;
        }
      }
      if (best == F)
        return std::nullopt;
      aidx.push_back(best);
      a *= fb[best];
    }
    std::sort(aidx.begin(), aidx.end());
    if (!used_a.insert(aidx).second)
      continue;

    std::fill(in_a.begin(), in_a.end(), false);
    for (std::size_t j : aidx)
      in_a[j] = true;
    std::vector<BigInt> bterm(aidx.size());
    BigInt b = 0;
    for (std::size_t t = 0; t < aidx.size(); ++t) {
      std::uint32_t q = fb[aidx[t]];
      BigInt aq = a / q;
      std::uint32_t aq_mod = static_cast<std::uint32_t>(mpz_fdiv_ui(aq.get_mpz_t(), q));
      std::uint32_t gamma = mulmod32(root[aidx[t]], invmod32(aq_mod, q), q);
      if (gamma > q / 2)
        gamma = q - gamma;
      bterm[t] = aq * gamma;
      b += bterm[t];
    }
    BigInt c = b * b - kn;
    if (!divides(a, c))
      continue;
    c /= a;

    bainv2.assign(aidx.size(), std::vector<std::uint32_t>(F, 0));
    for (std::size_t i = 0; i < F; ++i) {
      std::uint32_t p = fb[i];
      if (p == 2 || in_a[i] || root[i] == 0)
        continue;
      std::uint32_t am = static_cast<std::uint32_t>(mpz_fdiv_ui(a.get_mpz_t(), p));
      ainv[i] = invmod32(am, p);
      std::uint32_t bm = static_cast<std::uint32_t>(mpz_fdiv_ui(b.get_mpz_t(), p));
      std::uint32_t t = root[i];
      std::uint32_t mp = M % p;
      r1[i] = static_cast<std::uint32_t>(
          (std::uint64_t(mulmod32(ainv[i], (t + p - bm) % p, p)) + mp) % p);
      r2[i] = static_cast<std::uint32_t>(
          (std::uint64_t(mulmod32(ainv[i], (2 * std::uint64_t(p) - t - bm) % p, p)) + mp) % p);
      for (std::size_t t2 = 0; t2 < aidx.size(); ++t2) {
        std::uint32_t bt = static_cast<std::uint32_t>(mpz_fdiv_ui(bterm[t2].get_mpz_t(), p));
        bainv2[t2][i] = mulmod32(mulmod32(2, bt, p), ainv[i], p);
      }
    }

    const std::uint32_t polys = 1u << (aidx.size() - 1);
    for (std::uint32_t poly = 0; poly < polys && full.size() < wanted; ++poly) {
      if (poly > 0) {
        unsigned v = static_cast<unsigned>(__builtin_ctz(poly));
        std::uint32_t odd = poly >> v;
        bool plus = (odd % 4) == 3;
        if (plus)
          b += 2 * bterm[v];
        else
          b -= 2 * bterm[v];
        c = (b * b - kn) / a;
        for (std::size_t i = 0; i < F; ++i) {
          std::uint32_t p = fb[i];
          if (p == 2 || in_a[i] || root[i] == 0)
            continue;
          std::uint32_t d = bainv2[v][i];
          if (plus) {
            r1[i] = r1[i] >= d ? r1[i] - d : r1[i] + p - d;
            r2[i] = r2[i] >= d ? r2[i] - d : r2[i] + p - d;
          } else {
            r1[i] += d;
            if (r1[i] >= p)
              r1[i] -= p;
            r2[i] += d;
            if (r2[i] >= p)
              r2[i] -= p;
          }
        }
      }

      std::fill(sieve.begin(), sieve.end(), init);
      const std::uint32_t len = 2 * M;
      for (std::size_t i = 1; i < F; ++i) {
        std::uint32_t p = fb[i];
        if (p < sieve_from || in_a[i] || root[i] == 0)
          continue;
        std::uint8_t lg = logp[i];
        for (std::uint32_t pos = r1[i]; pos < len; pos += p)
          sieve[pos] += lg;
        if (r2[i] != r1[i])
          for (std::uint32_t pos = r2[i]; pos < len; pos += p)
            sieve[pos] += lg;
      }
      for (std::uint32_t pos = 0; pos < len; pos += 8) {
        std::uint64_t word;
        std::memcpy(&word, &sieve[pos], 8);
        if ((word & 0x8080808080808080ull) == 0)
          continue;
        for (std::uint32_t j = pos; j < pos + 8 && j < len; ++j)
          if (sieve[j] & 0x80)
            trial_divide(long(j) - long(M), a, b, c, aidx);
      }
    }
  }

  // linear algebra over GF(2): rows are relations, augmented with identity
  const std::size_t R = full.size(), cols = F + 1;
  const std::size_t wc = (cols + 63) / 64, wr = (R + 63) / 64;
  std::vector<std::vector<std::uint64_t>> mat(R, std::vector<std::uint64_t>(wc + wr, 0));
  for (std::size_t r = 0; r < R; ++r) {
    auto &row = mat[r];
    if (full[r].negative)
      row[0] ^= 1;
    for (std::uint32_t i : full[r].fb)
      row[(i + 1) / 64] ^= 1ull << ((i + 1) % 64);
    row[wc + r / 64] |= 1ull << (r % 64);
  }
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < R; ++col) {
    std::size_t w = col / 64;
    std::uint64_t bit = 1ull << (col % 64);
    std::size_t sel = R;
    for (std::size_t r = pivot_row; r < R; ++r)
      if (mat[r][w] & bit) {
        sel = r;
        break;
      }
    if (sel == R)
      continue;
    std::swap(mat[sel], mat[pivot_row]);
    for (std::size_t r = 0; r < R; ++r)
      if (r != pivot_row && (mat[r][w] & bit))
        for (std::size_t t = 0; t < wc + wr; ++t)
          mat[r][t] ^= mat[pivot_row][t];
    ++pivot_row;
  }

  for (std::size_t r = pivot_row; r < R; ++r) {
    BigInt x = 1, y = 1;
    std::vector<std::uint32_t> expo(F, 0);
    unsigned neg = 0;
    for (std::size_t j = 0; j < R; ++j) {
      if (!(mat[r][wc + j / 64] & (1ull << (j % 64))))
        continue;
      x = x * full[j].x % n;
      y = y * full[j].large % n;
      neg += full[j].negative;
      for (std::uint32_t i : full[j].fb)
        ++expo[i];
    }
    for (std::size_t i = 0; i < F; ++i) {
      if (expo[i] == 0)
        continue;
      BigInt pp;
      mpz_powm_ui(pp.get_mpz_t(), BigInt(fb[i]).get_mpz_t(), expo[i] / 2,
                  n.get_mpz_t());
      y = y * pp % n;
    }
    BigInt g = gcd(x - y, n);
    if (g > 1 && g < n)
      return g;
  }
  return std::nullopt;
}

} // namespace cdcheck::detail
