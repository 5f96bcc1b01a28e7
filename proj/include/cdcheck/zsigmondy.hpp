#pragma once

// Primitive prime divisors of q^n - 1 (Zsigmondy primes).

#include "cdcheck/arith.hpp"
#include "cdcheck/bigint.hpp"
#include "cdcheck/cyclotomic.hpp"
#include "cdcheck/factor.hpp"

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace cdcheck {

enum class PpdException {
  small_n,  ///< n < 3: outside the existence theorem's hypothesis
  pair_2_6, ///< (q, n) = (2, 6): 2^6 - 1 = 63 = 3^2 * 7 has no new prime
};

/// Either a primitive prime divisor or the reason none is reported.
class PpdResult {
public:
  PpdResult(BigInt prime) : outcome_(std::move(prime)) {}
  PpdResult(PpdException e) : outcome_(e) {}

  bool has_prime() const { return std::holds_alternative<BigInt>(outcome_); }
  const BigInt &prime() const { return std::get<BigInt>(outcome_); }
  PpdException exception() const { return std::get<PpdException>(outcome_); }

  std::string to_string() const {
    if (has_prime())
      return prime().get_str();
    return exception() == PpdException::pair_2_6
               ? "none: Zsigmondy exception (2,6)"
               : "none: n < 3 is outside Zsigmondy's theorem";
  }

  friend bool operator==(const PpdResult &a, const PpdResult &b) {
    return a.outcome_ == b.outcome_;
  }

private:
  std::variant<BigInt, PpdException> outcome_;
};

/// True iff the multiplicative order of q modulo prime ell is exactly n.
inline bool has_order(const BigInt &q, const BigInt &ell, unsigned n) {
  if (n == 0)
    return false;
  BigInt qm = q % ell;
  if (qm == 0)
    return false;
  if (powm(qm, n, ell) != 1)
    return false;
  for (auto [s, e] : arith::factor_small(n))
    if (powm(qm, n / static_cast<unsigned>(s), ell) == 1)
      return false;
  return true;
}

/// Smallest n >= 1 with q^n = 1 (mod ell), ell prime.
inline BigInt mult_order(const BigInt &q, const BigInt &ell) {
  if (q < 2)
    throw InvalidArgument("mult_order: q must be >= 2");
  if (!is_probable_prime(ell))
    throw InvalidArgument("mult_order: modulus must be prime");
  if (divides(ell, q))
    throw InvalidArgument("mult_order: " + ell.get_str() + " divides " +
                          q.get_str());
  BigInt m = ell - 1;
  for (auto &[s, e] : factorize(ell - 1)) {
    while (divides(s, m) && powm(q, m / s, ell) == 1)
      m /= s;
  }
  return m;
}

namespace detail {

struct PpdMemo {
  std::mutex mutex;
  std::map<std::pair<unsigned, BigInt>, std::vector<BigInt>> all;
  std::map<std::pair<unsigned, BigInt>, BigInt> smallest;
};

inline PpdMemo &ppd_memo() {
  static PpdMemo memo;
  return memo;
}

/// Phi_n(q) with the largest prime factor of n divided out. For n >= 3 that
/// prime is the only non-primitive one that can divide Phi_n(q), so every
/// prime factor of the result is primitive.
inline BigInt primitive_part(unsigned n, const BigInt &q) {
  BigInt v = cyclotomic_value(n, q);
  if (auto r = arith::largest_prime_factor(n); r != 0) {
    BigInt rr = from_u64(r);
    while (v != 0 && divides(rr, v))
      v /= rr;
  }
  return v;
}

/// Smallest prime factor of the primitive part (n >= 3), or 0 if it is 1.
/// Candidates 1 + kn are tried in increasing order. A composite candidate
/// cannot be the first hit: its prime factors are primitive, so they are
/// also 1 mod n, smaller, and were tried first.
inline BigInt smallest_primitive(unsigned n, const BigInt &q) {
  BigInt v = primitive_part(n, q);
  if (v == 1)
    return 0;
  constexpr std::uint64_t trial_limit = 1u << 22;
  const std::uint64_t stride = n % 2 ? 2ull * n : n;
  for (std::uint64_t ell = 1 + stride; ell <= trial_limit; ell += stride) {
    if (BigInt(static_cast<unsigned long>(ell)) *
            static_cast<unsigned long>(ell) > v)
      return v;
    if (mpz_divisible_ui_p(v.get_mpz_t(), ell))
      return BigInt(static_cast<unsigned long>(ell));
  }
  if (is_probable_prime(v))
    return v;
  return factorize(v).begin()->first;
}

} // namespace detail

/// Every prime ell whose multiplicative order mod ell of q is n, ascending.
/// All such primes divide Phi_n(q), so only that value is factored.
inline std::vector<BigInt> primitive_prime_divisors(unsigned n,
                                                    const BigInt &q) {
  if (n == 0)
    throw InvalidArgument("primitive_prime_divisors: n must be positive");
  if (q < 2)
    throw InvalidArgument("primitive_prime_divisors: q must be >= 2");
  auto &memo = detail::ppd_memo();
  auto key = std::make_pair(n, q);
  {
    std::lock_guard lock(memo.mutex);
    if (auto it = memo.all.find(key); it != memo.all.end())
      return it->second;
  }
  BigInt v = detail::primitive_part(n, q);
  std::vector<BigInt> out;
  if (v > 1) {
    for (auto &[ell, e] : factorize(v))
      if (has_order(q, ell, n))
        out.push_back(ell);
  }
  std::lock_guard lock(memo.mutex);
  memo.all.emplace(key, out);
  return out;
}

/// The smallest primitive prime divisor of q^n - 1, or a certified exception.
inline PpdResult ppd(unsigned n, const BigInt &q) {
  if (n == 0)
    throw InvalidArgument("ppd: n must be positive");
  if (q < 2)
    throw InvalidArgument("ppd: q must be >= 2");
  if (n < 3)
    return PpdException::small_n;
  if (q == 2 && n == 6)
    return PpdException::pair_2_6;
  auto &memo = detail::ppd_memo();
  auto key = std::make_pair(n, q);
  {
    std::lock_guard lock(memo.mutex);
    if (auto it = memo.smallest.find(key); it != memo.smallest.end())
      return it->second;
  }
  BigInt ell = detail::smallest_primitive(n, q);
  if (ell == 0 || !has_order(q, ell, n))
    throw std::logic_error("ppd: no primitive prime divisor for q=" +
                           q.get_str() + ", n=" + std::to_string(n));
  std::lock_guard lock(memo.mutex);
  memo.smallest.emplace(key, ell);
  return ell;
}

/// l_{-n}(q): a primitive prime divisor of q^{2n} - 1 for odd n.
inline PpdResult ppd_neg(unsigned n, const BigInt &q) {
  if (n < 3 || n % 2 == 0)
    throw InvalidArgument("ppd_neg: n must be odd and >= 3");
  if (q == 2 && n == 3)
    throw InvalidArgument("ppd_neg: (q,n) = (2,3) has no primitive divisor");
  return ppd(2 * n, q);
}

/// ell | Phi_n(q) and ell divides no q^k - 1 with k < n.
inline bool is_ppd(const BigInt &ell, unsigned n, const BigInt &q) {
  if (n == 0 || ell < 2)
    return false;
  if (!divides(ell, cyclotomic_value(n, q)))
    return false;
  BigInt qm = q % ell, acc = 1;
  for (unsigned k = 1; k < n; ++k) {
    acc = acc * qm % ell;
    if (acc == 1)
      return false;
  }
  return true;
}

} // namespace cdcheck
