#pragma once

// Dense integer polynomials in q and the cyclotomic polynomials Phi_n(q).

#include "cdcheck/arith.hpp"
#include "cdcheck/bigint.hpp"

#include <cstddef>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

namespace cdcheck {

/// Integer polynomial, coefficient i multiplies q^i. Always normalized: the
/// leading coefficient is nonzero unless the polynomial is zero (empty).
class IntPoly {
public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
  }

  static IntPoly constant(const BigInt &c) { return IntPoly({c}); }

  /// c * q^k
  static IntPoly monomial(std::size_t k, const BigInt &c = 1) {
    std::vector<BigInt> v(k + 1, BigInt(0));
    v[k] = c;
    return IntPoly(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<BigInt> &coeffs() const { return coeffs_; }
  BigInt coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : BigInt(0);
  }
  const BigInt &leading() const { return coeffs_.back(); }

  BigInt operator()(const BigInt &x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = acc * x + *it;
    return acc;
  }

  friend IntPoly operator+(const IntPoly &a, const IntPoly &b) {
    std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()),
                          BigInt(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
      v[i] += b.coeffs_[i];
    return IntPoly(std::move(v));
  }

  friend IntPoly operator-(const IntPoly &a, const IntPoly &b) {
    std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()),
                          BigInt(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
      v[i] -= b.coeffs_[i];
    return IntPoly(std::move(v));
  }

  friend IntPoly operator*(const IntPoly &a, const IntPoly &b) {
    if (a.is_zero() || b.is_zero())
      return {};
    std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPoly(std::move(v));
  }

  friend bool operator==(const IntPoly &a, const IntPoly &b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Long division by a monic divisor. Returns {quotient, remainder}.
  friend std::pair<IntPoly, IntPoly> divmod(const IntPoly &num,
                                            const IntPoly &den) {
    if (den.is_zero() || den.leading() != 1)
      throw InvalidArgument("divmod: divisor must be monic");
    if (num.degree() < den.degree())
      return {IntPoly{}, num};
    std::vector<BigInt> rem = num.coeffs_;
    std::size_t dd = den.coeffs_.size() - 1;
    std::vector<BigInt> quo(rem.size() - dd, BigInt(0));
    for (std::size_t k = quo.size(); k-- > 0;) {
      BigInt c = rem[k + dd];
      quo[k] = c;
      if (c == 0)
        continue;
      for (std::size_t j = 0; j <= dd; ++j)
        rem[k + j] -= c * den.coeffs_[j];
    }
    return {IntPoly(std::move(quo)), IntPoly(std::move(rem))};
  }

  /// Rendered in q with descending powers, e.g. "q^4-q^2+1".
  std::string to_string() const {
    if (is_zero())
      return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      const BigInt &c = coeffs_[i];
      if (c == 0)
        continue;
      BigInt mag = abs(c);
      if (c < 0)
        out += "-";
      else if (!out.empty())
        out += "+";
      if (i == 0 || mag != 1)
        out += mag.get_str();
      if (i >= 1)
        out += "q";
      if (i >= 2)
        out += "^" + std::to_string(i);
    }
    return out;
  }

private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0)
      coeffs_.pop_back();
  }

  std::vector<BigInt> coeffs_;
};

inline BigInt eval_poly(const IntPoly &p, const BigInt &x) { return p(x); }

namespace detail {

struct CyclotomicMemo {
  std::shared_mutex mutex;
  std::map<unsigned, IntPoly> table;
};

inline CyclotomicMemo &cyclotomic_memo() {
  static CyclotomicMemo memo;
  return memo;
}

} // namespace detail

/// Phi_n, built by exact division of q^n - 1 by every Phi_d with d | n, d < n.
/// Memoized per process; references stay valid for the process lifetime.
inline const IntPoly &cyclotomic(unsigned n) {
  if (n == 0)
    throw InvalidArgument("cyclotomic: n must be positive");
  auto &memo = detail::cyclotomic_memo();
  {
    std::shared_lock lock(memo.mutex);
    if (auto it = memo.table.find(n); it != memo.table.end())
      return it->second;
  }
  IntPoly p = IntPoly::monomial(n) - IntPoly::constant(1);
  for (unsigned d : arith::divisors(n)) {
    if (d == n)
      continue;
    auto [quo, rem] = divmod(p, cyclotomic(d));
    if (!rem.is_zero())
      throw std::logic_error("cyclotomic: inexact division");
    p = std::move(quo);
  }
  std::unique_lock lock(memo.mutex);
  return memo.table.try_emplace(n, std::move(p)).first->second;
}

/// q^n - 1 = prod_{d | n} Phi_d: every divisor of n with multiplicity 1.
inline std::map<unsigned, unsigned> factor_pow_minus_one(unsigned n) {
  if (n == 0)
    throw InvalidArgument("factor_pow_minus_one: n must be positive");
  std::map<unsigned, unsigned> out;
  for (unsigned d : arith::divisors(n))
    out.emplace(d, 1u);
  return out;
}

/// Phi_n(q) as an integer.
inline BigInt cyclotomic_value(unsigned n, const BigInt &q) {
  return cyclotomic(n)(q);
}

} // namespace cdcheck
