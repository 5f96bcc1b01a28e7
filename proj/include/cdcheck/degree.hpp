#pragma once

// Factored character-degree expressions (1/t) q^a prod Phi_k^{e_k} and their
// numeric semantics at a concrete prime power.
//
// Coprimality and divisibility are always decided on evaluated integers.
// Distinct cyclotomic factors share primes (3 | Phi_1(4) and 3 | Phi_3(4)), so
// comparing exponent maps would give wrong answers.

#include "cdcheck/arith.hpp"
#include "cdcheck/bigint.hpp"
#include "cdcheck/cyclotomic.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace cdcheck {

/// Evaluation of a degree expression left a nonzero remainder: the
/// expression was used at a q outside its constraints.
class IntegralityViolation : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// q = p^f with p prime and f >= 1.
struct PrimePower {
  std::uint64_t p = 2;
  unsigned f = 1;
  BigInt value = 2;

  static PrimePower make(std::uint64_t p, unsigned f) {
    if (!arith::is_prime_small(p))
      throw InvalidArgument("prime power: " + std::to_string(p) +
                            " is not prime");
    if (f == 0)
      throw InvalidArgument("prime power: exponent must be >= 1");
    return PrimePower{p, f, pow(p, f)};
  }

  static PrimePower from_value(std::uint64_t q) {
    auto [p, f] = arith::prime_power_parts(q);
    if (p == 0)
      throw InvalidArgument(std::to_string(q) + " is not a prime power");
    return make(p, f);
  }

  bool odd() const { return p != 2; }
  std::string to_string() const { return value.get_str(); }

  friend bool operator==(const PrimePower &a, const PrimePower &b) {
    return a.p == b.p && a.f == b.f;
  }
  friend bool operator<(const PrimePower &a, const PrimePower &b) {
    return a.value < b.value;
  }
};

/// All prime powers q with lo <= q <= hi, ascending.
inline std::vector<PrimePower> prime_powers_between(std::uint64_t lo,
                                                    std::uint64_t hi) {
  std::vector<PrimePower> out;
  for (std::uint64_t q = std::max<std::uint64_t>(lo, 2); q <= hi; ++q)
    if (arith::is_prime_power(q))
      out.push_back(PrimePower::from_value(q));
  return out;
}

/// (1/denom) * q^q_exp * prod_k Phi_k(q)^{e_k}
struct FactoredDegree {
  unsigned denom = 1;
  unsigned q_exp = 0;
  std::map<unsigned, unsigned> cyclo_exps;

  static constexpr unsigned max_denom = 6;
  static constexpr unsigned max_index = 30;

  /// Checks the shape used by catalog data: t in 1..6, indices in 1..30,
  /// exponents positive.
  void validate() const {
    if (denom < 1 || denom > max_denom)
      throw InvalidArgument("degree denominator must lie in 1..6, got " +
                            std::to_string(denom));
    for (auto [k, e] : cyclo_exps) {
      if (k < 1 || k > max_index)
        throw InvalidArgument("cyclotomic index out of range: " +
                              std::to_string(k));
      if (e == 0)
        throw InvalidArgument("cyclotomic exponent must be positive (Phi_" +
                              std::to_string(k) + ")");
    }
  }

  /// Total degree as a polynomial in q.
  unsigned q_degree() const {
    unsigned d = q_exp;
    for (auto [k, e] : cyclo_exps)
      d += e * arith::totient(k);
    return d;
  }

  /// Everything except the 1/denom prefactor, evaluated at q.
  BigInt numerator_at(const BigInt &q) const {
    BigInt v = pow(q, q_exp);
    for (auto [k, e] : cyclo_exps)
      v *= pow(cyclotomic_value(k, q), e);
    return v;
  }

  std::string to_string() const {
    std::string out;
    auto sep = [&] {
      if (!out.empty())
        out += " ";
    };
    if (denom != 1)
      out += "1/" + std::to_string(denom);
    if (q_exp > 0) {
      sep();
      out += q_exp == 1 ? "q" : "q^" + std::to_string(q_exp);
    }
    for (auto [k, e] : cyclo_exps) {
      sep();
      out += "Phi" + std::to_string(k);
      if (e != 1)
        out += "^" + std::to_string(e);
    }
    return out.empty() ? "1" : out;
  }

  friend bool operator==(const FactoredDegree &, const FactoredDegree &) =
      default;

  /// Product of two expressions: exponents add, denominators multiply.
  /// The result may carry a denominator above 6; it is not catalog data.
  friend FactoredDegree operator*(const FactoredDegree &a,
                                  const FactoredDegree &b) {
    FactoredDegree r = a;
    r.denom *= b.denom;
    r.q_exp += b.q_exp;
    for (auto [k, e] : b.cyclo_exps)
      r.cyclo_exps[k] += e;
    return r;
  }
};

/// Exact value at q. Throws IntegralityViolation if 1/denom does not cancel.
inline BigInt evaluate(const FactoredDegree &d, const PrimePower &q) {
  BigInt num = d.numerator_at(q.value);
  if (!mpz_divisible_ui_p(num.get_mpz_t(), d.denom))
    throw IntegralityViolation("degree " + d.to_string() +
                               " is not integral at q=" + q.to_string());
  return num / d.denom;
}

inline bool is_integral_at(const FactoredDegree &d, const PrimePower &q) {
  return mpz_divisible_ui_p(d.numerator_at(q.value).get_mpz_t(), d.denom) != 0;
}

/// Largest power of p dividing v (v >= 1).
inline BigInt p_part(const BigInt &v, const BigInt &p) {
  if (v < 1)
    throw InvalidArgument("p_part: value must be positive");
  BigInt rest;
  mp_bitcnt_t k = mpz_remove(rest.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
  return pow(p, k);
}

/// v with every factor of p removed.
inline BigInt p_prime_part(const BigInt &v, const BigInt &p) {
  if (v < 1)
    throw InvalidArgument("p_prime_part: value must be positive");
  BigInt rest;
  mpz_remove(rest.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
  return rest;
}

inline BigInt gcd_at(const FactoredDegree &a, const FactoredDegree &b,
                     const PrimePower &q) {
  return gcd(evaluate(a, q), evaluate(b, q));
}

inline bool divides_at(const FactoredDegree &a, const FactoredDegree &b,
                       const PrimePower &q) {
  return divides(evaluate(a, q), evaluate(b, q));
}

/// No listed prime divides the value of d at q.
inline bool coprime_to_at(const FactoredDegree &d, const PrimePower &q,
                          const std::vector<BigInt> &primes) {
  BigInt v = evaluate(d, q);
  for (const auto &ell : primes)
    if (divides(ell, v))
      return false;
  return true;
}

/// Convenience builder: make_degree(t, a, {{k, e}, ...}).
inline FactoredDegree make_degree(unsigned denom, unsigned q_exp,
                                  std::map<unsigned, unsigned> exps = {}) {
  FactoredDegree d{denom, q_exp, std::move(exps)};
  d.validate();
  return d;
}

} // namespace cdcheck
