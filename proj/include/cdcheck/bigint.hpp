#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace cdcheck {

using BigInt = mpz_class;

/// Thrown for inputs outside an operation's domain (n = 0, l | q, ...).
class InvalidArgument : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

inline BigInt pow(const BigInt &base, unsigned long exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

inline BigInt pow(unsigned long base, unsigned long exponent) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exponent);
  return r;
}

inline BigInt powm(const BigInt &base, const BigInt &exponent,
                   const BigInt &modulus) {
  BigInt r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(),
           modulus.get_mpz_t());
  return r;
}

inline BigInt gcd(const BigInt &a, const BigInt &b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline bool divides(const BigInt &d, const BigInt &v) {
  return mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t()) != 0;
}

/// Strong probable-prime test (GMP runs Baillie-PSW followed by extra
/// Miller-Rabin rounds); no known counterexample exists.
inline bool is_probable_prime(const BigInt &v) {
  if (v < 2)
    return false;
  return mpz_probab_prime_p(v.get_mpz_t(), 32) != 0;
}

/// Exact integer k-th root: the y with y^k == v, if one exists.
inline std::optional<BigInt> exact_root(const BigInt &v, unsigned long k) {
  if (k == 0 || v < 0)
    return std::nullopt;
  BigInt y;
  if (mpz_root(y.get_mpz_t(), v.get_mpz_t(), k) == 0)
    return std::nullopt;
  return y;
}

inline std::string to_string(const BigInt &v) { return v.get_str(); }

inline bool fits_u64(const BigInt &v) {
  return v >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t to_u64(const BigInt &v) {
  if (!fits_u64(v))
    throw InvalidArgument("value does not fit in 64 bits: " + v.get_str());
  // mpz_get_ui is 64-bit on LP64 targets
  return static_cast<std::uint64_t>(mpz_get_ui(v.get_mpz_t()));
}

inline BigInt from_u64(std::uint64_t v) {
  BigInt r;
  mpz_set_ui(r.get_mpz_t(), static_cast<unsigned long>(v));
  return r;
}

} // namespace cdcheck
