#include "cdcheck/cyclotomic.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

using namespace cdcheck;

namespace {

IntPoly from_i64(const std::vector<std::int64_t> &c) {
  std::vector<BigInt> v;
  for (auto x : c)
    v.emplace_back(static_cast<long>(x));
  return IntPoly(std::move(v));
}

} // namespace

TEST(Cyclotomic, SmallIndices) {
  EXPECT_EQ(cyclotomic(1).to_string(), "q-1");
  EXPECT_EQ(cyclotomic(2).to_string(), "q+1");
  EXPECT_EQ(cyclotomic(12).to_string(), "q^4-q^2+1");
  EXPECT_EQ(cyclotomic(18).to_string(), "q^6-q^3+1");
  EXPECT_EQ(cyclotomic(30).to_string(), "q^8+q^7-q^5-q^4-q^3+q+1");
}

TEST(Cyclotomic, ZeroIndexRejected) {
  EXPECT_THROW(cyclotomic(0), InvalidArgument);
  EXPECT_THROW(factor_pow_minus_one(0), InvalidArgument);
}

TEST(Cyclotomic, MatchesMobiusOracle) {
  for (unsigned n = 1; n <= 64; ++n)
    EXPECT_EQ(cyclotomic(n), from_i64(oracle::phi_coeffs(n))) << "n=" << n;
}

TEST(Cyclotomic, ProductOfDivisorsIsPowMinusOne) {
  for (unsigned n = 1; n <= 64; ++n) {
    IntPoly prod = IntPoly::constant(1);
    for (auto [d, mult] : factor_pow_minus_one(n)) {
      EXPECT_EQ(mult, 1u);
      prod = prod * cyclotomic(d);
    }
    EXPECT_EQ(prod, IntPoly::monomial(n) - IntPoly::constant(1)) << "n=" << n;
  }
}

TEST(Cyclotomic, FactorPowMinusOneDivisors) {
  auto keys = [](unsigned n) {
    std::vector<unsigned> out;
    for (auto [d, m] : factor_pow_minus_one(n))
      out.push_back(d);
    return out;
  };
  EXPECT_EQ(keys(6), (std::vector<unsigned>{1, 2, 3, 6}));
  EXPECT_EQ(keys(1), (std::vector<unsigned>{1}));
  EXPECT_EQ(keys(12), (std::vector<unsigned>{1, 2, 3, 4, 6, 12}));
}

TEST(Cyclotomic, DegreeAndConstantTerm) {
  for (unsigned n = 1; n <= 64; ++n) {
    const IntPoly &p = cyclotomic(n);
    EXPECT_EQ(p.degree(), static_cast<long>(arith::totient(n)));
    EXPECT_EQ(p.leading(), 1);
    if (n >= 2)
      EXPECT_EQ(p.coeff(0), 1);
    else
      EXPECT_EQ(p.coeff(0), -1);
  }
}

TEST(Cyclotomic, ValuesDividePowMinusOne) {
  for (unsigned n = 1; n <= 64; ++n)
    for (unsigned long x = 2; x <= 64; ++x) {
      BigInt v = eval_poly(cyclotomic(n), BigInt(x));
      EXPECT_EQ(v, oracle::phi_value(n, BigInt(x)));
      EXPECT_TRUE(divides(v, pow(x, n) - 1));
    }
}

TEST(Cyclotomic, EvalExamples) {
  EXPECT_EQ(eval_poly(cyclotomic(12), 2), 13);
  EXPECT_EQ(eval_poly(cyclotomic(1), 1), 0);
  IntPoly p = IntPoly::monomial(8) + IntPoly::monomial(4) + IntPoly::constant(1);
  EXPECT_EQ(eval_poly(p, 3), 6643);
  EXPECT_EQ(cyclotomic_value(18, 3), 703);
}

TEST(Cyclotomic, LargeArgumentIsExact) {
  BigInt x("123456789012345678901234567890");
  EXPECT_EQ(eval_poly(cyclotomic(30), x), oracle::phi_value(30, x));
}

TEST(Cyclotomic, DivmodRoundTrip) {
  IntPoly num = IntPoly::monomial(12) - IntPoly::constant(1);
  auto [quo, rem] = divmod(num, cyclotomic(12));
  EXPECT_TRUE(rem.is_zero());
  EXPECT_EQ(quo * cyclotomic(12), num);
  auto [q2, r2] = divmod(IntPoly::monomial(5), cyclotomic(3));
  EXPECT_EQ(q2 * cyclotomic(3) + r2, IntPoly::monomial(5));
  EXPECT_LT(r2.degree(), 2);
  EXPECT_THROW(divmod(num, IntPoly::monomial(1, 2)), InvalidArgument);
}

TEST(Cyclotomic, ZeroPolynomialIsNormalized) {
  IntPoly z = IntPoly::monomial(3) - IntPoly::monomial(3);
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.degree(), -1);
  EXPECT_EQ(z.to_string(), "0");
}

TEST(Arith, SmallHelpers) {
  EXPECT_EQ(arith::divisors(12), (std::vector<unsigned>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(arith::totient(30), 8u);
  EXPECT_TRUE(arith::is_prime_power(27));
  EXPECT_TRUE(arith::is_prime_power(2));
  EXPECT_FALSE(arith::is_prime_power(1));
  EXPECT_FALSE(arith::is_prime_power(18));
  EXPECT_EQ(arith::largest_prime_factor(60), 5u);
  for (std::uint64_t n = 1; n <= 5000; ++n)
    EXPECT_EQ(arith::is_prime_power(n), oracle::is_prime_power(n)) << n;
}

TEST(BigIntHelpers, ExactRoot) {
  EXPECT_EQ(exact_root(343, 3), BigInt(7));
  EXPECT_FALSE(exact_root(344, 3).has_value());
  EXPECT_EQ(pow(3ul, 8) - 1, 6560);
  EXPECT_TRUE(divides(7, 343));
  EXPECT_FALSE(fits_u64(pow(2ul, 64)));
  EXPECT_EQ(to_u64(from_u64(~0ull)), ~0ull);
}
