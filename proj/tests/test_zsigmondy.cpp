#include "cdcheck/factor.hpp"
#include "cdcheck/zsigmondy.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

using namespace cdcheck;

TEST(MultOrder, Examples) {
  EXPECT_EQ(mult_order(2, 7), 3);
  EXPECT_EQ(mult_order(2, 13), 12);
  EXPECT_EQ(mult_order(3, 2), 1);
}

TEST(MultOrder, Errors) {
  EXPECT_THROW(mult_order(3, 3), InvalidArgument);
  EXPECT_THROW(mult_order(9, 3), InvalidArgument);
  EXPECT_THROW(mult_order(2, 9), InvalidArgument);
  EXPECT_THROW(mult_order(1, 7), InvalidArgument);
}

TEST(MultOrder, AgreesWithNaiveLoop) {
  for (unsigned long q = 2; q <= 30; ++q)
    for (unsigned long ell : {5ul, 7ul, 11ul, 13ul, 31ul, 97ul, 101ul})
      if (q % ell) {
        EXPECT_EQ(mult_order(q, ell), oracle::naive_order(q, ell))
            << q << " mod " << ell;
      }
}

TEST(Ppd, Examples) {
  EXPECT_EQ(ppd(6, 2).exception(), PpdException::pair_2_6);
  EXPECT_EQ(ppd(6, 2).to_string(), "none: Zsigmondy exception (2,6)");
  EXPECT_EQ(ppd(3, 2).prime(), 7);
  EXPECT_EQ(ppd(18, 3).prime(), 19);
  EXPECT_EQ(ppd(12, 2).prime(), 13);
  EXPECT_EQ(ppd(30, 2).prime(), 331);
}

TEST(Ppd, SmallExponentIsTagged) {
  for (unsigned n : {1u, 2u}) {
    PpdResult r = ppd(n, 5);
    EXPECT_FALSE(r.has_prime());
    EXPECT_EQ(r.exception(), PpdException::small_n);
  }
  EXPECT_THROW(ppd(0, 5), InvalidArgument);
  EXPECT_THROW(ppd(5, 1), InvalidArgument);
}

TEST(Ppd, Negative) {
  EXPECT_EQ(ppd_neg(3, 3).prime(), 7);
  EXPECT_EQ(ppd_neg(5, 2).prime(), 11);
  EXPECT_THROW(ppd_neg(3, 2), InvalidArgument);
  EXPECT_THROW(ppd_neg(4, 3), InvalidArgument);
}

TEST(Ppd, IsPpd) {
  EXPECT_TRUE(is_ppd(13, 12, 2));
  EXPECT_FALSE(is_ppd(7, 6, 2));
  EXPECT_TRUE(is_ppd(3, 1, 4));
  EXPECT_FALSE(is_ppd(1, 1, 4));
}

TEST(Ppd, AgreesWithFactoringOracle) {
  for (unsigned long q = 2; q <= 16; ++q)
    for (unsigned n = 3; n <= 20; ++n) {
      PpdResult r = ppd(n, q);
      BigInt want = oracle::smallest_ppd(n, q);
      if (q == 2 && n == 6) {
        EXPECT_FALSE(r.has_prime());
        EXPECT_EQ(want, 0);
        continue;
      }
      ASSERT_TRUE(r.has_prime()) << "q=" << q << " n=" << n;
      EXPECT_EQ(r.prime(), want) << "q=" << q << " n=" << n;
    }
}

TEST(Ppd, AllPrimitiveDivisorsMatchOracle) {
  for (unsigned long q : {2ul, 3ul, 5ul, 7ul, 8ul, 9ul, 16ul})
    for (unsigned n = 3; n <= 18; ++n) {
      BigInt v = pow(q, n) - 1;
      std::vector<BigInt> want;
      for (const auto &[ell, e] : oracle::factor(v))
        if (oracle::naive_order(q, ell) == n)
          want.push_back(ell);
      EXPECT_EQ(primitive_prime_divisors(n, q), want) << "q=" << q << " n=" << n;
    }
}

TEST(Ppd, DivisorClosure) {
  for (unsigned long q : {2ul, 3ul, 4ul, 5ul, 7ul, 11ul, 64ul})
    for (unsigned n = 3; n <= 36; ++n) {
      PpdResult r = ppd(n, q);
      if (!r.has_prime())
        continue;
      for (unsigned k = 1; k <= 72; ++k)
        EXPECT_EQ(divides(r.prime(), pow(q, k) - 1), k % n == 0)
            << "q=" << q << " n=" << n << " k=" << k;
    }
}

TEST(Factor, RebuildsValue) {
  for (unsigned long q : {3ul, 10ul, 61ul})
    for (unsigned n : {24u, 30u, 36u}) {
      BigInt v = cyclotomic_value(n, q);
      BigInt prod = 1;
      for (const auto &[p, e] : factorize(v)) {
        EXPECT_TRUE(is_probable_prime(p));
        prod *= pow(p, e);
      }
      EXPECT_EQ(prod, v);
    }
}

TEST(Factor, KnownSemiprime) {
  // two 20-digit primes
  BigInt a("10000000000000000051"), b("10000000000000000087");
  auto f = factorize(a * b);
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f.begin()->first, a);
  EXPECT_EQ(f.rbegin()->first, b);
}
