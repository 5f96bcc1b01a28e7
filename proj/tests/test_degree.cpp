#include "cdcheck/catalog.hpp"
#include "cdcheck/degree.hpp"
#include "cdcheck/zsigmondy.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

using namespace cdcheck;

namespace {

PrimePower Q(std::uint64_t q) { return PrimePower::from_value(q); }

/// Independent evaluation through the Mobius-product oracle.
BigInt oracle_eval(const FactoredDegree &d, const PrimePower &q) {
  BigInt v = pow(q.value, d.q_exp);
  for (auto [k, e] : d.cyclo_exps)
    v *= pow(oracle::phi_value(k, q.value), e);
  return v / d.denom;
}

} // namespace

TEST(PrimePower, Construction) {
  PrimePower q = Q(27);
  EXPECT_EQ(q.p, 3u);
  EXPECT_EQ(q.f, 3u);
  EXPECT_EQ(q.value, 27);
  EXPECT_TRUE(q.odd());
  EXPECT_FALSE(Q(16).odd());
  EXPECT_THROW(Q(12), InvalidArgument);
  EXPECT_THROW(Q(1), InvalidArgument);
  EXPECT_THROW(PrimePower::make(4, 1), InvalidArgument);
  EXPECT_THROW(PrimePower::make(2, 0), InvalidArgument);
}

TEST(PrimePower, Enumeration) {
  std::vector<std::uint64_t> got;
  for (const auto &q : prime_powers_between(3, 16))
    got.push_back(to_u64(q.value));
  EXPECT_EQ(got, (std::vector<std::uint64_t>{3, 4, 5, 7, 8, 9, 11, 13, 16}));
}

TEST(Degree, EvaluateExamples) {
  auto d = make_degree(1, 0, {{3, 1}, {6, 1}, {12, 1}});
  EXPECT_EQ(evaluate(d, Q(3)), 6643);
  EXPECT_EQ(evaluate(make_degree(1, 24), Q(3)), pow(3ul, 24));
  auto quarter = make_degree(4, 4, {{1, 4}, {2, 4}, {3, 2}, {6, 2}});
  for (std::uint64_t q : {3, 4, 5, 8, 9})
    EXPECT_TRUE(is_integral_at(quarter, Q(q))) << q;
}

TEST(Degree, IntegralityViolation) {
  auto third = make_degree(3, 0, {{3, 1}});
  // Phi3(3) = 13
  EXPECT_FALSE(is_integral_at(third, Q(3)));
  EXPECT_THROW(evaluate(third, Q(3)), IntegralityViolation);
  EXPECT_EQ(evaluate(third, Q(4)), 7);
}

TEST(Degree, Validation) {
  EXPECT_THROW(make_degree(7, 0), InvalidArgument);
  EXPECT_THROW(make_degree(0, 0), InvalidArgument);
  EXPECT_THROW(make_degree(1, 0, {{31, 1}}), InvalidArgument);
  EXPECT_THROW(make_degree(1, 0, {{3, 0}}), InvalidArgument);
}

TEST(Degree, Rendering) {
  auto d = make_degree(3, 4, {{1, 4}, {2, 4}, {4, 2}, {8, 1}});
  EXPECT_EQ(d.to_string(), "1/3 q^4 Phi1^4 Phi2^4 Phi4^2 Phi8");
  EXPECT_EQ(make_degree(1, 0).to_string(), "1");
  EXPECT_EQ(make_degree(2, 1, {{4, 1}}).to_string(), "1/2 q Phi4");
}

TEST(Degree, PParts) {
  EXPECT_EQ(p_part(48, 2), 16);
  EXPECT_EQ(p_prime_part(48, 2), 3);
  EXPECT_EQ(p_part(6643, 3), 1);
  auto d = make_degree(2, 13, {{4, 1}, {8, 1}, {12, 1}});
  EXPECT_EQ(p_part(evaluate(d, Q(4)), 2), pow(2ul, 25));
}

TEST(Degree, GcdIsNumeric) {
  // Phi1(4) = 3 and Phi3(4) = 21 share 3 although the indices differ.
  EXPECT_EQ(gcd_at(make_degree(1, 0, {{1, 1}}), make_degree(1, 0, {{3, 1}}), Q(4)),
            3);
  auto a = make_degree(1, 0, {{3, 1}, {6, 1}, {12, 1}});
  auto b = make_degree(3, 4, {{1, 4}, {2, 4}, {4, 2}, {8, 1}});
  EXPECT_EQ(gcd_at(a, a, Q(5)), evaluate(a, Q(5)));
  EXPECT_TRUE(divides(3, gcd_at(a, b, Q(5))));
}

TEST(Degree, Divisibility) {
  auto phi1 = make_degree(1, 0, {{1, 1}});
  auto phi12 = make_degree(1, 0, {{1, 1}, {2, 1}});
  for (std::uint64_t q : {2, 3, 4, 5, 7})
    EXPECT_TRUE(divides_at(phi1, phi12, Q(q)));
  EXPECT_FALSE(divides_at(make_degree(1, 24),
                          make_degree(1, 0, {{3, 1}, {6, 1}, {12, 1}}), Q(3)));
  EXPECT_TRUE(divides_at(make_degree(1, 0, {{8, 1}}),
                         load_catalog(Family::F4).order, Q(3)));
}

TEST(Degree, CoprimeTo) {
  const PrimePower q = Q(3);
  std::vector<BigInt> ells{ppd(12, 3).prime(), ppd(8, 3).prime()};
  EXPECT_FALSE(coprime_to_at(make_degree(1, 0, {{3, 1}, {6, 1}, {12, 1}}), q, ells));
  EXPECT_TRUE(coprime_to_at(make_degree(1, 24), q, {BigInt(13)}));
  EXPECT_TRUE(coprime_to_at(make_degree(4, 4, {{1, 4}, {2, 4}, {3, 2}, {6, 2}}),
                            q, ells));
}

TEST(Degree, AgreesWithOracleOnCatalog) {
  for (Family f : all_families) {
    const auto &cat = load_catalog(f);
    for (const auto &q : cat.sample_range(32))
      for (const auto *e : cat.entries_at(q, VersionFilter::any))
        EXPECT_EQ(evaluate(e->degree, q), oracle_eval(e->degree, q))
            << cat.name() << " " << e->label << " q=" << q.to_string();
  }
}

TEST(Degree, MultiplicativeOverCatalogPairs) {
  const auto &cat = load_catalog(Family::F4);
  for (std::uint64_t qv : {3, 4, 5, 7}) {
    PrimePower q = Q(qv);
    auto es = cat.entries_at(q, VersionFilter::simple);
    for (const auto *a : es)
      for (const auto *b : es) {
        FactoredDegree ab = a->degree * b->degree;
        EXPECT_EQ(ab.numerator_at(q.value) / ab.denom,
                  evaluate(a->degree, q) * evaluate(b->degree, q));
      }
  }
}

TEST(Degree, PPartTimesPPrimePart) {
  for (Family f : all_families) {
    const auto &cat = load_catalog(f);
    for (const auto &q : cat.sample_range(27)) {
      BigInt p = from_u64(q.p);
      for (const auto *e : cat.entries_at(q, VersionFilter::any)) {
        BigInt v = evaluate(e->degree, q);
        EXPECT_EQ(p_part(v, p) * p_prime_part(v, p), v);
        if (e->degree.denom % q.p != 0) {
          EXPECT_EQ(p_part(v, p), pow(q.value, e->degree.q_exp));
        }
      }
    }
  }
}

TEST(Degree, GcdProperties) {
  const auto &cat = load_catalog(Family::E6);
  PrimePower q = Q(7);
  auto es = cat.entries_at(q, VersionFilter::any);
  for (const auto *a : es)
    for (const auto *b : es) {
      BigInt g = gcd_at(a->degree, b->degree, q);
      EXPECT_EQ(g, gcd_at(b->degree, a->degree, q));
      EXPECT_LE(g, evaluate(a->degree, q));
      EXPECT_LE(g, evaluate(b->degree, q));
      for (const auto *c : es)
        EXPECT_EQ(gcd(g, evaluate(c->degree, q)),
                  gcd(evaluate(a->degree, q), gcd_at(b->degree, c->degree, q)));
    }
}
