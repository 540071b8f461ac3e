#include <gtest/gtest.h>

#include <set>

#include "ovoid/base_field.hpp"

using namespace ovoid;

namespace {

// GF(4) = F_2[t]/(t^2+t+1) by hand, elements as bit pairs a_0 + 2 a_1
std::uint32_t gf4_mul(std::uint32_t a, std::uint32_t b)
{
  std::uint32_t r = 0;
  for (int i = 0; i < 2; ++i)
    if (b >> i & 1)
      r ^= a << i;
  if (r & 4)
    r ^= 0b111;
  return r;
}

} // namespace

TEST(BaseField, PrimeFieldMatchesModularArithmetic)
{
  for (int p : {2, 3, 5, 7, 11, 13}) {
    BaseField F(p, 1);
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b) {
        EXPECT_EQ(F.add(Fq(a), Fq(b)).idx, static_cast<std::uint32_t>((a + b) % p));
        EXPECT_EQ(F.mul(Fq(a), Fq(b)).idx, static_cast<std::uint32_t>((a * b) % p));
        EXPECT_EQ(F.sub(Fq(a), Fq(b)).idx, static_cast<std::uint32_t>((a - b + p) % p));
      }
  }
}

TEST(BaseField, Gf4MatchesHandTable)
{
  BaseField F(2, 2);
  EXPECT_EQ(F.modulus(), (detail::PrimePoly{1, 1, 1}));
  for (std::uint32_t a = 0; a < 4; ++a)
    for (std::uint32_t b = 0; b < 4; ++b) {
      EXPECT_EQ(F.mul(Fq(a), Fq(b)).idx, gf4_mul(a, b));
      EXPECT_EQ(F.add(Fq(a), Fq(b)).idx, a ^ b);
    }
}

TEST(BaseField, SmallestIrreducible)
{
  EXPECT_EQ(detail::smallest_irreducible(2, 2), (detail::PrimePoly{1, 1, 1}));
  EXPECT_EQ(detail::smallest_irreducible(2, 3), (detail::PrimePoly{1, 1, 0, 1}));
  EXPECT_EQ(detail::smallest_irreducible(3, 2), (detail::PrimePoly{1, 0, 1}));
  EXPECT_FALSE(detail::is_irreducible_over_prime({1, 0, 1}, 2));
  EXPECT_FALSE(detail::is_irreducible_over_prime({1, 0, 0, 1}, 2));
  EXPECT_TRUE(detail::is_irreducible_over_prime({1, 1, 0, 0, 1}, 2));
  EXPECT_FALSE(detail::is_irreducible_over_prime({1, 0, 1, 0, 1}, 2)); // (t^2+t+1)^2
}

TEST(BaseField, FieldAxiomsExhaustive)
{
  for (auto [p, m] : {std::pair{2, 3}, std::pair{3, 2}, std::pair{2, 4}, std::pair{5, 1}}) {
    BaseField F(p, m);
    const auto E = F.elements();
    ASSERT_EQ(E.size(), F.order());
    for (auto a : E) {
      EXPECT_EQ(F.add(a, F.neg(a)), F.zero());
      if (a != F.zero()) {
        EXPECT_EQ(F.mul(a, F.inv(a)), F.one());
      }
      EXPECT_EQ(F.pow(a, F.order()), a);
      for (auto b : E) {
        EXPECT_EQ(F.mul(a, b), F.mul(b, a));
        for (auto c : E)
          EXPECT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)));
      }
    }
  }
}

TEST(BaseField, NoZeroDivisors)
{
  BaseField F(3, 2);
  for (auto a : F.elements())
    for (auto b : F.elements())
      if (a != F.zero() && b != F.zero()) {
        EXPECT_NE(F.mul(a, b), F.zero());
      }
}

TEST(BaseField, CharacteristicAndFromInt)
{
  BaseField F(3, 2);
  EXPECT_EQ(F.from_int(3), F.zero());
  EXPECT_EQ(F.from_int(4), F.one());
  EXPECT_EQ(F.from_int(-1), F.neg(F.one()));
  EXPECT_EQ(F.characteristic(), 3);
  EXPECT_EQ(F.degree(), 2);
}

TEST(BaseField, FactorPrimePower)
{
  EXPECT_EQ(factor_prime_power(2), (std::pair{2, 1}));
  EXPECT_EQ(factor_prime_power(8), (std::pair{2, 3}));
  EXPECT_EQ(factor_prime_power(9), (std::pair{3, 2}));
  EXPECT_EQ(factor_prime_power(49), (std::pair{7, 2}));
  for (std::uint64_t bad : {0, 1, 6, 10, 12, 15, 36})
    EXPECT_THROW(factor_prime_power(bad), std::invalid_argument) << bad;
}

TEST(BaseField, InverseOfZeroThrows)
{
  BaseField F(5, 1);
  EXPECT_THROW(F.inv(F.zero()), std::domain_error);
}
