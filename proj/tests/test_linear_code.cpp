#include <gtest/gtest.h>

#include "ovoid/codes.hpp"
#include "ovoid/linear_code.hpp"

using namespace ovoid;

namespace {

Row row(std::initializer_list<std::uint32_t> v)
{
  Row r;
  for (auto e : v)
    r.push_back(Fq{e});
  return r;
}

LinearCode hamming74()
{
  auto F = std::make_shared<const BaseField>(2, 1);
  return LinearCode(F, 7,
                    {row({1, 0, 0, 0, 1, 1, 0}), row({0, 1, 0, 0, 1, 0, 1}), row({0, 0, 1, 0, 0, 1, 1}),
                     row({0, 0, 0, 1, 1, 1, 1})});
}

LinearCode even_weight(std::size_t n)
{
  auto F = std::make_shared<const BaseField>(2, 1);
  std::vector<Row> rows;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Row r(n, Fq{0});
    r[i] = Fq{1};
    r[n - 1] = Fq{1};
    rows.push_back(r);
  }
  return LinearCode(F, n, rows);
}

} // namespace

TEST(LinearCode, HammingDistribution)
{
  const auto d = weight_distribution_exhaustive(hamming74());
  EXPECT_EQ(d.table_notation(), "(0^1 3^7 4^7 7^1)");
  EXPECT_EQ(min_distance(hamming74()), 3u);
}

TEST(LinearCode, EvenWeightDistributionIsBinomial)
{
  const auto d = weight_distribution_exhaustive(even_weight(9), 2);
  for (std::size_t w = 0; w <= 9; ++w)
    EXPECT_EQ(d.at(w), w % 2 ? mpz_class(0) : binomial(9, w)) << w;
}

TEST(LinearCode, Tetracode)
{
  auto F = std::make_shared<const BaseField>(3, 1);
  const LinearCode C(F, 4, {row({1, 0, 1, 1}), row({0, 1, 1, 2})});
  EXPECT_EQ(weight_distribution_exhaustive(C).table_notation(), "(0^1 3^8)");
}

TEST(LinearCode, DependentRowsAreReduced)
{
  auto F = std::make_shared<const BaseField>(2, 1);
  const LinearCode C(F, 3, {row({1, 1, 0}), row({0, 1, 1}), row({1, 0, 1})});
  EXPECT_EQ(C.dimension(), 2u);
  EXPECT_TRUE(C.contains(row({1, 0, 1})));
  EXPECT_FALSE(C.contains(row({1, 0, 0})));
  EXPECT_EQ(C.encode({Fq{0}, Fq{0}}), row({0, 0, 0}));
  EXPECT_THROW(C.encode({Fq{1}}), std::invalid_argument);
  EXPECT_THROW(LinearCode(F, 3, {row({1, 1})}), std::invalid_argument);
}

TEST(LinearCode, ThreadCountDoesNotChangeResult)
{
  const auto ctx = make_context(3);
  const auto C = ovoid_code(ctx);
  EXPECT_EQ(weight_distribution_exhaustive(C, 1), weight_distribution_exhaustive(C, 3));
}

TEST(LinearCode, GuardIsEnforced)
{
  const auto C = ovoid_code(make_context(3));
  EXPECT_THROW(weight_distribution_exhaustive(C, 1, 1000), GuardExceeded);
}

TEST(Puncture, EmptySetIsIdentity)
{
  const auto C = hamming74();
  const auto P = puncture(C, {});
  EXPECT_EQ(P.length(), 7u);
  EXPECT_EQ(weight_distribution_exhaustive(P), weight_distribution_exhaustive(C));
}

TEST(Puncture, LengthAndDistance)
{
  const auto P = puncture(hamming74(), {6});
  EXPECT_EQ(P.length(), 6u);
  EXPECT_EQ(P.dimension(), 4u);
  EXPECT_EQ(min_distance(P), 2u);
  EXPECT_THROW(puncture(hamming74(), {7}), std::out_of_range);
}

TEST(Puncture, OvoidCodeAtQ5)
{
  const auto C = ovoid_code(make_context(5));
  const auto P = puncture(C, {125});
  EXPECT_EQ(P.length(), 125u);
  EXPECT_EQ(P.dimension(), 8u);
  EXPECT_EQ(min_distance(P, 2), 94u);
}

TEST(Shorten, EvenWeightCode)
{
  const auto S = shorten(even_weight(9), {0});
  EXPECT_EQ(S.length(), 8u);
  EXPECT_EQ(S.dimension(), 7u);
  EXPECT_EQ(min_distance(S), 2u);
  const auto S2 = shorten(hamming74(), {0, 1});
  EXPECT_EQ(S2.dimension(), 2u);
  for (const auto& r : S2.generator())
    EXPECT_EQ(r.size(), 5u);
}

TEST(Residual, BinaryOvoidCode)
{
  const auto ctx = make_context(2);
  const auto C = ovoid_code(ctx);
  // a weight-2 codeword of the [9,8,2]_2 code
  Row c(9, Fq{0});
  c[0] = c[8] = Fq{1};
  ASSERT_TRUE(C.contains(c));
  const auto R = residual(C, c);
  EXPECT_EQ(R.length(), 7u);
  EXPECT_EQ(R.dimension(), 7u);
  EXPECT_THROW(residual(C, Row(9, Fq{0})), std::invalid_argument);
  Row odd(9, Fq{0});
  odd[0] = Fq{1};
  EXPECT_THROW(residual(C, odd), std::invalid_argument);
}

TEST(Residual, TernaryOvoidCodeMinimumWeight)
{
  const auto ctx = make_context(3);
  const auto C = ovoid_code(ctx);
  // search messages for a weight-15 codeword
  std::optional<Row> c;
  for (std::uint32_t m = 1; m < 6561 && !c; ++m) {
    std::vector<Fq> msg(8);
    auto v = m;
    for (auto& e : msg) {
      e = Fq{v % 3};
      v /= 3;
    }
    const auto w = C.encode(msg);
    if (hamming_weight(w) == 15)
      c = w;
  }
  ASSERT_TRUE(c.has_value());
  const auto R = residual(C, *c);
  EXPECT_EQ(R.length(), 13u);
  EXPECT_EQ(R.dimension(), 7u);
  // d' >= ceil(w / q)
  EXPECT_GE(min_distance(R), 5u);
}

TEST(DependentColumns, Hamming)
{
  const auto C = hamming74();
  // the dual is the [7,3,4] simplex code
  EXPECT_FALSE(find_dependent_columns(C, 3).has_value());
  const auto four = find_dependent_columns(C, 4);
  ASSERT_TRUE(four.has_value());
  EXPECT_EQ(four->size(), 4u);
}
