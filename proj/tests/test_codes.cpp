#include <gtest/gtest.h>

#include "ovoid/codes.hpp"
#include "ovoid/verify.hpp"

using namespace ovoid;

namespace {

WeightDistribution geometric(std::uint64_t q)
{
  const auto ctx = make_context(q);
  return weight_distribution_geometric(ctx, ovoid::ovoid(ctx));
}

} // namespace

TEST(GeneratorMatrix, Shape)
{
  for (std::uint64_t q : {2, 3}) {
    const auto ctx = make_context(q);
    const auto G = build_generator_matrix(ctx);
    ASSERT_EQ(G.size(), 8u);
    EXPECT_EQ(G[0].size(), q * q * q + 1);
    EXPECT_EQ(rank(ctx.base(), G), 8u);
  }
}

TEST(GeneratorMatrix, ColumnAtZeroAndInfinity)
{
  const auto ctx = make_context(4);
  const auto col = ovoid_code_column(ctx, ctx.zero());
  EXPECT_EQ(col, (Row{Fq{1}, Fq{0}, Fq{0}, Fq{0}, Fq{0}, Fq{0}, Fq{0}, Fq{0}}));
  const auto C = ovoid_code(ctx);
  EXPECT_EQ(C.column(64), (Row{Fq{0}, Fq{0}, Fq{0}, Fq{0}, Fq{0}, Fq{0}, Fq{0}, Fq{1}}));
}

TEST(WeightDistribution, ReferenceTable)
{
  for (std::uint64_t q : {2, 3, 4, 5, 7}) {
    const auto d = geometric(q);
    const auto ref = reference_code_table(q);
    ASSERT_TRUE(ref.has_value());
    EXPECT_EQ(code_parameters(d.length, 8, *d.min_nonzero_weight(), q), ref->first);
    EXPECT_EQ(d.table_notation(), ref->second);
  }
}

TEST(WeightDistribution, ClosedForm)
{
  for (std::uint64_t q : {2, 3, 4, 5, 7}) {
    const auto d = geometric(q);
    EXPECT_EQ(d, ovoid_weight_distribution_formula(q)) << q;
    EXPECT_EQ(d.at(q * q * q), mpz_class(static_cast<unsigned long>((q * q * q + 1) * (q - 1))));
    EXPECT_EQ(d.total(), power(mpz_class(static_cast<unsigned long>(q)), 8));
  }
}

TEST(WeightDistribution, ExhaustiveOracle)
{
  for (std::uint64_t q : {2, 3, 4}) {
    const auto ctx = make_context(q);
    EXPECT_EQ(weight_distribution_exhaustive(ovoid_code(ctx), 2), geometric(q)) << q;
  }
}

TEST(WeightDistribution, MinimumDistances)
{
  EXPECT_EQ(min_distance(ovoid_code(make_context(2))), 2u);
  EXPECT_EQ(*geometric(5).min_nonzero_weight(), 95u);
}

TEST(WeightDistribution, JsonRoundTrip)
{
  const auto d = geometric(3);
  const auto j = d.to_json();
  EXPECT_EQ(j["15"], "1512");
  EXPECT_EQ(WeightDistribution::from_json(d.length, j), d);
}

TEST(MacWilliams, BinaryDualIsRepetition)
{
  const auto dual = macwilliams(geometric(2), 9, 8, 2);
  EXPECT_EQ(dual.table_notation(), "(0^1 9^1)");
}

TEST(MacWilliams, TernaryDual)
{
  const auto dual = macwilliams(geometric(3), 28, 8, 3);
  for (std::size_t j = 1; j <= 5; ++j)
    EXPECT_EQ(dual.at(j), 0) << j;
  EXPECT_EQ(dual.at(6), 6552);
  EXPECT_EQ(*dual.min_nonzero_weight(), dual_min_distance_expected(3));
  EXPECT_EQ(dual.total(), power(3, 20));
}

TEST(MacWilliams, DualWeightFive)
{
  EXPECT_EQ(dual_weight5_formula(4), 13104);
  for (std::uint64_t q : {4, 5, 7}) {
    const auto n = q * q * q + 1;
    const auto dual = macwilliams(geometric(q), n, 8, q);
    for (std::size_t j = 1; j <= 4; ++j)
      EXPECT_EQ(dual.at(j), 0) << q;
    EXPECT_EQ(dual.at(5), dual_weight5_formula(q)) << q;
    EXPECT_EQ(*dual.min_nonzero_weight(), 5u);
  }
}

TEST(MacWilliams, DualOfHammingIsSimplex)
{
  WeightDistribution h;
  h.length = 7;
  h.add(0, 1);
  h.add(3, 7);
  h.add(4, 7);
  h.add(7, 1);
  EXPECT_EQ(macwilliams(h, 7, 4, 2).table_notation(), "(0^1 4^7)");
}

TEST(MacWilliams, Involution)
{
  for (std::uint64_t q : {2, 3, 4, 5}) {
    const auto A = geometric(q);
    const auto n = A.length;
    EXPECT_EQ(macwilliams(macwilliams(A, n, 8, q), n, n - 8, q), A);
  }
}

TEST(MacWilliams, RejectsInconsistentInput)
{
  WeightDistribution bad;
  bad.length = 7;
  bad.add(0, 1);
  bad.add(3, 7);
  EXPECT_THROW(macwilliams(bad, 7, 4, 2), MacWilliamsError);
  // totals 16 but is not the distribution of any linear code
  WeightDistribution fake;
  fake.length = 7;
  fake.add(0, 1);
  fake.add(1, 15);
  EXPECT_THROW(macwilliams(fake, 7, 4, 2), MacWilliamsError);
}

TEST(DependentColumns, OvoidCodeAtQ4)
{
  const auto C = ovoid_code(make_context(4));
  EXPECT_FALSE(find_dependent_columns(C, 4).has_value());
  const auto five = find_dependent_columns(C, 5);
  ASSERT_TRUE(five.has_value());
  EXPECT_EQ(five->size(), 5u);
  std::vector<Row> cols;
  for (auto j : *five)
    cols.push_back(C.column(j));
  EXPECT_EQ(rank(C.field(), cols), 4u);
}

TEST(Export, GeneratorMatrixCsv)
{
  const auto ctx = make_context(2);
  const auto csv = generator_matrix_csv(build_generator_matrix(ctx));
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 8);
  EXPECT_EQ(csv.substr(0, csv.find('\n')).size(), 17u); // 9 entries, 8 commas
  EXPECT_EQ(csv, generator_matrix_csv(build_generator_matrix(make_context(2))));
}

TEST(Export, OvoidCsvAndJson)
{
  const auto ctx = make_context(3);
  const auto O = ovoid::ovoid(ctx);
  const auto csv = ovoid_csv(ctx, O);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 28);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "1,0,0,0,0,0,0,0");
  const auto j = ovoid_json(ctx, O);
  EXPECT_EQ(j["points"].size(), 28u);
  EXPECT_EQ(j["q"], 3);
  const auto g = generator_matrix_json(ctx, build_generator_matrix(ctx));
  EXPECT_EQ(g["n"], 28);
  EXPECT_EQ(g["rows"].size(), 8u);
}
