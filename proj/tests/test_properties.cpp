#include <gtest/gtest.h>

#include "ovoid/verify.hpp"

using namespace ovoid;

namespace {

void expect_all_pass(const CheckLedger& L)
{
  ASSERT_FALSE(L.results().empty());
  for (const auto& r : L.results())
    EXPECT_TRUE(r.passed) << r.name << ": " << r.detail;
}

class Properties : public ::testing::TestWithParam<std::uint64_t>
{};

} // namespace

TEST_P(Properties, Field)
{
  CheckLedger L;
  field_suite(make_context(GetParam()), L);
  expect_all_pass(L);
}

TEST_P(Properties, FormsAndAction)
{
  CheckLedger L;
  action_suite(make_context(GetParam()), VerifyOptions{}, L);
  expect_all_pass(L);
}

TEST_P(Properties, OrbitsAndSections)
{
  CheckLedger L;
  orbit_suite(make_context(GetParam()), VerifyOptions{}, L);
  expect_all_pass(L);
}

TEST_P(Properties, CodeAndDual)
{
  CheckLedger L;
  code_suite(make_context(GetParam()), VerifyOptions{}, L);
  expect_all_pass(L);
}

TEST_P(Properties, Bounds)
{
  const auto ctx = make_context(GetParam());
  CheckLedger L;
  bounds_suite(GetParam(), &ctx, VerifyOptions{}, L);
  expect_all_pass(L);
}

INSTANTIATE_TEST_SUITE_P(SmallQ, Properties, ::testing::Values(2, 3, 4, 5),
                         [](const auto& info) { return "q" + std::to_string(info.param); });

TEST(CheckLedger, RecordsExceptionsAsFailures)
{
  CheckLedger L;
  L.run("throws", []() -> CheckOutcome { throw std::runtime_error("boom"); });
  L.run("passes", []() -> CheckOutcome { return {true, "ok"}; });
  ASSERT_EQ(L.results().size(), 2u);
  EXPECT_FALSE(L.results()[0].passed);
  EXPECT_EQ(L.results()[0].detail, "exception: boom");
  EXPECT_TRUE(L.results()[1].passed);
  EXPECT_FALSE(L.all_passed());
}

TEST(ReferenceTable, CoversTheTabulatedFields)
{
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9})
    EXPECT_TRUE(reference_code_table(q).has_value()) << q;
  EXPECT_FALSE(reference_code_table(11).has_value());
}
