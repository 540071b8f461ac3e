#include <gtest/gtest.h>

#include <set>

#include "ovoid/geometry.hpp"

using namespace ovoid;

TEST(Orbits, SizesAtQ2AndQ3)
{
  const auto r2 = orbit_decompose(make_context(2)).report;
  EXPECT_EQ(r2.sizes, (std::array<std::uint64_t, 4>{9, 126, 36, 84}));
  EXPECT_EQ(r2.sections, (std::array<std::uint32_t, 4>{1, 5, 7, 3}));
  const auto r3 = orbit_decompose(make_context(3)).report;
  EXPECT_EQ(r3.sizes, (std::array<std::uint64_t, 4>{28, 1092, 756, 1404}));
  EXPECT_EQ(r3.sections, (std::array<std::uint32_t, 4>{1, 10, 13, 7}));
  EXPECT_EQ(r3.sizes[0] + r3.sizes[1] + r3.sizes[2] + r3.sizes[3], 3280u);
}

TEST(Orbits, MatchClosedFormsThroughQ5)
{
  for (std::uint64_t q : {2, 3, 4, 5}) {
    const auto ctx = make_context(q);
    const auto dec = orbit_decompose(ctx);
    EXPECT_EQ(dec.report.sizes, orbit_size_formulas(q)) << q;
    for (std::size_t i = 0; i < 4; ++i)
      EXPECT_EQ(dec.report.sections[i], section_formulas(q)[i]) << q;
    EXPECT_EQ(dec.report.sizes[0], q * q * q + 1);
  }
}

TEST(Orbits, FullGroupOrbitsAgreeWithBfs)
{
  const auto ctx = make_context(2);
  const auto reps = orbit_representatives(ctx);
  std::array<std::set<std::uint64_t>, 4> orbits;
  for_each_group_element(ctx, [&](const GroupElement& g) {
    for (std::size_t i = 0; i < 4; ++i)
      orbits[i].insert(point_code(ctx, act(ctx, g, reps[i])));
  });
  const auto dec = orbit_decompose(ctx);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(orbits[i].size(), dec.report.sizes[i]);
    for (auto code : orbits[i])
      EXPECT_EQ(dec.labels[code], static_cast<int>(i));
  }
}

TEST(Orbits, OvoidIsTheFirstOrbit)
{
  const auto ctx = make_context(3);
  const auto dec = orbit_decompose(ctx);
  for (const auto& P : ovoid::ovoid(ctx))
    EXPECT_EQ(dec.labels[point_code(ctx, P)], 0);
}

TEST(Orbits, SectionsConstantOnOrbits)
{
  for (std::uint64_t q : {2, 3}) {
    const auto ctx = make_context(q);
    const auto dec = orbit_decompose(ctx);
    const auto table = section_table(ctx, ovoid::ovoid(ctx));
    PointSpace(ctx.q()).for_each_point([&](std::uint64_t code) {
      ASSERT_GE(dec.labels[code], 0);
      EXPECT_EQ(table[code], dec.report.sections[dec.labels[code]]);
    });
  }
}

TEST(Orbits, SingleOrbitSize)
{
  const auto ctx = make_context(3);
  const auto reps = orbit_representatives(ctx);
  EXPECT_EQ(orbit_size(ctx, reps[3]), 1404u);
}

TEST(Orbits, GuardIsEnforced)
{
  EXPECT_THROW(orbit_decompose(make_context(3), 100), GuardExceeded);
}

TEST(Orbits, Json)
{
  const auto ctx = make_context(2);
  const auto j = to_json(ctx, orbit_decompose(ctx).report);
  EXPECT_EQ(j["orbit_sizes"], nlohmann::json({9, 126, 36, 84}));
  EXPECT_EQ(j["sections"], nlohmann::json({1, 5, 7, 3}));
  EXPECT_EQ(j["representatives"].size(), 4u);
}

TEST(Stabilizers, ExhaustiveAtQ2AndQ3)
{
  for (std::uint64_t q : {2, 3}) {
    const auto ctx = make_context(q);
    const auto reps = orbit_representatives(ctx);
    const auto counts = stabilizer_orders_exhaustive(ctx, reps);
    EXPECT_EQ(counts[0], q * q * q * (q * q * q - 1));
    EXPECT_EQ(counts[1], q * q * (q - 1));
    EXPECT_EQ(counts[2], 2 * (q * q + q + 1));
    EXPECT_EQ(counts[3], 2 * (q * q - q + 1));
    const auto sizes = orbit_size_formulas(q);
    for (std::size_t i = 0; i < 4; ++i)
      EXPECT_EQ(counts[i] * sizes[i], group_order(q));
  }
}

TEST(Stabilizers, PaperRepresentativesAtQ3)
{
  const auto ctx = make_context(3);
  const auto& F = ctx.base();
  const Fq a = ctx.alpha();
  const auto r2 = stabilizer_order(ctx, canonical(ctx, {F.zero(), ctx.zero(), ctx.one(), F.zero()}));
  EXPECT_EQ(r2.order, 18u);
  EXPECT_TRUE(r2.exhaustive);
  EXPECT_EQ(stabilizer_order(ctx, canonical(ctx, {F.one(), ctx.zero(), ctx.zero(), F.one()})).order, 26u);
  EXPECT_EQ(stabilizer_order(ctx, canonical(ctx, {F.one(), ctx.zero(), ctx.embed(a), a})).order, 14u);
}

TEST(Stabilizers, FallsBackToOrbitCounting)
{
  const auto ctx = make_context(5);
  const auto r = stabilizer_order(ctx, orbit_representatives(ctx)[2]);
  EXPECT_FALSE(r.exhaustive);
  EXPECT_EQ(r.order, 2u * (25 + 5 + 1));
  EXPECT_THROW(stabilizer_orders_exhaustive(ctx, orbit_representatives(ctx)), GuardExceeded);
}
