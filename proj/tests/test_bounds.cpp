#include <gtest/gtest.h>

#include "ovoid/bounds.hpp"

using namespace ovoid;

namespace {

mpq_class Qr(std::uint64_t a, std::uint64_t b = 1)
{
  mpq_class r(mpz_class(static_cast<unsigned long>(a)), mpz_class(static_cast<unsigned long>(b)));
  r.canonicalize();
  return r;
}

} // namespace

TEST(Quartic, CoefficientsAtQ3)
{
  const auto cert = ovoid_lp_certificate(3, 0);
  ASSERT_EQ(cert.lp.krawtchouk_coeffs.size(), 5u);
  EXPECT_EQ(cert.lp.krawtchouk_coeffs[0], 28);
  EXPECT_EQ(cert.lp.krawtchouk_coeffs[4], Qr(24, 81));
  EXPECT_EQ(cert.lp.n, 27u);
  EXPECT_EQ(cert.lp.d, 15u);
  EXPECT_TRUE(cert.closed_forms_checked);
}

TEST(Quartic, BoundAtQ3AndQ4)
{
  const auto c3 = ovoid_lp_certificate(3, 0);
  EXPECT_EQ(c3.lp.bound, Qr(153900, 28));
  EXPECT_LT(c3.lp.bound, 6561);
  const auto c4 = ovoid_lp_certificate(4, 0);
  EXPECT_EQ(c4.lp.bound, Qr(9574400, 230));
  EXPECT_LT(c4.lp.bound, 65536);
}

TEST(Quartic, RootsAndPolynomial)
{
  const auto r = quartic_roots(5, 1);
  EXPECT_EQ(r.z1, 94u);
  EXPECT_EQ(r.z2, 102u);
  EXPECT_EQ(r.z3, 103u);
  EXPECT_EQ(r.n, 124u);
  const auto f = r.polynomial();
  EXPECT_EQ(f.degree(), 4);
  for (auto z : {r.z1, r.z2, r.z3, r.n})
    EXPECT_EQ(f(Qr(z)), 0);
}

TEST(Quartic, ClosedFormsForAllSmallQ)
{
  for (std::uint64_t q = 3; q <= 16; ++q) {
    const auto cert = ovoid_lp_certificate(q, 0);
    const auto closed = quartic_closed_form_coefficients(q);
    for (std::size_t i = 0; i < 5; ++i) {
      EXPECT_EQ(cert.lp.krawtchouk_coeffs[i], closed[i]) << q << " " << i;
      EXPECT_GE(cert.lp.krawtchouk_coeffs[i], 0);
    }
    EXPECT_EQ(cert.lp.bound, quartic_closed_form_bound(q));
    EXPECT_LT(cert.lp.bound, mpq_class(power(q, 8)));
    for (std::uint64_t i = cert.lp.d; i <= cert.lp.n; ++i)
      EXPECT_LE(cert.lp.f(Qr(i)), 0);
  }
}

TEST(Quartic, ShiftedRoots)
{
  const auto c = ovoid_lp_certificate(5, 1);
  EXPECT_LT(c.lp.bound, mpq_class(power(5, 8)));
  EXPECT_FALSE(c.closed_forms_checked);
  for (std::uint64_t q = 5; q <= 16; ++q)
    for (std::uint64_t t = 1; t <= (q - 3) / 2; ++t)
      EXPECT_NO_THROW(ovoid_lp_certificate(q, t)) << q << " " << t;
}

TEST(Quartic, Preconditions)
{
  EXPECT_THROW(quartic_roots(3, 1), std::invalid_argument);
  EXPECT_THROW(quartic_roots(2, 0), std::invalid_argument);
  EXPECT_THROW(ovoid_lp_certificate(7, 3), std::invalid_argument);
}

TEST(LpCertificate, Rejections)
{
  const std::uint64_t n = 10, q = 2;
  // f = K_0 - K_1 has f_1 < 0
  const auto neg = make_lp_certificate(krawtchouk_poly(n, q, 0) - krawtchouk_poly(n, q, 1), n, q, 3);
  try {
    verify_lp_certificate(neg);
    FAIL() << "negative coefficient accepted";
  } catch (const CertificateRejected& e) {
    EXPECT_EQ(e.index(), 1);
  }
  // a positive constant is never <= 0 on [d, n]
  const auto pos = make_lp_certificate(RationalPoly::constant(1), n, q, 3);
  try {
    verify_lp_certificate(pos);
    FAIL() << "positive f accepted";
  } catch (const CertificateRejected& e) {
    EXPECT_EQ(e.index(), 3);
  }
  const auto zero_f0 = make_lp_certificate(krawtchouk_poly(n, q, 1), n, q, 3);
  EXPECT_THROW(verify_lp_certificate(zero_f0), CertificateRejected);
}

TEST(LpCertificate, SingletonLikeBound)
{
  // n - x = (n + K_1)/q, so |C| <= q when d = n
  const std::uint64_t n = 6, q = 3;
  const auto f = RationalPoly({mpq_class(static_cast<long>(n)), -1});
  const auto c = make_lp_certificate(f, n, q, n);
  EXPECT_EQ(lp_bound(c), 3);
}

TEST(SpherePacking, Sizes)
{
  EXPECT_EQ(sphere_size(10, 3, 0), 1);
  EXPECT_EQ(sphere_size(64, 4, 2), 18337);
  EXPECT_EQ(sphere_size(7, 2, 1), 8);
  EXPECT_THROW(sphere_size(3, 2, 4), std::out_of_range);
}

TEST(SpherePacking, DualCertificates)
{
  for (std::uint64_t q : {4, 5, 7, 8, 9}) {
    const auto c = dual_sphere_packing_certificate(q);
    EXPECT_TRUE(c.excludes()) << q;
    EXPECT_EQ(c.n, q * q * q);
  }
  const auto c4 = dual_sphere_packing_certificate(4);
  EXPECT_EQ(c4.q_to_the_7, 16384);
  EXPECT_FALSE(dual_sphere_packing_certificate(3).excludes());
}

TEST(NOptimality, Reports)
{
  const auto r2 = n_optimality_report(2);
  EXPECT_EQ(r2.code_method, "MDS");
  EXPECT_EQ(r2.dual_method, "trivial");
  EXPECT_TRUE(r2.code_certified && r2.dual_certified);
  const auto r3 = n_optimality_report(3);
  EXPECT_TRUE(r3.code_certified);
  EXPECT_EQ(r3.dual_method, "external citation");
  EXPECT_FALSE(r3.dual_certified);
  const auto r4 = n_optimality_report(4);
  EXPECT_TRUE(r4.code_certified && r4.dual_certified);
  EXPECT_EQ(r4.dual_method, "sphere packing");
}

TEST(Certificate, Json)
{
  const auto j = to_json(ovoid_lp_certificate(3, 0));
  EXPECT_EQ(j["bound"], "38475/7");
  EXPECT_EQ(j["verdict"], "n-optimal");
  EXPECT_EQ(j["roots"], nlohmann::json({15, 19, 20, 27}));
  EXPECT_EQ(j["f_krawtchouk"][0], "28/1");
  EXPECT_EQ(j["f_monomial"].size(), 5u);
}
