#ifndef OVOID_BOUNDS_HPP
#define OVOID_BOUNDS_HPP

// Delsarte linear-programming certificates and sphere-packing sizes.
//
// A certificate is a polynomial f with Krawtchouk expansion f = sum f_i K_i
// such that f_i >= 0 for all i and f(i) <= 0 for every integer i in [d, n].
// Any q-ary code of length n and minimum distance d then has at most
// f(0)/f_0 codewords.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

#include "ovoid/krawtchouk.hpp"
#include "ovoid/rational_poly.hpp"

namespace ovoid {

class CertificateRejected : public std::runtime_error
{
public:
  CertificateRejected(const std::string& what, std::int64_t index)
    : std::runtime_error(what), index_(index)
  {}

  /// The offending Krawtchouk index or evaluation point.
  std::int64_t index() const { return index_; }

private:
  std::int64_t index_;
};

struct LPCertificate
{
  std::uint64_t n = 0;
  std::uint64_t q = 0;
  std::uint64_t d = 0;
  RationalPoly f;
  std::vector<mpq_class> krawtchouk_coeffs;
  mpq_class bound;
};

inline LPCertificate make_lp_certificate(RationalPoly f, std::uint64_t n, std::uint64_t q, std::uint64_t d)
{
  LPCertificate c;
  c.n = n;
  c.q = q;
  c.d = d;
  c.krawtchouk_coeffs = krawtchouk_expand(f, n, q);
  c.f = std::move(f);
  if (!c.krawtchouk_coeffs.empty() && c.krawtchouk_coeffs[0] != 0)
    c.bound = c.f(0) / c.krawtchouk_coeffs[0];
  return c;
}

/// Throws CertificateRejected naming the first violated condition.
inline void verify_lp_certificate(const LPCertificate& c)
{
  if (c.krawtchouk_coeffs.empty() || c.krawtchouk_coeffs[0] <= 0)
    throw CertificateRejected("f_0 must be positive", 0);
  for (std::size_t i = 0; i < c.krawtchouk_coeffs.size(); ++i)
    if (c.krawtchouk_coeffs[i] < 0)
      throw CertificateRejected("Krawtchouk coefficient f_" + std::to_string(i) + " is negative",
                                static_cast<std::int64_t>(i));
  if (c.d > c.n)
    throw CertificateRejected("minimum distance exceeds length", static_cast<std::int64_t>(c.d));
  for (std::uint64_t i = c.d; i <= c.n; ++i)
    if (c.f(mpq_class(mpz_class(i))) > 0)
      throw CertificateRejected("f(" + std::to_string(i) + ") is positive", static_cast<std::int64_t>(i));
}

/// f(0)/f_0 after verifying the certificate.
inline mpq_class lp_bound(const LPCertificate& c)
{
  verify_lp_certificate(c);
  return c.f(0) / c.krawtchouk_coeffs[0];
}

// --- the quartic certificate for the ovoid code ---

struct QuarticCertificate
{
  std::uint64_t q = 0;
  std::uint64_t t = 0;
  std::uint64_t z1 = 0, z2 = 0, z3 = 0, n = 0;

  /// (x - z1)(x - z2)(x - z3)(x - n)
  RationalPoly polynomial() const
  {
    auto root = [](std::uint64_t r) { return RationalPoly::linear_root(mpq_class(mpz_class(r))); };
    return root(z1) * root(z2) * root(z3) * root(n);
  }
};

/// Roots z1 = q^3-q^2-q-t, z2 = q^3-q^2+q-2-t, z3 = q^3-q^2+q-1-t, n = q^3-t.
inline QuarticCertificate quartic_roots(std::uint64_t q, std::uint64_t t)
{
  if (q < 3)
    throw std::invalid_argument("quartic certificate needs q >= 3");
  if (t > (q - 3) / 2)
    throw std::invalid_argument("puncture depth t = " + std::to_string(t) + " exceeds floor((q-3)/2) = " +
                                std::to_string((q - 3) / 2));
  const auto q2 = q * q, q3 = q2 * q;
  QuarticCertificate c;
  c.q = q;
  c.t = t;
  c.z1 = q3 - q2 - q - t;
  c.z2 = q3 - q2 + q - 2 - t;
  c.z3 = q3 - q2 + q - 1 - t;
  c.n = q3 - t;
  if (!(0 < c.z1 && c.z1 < c.z2 && c.z2 < c.z3 && c.z3 < c.n))
    throw std::logic_error("quartic roots are not strictly increasing");
  return c;
}

/// Closed forms of f_0..f_4 for t = 0.
inline std::array<mpq_class, 5> quartic_closed_form_coefficients(std::uint64_t q)
{
  const mpq_class Q(mpz_class(static_cast<unsigned long>(q)));
  const mpq_class Q2 = Q * Q, Q3 = Q2 * Q, Q4 = Q3 * Q, Q5 = Q4 * Q, Q6 = Q5 * Q;
  return {mpq_class(2) / Q * (Q - 1) * (Q4 - 2 * Q3 - Q2 + 3),
          mpq_class(2) / Q4 * (Q - 1) * (Q6 + Q5 - 10 * Q3 + 3 * Q + 12),
          mpq_class(2) / Q4 * (Q5 + 5 * Q4 - 9 * Q3 - 6 * Q2 - 18 * Q + 36),
          mpq_class(6) / Q4 * (Q3 + Q2 + 3 * Q - 12),
          mpq_class(24) / Q4};
}

/// q^5 (q^2-q-1)(q^3-q^2+q-2)(q^2+1) / (2 (q^4-2q^3-q^2+3)).
inline mpq_class quartic_closed_form_bound(std::uint64_t q)
{
  const mpq_class Q(mpz_class(static_cast<unsigned long>(q)));
  const mpq_class Q2 = Q * Q, Q3 = Q2 * Q, Q4 = Q3 * Q, Q5 = Q4 * Q;
  return Q5 * (Q2 - Q - 1) * (Q3 - Q2 + Q - 2) * (Q2 + 1) / (2 * (Q4 - 2 * Q3 - Q2 + 3));
}

struct OvoidLpCertificate
{
  QuarticCertificate roots;
  LPCertificate lp;
  /// Whether f_0..f_4 were compared with the closed forms (t = 0 only).
  bool closed_forms_checked = false;
  mpz_class q_to_the_8;

  bool excludes_dimension_8() const { return lp.bound < mpq_class(q_to_the_8); }
};

/// Certificate that no [q^3 - t, 8, >= q^3 - q^2 - q - t]_q code exists.
inline OvoidLpCertificate ovoid_lp_certificate(std::uint64_t q, std::uint64_t t = 0)
{
  OvoidLpCertificate out;
  out.roots = quartic_roots(q, t);
  out.lp = make_lp_certificate(out.roots.polynomial(), out.roots.n, q, out.roots.z1);
  if (out.lp.krawtchouk_coeffs.size() != 5)
    throw std::logic_error("quartic expansion must have five coefficients");
  if (t == 0) {
    const auto closed = quartic_closed_form_coefficients(q);
    for (std::size_t i = 0; i < 5; ++i)
      if (closed[i] != out.lp.krawtchouk_coeffs[i])
        throw CertificateRejected("f_" + std::to_string(i) + " differs from its closed form",
                                  static_cast<std::int64_t>(i));
    if (quartic_closed_form_bound(q) != out.lp.f(0) / out.lp.krawtchouk_coeffs[0])
      throw CertificateRejected("bound differs from its closed form", -1);
    out.closed_forms_checked = true;
  }
  out.lp.bound = lp_bound(out.lp);
  out.q_to_the_8 = power(mpz_class(static_cast<unsigned long>(q)), 8);
  if (!out.excludes_dimension_8())
    throw CertificateRejected("bound is not below q^8", -1);
  return out;
}

inline nlohmann::json to_json(const OvoidLpCertificate& c)
{
  nlohmann::json j;
  j["q"] = c.roots.q;
  j["t"] = c.roots.t;
  j["n"] = c.lp.n;
  j["d"] = c.lp.d;
  j["roots"] = {c.roots.z1, c.roots.z2, c.roots.z3, c.roots.n};
  auto mono = nlohmann::json::array();
  for (const auto& a : c.lp.f.coefficients())
    mono.push_back(to_fraction_string(a));
  j["f_monomial"] = mono;
  auto kraw = nlohmann::json::array();
  for (const auto& a : c.lp.krawtchouk_coeffs)
    kraw.push_back(to_fraction_string(a));
  j["f_krawtchouk"] = kraw;
  j["bound"] = to_fraction_string(c.lp.bound);
  j["verdict"] = c.excludes_dimension_8() ? "n-optimal" : "inconclusive";
  return j;
}

// --- sphere packing ---

/// sum_{i=0}^{r} C(n, i) (q-1)^i
inline mpz_class sphere_size(std::uint64_t n, std::uint64_t q, std::uint64_t r)
{
  if (r > n)
    throw std::out_of_range("sphere radius exceeds length");
  mpz_class s = 0;
  const mpz_class qm1 = q - 1;
  for (std::uint64_t i = 0; i <= r; ++i)
    s += binomial(n, i) * power(qm1, i);
  return s;
}

struct SpherePackingCertificate
{
  std::uint64_t q = 0;
  std::uint64_t n = 0;
  mpz_class sphere;
  mpz_class q_to_the_7;

  /// |sphere| > q^7, so a length-n code of distance 5 has < q^{n-7} words.
  bool excludes() const { return sphere > q_to_the_7; }
};

inline SpherePackingCertificate dual_sphere_packing_certificate(std::uint64_t q)
{
  SpherePackingCertificate c;
  c.q = q;
  c.n = q * q * q;
  c.sphere = sphere_size(c.n, q, 2);
  c.q_to_the_7 = power(mpz_class(static_cast<unsigned long>(q)), 7);
  return c;
}

// --- n-optimality summary ---

struct NOptimalityReport
{
  std::uint64_t q = 0;
  std::string code_method;
  bool code_certified = false;
  std::string dual_method;
  bool dual_certified = false;
  std::vector<std::string> notes;
};

inline NOptimalityReport n_optimality_report(std::uint64_t q)
{
  if (q < 2)
    throw std::invalid_argument("q must be at least 2");
  NOptimalityReport r;
  r.q = q;
  if (q == 2) {
    r.code_method = "MDS";
    r.code_certified = true;
    r.notes.push_back("[9,8,2]_2 meets n - k + 1 = d, so no [8,8,2]_2 code exists");
  } else {
    const auto cert = ovoid_lp_certificate(q, 0);
    r.code_method = "LP";
    r.code_certified = cert.excludes_dimension_8();
    r.notes.push_back("LP bound " + to_fraction_string(cert.lp.bound) + " < q^8 = " + cert.q_to_the_8.get_str());
  }
  if (q == 2) {
    r.dual_method = "trivial";
    r.dual_certified = true;
    r.notes.push_back("dual is the [9,1,9]_2 repetition code; no [8,1,9]_2 code exists");
  } else if (q == 3) {
    r.dual_method = "external citation";
    r.dual_certified = false;
    r.notes.push_back("dual n-optimality for q = 3 rests on the nonexistence of a [17,8,6]_3 code, "
                      "which is not certified here");
  } else {
    const auto sp = dual_sphere_packing_certificate(q);
    r.dual_method = "sphere packing";
    r.dual_certified = sp.excludes();
    r.notes.push_back("radius-2 sphere " + sp.sphere.get_str() + " > q^7 = " + sp.q_to_the_7.get_str());
  }
  return r;
}

} // namespace ovoid

#endif
