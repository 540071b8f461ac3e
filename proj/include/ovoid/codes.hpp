#ifndef OVOID_CODES_HPP
#define OVOID_CODES_HPP

// The [q^3+1, 8]_q code C_O spanned by the ovoid, its weight distribution
// (from hyperplane sections and by brute force) and its dual via MacWilliams.

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

#include "ovoid/field_tower.hpp"
#include "ovoid/geometry.hpp"
#include "ovoid/krawtchouk.hpp"
#include "ovoid/linear_code.hpp"
#include "ovoid/weight_distribution.hpp"

namespace ovoid {

/// g(x) = (1, Tr(x), Tr(theta x), Tr(theta^2 x), Tr(x'), Tr(theta x'), Tr(theta^2 x'), N(x))
/// with x' = x^{q+q^2}.
inline Row ovoid_code_column(const FieldContext& ctx, Fq3 x)
{
  const Fq3 th = ctx.theta();
  const Fq3 th2 = ctx.mul(th, th);
  const Fq3 xc = ctx.conorm(x);
  return {ctx.base().one(),
          ctx.trace(x),
          ctx.trace(ctx.mul(th, x)),
          ctx.trace(ctx.mul(th2, x)),
          ctx.trace(xc),
          ctx.trace(ctx.mul(th, xc)),
          ctx.trace(ctx.mul(th2, xc)),
          ctx.norm(x)};
}

/// 8 x (q^3+1): columns g(x) in field enumeration order, then e_8.
inline std::vector<Row> build_generator_matrix(const FieldContext& ctx)
{
  const std::size_t n = ctx.cubic_order() + 1;
  std::vector<Row> rows(8, Row(n, Fq{0}));
  for (auto x : ctx.enumerate_cubic()) {
    const auto col = ovoid_code_column(ctx, x);
    for (std::size_t i = 0; i < 8; ++i)
      rows[i][x.idx] = col[i];
  }
  rows[7][n - 1] = ctx.base().one();
  return rows;
}

/// C_O as a code handle; throws if G_O does not have rank 8.
inline LinearCode ovoid_code(const FieldContext& ctx)
{
  auto rows = build_generator_matrix(ctx);
  const auto n = rows[0].size();
  if (rank(ctx.base(), rows) != 8)
    throw std::logic_error("generator matrix of C_O does not have rank 8");
  return LinearCode(ctx.base_ptr(), n, std::move(rows));
}

/// Each hyperplane v^perp contributes q-1 codewords of weight n - |v^perp cap O|.
inline WeightDistribution weight_distribution_geometric(const FieldContext& ctx,
                                                        const std::vector<ProjectivePoint>& points,
                                                        unsigned threads = 1,
                                                        std::uint64_t point_guard = kDefaultPointGuard)
{
  const auto hist = section_histogram(ctx, points, threads, point_guard);
  WeightDistribution d;
  d.length = points.size();
  d.add(0, 1);
  for (std::size_t s = 0; s < hist.size(); ++s)
    if (hist[s] > 0)
      d.add(points.size() - s, mpz_class(std::to_string(hist[s])) * (ctx.q() - 1));
  return d;
}

/// Closed-form distribution of C_O.
inline WeightDistribution ovoid_weight_distribution_formula(std::uint64_t q)
{
  const mpz_class Q = static_cast<unsigned long>(q);
  const mpz_class Q2 = Q * Q, Q3 = Q2 * Q, Q6 = Q3 * Q3;
  const auto q2 = q * q, q3 = q2 * q;
  WeightDistribution d;
  d.length = q3 + 1;
  d.add(0, 1);
  d.add(q * (q2 - q - 1), Q3 * (Q3 + 1) * (Q - 1) * (Q - 1) / 2);
  d.add(q2 * (q - 1), Q * (Q6 - 1));
  d.add(q * (q2 - q + 1), Q3 * (Q3 - 1) * (Q2 - 1) / 2);
  d.add(q3, (Q3 + 1) * (Q - 1));
  return d;
}

class MacWilliamsError : public std::domain_error
{
public:
  using std::domain_error::domain_error;
};

/// A'_j = q^{-k} sum_i K_j(i) A_i. Throws if the input does not total q^k or
/// some A'_j is not a nonnegative integer.
inline WeightDistribution macwilliams(const WeightDistribution& A, std::uint64_t n, std::uint64_t k,
                                      std::uint64_t q)
{
  const mpz_class size = power(mpz_class(static_cast<unsigned long>(q)), k);
  if (A.total() != size)
    throw MacWilliamsError("weight distribution totals " + A.total().get_str() + ", expected q^k = " +
                           size.get_str());
  std::vector<mpz_class> acc(n + 1, mpz_class(0));
  for (const auto& [i, Ai] : A.counts) {
    if (i > n)
      throw MacWilliamsError("weight exceeds length");
    const auto K = krawtchouk_column(n, q, i);
    for (std::uint64_t j = 0; j <= n; ++j)
      acc[j] += K[j] * Ai;
  }
  WeightDistribution dual;
  dual.length = n;
  for (std::uint64_t j = 0; j <= n; ++j) {
    if (acc[j] == 0)
      continue;
    if (acc[j] < 0 || !mpz_divisible_p(acc[j].get_mpz_t(), size.get_mpz_t()))
      throw MacWilliamsError("A'_" + std::to_string(j) + " is not a nonnegative integer");
    mpz_class v;
    mpz_divexact(v.get_mpz_t(), acc[j].get_mpz_t(), size.get_mpz_t());
    dual.add(j, v);
  }
  return dual;
}

/// (q-3)(q-2)(q-1) q^3 (q^6-1) / 120
inline mpz_class dual_weight5_formula(std::uint64_t q)
{
  const mpz_class Q = static_cast<unsigned long>(q);
  const mpz_class Q3 = Q * Q * Q;
  return (Q - 3) * (Q - 2) * (Q - 1) * Q3 * (Q3 * Q3 - 1) / 120;
}

/// Expected dual minimum distance: 9, 6, or 5 for q = 2, 3, >= 4.
inline std::size_t dual_min_distance_expected(std::uint64_t q)
{
  return q == 2 ? 9 : q == 3 ? 6 : 5;
}

// --- exports ---

inline std::string generator_matrix_csv(const std::vector<Row>& rows)
{
  std::ostringstream os;
  for (const auto& r : rows) {
    for (std::size_t j = 0; j < r.size(); ++j)
      os << (j ? "," : "") << r[j].idx;
    os << '\n';
  }
  return os.str();
}

inline nlohmann::json generator_matrix_json(const FieldContext& ctx, const std::vector<Row>& rows)
{
  nlohmann::json j;
  j["q"] = ctx.q();
  j["k"] = rows.size();
  j["n"] = rows.empty() ? 0 : rows[0].size();
  j["field"] = ctx.to_json();
  auto m = nlohmann::json::array();
  for (const auto& r : rows) {
    auto jr = nlohmann::json::array();
    for (auto e : r)
      jr.push_back(e.idx);
    m.push_back(jr);
  }
  j["rows"] = m;
  return j;
}

inline std::string ovoid_csv(const FieldContext& ctx, const std::vector<ProjectivePoint>& points)
{
  std::ostringstream os;
  for (const auto& P : points) {
    const auto f = flatten(ctx, P.rep);
    for (std::size_t i = 0; i < f.size(); ++i)
      os << (i ? "," : "") << f[i].idx;
    os << '\n';
  }
  return os.str();
}

inline nlohmann::json ovoid_json(const FieldContext& ctx, const std::vector<ProjectivePoint>& points)
{
  nlohmann::json j;
  j["q"] = ctx.q();
  j["field"] = ctx.to_json();
  auto pts = nlohmann::json::array();
  for (const auto& P : points) {
    auto row = nlohmann::json::array();
    for (auto c : flatten(ctx, P.rep))
      row.push_back(c.idx);
    pts.push_back(row);
  }
  j["points"] = pts;
  return j;
}

} // namespace ovoid

#endif
