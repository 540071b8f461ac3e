#ifndef OVOID_KRAWTCHOUK_HPP
#define OVOID_KRAWTCHOUK_HPP

// Krawtchouk polynomials for the q-ary Hamming scheme of length n:
//
//   K_i(x) = sum_{j=0}^{i} (-1)^j (q-1)^{i-j} C(x, j) C(n-x, i-j).

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ovoid/rational_poly.hpp"

namespace ovoid {

inline mpz_class binomial(std::uint64_t n, std::uint64_t k)
{
  if (k > n)
    return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline mpz_class power(const mpz_class& b, std::uint64_t e)
{
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

/// K_i(x) for integers 0 <= i, x <= n, by the defining sum.
inline mpz_class krawtchouk(std::uint64_t n, std::uint64_t q, std::uint64_t i, std::uint64_t x)
{
  if (i > n || x > n)
    throw std::out_of_range("krawtchouk: need 0 <= i, x <= n");
  if (q < 2)
    throw std::invalid_argument("krawtchouk: alphabet size must be at least 2");
  mpz_class sum = 0;
  const mpz_class qm1 = q - 1;
  for (std::uint64_t j = 0; j <= i; ++j) {
    mpz_class term = power(qm1, i - j) * binomial(x, j) * binomial(n - x, i - j);
    if (j % 2)
      sum -= term;
    else
      sum += term;
  }
  return sum;
}

/// K_0(x), ..., K_n(x) via the three-term recurrence
/// (i+1) K_{i+1} = (i + (q-1)(n-i) - q x) K_i - (q-1)(n-i+1) K_{i-1}.
inline std::vector<mpz_class> krawtchouk_column(std::uint64_t n, std::uint64_t q, std::uint64_t x)
{
  if (x > n)
    throw std::out_of_range("krawtchouk_column: need 0 <= x <= n");
  std::vector<mpz_class> K(n + 1);
  K[0] = 1;
  if (n == 0)
    return K;
  K[1] = mpz_class(n) * (q - 1) - mpz_class(q) * x;
  for (std::uint64_t i = 1; i < n; ++i) {
    const mpz_class a = mpz_class(i) + mpz_class(q - 1) * (n - i) - mpz_class(q) * x;
    const mpz_class b = mpz_class(q - 1) * (n - i + 1);
    mpz_class next = a * K[i] - b * K[i - 1];
    mpz_divexact_ui(next.get_mpz_t(), next.get_mpz_t(), i + 1);
    K[i + 1] = next;
  }
  return K;
}

namespace detail {

// C(expr, j) as a polynomial in x, where expr = sign * x + offset.
inline RationalPoly binomial_poly(const mpq_class& sign, const mpq_class& offset, std::uint64_t j)
{
  RationalPoly r = RationalPoly::constant(1);
  mpq_class fact = 1;
  for (std::uint64_t t = 0; t < j; ++t) {
    r = r * RationalPoly({offset - mpq_class(static_cast<long>(t)), sign});
    fact *= mpq_class(static_cast<long>(t + 1));
  }
  return r * (mpq_class(1) / fact);
}

} // namespace detail

/// K_i as a polynomial in x (degree exactly i).
inline RationalPoly krawtchouk_poly(std::uint64_t n, std::uint64_t q, std::uint64_t i)
{
  if (i > n)
    throw std::out_of_range("krawtchouk_poly: need i <= n");
  RationalPoly sum;
  const mpz_class qm1 = q - 1;
  for (std::uint64_t j = 0; j <= i; ++j) {
    const RationalPoly term = detail::binomial_poly(1, 0, j) *
                              detail::binomial_poly(-1, mpq_class(mpz_class(n)), i - j);
    const mpq_class coeff((j % 2 ? -1 : 1) * power(qm1, i - j));
    sum += term * coeff;
  }
  return sum;
}

/// Coefficients f_0..f_deg with f = sum f_i K_i, by peeling off leading terms.
inline std::vector<mpq_class> krawtchouk_expand(const RationalPoly& f, std::uint64_t n, std::uint64_t q)
{
  if (f.is_zero())
    return {};
  if (static_cast<std::uint64_t>(f.degree()) > n)
    throw std::invalid_argument("krawtchouk_expand: degree " + std::to_string(f.degree()) + " exceeds n = " +
                                std::to_string(n));
  std::vector<mpq_class> coeffs(f.degree() + 1, mpq_class(0));
  RationalPoly rem = f;
  for (int i = f.degree(); i >= 0; --i) {
    const RationalPoly K = krawtchouk_poly(n, q, static_cast<std::uint64_t>(i));
    const mpq_class c = rem.coefficient(static_cast<std::size_t>(i)) / K.leading();
    coeffs[i] = c;
    rem -= K * c;
  }
  if (!rem.is_zero())
    throw std::logic_error("krawtchouk_expand: nonzero remainder");
  return coeffs;
}

/// sum f_i K_i back in the monomial basis.
inline RationalPoly krawtchouk_combine(const std::vector<mpq_class>& coeffs, std::uint64_t n, std::uint64_t q)
{
  RationalPoly f;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0)
      f += krawtchouk_poly(n, q, i) * coeffs[i];
  return f;
}

} // namespace ovoid

#endif
