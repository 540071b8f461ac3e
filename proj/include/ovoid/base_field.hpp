#ifndef OVOID_BASE_FIELD_HPP
#define OVOID_BASE_FIELD_HPP

// Table-driven arithmetic in GF(p^m).
//
// Elements are identified with their enumeration index: the coefficient
// vector (a_0, ..., a_{m-1}) over F_p, low degree first, read as the base-p
// integer a_0 + a_1 p + ... + a_{m-1} p^{m-1}. Index 0 is zero and index 1
// is one. The modulus is the monic irreducible polynomial of degree m with
// the smallest value c_0 + c_1 p + ... + c_{m-1} p^{m-1}.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ovoid {

struct Fq
{
  std::uint32_t idx = 0;

  friend bool operator==(Fq, Fq) = default;
  friend auto operator<=>(Fq, Fq) = default;
};

/// Raised when a computation would exceed a configured enumeration guard.
class GuardExceeded : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0)
        n /= d;
    }
  }
  if (n > 1)
    out.push_back(n);
  return out;
}

inline std::uint64_t ipow(std::uint64_t b, unsigned e)
{
  std::uint64_t r = 1;
  while (e--)
    r *= b;
  return r;
}

// Dense polynomials over F_p, low degree first, no trailing zeros.
using PrimePoly = std::vector<int>;

inline void trim(PrimePoly& a)
{
  while (!a.empty() && a.back() == 0)
    a.pop_back();
}

inline int inv_mod(int a, int p)
{
  // p is prime and small; Fermat.
  long long r = 1, b = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1)
      r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<int>(r);
}

inline PrimePoly poly_mod(PrimePoly a, const PrimePoly& m, int p)
{
  trim(a);
  const int lead_inv = inv_mod(m.back(), p);
  const auto dm = m.size() - 1;
  while (a.size() > dm) {
    const auto shift = a.size() - 1 - dm;
    const int factor = static_cast<int>(1LL * a.back() * lead_inv % p);
    for (std::size_t i = 0; i <= dm; ++i)
      a[shift + i] = static_cast<int>(((a[shift + i] - 1LL * factor * m[i]) % p + p) % p);
    trim(a);
  }
  return a;
}

inline PrimePoly poly_mul(const PrimePoly& a, const PrimePoly& b, int p)
{
  if (a.empty() || b.empty())
    return {};
  PrimePoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<int>((r[i + j] + 1LL * a[i] * b[j]) % p);
  trim(r);
  return r;
}

// Trial division by every monic polynomial of degree 1..deg/2.
inline bool is_irreducible_over_prime(const PrimePoly& f, int p)
{
  const int deg = static_cast<int>(f.size()) - 1;
  if (deg < 1)
    return false;
  for (int d = 1; 2 * d <= deg; ++d) {
    const auto count = ipow(p, d);
    for (std::uint64_t code = 0; code < count; ++code) {
      PrimePoly h(d + 1, 0);
      auto c = code;
      for (int i = 0; i < d; ++i) {
        h[i] = static_cast<int>(c % p);
        c /= p;
      }
      h[d] = 1;
      if (poly_mod(f, h, p).empty())
        return false;
    }
  }
  return true;
}

// Smallest monic irreducible of degree m, ordered by the integer sum c_i p^i.
inline PrimePoly smallest_irreducible(int p, int m)
{
  const auto count = ipow(p, m);
  for (std::uint64_t code = 0; code < count; ++code) {
    PrimePoly f(m + 1, 0);
    auto c = code;
    for (int i = 0; i < m; ++i) {
      f[i] = static_cast<int>(c % p);
      c /= p;
    }
    f[m] = 1;
    if (is_irreducible_over_prime(f, p))
      return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

} // namespace detail

class BaseField
{
public:
  BaseField(int p, int m)
    : p_(p), m_(m)
  {
    if (!detail::is_prime(static_cast<std::uint64_t>(p)))
      throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
    if (m < 1)
      throw std::invalid_argument("extension degree must be positive");
    const auto q = detail::ipow(p, m);
    if (q > 1024)
      throw GuardExceeded("base field order " + std::to_string(q) + " exceeds 1024");
    q_ = static_cast<std::uint32_t>(q);
    modulus_ = detail::smallest_irreducible(p, m);
    build_tables();
  }

  int characteristic() const { return p_; }
  int degree() const { return m_; }
  std::uint32_t order() const { return q_; }
  const std::vector<int>& modulus() const { return modulus_; }

  Fq zero() const { return Fq{0}; }
  Fq one() const { return Fq{1}; }
  Fq element(std::uint32_t idx) const
  {
    if (idx >= q_)
      throw std::out_of_range("field element index out of range");
    return Fq{idx};
  }

  /// Image of the integer n under Z -> F_p -> F_q.
  Fq from_int(long long n) const
  {
    return Fq{static_cast<std::uint32_t>(((n % p_) + p_) % p_)};
  }

  Fq add(Fq a, Fq b) const { return Fq{add_[a.idx * q_ + b.idx]}; }
  Fq sub(Fq a, Fq b) const { return Fq{add_[a.idx * q_ + neg_[b.idx]]}; }
  Fq neg(Fq a) const { return Fq{neg_[a.idx]}; }
  Fq mul(Fq a, Fq b) const { return Fq{mul_[a.idx * q_ + b.idx]}; }
  Fq inv(Fq a) const
  {
    if (a.idx == 0)
      throw std::domain_error("inverse of zero");
    return Fq{inv_[a.idx]};
  }
  Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }
  Fq pow(Fq a, std::uint64_t e) const
  {
    Fq r = one();
    while (e > 0) {
      if (e & 1)
        r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  std::vector<int> coefficients(Fq a) const
  {
    std::vector<int> c(m_);
    auto v = a.idx;
    for (int i = 0; i < m_; ++i) {
      c[i] = static_cast<int>(v % p_);
      v /= p_;
    }
    return c;
  }

  std::vector<Fq> elements() const
  {
    std::vector<Fq> out(q_);
    for (std::uint32_t i = 0; i < q_; ++i)
      out[i] = Fq{i};
    return out;
  }

  // Raw table access for tight loops.
  const std::uint16_t* add_table() const { return add_.data(); }
  const std::uint16_t* mul_table() const { return mul_.data(); }

private:
  detail::PrimePoly to_poly(std::uint32_t idx) const
  {
    detail::PrimePoly a(m_);
    for (int i = 0; i < m_; ++i) {
      a[i] = static_cast<int>(idx % p_);
      idx /= p_;
    }
    detail::trim(a);
    return a;
  }

  std::uint32_t from_poly(const detail::PrimePoly& a) const
  {
    std::uint32_t idx = 0;
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
      idx = idx * p_ + a[i];
    return idx;
  }

  void build_tables()
  {
    const std::size_t qq = static_cast<std::size_t>(q_) * q_;
    add_.resize(qq);
    mul_.resize(qq);
    neg_.resize(q_);
    inv_.assign(q_, 0);
    std::vector<detail::PrimePoly> polys(q_);
    for (std::uint32_t i = 0; i < q_; ++i)
      polys[i] = to_poly(i);
    for (std::uint32_t a = 0; a < q_; ++a) {
      for (std::uint32_t b = 0; b < q_; ++b) {
        // digit-wise addition mod p
        std::uint32_t x = a, y = b, r = 0, place = 1;
        for (int i = 0; i < m_; ++i) {
          r += ((x % p_ + y % p_) % p_) * place;
          x /= p_;
          y /= p_;
          place *= p_;
        }
        add_[a * q_ + b] = static_cast<std::uint16_t>(r);
        if (b >= a) {
          const auto prod = from_poly(detail::poly_mod(detail::poly_mul(polys[a], polys[b], p_), modulus_, p_));
          mul_[a * q_ + b] = mul_[b * q_ + a] = static_cast<std::uint16_t>(prod);
        }
      }
    }
    for (std::uint32_t a = 0; a < q_; ++a) {
      for (std::uint32_t b = 0; b < q_; ++b) {
        if (add_[a * q_ + b] == 0)
          neg_[a] = static_cast<std::uint16_t>(b);
        if (mul_[a * q_ + b] == 1)
          inv_[a] = static_cast<std::uint16_t>(b);
      }
    }
  }

  int p_;
  int m_;
  std::uint32_t q_ = 0;
  std::vector<int> modulus_;
  std::vector<std::uint16_t> add_;
  std::vector<std::uint16_t> mul_;
  std::vector<std::uint16_t> neg_;
  std::vector<std::uint16_t> inv_;
};

/// Splits q into (p, m) with q = p^m, or throws std::invalid_argument.
inline std::pair<int, int> factor_prime_power(std::uint64_t q)
{
  if (q < 2)
    throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  const auto primes = detail::prime_factors(q);
  if (primes.size() != 1)
    throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  int m = 0;
  while (q > 1) {
    q /= primes[0];
    ++m;
  }
  return {static_cast<int>(primes[0]), m};
}

} // namespace ovoid

#endif
