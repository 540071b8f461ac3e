#ifndef OVOID_RATIONAL_POLY_HPP
#define OVOID_RATIONAL_POLY_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ovoid {

/// "p/q" with an explicit denominator, also for integers.
inline std::string to_fraction_string(const mpq_class& r)
{
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Exact polynomial over Q in the monomial basis, low degree first.
class RationalPoly
{
public:
  RationalPoly() = default;

  RationalPoly(std::initializer_list<mpq_class> coeffs)
    : c_(coeffs)
  {
    trim();
  }

  explicit RationalPoly(std::vector<mpq_class> coeffs)
    : c_(std::move(coeffs))
  {
    trim();
  }

  static RationalPoly constant(const mpq_class& v) { return RationalPoly({v}); }
  static RationalPoly x() { return RationalPoly({mpq_class(0), mpq_class(1)}); }

  /// (x - r)
  static RationalPoly linear_root(const mpq_class& r) { return RationalPoly({-r, mpq_class(1)}); }

  bool is_zero() const { return c_.empty(); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  const std::vector<mpq_class>& coefficients() const { return c_; }

  mpq_class coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : mpq_class(0); }

  mpq_class leading() const { return c_.empty() ? mpq_class(0) : c_.back(); }

  mpq_class operator()(const mpq_class& x) const
  {
    mpq_class v = 0;
    for (std::size_t i = c_.size(); i-- > 0;)
      v = v * x + c_[i];
    return v;
  }

  RationalPoly& operator+=(const RationalPoly& o)
  {
    if (o.c_.size() > c_.size())
      c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
      c_[i] += o.c_[i];
    trim();
    return *this;
  }

  RationalPoly& operator-=(const RationalPoly& o)
  {
    if (o.c_.size() > c_.size())
      c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
      c_[i] -= o.c_[i];
    trim();
    return *this;
  }

  RationalPoly& operator*=(const mpq_class& s)
  {
    for (auto& e : c_)
      e *= s;
    trim();
    return *this;
  }

  friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
  friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
  friend RationalPoly operator*(RationalPoly a, const mpq_class& s) { return a *= s; }
  friend RationalPoly operator*(const mpq_class& s, RationalPoly a) { return a *= s; }

  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b)
  {
    if (a.is_zero() || b.is_zero())
      return {};
    std::vector<mpq_class> r(a.c_.size() + b.c_.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        r[i + j] += a.c_[i] * b.c_[j];
    return RationalPoly(std::move(r));
  }

  friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.c_ == b.c_; }

private:
  void trim()
  {
    while (!c_.empty() && c_.back() == 0)
      c_.pop_back();
  }

  std::vector<mpq_class> c_;
};

} // namespace ovoid

#endif
