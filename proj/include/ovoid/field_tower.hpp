#ifndef OVOID_FIELD_TOWER_HPP
#define OVOID_FIELD_TOWER_HPP

// The tower F_p < F_q < F_{q^3}.
//
// F_{q^3} = F_q[s]/(s^3 + c_2 s^2 + c_1 s + c_0), the irreducible cubic with
// the smallest index c_0 + c_1 q + c_2 q^2. An element c_0 + c_1 s + c_2 s^2 has
// enumeration index c_0 + c_1 q + c_2 q^2 (indices of the c_i in F_q), so
// F_q sits inside F_{q^3} as the indices below q.

#include <array>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

#include <nlohmann/json.hpp>

#include "ovoid/base_field.hpp"

namespace ovoid {

struct Fq3
{
  std::uint32_t idx = 0;

  friend bool operator==(Fq3, Fq3) = default;
  friend auto operator<=>(Fq3, Fq3) = default;
};

enum class FieldLevel { Fq, Fq3 };

class FieldContext
{
public:
  /// Largest supported q^3.
  static constexpr std::uint64_t kMaxCubicOrder = std::uint64_t{1} << 30;

  FieldContext(int p, int m)
  {
    if (!detail::is_prime(static_cast<std::uint64_t>(p)))
      throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
    if (m < 1)
      throw std::invalid_argument("extension degree must be positive");
    const auto q = detail::ipow(p, m);
    if (q * q * q > kMaxCubicOrder)
      throw GuardExceeded("q^3 = " + std::to_string(q * q * q) + " exceeds 2^30");
    base_ = std::make_shared<const BaseField>(p, m);
    q_ = base_->order();
    choose_cubic_modulus();
    precompute_frobenius();
    choose_theta();
    choose_alpha();
  }

  const BaseField& base() const { return *base_; }
  std::shared_ptr<const BaseField> base_ptr() const { return base_; }

  int p() const { return base_->characteristic(); }
  int m() const { return base_->degree(); }
  std::uint32_t q() const { return q_; }
  std::uint32_t cubic_order() const { return q_ * q_ * q_; }

  /// Monic cubic modulus coefficients (c_0, c_1, c_2, 1).
  const std::array<Fq, 4>& cubic_modulus() const { return cubic_; }
  Fq3 theta() const { return theta_; }
  Fq alpha() const { return alpha_; }

  // --- F_{q^3} construction and access ---

  Fq3 zero() const { return Fq3{0}; }
  Fq3 one() const { return Fq3{1}; }
  Fq3 generator_s() const { return Fq3{q_}; }

  Fq3 make(Fq c0, Fq c1, Fq c2) const { return Fq3{c0.idx + q_ * (c1.idx + q_ * c2.idx)}; }
  Fq3 embed(Fq a) const { return Fq3{a.idx}; }
  Fq3 element(std::uint32_t idx) const
  {
    if (idx >= cubic_order())
      throw std::out_of_range("field element index out of range");
    return Fq3{idx};
  }

  std::array<Fq, 3> coeffs(Fq3 a) const
  {
    return {Fq{a.idx % q_}, Fq{(a.idx / q_) % q_}, Fq{a.idx / (q_ * q_)}};
  }

  bool in_base(Fq3 a) const { return a.idx < q_; }

  /// The F_q value of an element known to lie in F_q.
  Fq to_base(Fq3 a) const
  {
    if (!in_base(a))
      throw std::logic_error("element does not lie in F_q");
    return Fq{a.idx};
  }

  // --- arithmetic ---

  Fq3 add(Fq3 a, Fq3 b) const
  {
    const auto x = coeffs(a), y = coeffs(b);
    const auto& F = *base_;
    return make(F.add(x[0], y[0]), F.add(x[1], y[1]), F.add(x[2], y[2]));
  }

  Fq3 neg(Fq3 a) const
  {
    const auto x = coeffs(a);
    const auto& F = *base_;
    return make(F.neg(x[0]), F.neg(x[1]), F.neg(x[2]));
  }

  Fq3 sub(Fq3 a, Fq3 b) const { return add(a, neg(b)); }

  Fq3 scale(Fq c, Fq3 a) const
  {
    const auto x = coeffs(a);
    const auto& F = *base_;
    return make(F.mul(c, x[0]), F.mul(c, x[1]), F.mul(c, x[2]));
  }

  Fq3 mul(Fq3 a, Fq3 b) const
  {
    const auto x = coeffs(a), y = coeffs(b);
    const auto& F = *base_;
    std::array<Fq, 5> prod{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        prod[i + j] = F.add(prod[i + j], F.mul(x[i], y[j]));
    // fold s^3 and s^4 back into the basis
    std::array<Fq, 3> r{prod[0], prod[1], prod[2]};
    for (int i = 0; i < 3; ++i) {
      r[i] = F.add(r[i], F.mul(prod[3], s3_[i]));
      r[i] = F.add(r[i], F.mul(prod[4], s4_[i]));
    }
    return make(r[0], r[1], r[2]);
  }

  Fq3 pow(Fq3 a, std::uint64_t e) const
  {
    Fq3 r = one();
    while (e > 0) {
      if (e & 1)
        r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  Fq3 inv(Fq3 a) const
  {
    if (a.idx == 0)
      throw std::domain_error("inverse of zero");
    return pow(a, static_cast<std::uint64_t>(cubic_order()) - 2);
  }

  Fq3 div(Fq3 a, Fq3 b) const { return mul(a, inv(b)); }

  /// x^{q^k} for k in {0, 1, 2}.
  Fq3 frobenius(Fq3 a, int k) const
  {
    if (k < 0 || k > 2)
      throw std::out_of_range("frobenius exponent must be 0, 1 or 2");
    if (k == 0)
      return a;
    const auto x = coeffs(a);
    const auto& img = frob_[k - 1];
    Fq3 r = embed(x[0]);
    r = add(r, scale(x[1], img[0]));
    r = add(r, scale(x[2], img[1]));
    return r;
  }

  Fq trace(Fq3 a) const
  {
    const auto t = add(add(a, frobenius(a, 1)), frobenius(a, 2));
    return to_base(t);
  }

  Fq norm(Fq3 a) const
  {
    const auto n = mul(mul(a, frobenius(a, 1)), frobenius(a, 2));
    return to_base(n);
  }

  /// x^{q + q^2}, which equals N(x)/x for x != 0.
  Fq3 conorm(Fq3 a) const { return mul(frobenius(a, 1), frobenius(a, 2)); }

  std::vector<Fq> enumerate_base() const { return base_->elements(); }

  std::vector<Fq3> enumerate_cubic() const
  {
    std::vector<Fq3> out(cubic_order());
    for (std::uint32_t i = 0; i < out.size(); ++i)
      out[i] = Fq3{i};
    return out;
  }

  nlohmann::json to_json() const
  {
    using nlohmann::json;
    json j;
    j["p"] = p();
    j["m"] = m();
    j["base_modulus"] = base_->modulus();
    json cubic = json::array();
    for (auto c : cubic_)
      cubic.push_back(base_->coefficients(c));
    j["cubic_modulus"] = cubic;
    json th = json::array();
    for (auto c : coeffs(theta_))
      th.push_back(base_->coefficients(c));
    j["theta"] = th;
    j["alpha"] = base_->coefficients(alpha_);
    return j;
  }

private:
  bool cubic_has_root(const std::array<Fq, 4>& f) const
  {
    const auto& F = *base_;
    for (std::uint32_t i = 0; i < q_; ++i) {
      const Fq x{i};
      // Horner
      Fq v = f[3];
      for (int k = 2; k >= 0; --k)
        v = F.add(F.mul(v, x), f[k]);
      if (v.idx == 0)
        return true;
    }
    return false;
  }

  void choose_cubic_modulus()
  {
    // ordered by c_0 + c_1 q + c_2 q^2; a cubic is irreducible iff rootless
    for (std::uint32_t c2 = 0; c2 < q_; ++c2)
      for (std::uint32_t c1 = 0; c1 < q_; ++c1)
        for (std::uint32_t c0 = 0; c0 < q_; ++c0) {
          const std::array<Fq, 4> f{Fq{c0}, Fq{c1}, Fq{c2}, Fq{1}};
          if (!cubic_has_root(f)) {
            cubic_ = f;
            const auto& F = *base_;
            // s^3 = -(c0 + c1 s + c2 s^2)
            s3_ = {F.neg(f[0]), F.neg(f[1]), F.neg(f[2])};
            // s^4 = s * s^3 = -c0 s - c1 s^2 - c2 s^3
            s4_ = {F.mul(s3_[2], s3_[0]), F.add(s3_[0], F.mul(s3_[2], s3_[1])),
                   F.add(s3_[1], F.mul(s3_[2], s3_[2]))};
            return;
          }
        }
    throw std::logic_error("no irreducible cubic found");
  }

  void precompute_frobenius()
  {
    const Fq3 s = generator_s();
    const Fq3 s2 = mul(s, s);
    const Fq3 s_q = pow(s, q_);
    const Fq3 s2_q = pow(s2, q_);
    frob_[0] = {s_q, s2_q};
    frob_[1] = {pow(s_q, q_), pow(s2_q, q_)};
  }

  void choose_theta()
  {
    const std::uint64_t order = cubic_order() - 1;
    const auto primes = detail::prime_factors(order);
    for (std::uint32_t i = 1; i < cubic_order(); ++i) {
      const Fq3 t{i};
      bool generator = true;
      for (auto r : primes)
        if (pow(t, order / r) == one()) {
          generator = false;
          break;
        }
      if (generator) {
        theta_ = t;
        return;
      }
    }
    throw std::logic_error("no primitive element found");
  }

  void choose_alpha()
  {
    const auto& F = *base_;
    for (std::uint32_t a = 0; a < q_; ++a) {
      bool has_root = false;
      for (std::uint32_t x = 0; x < q_ && !has_root; ++x) {
        const Fq xv{x};
        has_root = F.sub(F.mul(xv, xv), xv) == Fq{a};
      }
      if (!has_root) {
        alpha_ = Fq{a};
        return;
      }
    }
    throw std::logic_error("no alpha with x^2 - x - alpha irreducible");
  }

  std::shared_ptr<const BaseField> base_;
  std::uint32_t q_ = 0;
  std::array<Fq, 4> cubic_{};
  std::array<Fq, 3> s3_{};
  std::array<Fq, 3> s4_{};
  std::array<std::array<Fq3, 2>, 2> frob_{};
  Fq3 theta_{};
  Fq alpha_{};
};

/// Deterministic tower for q = p^m.
inline FieldContext make_context(int p, int m) { return FieldContext(p, m); }

inline FieldContext make_context(std::uint64_t q)
{
  const auto [p, m] = factor_prime_power(q);
  return FieldContext(p, m);
}

} // namespace ovoid

#endif
