#ifndef OVOID_GEOMETRY_HPP
#define OVOID_GEOMETRY_HPP

// The 8-dimensional F_q-space V = F_q x F_{q^3} x F_{q^3} x F_q, its
// alternating form A and quadratic form Q, the ovoid O, and the action of
// PGL(2, q^3) on PG(V).
//
// Vectors are flattened to 8 F_q coordinates in the order
// (x, y_0, y_1, y_2, z_0, z_1, z_2, w). A projective point is represented by
// the vector whose first nonzero flattened coordinate is 1, and is encoded
// as the integer sum_i v_i q^i (coordinate 0 least significant).

#include <array>
#include <cstdint>
#include <deque>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ovoid/field_tower.hpp"
#include "ovoid/parallel.hpp"

namespace ovoid {

struct VectorV
{
  Fq x;
  Fq3 y;
  Fq3 z;
  Fq w;

  friend bool operator==(const VectorV&, const VectorV&) = default;
};

using Flat8 = std::array<Fq, 8>;

inline Flat8 flatten(const FieldContext& ctx, const VectorV& v)
{
  const auto y = ctx.coeffs(v.y);
  const auto z = ctx.coeffs(v.z);
  return {v.x, y[0], y[1], y[2], z[0], z[1], z[2], v.w};
}

inline VectorV unflatten(const FieldContext& ctx, const Flat8& f)
{
  return {f[0], ctx.make(f[1], f[2], f[3]), ctx.make(f[4], f[5], f[6]), f[7]};
}

inline bool is_zero(const Flat8& f)
{
  for (auto c : f)
    if (c.idx != 0)
      return false;
  return true;
}

inline VectorV add(const FieldContext& ctx, const VectorV& u, const VectorV& v)
{
  const auto& F = ctx.base();
  return {F.add(u.x, v.x), ctx.add(u.y, v.y), ctx.add(u.z, v.z), F.add(u.w, v.w)};
}

inline VectorV scale(const FieldContext& ctx, Fq c, const VectorV& v)
{
  const auto& F = ctx.base();
  return {F.mul(c, v.x), ctx.scale(c, v.y), ctx.scale(c, v.z), F.mul(c, v.w)};
}

/// Scales the flattened vector so its first nonzero coordinate is 1.
inline Flat8 canonical_flat(const BaseField& F, Flat8 f)
{
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i].idx != 0) {
      if (f[i].idx == 1)
        return f;
      const Fq s = F.inv(f[i]);
      for (std::size_t j = i; j < f.size(); ++j)
        f[j] = F.mul(s, f[j]);
      return f;
    }
  }
  throw std::invalid_argument("zero vector has no projective point");
}

struct ProjectivePoint
{
  VectorV rep;

  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
};

inline ProjectivePoint canonical(const FieldContext& ctx, const VectorV& v)
{
  return {unflatten(ctx, canonical_flat(ctx.base(), flatten(ctx, v)))};
}

// --- forms ---

/// A(u, v) = x w' - w x' + Tr(z y' - y z').
inline Fq alternating_form(const FieldContext& ctx, const VectorV& u, const VectorV& v)
{
  const auto& F = ctx.base();
  const Fq lin = F.sub(F.mul(u.x, v.w), F.mul(u.w, v.x));
  const Fq3 inner = ctx.sub(ctx.mul(u.z, v.y), ctx.mul(u.y, v.z));
  return F.add(lin, ctx.trace(inner));
}

/// Q(v) = x w + Tr(y z).
inline Fq quadratic_form(const FieldContext& ctx, const VectorV& v)
{
  const auto& F = ctx.base();
  return F.add(F.mul(v.x, v.w), ctx.trace(ctx.mul(v.y, v.z)));
}

// --- the ovoid ---

inline VectorV ovoid_vector(const FieldContext& ctx, Fq3 x)
{
  return {ctx.base().one(), x, ctx.conorm(x), ctx.norm(x)};
}

inline VectorV ovoid_vector_at_infinity(const FieldContext& ctx)
{
  return {ctx.base().zero(), ctx.zero(), ctx.zero(), ctx.base().one()};
}

/// P(x) for x in enumeration order, then P(infinity).
inline std::vector<ProjectivePoint> ovoid(const FieldContext& ctx)
{
  std::vector<ProjectivePoint> out;
  out.reserve(ctx.cubic_order() + 1);
  for (auto x : ctx.enumerate_cubic())
    out.push_back({ovoid_vector(ctx, x)});
  out.push_back({ovoid_vector_at_infinity(ctx)});
  return out;
}

// --- PGL(2, q^3) ---

struct GroupElement
{
  Fq3 a, b, c, d;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

inline Fq3 determinant(const FieldContext& ctx, const GroupElement& g)
{
  return ctx.sub(ctx.mul(g.a, g.d), ctx.mul(g.b, g.c));
}

/// Canonical representative modulo scalars: first nonzero of a, b, c, d is 1.
inline GroupElement make_group_element(const FieldContext& ctx, Fq3 a, Fq3 b, Fq3 c, Fq3 d)
{
  GroupElement g{a, b, c, d};
  if (determinant(ctx, g) == ctx.zero())
    throw std::invalid_argument("singular matrix is not in PGL(2, q^3)");
  const Fq3 lead = a != ctx.zero() ? a : b;
  if (lead != ctx.one()) {
    const Fq3 s = ctx.inv(lead);
    g = {ctx.mul(s, a), ctx.mul(s, b), ctx.mul(s, c), ctx.mul(s, d)};
  }
  return g;
}

inline GroupElement identity_element(const FieldContext& ctx)
{
  return {ctx.one(), ctx.zero(), ctx.zero(), ctx.one()};
}

/// Matrix product g h.
inline GroupElement compose(const FieldContext& ctx, const GroupElement& g, const GroupElement& h)
{
  return make_group_element(ctx,
                            ctx.add(ctx.mul(g.a, h.a), ctx.mul(g.b, h.c)),
                            ctx.add(ctx.mul(g.a, h.b), ctx.mul(g.b, h.d)),
                            ctx.add(ctx.mul(g.c, h.a), ctx.mul(g.d, h.c)),
                            ctx.add(ctx.mul(g.c, h.b), ctx.mul(g.d, h.d)));
}

inline std::uint64_t group_order(std::uint64_t q)
{
  const auto q3 = q * q * q;
  return q3 * (q3 - 1) * (q3 + 1);
}

/// The F_q-linear map of g on V, written out coordinate by coordinate.
inline VectorV act_vector(const FieldContext& ctx, const GroupElement& g, const VectorV& v)
{
  const auto& F = ctx.base();
  auto mul = [&](Fq3 u, Fq3 w) { return ctx.mul(u, w); };
  auto mul3 = [&](Fq3 u, Fq3 w, Fq3 t) { return ctx.mul(ctx.mul(u, w), t); };
  auto fr1 = [&](Fq3 u) { return ctx.frobenius(u, 1); };
  auto fr2 = [&](Fq3 u) { return ctx.frobenius(u, 2); };
  auto cn = [&](Fq3 u) { return ctx.conorm(u); };
  const auto [a, b, c, d] = g;
  const Fq3 x = ctx.embed(v.x), w = ctx.embed(v.w), y = v.y, z = v.z;

  const Fq xn = F.add(F.add(F.mul(ctx.norm(d), v.x), F.mul(ctx.norm(c), v.w)),
                      ctx.trace(ctx.add(mul3(c, cn(d), y), mul3(d, cn(c), z))));

  Fq3 yn = mul3(b, cn(d), x);
  yn = ctx.add(yn, mul3(a, cn(c), w));
  yn = ctx.add(yn, mul3(a, cn(d), y));
  yn = ctx.add(yn, mul(mul3(b, fr2(d), fr1(c)), fr1(y)));
  yn = ctx.add(yn, mul(mul3(b, fr1(d), fr2(c)), fr2(y)));
  yn = ctx.add(yn, mul3(b, cn(c), z));
  yn = ctx.add(yn, mul(mul3(fr1(d), a, fr2(c)), fr1(z)));
  yn = ctx.add(yn, mul(mul3(fr2(d), a, fr1(c)), fr2(z)));

  Fq3 zn = mul3(d, cn(b), x);
  zn = ctx.add(zn, mul3(c, cn(a), w));
  zn = ctx.add(zn, mul3(c, cn(b), y));
  zn = ctx.add(zn, mul(mul3(d, fr2(b), fr1(a)), fr1(y)));
  zn = ctx.add(zn, mul(mul3(d, fr1(b), fr2(a)), fr2(y)));
  zn = ctx.add(zn, mul3(d, cn(a), z));
  zn = ctx.add(zn, mul(mul3(fr1(b), c, fr2(a)), fr1(z)));
  zn = ctx.add(zn, mul(mul3(fr2(b), c, fr1(a)), fr2(z)));

  const Fq wn = F.add(F.add(F.mul(ctx.norm(b), v.x), F.mul(ctx.norm(a), v.w)),
                      ctx.trace(ctx.add(mul3(a, cn(b), y), mul3(b, cn(a), z))));
  return {xn, yn, zn, wn};
}

inline ProjectivePoint act(const FieldContext& ctx, const GroupElement& g, const ProjectivePoint& P)
{
  return canonical(ctx, act_vector(ctx, g, P.rep));
}

/// (a x + b)/(c x + d) on the projective line; std::nullopt is infinity.
inline std::optional<Fq3> mobius(const FieldContext& ctx, const GroupElement& g, std::optional<Fq3> x)
{
  if (!x) {
    if (g.c == ctx.zero())
      return std::nullopt;
    return ctx.div(g.a, g.c);
  }
  const Fq3 den = ctx.add(ctx.mul(g.c, *x), g.d);
  if (den == ctx.zero())
    return std::nullopt;
  return ctx.div(ctx.add(ctx.mul(g.a, *x), g.b), den);
}

inline ProjectivePoint ovoid_point(const FieldContext& ctx, std::optional<Fq3> x)
{
  return canonical(ctx, x ? ovoid_vector(ctx, *x) : ovoid_vector_at_infinity(ctx));
}

/// A scalar multiple s g of the matrix with N(det(s g)) = 1, if one exists.
/// The result is a matrix representative, not the canonical one. The
/// action of such a representative preserves A exactly (and Q when q is
/// even); in general A(g u, g v) = N(det g) A(u, v).
inline std::optional<GroupElement> unimodular_representative(const FieldContext& ctx, const GroupElement& g)
{
  const auto& F = ctx.base();
  const Fq nd = ctx.norm(determinant(ctx, g));
  for (auto s : ctx.enumerate_cubic()) {
    if (s == ctx.zero())
      continue;
    const Fq ns = ctx.norm(s);
    if (F.mul(F.mul(ns, ns), nd) == F.one())
      return GroupElement{ctx.mul(s, g.a), ctx.mul(s, g.b), ctx.mul(s, g.c), ctx.mul(s, g.d)};
  }
  return std::nullopt;
}

template <class Rng>
GroupElement random_group_element(const FieldContext& ctx, Rng& rng)
{
  std::uniform_int_distribution<std::uint32_t> pick(0, ctx.cubic_order() - 1);
  for (;;) {
    const Fq3 a{pick(rng)}, b{pick(rng)}, c{pick(rng)}, d{pick(rng)};
    if (determinant(ctx, {a, b, c, d}) != ctx.zero())
      return make_group_element(ctx, a, b, c, d);
  }
}

template <class Rng>
VectorV random_vector(const FieldContext& ctx, Rng& rng)
{
  std::uniform_int_distribution<std::uint32_t> pick_q(0, ctx.q() - 1);
  std::uniform_int_distribution<std::uint32_t> pick_q3(0, ctx.cubic_order() - 1);
  return {Fq{pick_q(rng)}, Fq3{pick_q3(rng)}, Fq3{pick_q3(rng)}, Fq{pick_q(rng)}};
}

/// Calls fn(g) for every canonical element of PGL(2, q^3).
template <class Fn>
void for_each_group_element(const FieldContext& ctx, Fn&& fn)
{
  const auto n = ctx.cubic_order();
  // a = 1
  for (std::uint32_t b = 0; b < n; ++b)
    for (std::uint32_t c = 0; c < n; ++c)
      for (std::uint32_t d = 0; d < n; ++d) {
        const GroupElement g{ctx.one(), Fq3{b}, Fq3{c}, Fq3{d}};
        if (determinant(ctx, g) != ctx.zero())
          fn(g);
      }
  // a = 0, b = 1, c != 0
  for (std::uint32_t c = 1; c < n; ++c)
    for (std::uint32_t d = 0; d < n; ++d)
      fn(GroupElement{ctx.zero(), ctx.one(), Fq3{c}, Fq3{d}});
}

// --- linear-algebra view of the action ---

/// Column j holds the image of the j-th flattened basis vector.
struct LinearMap8
{
  std::array<Flat8, 8> columns{};
};

inline Flat8 basis_vector(std::size_t j)
{
  Flat8 e{};
  e[j] = Fq{1};
  return e;
}

inline LinearMap8 action_matrix(const FieldContext& ctx, const GroupElement& g)
{
  LinearMap8 M;
  for (std::size_t j = 0; j < 8; ++j)
    M.columns[j] = flatten(ctx, act_vector(ctx, g, unflatten(ctx, basis_vector(j))));
  return M;
}

inline Flat8 apply(const BaseField& F, const LinearMap8& M, const Flat8& v)
{
  Flat8 r{};
  for (std::size_t j = 0; j < 8; ++j) {
    if (v[j].idx == 0)
      continue;
    for (std::size_t i = 0; i < 8; ++i)
      r[i] = F.add(r[i], F.mul(v[j], M.columns[j][i]));
  }
  return r;
}

/// Indexing of PG(7, q) by flattened-coordinate codes.
class PointSpace
{
public:
  explicit PointSpace(std::uint32_t q)
    : q_(q)
  {
    pow_[0] = 1;
    for (std::size_t i = 1; i <= 8; ++i)
      pow_[i] = pow_[i - 1] * q;
  }

  std::uint32_t q() const { return q_; }
  /// q^8: the size of a table indexed by code.
  std::uint64_t code_range() const { return pow_[8]; }
  std::uint64_t point_count() const { return (pow_[8] - 1) / (q_ - 1); }
  std::uint64_t place(std::size_t i) const { return pow_[i]; }

  std::uint64_t code(const Flat8& f) const
  {
    std::uint64_t c = 0;
    for (std::size_t i = 8; i-- > 0;)
      c = c * q_ + f[i].idx;
    return c;
  }

  Flat8 decode(std::uint64_t c) const
  {
    Flat8 f{};
    for (std::size_t i = 0; i < 8; ++i) {
      f[i] = Fq{static_cast<std::uint32_t>(c % q_)};
      c /= q_;
    }
    return f;
  }

  /// Calls fn(code) for every canonical point, leading position ascending.
  template <class Fn>
  void for_each_point(Fn&& fn) const
  {
    for (std::size_t lead = 0; lead < 8; ++lead) {
      const std::uint64_t base = pow_[lead];
      const std::uint64_t free = pow_[7 - lead];
      for (std::uint64_t r = 0; r < free; ++r)
        fn(base + r * pow_[lead + 1]);
    }
  }

private:
  std::uint32_t q_;
  std::array<std::uint64_t, 9> pow_{};
};

inline std::uint64_t point_code(const FieldContext& ctx, const ProjectivePoint& P)
{
  return PointSpace(ctx.q()).code(canonical_flat(ctx.base(), flatten(ctx, P.rep)));
}

// --- hyperplane sections ---

/// |{P in O : A(P, v) = 0}|.
inline std::uint32_t hyperplane_section(const FieldContext& ctx, const VectorV& v,
                                        const std::vector<ProjectivePoint>& points)
{
  if (is_zero(flatten(ctx, v)))
    throw std::invalid_argument("hyperplane section of the zero vector");
  std::uint32_t count = 0;
  for (const auto& P : points)
    if (alternating_form(ctx, P.rep, v).idx == 0)
      ++count;
  return count;
}

namespace detail {

// Enumerates the canonical v in PG(7, q) and counts, for each, the number of
// columns P with sum_j v_j rows[j][P] = 0. Shards are (leading position,
// value of the next coordinate), so the output for a shard is independent
// of the thread that handles it.
class SectionSweep
{
public:
  SectionSweep(const BaseField& F, const std::array<std::vector<std::uint16_t>, 8>& rows)
    : F_(F), space_(F.order()), n_(rows[0].size())
  {
    const auto q = F.order();
    scaled_.resize(8);
    for (std::size_t j = 0; j < 8; ++j) {
      scaled_[j].resize(static_cast<std::size_t>(q) * n_);
      for (std::uint32_t s = 0; s < q; ++s)
        for (std::size_t P = 0; P < n_; ++P)
          scaled_[j][s * n_ + P] = F.mul_table()[s * q + rows[j][P]];
    }
    neg_.resize(q);
    for (std::uint32_t s = 0; s < q; ++s)
      neg_[s] = static_cast<std::uint16_t>(F.neg(Fq{s}).idx);
    for (std::size_t lead = 0; lead < 8; ++lead) {
      if (lead == 7)
        shards_.push_back({lead, 0});
      else
        for (std::uint32_t s = 0; s < q; ++s)
          shards_.push_back({lead, s});
    }
  }

  std::size_t column_count() const { return n_; }

  /// sink(worker, code, zeros) is called once per canonical point.
  template <class Sink>
  void run(unsigned threads, Sink&& sink) const
  {
    run_shards(shards_.size(), threads, [&](std::size_t s, unsigned worker) {
      std::vector<std::vector<std::uint16_t>> partial(8, std::vector<std::uint16_t>(n_));
      const auto [lead, first] = shards_[s];
      auto& start = partial[lead];
      // v_lead = 1
      for (std::size_t P = 0; P < n_; ++P)
        start[P] = scaled_[lead][1 * n_ + P];
      std::uint64_t code = space_.place(lead);
      if (lead == 7) {
        sink(worker, code, count_zeros(start.data()));
        return;
      }
      step(lead + 1, first, partial, code, worker, sink);
    });
  }

private:
  template <class Sink>
  void step(std::size_t j, std::uint32_t s, std::vector<std::vector<std::uint16_t>>& partial,
            std::uint64_t code, unsigned worker, Sink& sink) const
  {
    const auto q = F_.order();
    const auto* add = F_.add_table();
    const auto& prev = partial[j - 1];
    const auto* row = scaled_[j].data() + static_cast<std::size_t>(s) * n_;
    code += s * space_.place(j);
    if (j == 7) {
      std::uint32_t zeros = 0;
      for (std::size_t P = 0; P < n_; ++P)
        zeros += row[P] == neg_[prev[P]];
      sink(worker, code, zeros);
      return;
    }
    auto& cur = partial[j];
    for (std::size_t P = 0; P < n_; ++P)
      cur[P] = add[prev[P] * q + row[P]];
    for (std::uint32_t t = 0; t < q; ++t)
      step(j + 1, t, partial, code, worker, sink);
  }

  std::uint32_t count_zeros(const std::uint16_t* v) const
  {
    std::uint32_t z = 0;
    for (std::size_t P = 0; P < n_; ++P)
      z += v[P] == 0;
    return z;
  }

  struct Shard
  {
    std::size_t lead;
    std::uint32_t first;
  };

  const BaseField& F_;
  PointSpace space_;
  std::size_t n_;
  std::vector<std::vector<std::uint16_t>> scaled_;
  std::vector<std::uint16_t> neg_;
  std::vector<Shard> shards_;
};

// rows[j][P] = A(P, e_j), so that A(P, v) = sum_j v_j rows[j][P].
inline std::array<std::vector<std::uint16_t>, 8> form_rows(const FieldContext& ctx,
                                                           const std::vector<ProjectivePoint>& points)
{
  std::array<std::vector<std::uint16_t>, 8> rows;
  for (std::size_t j = 0; j < 8; ++j) {
    const VectorV e = unflatten(ctx, basis_vector(j));
    rows[j].resize(points.size());
    for (std::size_t P = 0; P < points.size(); ++P)
      rows[j][P] = static_cast<std::uint16_t>(alternating_form(ctx, points[P].rep, e).idx);
  }
  return rows;
}

inline void check_point_guard(std::uint64_t points, std::uint64_t guard)
{
  if (points > guard)
    throw GuardExceeded("PG(7,q) has " + std::to_string(points) + " points, guard is " + std::to_string(guard));
}

} // namespace detail

/// Default cap on the number of points of PG(7, q) enumerated.
inline constexpr std::uint64_t kDefaultPointGuard = 10'000'000;

/// histogram[s] = number of points v of PG(V) with |v^perp cap points| = s.
inline std::vector<std::uint64_t> section_histogram(const FieldContext& ctx,
                                                    const std::vector<ProjectivePoint>& points,
                                                    unsigned threads = 1,
                                                    std::uint64_t point_guard = kDefaultPointGuard)
{
  detail::check_point_guard(PointSpace(ctx.q()).point_count(), point_guard);
  const detail::SectionSweep sweep(ctx.base(), detail::form_rows(ctx, points));
  const unsigned workers = std::max(1u, threads);
  std::vector<std::vector<std::uint64_t>> local(workers, std::vector<std::uint64_t>(points.size() + 1, 0));
  sweep.run(workers, [&](unsigned worker, std::uint64_t, std::uint32_t zeros) { ++local[worker][zeros]; });
  std::vector<std::uint64_t> hist(points.size() + 1, 0);
  for (const auto& h : local)
    for (std::size_t s = 0; s < h.size(); ++s)
      hist[s] += h[s];
  return hist;
}

/// table[code] = |v^perp cap points| for every canonical code; other slots 0.
inline std::vector<std::uint32_t> section_table(const FieldContext& ctx,
                                                const std::vector<ProjectivePoint>& points,
                                                unsigned threads = 1,
                                                std::uint64_t point_guard = kDefaultPointGuard)
{
  const PointSpace space(ctx.q());
  detail::check_point_guard(space.point_count(), point_guard);
  const detail::SectionSweep sweep(ctx.base(), detail::form_rows(ctx, points));
  std::vector<std::uint32_t> table(space.code_range(), 0);
  sweep.run(std::max(1u, threads), [&](unsigned, std::uint64_t code, std::uint32_t zeros) { table[code] = zeros; });
  return table;
}

// --- orbits ---

/// The four orbit representatives, in order O_1..O_4.
inline std::array<ProjectivePoint, 4> orbit_representatives(const FieldContext& ctx)
{
  const auto& F = ctx.base();
  const Fq a = ctx.alpha();
  return {canonical(ctx, {F.one(), ctx.zero(), ctx.zero(), F.zero()}),
          canonical(ctx, {F.zero(), ctx.zero(), ctx.one(), F.zero()}),
          canonical(ctx, {F.one(), ctx.zero(), ctx.zero(), F.one()}),
          canonical(ctx, {F.one(), ctx.zero(), ctx.embed(a), a})};
}

/// diag(theta, 1), [[1, 1], [0, 1]] and [[0, 1], [1, 0]].
inline std::array<GroupElement, 3> group_generators(const FieldContext& ctx)
{
  return {make_group_element(ctx, ctx.theta(), ctx.zero(), ctx.zero(), ctx.one()),
          make_group_element(ctx, ctx.one(), ctx.one(), ctx.zero(), ctx.one()),
          make_group_element(ctx, ctx.zero(), ctx.one(), ctx.one(), ctx.zero())};
}

/// Closed-form orbit sizes q^3+1, q(q^2+q+1)(q^3+1), q^3(q^3+1)(q-1)/2, q^3(q^3-1)(q+1)/2.
inline std::array<std::uint64_t, 4> orbit_size_formulas(std::uint64_t q)
{
  const auto q3 = q * q * q;
  return {q3 + 1, q * (q * q + q + 1) * (q3 + 1), q3 * (q3 + 1) * (q - 1) / 2, q3 * (q3 - 1) * (q + 1) / 2};
}

/// Closed-form sections 1, q^2+1, q^2+q+1, q^2-q+1.
inline std::array<std::uint64_t, 4> section_formulas(std::uint64_t q)
{
  return {1, q * q + 1, q * q + q + 1, q * q - q + 1};
}

struct OrbitReport
{
  std::uint32_t q = 0;
  std::array<std::uint64_t, 4> sizes{};
  std::array<ProjectivePoint, 4> representatives{};
  std::array<std::uint32_t, 4> sections{};
  std::array<std::uint64_t, 4> stabilizer_orders{};
};

struct OrbitDecomposition
{
  OrbitReport report;
  /// labels[code] in {0,1,2,3} for canonical codes, -1 elsewhere.
  std::vector<std::int8_t> labels;
};

class OrbitError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

namespace detail {

// BFS closure of the start point under the generator maps; labels[code] = id.
inline std::uint64_t bfs_orbit(const BaseField& F, const PointSpace& space,
                               const std::array<LinearMap8, 3>& gens, std::uint64_t start,
                               std::int8_t id, std::vector<std::int8_t>& labels)
{
  std::deque<std::uint64_t> frontier{start};
  labels[start] = id;
  std::uint64_t size = 1;
  while (!frontier.empty()) {
    const auto code = frontier.front();
    frontier.pop_front();
    const Flat8 v = space.decode(code);
    for (const auto& M : gens) {
      const auto next = space.code(canonical_flat(F, apply(F, M, v)));
      if (labels[next] < 0) {
        labels[next] = id;
        frontier.push_back(next);
        ++size;
      } else if (labels[next] != id) {
        throw OrbitError("orbit " + std::to_string(id + 1) + " meets orbit " + std::to_string(labels[next] + 1));
      }
    }
  }
  return size;
}

inline std::array<LinearMap8, 3> generator_maps(const FieldContext& ctx)
{
  const auto gens = group_generators(ctx);
  return {action_matrix(ctx, gens[0]), action_matrix(ctx, gens[1]), action_matrix(ctx, gens[2])};
}

} // namespace detail

/// Size of the G-orbit of P, by BFS over PG(V).
inline std::uint64_t orbit_size(const FieldContext& ctx, const ProjectivePoint& P,
                                std::uint64_t point_guard = kDefaultPointGuard)
{
  const PointSpace space(ctx.q());
  detail::check_point_guard(space.point_count(), point_guard);
  std::vector<std::int8_t> labels(space.code_range(), -1);
  return detail::bfs_orbit(ctx.base(), space, detail::generator_maps(ctx), point_code(ctx, P), 0, labels);
}

/// Labels every point of PG(V) with its orbit and checks the four orbits
/// partition the space. Throws OrbitError if they do not.
inline OrbitDecomposition orbit_decompose(const FieldContext& ctx, std::uint64_t point_guard = kDefaultPointGuard)
{
  const PointSpace space(ctx.q());
  detail::check_point_guard(space.point_count(), point_guard);
  const auto& F = ctx.base();
  const auto maps = detail::generator_maps(ctx);
  const auto O = ovoid(ctx);

  OrbitDecomposition out;
  out.labels.assign(space.code_range(), -1);
  auto& rep = out.report;
  rep.q = ctx.q();
  rep.representatives = orbit_representatives(ctx);
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    const auto start = point_code(ctx, rep.representatives[i]);
    if (out.labels[start] >= 0)
      throw OrbitError("representative " + std::to_string(i + 1) + " already lies in orbit " +
                       std::to_string(out.labels[start] + 1));
    rep.sizes[i] = detail::bfs_orbit(F, space, maps, start, static_cast<std::int8_t>(i), out.labels);
    rep.sections[i] = hyperplane_section(ctx, rep.representatives[i].rep, O);
    rep.stabilizer_orders[i] = group_order(ctx.q()) / rep.sizes[i];
    total += rep.sizes[i];
  }
  if (total != space.point_count())
    throw OrbitError("orbits cover " + std::to_string(total) + " of " + std::to_string(space.point_count()) +
                     " points");
  return out;
}

inline nlohmann::json to_json(const FieldContext& ctx, const OrbitReport& r)
{
  nlohmann::json j;
  j["q"] = r.q;
  j["orbit_sizes"] = r.sizes;
  j["stabilizer_orders"] = r.stabilizer_orders;
  j["sections"] = r.sections;
  auto reps = nlohmann::json::array();
  for (const auto& P : r.representatives) {
    auto row = nlohmann::json::array();
    for (auto c : flatten(ctx, P.rep))
      row.push_back(c.idx);
    reps.push_back(row);
  }
  j["representatives"] = reps;
  return j;
}

// --- stabilizers ---

/// Default cap on |G| for exhaustive stabilizer enumeration (covers q <= 4).
inline constexpr std::uint64_t kDefaultGroupGuard = 300'000;

/// Number of g in PGL(2, q^3) fixing each point, by enumerating G.
template <std::size_t N>
std::array<std::uint64_t, N> stabilizer_orders_exhaustive(const FieldContext& ctx,
                                                          const std::array<ProjectivePoint, N>& points,
                                                          std::uint64_t group_guard = kDefaultGroupGuard)
{
  if (group_order(ctx.q()) > group_guard)
    throw GuardExceeded("|PGL(2,q^3)| = " + std::to_string(group_order(ctx.q())) + " exceeds guard " +
                        std::to_string(group_guard));
  std::array<std::uint64_t, N> counts{};
  for_each_group_element(ctx, [&](const GroupElement& g) {
    for (std::size_t i = 0; i < N; ++i)
      if (act(ctx, g, points[i]) == points[i])
        ++counts[i];
  });
  return counts;
}

struct StabilizerResult
{
  std::uint64_t order = 0;
  bool exhaustive = false;
};

/// Exhaustive when |G| is within the group guard, else |G| / |orbit|.
inline StabilizerResult stabilizer_order(const FieldContext& ctx, const ProjectivePoint& P,
                                         std::uint64_t group_guard = kDefaultGroupGuard,
                                         std::uint64_t point_guard = kDefaultPointGuard)
{
  const auto G = group_order(ctx.q());
  if (G <= group_guard)
    return {stabilizer_orders_exhaustive<1>(ctx, {P}, group_guard)[0], true};
  return {G / orbit_size(ctx, P, point_guard), false};
}

// --- special points and the partial-ovoid property ---

/// |{x : Tr(x) + Tr(x^{q^2+q}) + 1 + alpha = 0}| and
/// |{x : N(x) - Tr(x^{q^2+q}) alpha - alpha^2 = 0}|.
inline std::pair<std::uint64_t, std::uint64_t> special_point_counts(const FieldContext& ctx)
{
  const auto& F = ctx.base();
  const Fq a = ctx.alpha();
  const Fq c1 = F.add(F.one(), a);
  const Fq a2 = F.mul(a, a);
  std::uint64_t first = 0, second = 0;
  for (auto x : ctx.enumerate_cubic()) {
    const Fq tc = ctx.trace(ctx.conorm(x));
    if (F.add(F.add(ctx.trace(x), tc), c1).idx == 0)
      ++first;
    if (F.sub(F.sub(ctx.norm(x), F.mul(tc, a)), a2).idx == 0)
      ++second;
  }
  return {first, second};
}

/// The two O_4 points whose sections give the special-point counts.
inline std::pair<VectorV, VectorV> special_points(const FieldContext& ctx)
{
  const auto& F = ctx.base();
  const Fq a = ctx.alpha();
  return {VectorV{F.zero(), ctx.one(), ctx.neg(ctx.one()), F.add(F.one(), a)},
          VectorV{F.one(), ctx.embed(a), ctx.zero(), F.mul(a, a)}};
}

struct PartialOvoidReport
{
  std::uint64_t size = 0;
  bool pairwise_nonperpendicular = false;
  /// Q vanishes on every point of O.
  bool singular = false;
  std::uint32_t min_section = 0;
  bool complete = false;

  bool is_ovoid(std::uint32_t q) const
  {
    return q % 2 == 0 && singular && pairwise_nonperpendicular && size == std::uint64_t{q} * q * q + 1;
  }
  bool is_complete_partial_ovoid() const { return pairwise_nonperpendicular && complete; }
};

inline PartialOvoidReport partial_ovoid_check(const FieldContext& ctx, unsigned threads = 1,
                                              std::uint64_t point_guard = kDefaultPointGuard)
{
  const auto O = ovoid(ctx);
  PartialOvoidReport r;
  r.size = O.size();
  r.pairwise_nonperpendicular = true;
  for (std::size_t i = 0; i < O.size() && r.pairwise_nonperpendicular; ++i)
    for (std::size_t j = i + 1; j < O.size(); ++j)
      if (alternating_form(ctx, O[i].rep, O[j].rep).idx == 0) {
        r.pairwise_nonperpendicular = false;
        break;
      }
  r.singular = true;
  for (const auto& P : O)
    r.singular = r.singular && quadratic_form(ctx, P.rep).idx == 0;
  const auto hist = section_histogram(ctx, O, threads, point_guard);
  for (std::size_t s = 0; s < hist.size(); ++s)
    if (hist[s] > 0) {
      r.min_section = static_cast<std::uint32_t>(s);
      break;
    }
  r.complete = r.min_section >= 1;
  return r;
}

} // namespace ovoid

#endif
