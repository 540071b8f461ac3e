#ifndef OVOID_VERIFY_HPP
#define OVOID_VERIFY_HPP

// Property suites over a single q, collected into a pass/fail ledger.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ovoid/bounds.hpp"
#include "ovoid/codes.hpp"
#include "ovoid/field_tower.hpp"
#include "ovoid/geometry.hpp"
#include "ovoid/krawtchouk.hpp"
#include "ovoid/linear_code.hpp"

namespace ovoid {

struct CheckResult
{
  std::string name;
  bool passed = false;
  std::string detail;
};

class CheckLedger
{
public:
  void add(std::string name, bool passed, std::string detail = {})
  {
    results_.push_back({std::move(name), passed, std::move(detail)});
  }

  /// fn returns {passed, detail}; an exception counts as a failure.
  template <class Fn>
  void run(const std::string& name, Fn&& fn)
  {
    try {
      const std::pair<bool, std::string> r = fn();
      add(name, r.first, r.second);
    } catch (const std::exception& e) {
      add(name, false, std::string("exception: ") + e.what());
    }
  }

  const std::vector<CheckResult>& results() const { return results_; }

  bool all_passed() const
  {
    return std::all_of(results_.begin(), results_.end(), [](const auto& r) { return r.passed; });
  }

  void print(std::ostream& os) const
  {
    for (const auto& r : results_) {
      os << (r.passed ? "PASS " : "FAIL ") << r.name;
      if (!r.detail.empty())
        os << "  (" << r.detail << ')';
      os << '\n';
    }
  }

private:
  std::vector<CheckResult> results_;
};

struct VerifyOptions
{
  unsigned threads = 1;
  /// Full PG(7,q) sweeps (orbits, section constancy, completeness).
  std::uint64_t point_guard = kDefaultPointGuard;
  /// Hyperplane sweep for the geometric weight distribution.
  std::uint64_t geometric_guard = kDefaultPointGuard;
  std::uint64_t group_guard = kDefaultGroupGuard;
  std::uint64_t codeword_guard = 400'000;
  int trials = 1000;
  std::uint64_t seed = 20220826;
};

/// The reported small-q parameters and distributions of C_O.
inline std::optional<std::pair<std::string, std::string>> reference_code_table(std::uint64_t q)
{
  static const std::map<std::uint64_t, std::pair<std::string, std::string>> table = {
      {2, {"[9,8,2]_2", "(0^1 2^36 4^126 6^84 8^9)"}},
      {3, {"[28,8,15]_3", "(0^1 15^1512 18^2184 21^2808 27^56)"}},
      {4, {"[65,8,44]_4", "(0^1 44^18720 48^16380 52^30240 64^195)"}},
      {5, {"[126,8,95]_5", "(0^1 95^126000 100^78120 105^186000 125^504)"}},
      {7, {"[344,8,287]_7", "(0^1 287^2123856 294^823536 301^2815344 343^2064)"}},
      {8, {"[513,8,440]_8", "(0^1 440^6435072 448^2097144 456^8241408 512^3591)"}},
      {9, {"[730,8,639]_9", "(0^1 639^17029440 648^4782960 657^21228480 729^5840)"}},
  };
  const auto it = table.find(q);
  if (it == table.end())
    return std::nullopt;
  return it->second;
}

inline std::string code_parameters(std::uint64_t n, std::uint64_t k, std::uint64_t d, std::uint64_t q)
{
  return "[" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(d) + "]_" + std::to_string(q);
}

using CheckOutcome = std::pair<bool, std::string>;

// --- field tower ---

inline void field_suite(const FieldContext& ctx, CheckLedger& L)
{
  const auto& F = ctx.base();
  const auto q = ctx.q();

  L.run("field: base modulus irreducible over F_p", [&]() -> CheckOutcome {
    return {detail::is_irreducible_over_prime(F.modulus(), F.characteristic()), ""};
  });

  L.run("field: cubic modulus has no root in F_q", [&]() -> CheckOutcome {
    const auto& c = ctx.cubic_modulus();
    for (auto x : F.elements()) {
      Fq v = c[3];
      for (int k = 2; k >= 0; --k)
        v = F.add(F.mul(v, x), c[k]);
      if (v.idx == 0)
        return {false, "root " + std::to_string(x.idx)};
    }
    return {true, ""};
  });

  L.run("field: theta has order q^3 - 1", [&]() -> CheckOutcome {
    const std::uint64_t order = ctx.cubic_order() - 1;
    if (q <= 4) {
      std::set<std::uint32_t> seen;
      Fq3 t = ctx.one();
      for (std::uint64_t i = 0; i < order; ++i) {
        seen.insert(t.idx);
        t = ctx.mul(t, ctx.theta());
      }
      return {seen.size() == order && t == ctx.one(), "powers enumerated"};
    }
    if (ctx.pow(ctx.theta(), order) != ctx.one())
      return {false, "theta^(q^3-1) != 1"};
    for (auto r : detail::prime_factors(order))
      if (ctx.pow(ctx.theta(), order / r) == ctx.one())
        return {false, "order divides (q^3-1)/" + std::to_string(r)};
    return {true, "order-divisor test"};
  });

  L.run("field: x^2 - x - alpha has no root in F_q", [&]() -> CheckOutcome {
    for (auto x : F.elements())
      if (F.sub(F.mul(x, x), x) == ctx.alpha())
        return {false, "root " + std::to_string(x.idx)};
    return {true, "alpha = " + std::to_string(ctx.alpha().idx)};
  });

  L.run("field: trace additive, norm multiplicative, frobenius of order 3", [&]() -> CheckOutcome {
    const auto elems = ctx.enumerate_cubic();
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
    const bool exhaustive = q <= 4;
    const std::size_t pairs = exhaustive ? elems.size() * elems.size() : 2000;
    for (std::size_t t = 0; t < pairs; ++t) {
      const Fq3 x = exhaustive ? elems[t / elems.size()] : elems[pick(rng)];
      const Fq3 y = exhaustive ? elems[t % elems.size()] : elems[pick(rng)];
      if (ctx.trace(ctx.add(x, y)) != F.add(ctx.trace(x), ctx.trace(y)))
        return {false, "trace not additive"};
      if (ctx.norm(ctx.mul(x, y)) != F.mul(ctx.norm(x), ctx.norm(y)))
        return {false, "norm not multiplicative"};
    }
    for (auto x : elems)
      if (ctx.frobenius(ctx.frobenius(ctx.frobenius(x, 1), 1), 1) != x)
        return {false, "frobenius^3 != id"};
    return {true, exhaustive ? "exhaustive" : "2000 random pairs"};
  });

  L.run("field: trace fibers q^2, norm fibers q^2+q+1", [&]() -> CheckOutcome {
    std::vector<std::uint64_t> tr(q, 0), nm(q, 0);
    for (auto x : ctx.enumerate_cubic()) {
      ++tr[ctx.trace(x).idx];
      ++nm[ctx.norm(x).idx];
    }
    for (std::uint32_t c = 0; c < q; ++c) {
      if (tr[c] != std::uint64_t{q} * q)
        return {false, "trace fiber " + std::to_string(c)};
      if (c != 0 && nm[c] != std::uint64_t{q} * q + q + 1)
        return {false, "norm fiber " + std::to_string(c)};
    }
    return {nm[0] == 1, ""};
  });
}

// --- forms, ovoid and the group action ---

inline void action_suite(const FieldContext& ctx, const VerifyOptions& opt, CheckLedger& L)
{
  const auto& F = ctx.base();
  const auto q = ctx.q();
  const bool even = q % 2 == 0;

  L.run(even ? "forms: A alternating and skew, Q polarizes to A, Q(cv) = c^2 Q(v)"
             : "forms: A alternating and skew, Q polarizes to the symmetric form, Q(cv) = c^2 Q(v)",
        [&]() -> CheckOutcome {
          std::mt19937_64 rng(opt.seed);
          std::uniform_int_distribution<std::uint32_t> pick(0, q - 1);
          int differs = 0;
          for (int t = 0; t < opt.trials; ++t) {
            const auto u = random_vector(ctx, rng), v = random_vector(ctx, rng);
            const Fq c{pick(rng)};
            if (alternating_form(ctx, v, v).idx != 0)
              return {false, "A(v,v) != 0"};
            if (alternating_form(ctx, u, v) != F.neg(alternating_form(ctx, v, u)))
              return {false, "A not skew"};
            const Fq pol =
                F.sub(F.sub(quadratic_form(ctx, add(ctx, u, v)), quadratic_form(ctx, u)), quadratic_form(ctx, v));
            const Fq sym = F.add(F.add(F.mul(u.x, v.w), F.mul(v.x, u.w)),
                                 ctx.trace(ctx.add(ctx.mul(u.y, v.z), ctx.mul(v.y, u.z))));
            if (pol != sym)
              return {false, "Q does not polarize to xw'+x'w+Tr(yz'+y'z)"};
            if (even && pol != alternating_form(ctx, u, v))
              return {false, "Q does not polarize to A"};
            differs += pol != alternating_form(ctx, u, v);
            if (quadratic_form(ctx, scale(ctx, c, v)) != F.mul(F.mul(c, c), quadratic_form(ctx, v)))
              return {false, "Q not quadratic"};
          }
          if (!even && differs == 0)
            return {false, "polarization never differs from A"};
          return {true, std::to_string(opt.trials) + " random pairs"};
        });

  L.run("ovoid: q^3+1 distinct points, pairwise nonperpendicular", [&]() -> CheckOutcome {
    const auto O = ovoid(ctx);
    std::set<std::uint64_t> codes;
    for (const auto& P : O)
      codes.insert(point_code(ctx, P));
    if (codes.size() != std::uint64_t{ctx.cubic_order()} + 1)
      return {false, "duplicate points"};
    for (std::size_t i = 0; i < O.size(); ++i)
      for (std::size_t j = i + 1; j < O.size(); ++j)
        if (alternating_form(ctx, O[i].rep, O[j].rep).idx == 0)
          return {false, "perpendicular pair"};
    return {true, std::to_string(O.size()) + " points"};
  });

  L.run("ovoid: Q(P(x)) = 4 N(x), so Q vanishes on O exactly when q is even", [&]() -> CheckOutcome {
    bool all_zero = true;
    for (auto x : ctx.enumerate_cubic()) {
      const Fq v = quadratic_form(ctx, ovoid_vector(ctx, x));
      if (v != F.mul(F.from_int(4), ctx.norm(x)))
        return {false, "Q(P(x)) != 4N(x)"};
      all_zero = all_zero && v.idx == 0;
    }
    all_zero = all_zero && quadratic_form(ctx, ovoid_vector_at_infinity(ctx)).idx == 0;
    return {all_zero == even, even ? "singular" : "not singular (odd q)"};
  });

  L.run("action: A(gu, gv) = N(det g) A(u, v)", [&]() -> CheckOutcome {
    std::mt19937_64 rng(opt.seed + 1);
    for (int t = 0; t < opt.trials; ++t) {
      const auto g = random_group_element(ctx, rng);
      const auto u = random_vector(ctx, rng), v = random_vector(ctx, rng);
      const Fq mu = ctx.norm(determinant(ctx, g));
      if (alternating_form(ctx, act_vector(ctx, g, u), act_vector(ctx, g, v)) != F.mul(mu, alternating_form(ctx, u, v)))
        return {false, "similitude identity fails"};
    }
    return {true, std::to_string(opt.trials) + " random (g,u,v)"};
  });

  L.run(even ? "action: unimodular representatives preserve A and Q exactly"
             : "action: unimodular representatives preserve A exactly",
        [&]() -> CheckOutcome {
          std::mt19937_64 rng(opt.seed + 2);
          int tested = 0;
          for (int t = 0; t < opt.trials; ++t) {
            const auto g = random_group_element(ctx, rng);
            const auto u = random_vector(ctx, rng), v = random_vector(ctx, rng);
            const auto h = unimodular_representative(ctx, g);
            if (!h) {
              if (even)
                return {false, "no unimodular representative for even q"};
              continue;
            }
            ++tested;
            if (alternating_form(ctx, act_vector(ctx, *h, u), act_vector(ctx, *h, v)) != alternating_form(ctx, u, v))
              return {false, "A not preserved"};
            if (even && quadratic_form(ctx, act_vector(ctx, *h, v)) != quadratic_form(ctx, v))
              return {false, "Q not preserved"};
          }
          return {tested > 0, std::to_string(tested) + " group elements"};
        });

  L.run("action: act(gh, P) = act(g, act(h, P))", [&]() -> CheckOutcome {
    std::mt19937_64 rng(opt.seed + 3);
    for (int t = 0; t < opt.trials; ++t) {
      const auto g = random_group_element(ctx, rng), h = random_group_element(ctx, rng);
      auto v = random_vector(ctx, rng);
      if (is_zero(flatten(ctx, v)))
        v.w = F.one();
      const auto P = canonical(ctx, v);
      if (act(ctx, compose(ctx, g, h), P) != act(ctx, g, act(ctx, h, P)))
        return {false, "homomorphism fails"};
    }
    return {true, std::to_string(opt.trials) + " random (g,h,P)"};
  });

  L.run("action: P(x) -> P((ax+b)/(cx+d)) on O, including cx+d = 0 and infinity", [&]() -> CheckOutcome {
    std::mt19937_64 rng(opt.seed + 4);
    std::uniform_int_distribution<std::uint32_t> pick(0, ctx.cubic_order() - 1);
    int degenerate = 0;
    for (int t = 0; t < opt.trials; ++t) {
      const auto g = random_group_element(ctx, rng);
      std::optional<Fq3> x = Fq3{pick(rng)};
      if (t % 10 == 0)
        x = std::nullopt;
      else if (t % 10 == 1 && g.c != ctx.zero())
        x = ctx.div(ctx.neg(g.d), g.c);
      if (x && ctx.add(ctx.mul(g.c, *x), g.d) == ctx.zero())
        ++degenerate;
      if (act(ctx, g, ovoid_point(ctx, x)) != ovoid_point(ctx, mobius(ctx, g, x)))
        return {false, "Mobius agreement fails"};
    }
    return {degenerate > 0, std::to_string(degenerate) + " degenerate cases"};
  });
}

// --- orbits and sections ---

inline void orbit_suite(const FieldContext& ctx, const VerifyOptions& opt, CheckLedger& L)
{
  const std::uint64_t q = ctx.q();
  const PointSpace space(ctx.q());
  const auto O = ovoid(ctx);

  L.run("sections at the orbit representatives are 1, q^2+1, q^2+q+1, q^2-q+1", [&]() -> CheckOutcome {
    const auto reps = orbit_representatives(ctx);
    const auto expect = section_formulas(q);
    std::string got;
    bool ok = true;
    for (std::size_t i = 0; i < 4; ++i) {
      const auto s = hyperplane_section(ctx, reps[i].rep, O);
      got += (i ? "," : "") + std::to_string(s);
      ok = ok && s == expect[i];
    }
    return {ok, got};
  });

  L.run("special point counts are q^2-q and q^2-q+1, matching their sections", [&]() -> CheckOutcome {
    const auto [c1, c2] = special_point_counts(ctx);
    const auto [v1, v2] = special_points(ctx);
    const auto s1 = hyperplane_section(ctx, v1, O);
    const auto s2 = hyperplane_section(ctx, v2, O);
    const bool ok = c1 == q * q - q && c2 == q * q - q + 1 && s1 == c1 + 1 && s2 == c2;
    return {ok, std::to_string(c1) + "," + std::to_string(c2)};
  });

  if (space.point_count() > opt.point_guard) {
    L.add("orbit decomposition", true, "skipped: PG(7,q) beyond point guard");
    return;
  }

  const auto dec = orbit_decompose(ctx, opt.point_guard);
  const auto& rep = dec.report;

  L.run("orbits: four orbits of the closed-form sizes partition PG(7,q)", [&]() -> CheckOutcome {
    const auto expect = orbit_size_formulas(q);
    std::string got;
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      got += (i ? "," : "") + std::to_string(rep.sizes[i]);
      total += rep.sizes[i];
    }
    return {rep.sizes == expect && total == space.point_count(), got};
  });

  const auto table = section_table(ctx, O, opt.threads, opt.point_guard);

  L.run("sections are constant on every orbit", [&]() -> CheckOutcome {
    bool ok = true;
    space.for_each_point([&](std::uint64_t code) {
      const auto label = dec.labels[code];
      if (label < 0 || table[code] != rep.sections[label])
        ok = false;
    });
    return {ok, "all " + std::to_string(space.point_count()) + " points"};
  });

  L.run("double counting: sum s = (q^3+1)(q^7-1)/(q-1), sum s(s-1) = q^3(q^3+1)(q^6-1)/(q-1)", [&]() -> CheckOutcome {
    mpz_class s1 = 0, s2 = 0;
    space.for_each_point([&](std::uint64_t code) {
      const auto s = table[code];
      s1 += s;
      s2 += std::uint64_t{s} * (s - 1);
    });
    const mpz_class Q = static_cast<unsigned long>(q);
    const mpz_class Q3 = Q * Q * Q;
    const mpz_class e1 = (Q3 + 1) * (power(Q, 7) - 1) / (Q - 1);
    const mpz_class e2 = Q3 * (Q3 + 1) * (power(Q, 6) - 1) / (Q - 1);
    return {s1 == e1 && s2 == e2, s1.get_str() + ", " + s2.get_str()};
  });

  L.run(q % 2 == 0 ? "ovoid: every point of PG(7,q) meets O^perp (minimum section 1 on O_1)"
                   : "partial ovoid: complete, every point of PG(7,q) meets O^perp (minimum section 1 on O_1)",
        [&]() -> CheckOutcome {
          std::uint32_t lo = UINT32_MAX;
          bool min_on_o1 = true;
          space.for_each_point([&](std::uint64_t code) { lo = std::min(lo, table[code]); });
          space.for_each_point([&](std::uint64_t code) {
            if (table[code] == lo && dec.labels[code] != 0)
              min_on_o1 = false;
          });
          return {lo == 1 && min_on_o1, "min section " + std::to_string(lo)};
        });

  L.run("stabilizers: orbit-stabilizer gives q^3(q^3-1), q^2(q-1), 2(q^2+q+1), 2(q^2-q+1)", [&]() -> CheckOutcome {
    const std::array<std::uint64_t, 4> expect{q * q * q * (q * q * q - 1), q * q * (q - 1), 2 * (q * q + q + 1),
                                              2 * (q * q - q + 1)};
    bool ok = true;
    std::string got;
    for (std::size_t i = 0; i < 4; ++i) {
      ok = ok && rep.stabilizer_orders[i] == expect[i] && rep.stabilizer_orders[i] * rep.sizes[i] == group_order(q);
      got += (i ? "," : "") + std::to_string(rep.stabilizer_orders[i]);
    }
    return {ok, got};
  });

  if (group_order(q) <= opt.group_guard) {
    L.run("stabilizers: exhaustive enumeration of PGL(2,q^3) agrees", [&]() -> CheckOutcome {
      const auto counts = stabilizer_orders_exhaustive(ctx, rep.representatives, opt.group_guard);
      std::string got;
      for (std::size_t i = 0; i < 4; ++i)
        got += (i ? "," : "") + std::to_string(counts[i]);
      return {counts == rep.stabilizer_orders, got};
    });
  }
}

// --- the code and its dual ---

inline void code_suite(const FieldContext& ctx, const VerifyOptions& opt, CheckLedger& L)
{
  const std::uint64_t q = ctx.q();
  const std::uint64_t n = std::uint64_t{ctx.cubic_order()} + 1;
  const auto code = ovoid_code(ctx);

  L.run("code: G_O is 8 x (q^3+1) of rank 8, no zero column, g(0) = e_1", [&]() -> CheckOutcome {
    bool ok = code.dimension() == 8 && code.length() == n;
    for (std::size_t j = 0; j < n && ok; ++j)
      ok = hamming_weight(code.column(j)) > 0;
    const auto c0 = code.column(0);
    ok = ok && c0[0] == Fq{1} && hamming_weight(c0) == 1;
    return {ok, ""};
  });

  if (PointSpace(ctx.q()).point_count() > opt.geometric_guard) {
    L.add("code: weight distribution", true, "skipped: beyond geometric guard");
    return;
  }

  const auto geo = weight_distribution_geometric(ctx, ovoid(ctx), opt.threads, opt.geometric_guard);

  L.run("code: geometric weight distribution matches the closed form", [&]() -> CheckOutcome {
    return {geo == ovoid_weight_distribution_formula(q), geo.table_notation()};
  });

  if (const auto ref = reference_code_table(q)) {
    L.run("code: parameters and distribution match the reference table", [&]() -> CheckOutcome {
      const auto params = code_parameters(n, 8, *geo.min_nonzero_weight(), q);
      return {params == ref->first && geo.table_notation() == ref->second, params};
    });
  }

  L.run("code: nonzero multiplicities divisible by q-1, total q^8", [&]() -> CheckOutcome {
    for (const auto& [w, m] : geo.counts)
      if (w > 0 && !mpz_divisible_ui_p(m.get_mpz_t(), q - 1))
        return {false, "weight " + std::to_string(w)};
    return {geo.total() == power(mpz_class(static_cast<unsigned long>(q)), 8), ""};
  });

  if (power(mpz_class(static_cast<unsigned long>(q)), 8) <= mpz_class(static_cast<unsigned long>(opt.codeword_guard))) {
    L.run("code: exhaustive codeword enumeration equals the geometric distribution", [&]() -> CheckOutcome {
      const auto ex = weight_distribution_exhaustive(code, opt.threads, opt.codeword_guard);
      return {ex == geo, ex.table_notation()};
    });
  }

  L.run("dual: MacWilliams gives the expected low-weight counts", [&]() -> CheckOutcome {
    const auto dual = macwilliams(geo, n, 8, q);
    const auto d = dual.min_nonzero_weight();
    std::string detail = "d' = " + (d ? std::to_string(*d) : std::string("none"));
    if (q == 2) {
      WeightDistribution rep;
      rep.length = 9;
      rep.add(0, 1);
      rep.add(9, 1);
      return {dual == rep, "repetition code " + dual.table_notation()};
    }
    bool ok = d && *d == dual_min_distance_expected(q);
    for (std::size_t j = 1; j <= 4; ++j)
      ok = ok && dual.at(j) == 0;
    ok = ok && dual.at(5) == dual_weight5_formula(q);
    detail += ", A'_5 = " + dual.at(5).get_str();
    if (q == 3) {
      ok = ok && dual.at(6) == 6552;
      detail += ", A'_6 = " + dual.at(6).get_str();
    }
    return {ok, detail};
  });

  L.run("dual: MacWilliams applied twice is the identity", [&]() -> CheckOutcome {
    const auto dual = macwilliams(geo, n, 8, q);
    return {macwilliams(dual, n, n - 8, q) == geo, ""};
  });

  if (q == 4 || q == 5) {
    L.run("dual: no 4 columns of G_O dependent, some 5 dependent", [&]() -> CheckOutcome {
      const auto four = find_dependent_columns(code, 4);
      const auto five = find_dependent_columns(code, 5);
      std::string detail;
      if (five) {
        for (auto j : *five)
          detail += std::to_string(j) + " ";
      }
      return {!four && five && five->size() == 5, "dependent columns " + detail};
    });
  }
}

// --- bounds ---

inline void bounds_suite(std::uint64_t q, const FieldContext* ctx, const VerifyOptions& opt, CheckLedger& L)
{
  L.run("krawtchouk: sum_x K_i(x) K_x(j) = q^n delta_ij (i, j <= 4, n <= 30)", [&]() -> CheckOutcome {
    for (std::uint64_t n = 4; n <= 30; ++n) {
      const mpz_class qn = power(mpz_class(static_cast<unsigned long>(q)), n);
      for (std::uint64_t i = 0; i <= 4; ++i)
        for (std::uint64_t j = 0; j <= 4; ++j) {
          mpz_class s = 0;
          for (std::uint64_t x = 0; x <= n; ++x)
            s += krawtchouk(n, q, i, x) * krawtchouk(n, q, x, j);
          if (s != (i == j ? qn : mpz_class(0)))
            return {false, "n=" + std::to_string(n)};
        }
    }
    return {true, ""};
  });

  L.run("krawtchouk: expansion round-trip on 100 random rational quartics", [&]() -> CheckOutcome {
    std::mt19937_64 rng(opt.seed + 5);
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 20);
    const std::uint64_t n = q * q * q;
    for (int t = 0; t < 100; ++t) {
      std::vector<mpq_class> c(5);
      for (auto& e : c) {
        e = mpq_class(num(rng), den(rng));
        e.canonicalize();
      }
      if (c[4] == 0)
        c[4] = 1;
      const RationalPoly f(c);
      if (krawtchouk_combine(krawtchouk_expand(f, n, q), n, q) != f)
        return {false, "trial " + std::to_string(t)};
    }
    return {true, ""};
  });

  if (q >= 3) {
    L.run("bounds: LP quartic certificate matches its closed forms and excludes [q^3,8,q^3-q^2-q]_q",
          [&]() -> CheckOutcome {
            const auto cert = ovoid_lp_certificate(q, 0);
            return {cert.closed_forms_checked && cert.excludes_dimension_8(),
                    "f(0)/f_0 = " + to_fraction_string(cert.lp.bound)};
          });
  }
  if (q >= 4) {
    L.run("bounds: radius-2 sphere in F_q^{q^3} exceeds q^7", [&]() -> CheckOutcome {
      const auto sp = dual_sphere_packing_certificate(q);
      return {sp.excludes(), sp.sphere.get_str()};
    });
  }
  L.run("bounds: n-optimality of C_O and its dual", [&]() -> CheckOutcome {
    const auto r = n_optimality_report(q);
    const bool dual_ok = q == 3 ? r.dual_method == "external citation" : r.dual_certified;
    return {r.code_certified && dual_ok, r.code_method + " / " + r.dual_method};
  });

  const std::uint64_t t = q >= 3 ? (q - 3) / 2 : 0;
  if (ctx && t >= 1) {
    L.run("puncturing: shifted-root LP certificate at t = floor((q-3)/2)", [&]() -> CheckOutcome {
      const auto cert = ovoid_lp_certificate(q, t);
      return {cert.excludes_dimension_8(), "t = " + std::to_string(t) + ", bound " + to_fraction_string(cert.lp.bound)};
    });
    if (power(mpz_class(static_cast<unsigned long>(q)), 8) <= mpz_class(static_cast<unsigned long>(opt.codeword_guard))) {
      L.run("puncturing: C_O punctured in t positions has minimum distance q^3-q^2-q-t", [&]() -> CheckOutcome {
        const auto code = ovoid_code(*ctx);
        const auto n = code.length();
        std::vector<std::size_t> last;
        for (std::size_t i = 0; i < t; ++i)
          last.push_back(n - 1 - i);
        std::mt19937_64 rng(opt.seed + 6);
        std::vector<std::size_t> all(n);
        for (std::size_t i = 0; i < n; ++i)
          all[i] = i;
        std::shuffle(all.begin(), all.end(), rng);
        const std::vector<std::size_t> random_t(all.begin(), all.begin() + static_cast<long>(t));
        const std::uint64_t expect = q * q * q - q * q - q - t;
        bool ok = true;
        std::string detail;
        for (const auto& T : {last, random_t}) {
          const auto pc = puncture(code, T);
          const auto d = min_distance(pc, opt.threads, opt.codeword_guard);
          ok = ok && pc.dimension() == 8 && d == expect;
          detail += code_parameters(pc.length(), pc.dimension(), d, q) + " ";
        }
        return {ok, detail};
      });
    }
  }
}

/// Every applicable suite at q.
inline CheckLedger verify_all(std::uint64_t q, const VerifyOptions& opt = {})
{
  CheckLedger L;
  const auto ctx = make_context(q);
  field_suite(ctx, L);
  action_suite(ctx, opt, L);
  orbit_suite(ctx, opt, L);
  code_suite(ctx, opt, L);
  bounds_suite(q, &ctx, opt, L);
  return L;
}

} // namespace ovoid

#endif
