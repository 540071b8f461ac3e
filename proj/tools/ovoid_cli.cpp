#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ovoid/ovoid.hpp"

namespace {

enum Exit { kPass = 0, kCheckFailed = 1, kUsage = 2 };

struct UsageError : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

struct RunConfig
{
  std::uint64_t q = 0;
  int p = 0;
  int m = 0;
  std::string format = "table";
  std::string out;
  unsigned threads = 0;
  std::uint64_t guard_points = ovoid::kDefaultPointGuard;
  bool big = false;
  std::uint64_t t = 0;
  bool dual = false;
  std::string what;
};

ovoid::FieldContext resolve_field(const RunConfig& cfg)
{
  if (cfg.q == 0 && (cfg.p == 0 || cfg.m == 0))
    throw UsageError("give --q, or both --p and --m");
  int p = cfg.p, m = cfg.m;
  if (cfg.q != 0) {
    std::pair<int, int> pm;
    try {
      pm = ovoid::factor_prime_power(cfg.q);
    } catch (const std::invalid_argument&) {
      throw UsageError(std::to_string(cfg.q) + " is not a prime power");
    }
    if ((cfg.p && cfg.p != pm.first) || (cfg.m && cfg.m != pm.second))
      throw UsageError("--q disagrees with --p/--m");
    p = pm.first;
    m = pm.second;
  }
  if (!ovoid::detail::is_prime(static_cast<std::uint64_t>(p)) || m < 1)
    throw UsageError("--p must be prime and --m positive");
  try {
    return ovoid::make_context(p, m);
  } catch (const ovoid::GuardExceeded&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

unsigned threads_of(const RunConfig& cfg)
{
  return cfg.threads ? cfg.threads : ovoid::default_threads();
}

void emit(const RunConfig& cfg, const std::string& text)
{
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f)
    throw UsageError("cannot open " + cfg.out + " for writing");
  f << text;
  if (!f)
    throw UsageError("write to " + cfg.out + " failed");
}

std::string dump(const nlohmann::json& j)
{
  return j.dump(2) + "\n";
}

std::string flat_coords(const ovoid::FieldContext& ctx, const ovoid::ProjectivePoint& P)
{
  std::string s = "(";
  const auto f = ovoid::flatten(ctx, P.rep);
  for (std::size_t i = 0; i < f.size(); ++i)
    s += (i ? "," : "") + std::to_string(f[i].idx);
  return s + ")";
}

std::string distribution_csv(const ovoid::WeightDistribution& d)
{
  std::string s = "weight,count\n";
  for (const auto& [w, c] : d.counts)
    s += std::to_string(w) + "," + c.get_str() + "\n";
  return s;
}

// --- code ---

int cmd_code(const RunConfig& cfg)
{
  const auto ctx = resolve_field(cfg);
  const std::uint64_t q = ctx.q();
  if (q >= 8 && !cfg.big)
    throw UsageError("q = " + std::to_string(q) + " needs --big");
  const auto d = ovoid::weight_distribution_geometric(ctx, ovoid::ovoid(ctx), threads_of(cfg), cfg.guard_points);
  const auto params = ovoid::code_parameters(d.length, 8, *d.min_nonzero_weight(), q);
  if (cfg.format == "json") {
    nlohmann::json j;
    j["q"] = q;
    j["n"] = d.length;
    j["k"] = 8;
    j["d"] = *d.min_nonzero_weight();
    j["parameters"] = params;
    j["distribution"] = d.to_json();
    emit(cfg, dump(j));
  } else if (cfg.format == "csv") {
    emit(cfg, distribution_csv(d));
  } else {
    emit(cfg, params + "\n" + d.table_notation() + "\n");
  }
  return kPass;
}

// --- orbits ---

int cmd_orbits(const RunConfig& cfg)
{
  const auto ctx = resolve_field(cfg);
  const auto r = ovoid::orbit_decompose(ctx, cfg.guard_points).report;
  if (cfg.format == "json") {
    emit(cfg, dump(ovoid::to_json(ctx, r)));
  } else if (cfg.format == "csv") {
    std::string s = "orbit,size,representative,section,stabilizer\n";
    for (std::size_t i = 0; i < 4; ++i)
      s += "O" + std::to_string(i + 1) + "," + std::to_string(r.sizes[i]) + ",\"" +
           flat_coords(ctx, r.representatives[i]) + "\"," + std::to_string(r.sections[i]) + "," +
           std::to_string(r.stabilizer_orders[i]) + "\n";
    emit(cfg, s);
  } else {
    std::ostringstream os;
    os << "orbits of PGL(2," << ctx.q() << "^3) on PG(7," << ctx.q() << ")\n";
    os << "orbit  size        section  stabilizer  representative\n";
    for (std::size_t i = 0; i < 4; ++i) {
      os << "O" << i + 1 << "     ";
      const auto size = std::to_string(r.sizes[i]);
      os << size << std::string(12 - std::min<std::size_t>(11, size.size()), ' ');
      const auto sec = std::to_string(r.sections[i]);
      os << sec << std::string(9 - std::min<std::size_t>(8, sec.size()), ' ');
      const auto stab = std::to_string(r.stabilizer_orders[i]);
      os << stab << std::string(12 - std::min<std::size_t>(11, stab.size()), ' ');
      os << flat_coords(ctx, r.representatives[i]) << "\n";
    }
    emit(cfg, os.str());
  }
  return kPass;
}

// --- verify ---

int cmd_verify(const RunConfig& cfg)
{
  const auto ctx = resolve_field(cfg);
  ovoid::VerifyOptions opt;
  opt.threads = threads_of(cfg);
  opt.point_guard = cfg.guard_points;
  opt.geometric_guard = cfg.guard_points;
  const auto L = ovoid::verify_all(ctx.q(), opt);
  if (cfg.format == "json") {
    nlohmann::json j;
    j["q"] = ctx.q();
    j["passed"] = L.all_passed();
    auto checks = nlohmann::json::array();
    for (const auto& r : L.results())
      checks.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    j["checks"] = checks;
    emit(cfg, dump(j));
  } else if (cfg.format == "csv") {
    std::string s = "check,passed,detail\n";
    for (const auto& r : L.results())
      s += "\"" + r.name + "\"," + (r.passed ? "1" : "0") + ",\"" + r.detail + "\"\n";
    emit(cfg, s);
  } else {
    std::ostringstream os;
    L.print(os);
    os << (L.all_passed() ? "all checks passed" : "some checks FAILED") << "\n";
    emit(cfg, os.str());
  }
  return L.all_passed() ? kPass : kCheckFailed;
}

// --- bounds ---

int cmd_bounds(const RunConfig& cfg)
{
  const auto ctx = resolve_field(cfg);
  const std::uint64_t q = ctx.q();
  nlohmann::json j;
  std::ostringstream os;
  bool ok = true;

  if (q >= 3) {
    ovoid::OvoidLpCertificate cert;
    try {
      cert = ovoid::ovoid_lp_certificate(q, cfg.t);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    j["lp"] = ovoid::to_json(cert);
    os << "LP certificate excluding [" << cert.lp.n << ",8," << cert.lp.d << "]_" << q << "\n";
    os << "  roots      " << cert.roots.z1 << " " << cert.roots.z2 << " " << cert.roots.z3 << " " << cert.roots.n
       << "\n";
    os << "  f_i        ";
    for (const auto& c : cert.lp.krawtchouk_coeffs)
      os << ovoid::to_fraction_string(c) << " ";
    os << "\n  f(0)/f_0   " << ovoid::to_fraction_string(cert.lp.bound) << " < q^8 = " << cert.q_to_the_8.get_str()
       << "\n";
    os << "  verdict    " << (cert.excludes_dimension_8() ? "n-optimal" : "inconclusive") << "\n";
    ok = ok && cert.excludes_dimension_8();
  } else {
    if (cfg.t != 0)
      throw UsageError("puncture depth needs q >= 3");
    os << "q = 2: [9,8,2]_2 is MDS, verdict n-optimal\n";
    j["lp"] = nullptr;
  }

  if (cfg.dual) {
    const auto r = ovoid::n_optimality_report(q);
    nlohmann::json jd;
    jd["method"] = r.dual_method;
    jd["certified"] = r.dual_certified;
    if (q >= 4) {
      const auto sp = ovoid::dual_sphere_packing_certificate(q);
      jd["n"] = sp.n;
      jd["radius"] = 2;
      jd["sphere_size"] = sp.sphere.get_str();
      jd["q_to_the_7"] = sp.q_to_the_7.get_str();
      os << "sphere packing for the dual [" << sp.n << "," << sp.n - 7 << ",5]_" << q << "\n";
      os << "  |B(2)| = " << sp.sphere.get_str() << (sp.excludes() ? " > " : " <= ") << sp.q_to_the_7.get_str()
         << " = q^7\n";
    }
    jd["verdict"] = r.dual_certified ? "n-optimal" : "not certified";
    jd["notes"] = r.notes;
    os << "dual: " << r.dual_method << ", verdict " << (r.dual_certified ? "n-optimal" : "not certified") << "\n";
    if (!r.dual_certified)
      os << "  " << r.notes.back() << "\n";
    j["dual"] = jd;
    ok = ok && (r.dual_certified || q == 3);
  }

  if (cfg.format == "json")
    emit(cfg, dump(j));
  else
    emit(cfg, os.str());
  return ok ? kPass : kCheckFailed;
}

// --- export ---

int cmd_export(const RunConfig& cfg)
{
  const auto ctx = resolve_field(cfg);
  const bool json = cfg.format == "json";
  if (cfg.what == "genmatrix") {
    const auto rows = ovoid::build_generator_matrix(ctx);
    emit(cfg, json ? dump(ovoid::generator_matrix_json(ctx, rows)) : ovoid::generator_matrix_csv(rows));
  } else if (cfg.what == "ovoid") {
    const auto O = ovoid::ovoid(ctx);
    emit(cfg, json ? dump(ovoid::ovoid_json(ctx, O)) : ovoid::ovoid_csv(ctx, O));
  } else {
    const std::uint64_t q = ctx.q();
    if (q >= 8 && !cfg.big)
      throw UsageError("q = " + std::to_string(q) + " needs --big");
    const auto primal = ovoid::weight_distribution_geometric(ctx, ovoid::ovoid(ctx), threads_of(cfg), cfg.guard_points);
    const auto dual = ovoid::macwilliams(primal, primal.length, 8, q);
    if (json) {
      nlohmann::json j;
      j["q"] = q;
      j["n"] = dual.length;
      j["k"] = dual.length - 8;
      j["distribution"] = dual.to_json();
      emit(cfg, dump(j));
    } else {
      emit(cfg, distribution_csv(dual));
    }
  }
  return kPass;
}

void add_common(CLI::App* sub, RunConfig& cfg)
{
  sub->add_option("--q", cfg.q, "field order (a prime power)");
  sub->add_option("--p", cfg.p, "characteristic");
  sub->add_option("--m", cfg.m, "extension degree");
  sub->add_option("--format", cfg.format, "table, json or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  sub->add_option("--out", cfg.out, "write to this file instead of stdout");
  sub->add_option("--threads", cfg.threads, "worker threads (default OVOID_THREADS or 1)");
  sub->add_option("--guard-points", cfg.guard_points, "cap on points of PG(7,q) enumerated")
      ->check(CLI::PositiveNumber);
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"ovoid: the code of the PGL(2,q^3) ovoid in PG(7,q) and its optimality"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* code = app.add_subcommand("code", "parameters and weight distribution of C_O");
  add_common(code, cfg);
  code->add_flag("--big", cfg.big, "allow q >= 8");

  auto* orbits = app.add_subcommand("orbits", "orbits of PGL(2,q^3) on PG(7,q)");
  add_common(orbits, cfg);

  auto* verify = app.add_subcommand("verify", "run every property suite at q");
  add_common(verify, cfg);

  auto* bounds = app.add_subcommand("bounds", "LP and sphere-packing certificates");
  add_common(bounds, cfg);
  bounds->add_option("--t", cfg.t, "puncture depth");
  bounds->add_flag("--dual", cfg.dual, "also certify the dual code");

  auto* exp = app.add_subcommand("export", "write the generator matrix, the ovoid or the dual distribution");
  add_common(exp, cfg);
  exp->add_option("--what", cfg.what, "genmatrix, ovoid or dual-distribution")
      ->required()
      ->check(CLI::IsMember({"genmatrix", "ovoid", "dual-distribution"}));
  exp->add_flag("--big", cfg.big, "allow q >= 8 for dual-distribution");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*code)
      return cmd_code(cfg);
    if (*orbits)
      return cmd_orbits(cfg);
    if (*verify)
      return cmd_verify(cfg);
    if (*bounds)
      return cmd_bounds(cfg);
    return cmd_export(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ovoid::GuardExceeded& e) {
    std::cerr << "guard exceeded: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
}
