// Command-line front end: triangle construction and certification, interlaced
// progression calculus, binomial-sum matrices, kernel computations, the
// balanced-period constructors, exhaustive search, and the reproducibility
// suite.  Exit codes: 0 ok, 1 check failure, 2 usage error, 3 budget.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "steinhaus/binommat.hpp"
#include "steinhaus/families.hpp"
#include "steinhaus/iap.hpp"
#include "steinhaus/idap.hpp"
#include "steinhaus/modlinalg.hpp"
#include "steinhaus/search.hpp"
#include "steinhaus/triangle.hpp"
#include "steinhaus/verify.hpp"

namespace {

using namespace steinhaus;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::int64_t env_budget(std::int64_t fallback) {
  if (const char* s = std::getenv("STEINHAUS_BUDGET")) {
    char* end = nullptr;
    const long long v = std::strtoll(s, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return fallback;
}

ModTuple parse_row(const std::string& row, std::int64_t m) {
  if (!row.empty() && row.front() == '{') return tuple_from_json(row);
  return tuple_from_digits(row, m);
}

LocalRule parse_rule(const std::string& rule) {
  if (rule == "pascal") return LocalRule::kPascal;
  if (rule == "negated") return LocalRule::kNegated;
  throw Error("rule must be pascal or negated");
}

json tuple_json(const ModTuple& t) {
  json j;
  j["m"] = t.mod();
  j["v"] = t.values();
  if (t.mod() <= 10) j["digits"] = to_digits(t);
  return j;
}

json matrix_json(const ModMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c));
    rows.push_back(row);
  }
  return rows;
}

int cmd_triangle(const std::string& action, std::int64_t m,
                 const std::string& rule, const std::string& row,
                 const std::string& render, bool check_balanced) {
  const ModTuple first = parse_row(row, m);
  const LocalRule lr = parse_rule(rule);
  if (action == "gen") {
    const Triangle t = Triangle::generate(first, lr);
    if (render == "ppm" || render == "pgm") {
      std::cout << render_pgm(t);
      return kExitOk;
    }
    std::cout << render_text(t);
    return kExitOk;
  }
  // verify
  const bool balanced = balanced_triangle_scan(first, lr);
  json report;
  report["m"] = first.mod();
  report["size"] = first.size();
  report["balanced"] = balanced;
  std::cout << report.dump() << "\n";
  if (check_balanced && !balanced) return kExitCheckFailure;
  return kExitOk;
}

int cmd_binom(const std::string& kind, std::int64_t k, std::int64_t i,
              std::int64_t m) {
  const Modulus mod{m};
  ModMatrix result = [&] {
    if (kind == "cmat") return cmat(k, i, mod);
    if (kind == "tmat") return tmat(k, i, mod);
    if (kind == "wendt") return wendt(k, i, mod);
    if (kind == "xmat") return xmat(k, mod);
    if (kind == "mmat") return mmat(k, i, mod);
    throw Error("unknown matrix kind");
  }();
  json j;
  j["m"] = m;
  j["k"] = k;
  j["i"] = i;
  j["kind"] = kind;
  j["rows"] = matrix_json(result);
  std::cout << j.dump() << "\n";
  return kExitOk;
}

int cmd_kernel(std::int64_t k, std::int64_t p, int u,
               const std::string& matrix, std::int64_t cap) {
  auto matrix_at = [&](int level) {
    std::int64_t mod = 1;
    for (int i = 0; i < level; ++i) mod *= p;
    const std::int64_t exponent = k * mod;
    if (matrix == "m") return mmat(k, exponent, Modulus(mod));
    if (matrix == "ia") return iamat_block(k, exponent, Modulus(mod));
    if (matrix == "aia") return aiamat_block(k, exponent, Modulus(mod));
    throw Error("matrix must be one of m|ia|aia");
  };
  json j;
  j["k"] = k;
  j["p"] = p;
  j["u"] = u;
  j["matrix"] = matrix;
  if (u == 1) {
    const KernelBasis basis = left_kernel_gfp(matrix_at(1), p);
    j["dimension"] = basis.dimension();
    json rows = json::array();
    for (const auto& v : basis.vectors) rows.push_back(v.values());
    j["basis"] = rows;
  } else {
    const auto elements = left_kernel_prime_power(matrix_at, p, u, cap);
    j["count"] = elements.size();
    json rows = json::array();
    for (const auto& v : elements) rows.push_back(v.values());
    j["elements"] = rows;
  }
  std::cout << j.dump() << "\n";
  return kExitOk;
}

int cmd_construct_universal(std::int64_t m, std::int64_t mu) {
  if (mu == 0) {
    std::int64_t m0 = std::max<std::int64_t>(m, 10);
    if (m0 % 2 != 0) ++m0;
    mu = mu_for_range(m0);
  }
  const IntTuple24 a = universal_A(mu);
  FamilyElementSpec hint;
  hint.family = FamilyElementSpec::Family::kUMu;
  hint.u.mu = mu;
  hint.u.e.i0 = 1;
  hint.u.e.alpha_y[4] = -1;
  hint.u.e.alpha_y[7] = -1;
  hint.u.oprime.a1 = 0;
  const BalancedPeriodResult result = balanced_period(Modulus(m), a, hint);
  json j;
  j["m"] = m;
  j["mu"] = mu;
  j["length"] = result.period.size();
  if (m <= 10) j["period"] = to_digits(result.period);
  j["values"] = result.period.values();
  j["certificate"] = {
      {"periodic", {result.orbit_period, result.orbit_period}},
      {"balancedLambda", result.lambdas}};
  std::cout << j.dump() << "\n";
  return kExitOk;
}

int cmd_construct_family(std::int64_t m, int i0, int sign,
                         const std::vector<std::int64_t>& alpha_y,
                         const std::vector<std::int64_t>& alpha_z) {
  ESpec spec;
  spec.i0 = i0;
  spec.sign = sign;
  for (std::size_t i = 0; i < alpha_y.size() && i < 8; ++i)
    spec.alpha_y[i] = alpha_y[i];
  for (std::size_t i = 0; i < alpha_z.size() && i < 8; ++i)
    spec.alpha_z[i] = alpha_z[i];
  const IntTuple24 t = sample_E(spec);
  json j;
  j["tuple"] = std::vector<std::int64_t>(t.begin(), t.end());
  j["inF"] = in_F(t);
  if (m > 0) {
    int u = 0;
    std::int64_t mm = m;
    while (mm % 2 == 0) {
      mm /= 2;
      ++u;
    }
    if (mm != 1) throw Error("family E certification requires m = 2^u");
    const auto report = check_mainthm(spec, u, 2);
    j["m"] = m;
    j["balanced"] = report.ok;
    if (!report.ok) j["detail"] = report.detail;
  }
  std::cout << j.dump() << "\n";
  return kExitOk;
}

int cmd_search(std::int64_t m, std::int64_t n, const std::string& rule,
               std::int64_t shards, std::int64_t shard,
               const std::string& resume, const std::string& checkpoint,
               int workers, std::int64_t witnesses) {
  SearchReport report;
  if (!resume.empty()) {
    report = brute_force_resume(resume);
  } else {
    SearchJob job;
    job.m = m;
    job.n = n;
    job.rule = parse_rule(rule);
    job.cell_budget = env_budget(job.cell_budget);
    job.witness_cap = witnesses;
    job.checkpoint_file = checkpoint;
    if (workers > 1 && shards == 1) {
      // split the index space across worker threads and merge
      std::vector<SearchReport> parts(static_cast<std::size_t>(workers));
      std::vector<std::thread> pool;
      for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
          SearchJob sub = job;
          sub.shards = workers;
          sub.shard = w;
          sub.checkpoint_file.clear();
          parts[static_cast<std::size_t>(w)] = brute_force_balanced(sub);
        });
      for (auto& t : pool) t.join();
      report = merge_reports(parts, m, witnesses);
    } else {
      job.shards = shards;
      job.shard = shard;
      report = brute_force_balanced(job);
    }
  }
  std::cout << report.to_json(m) << "\n";
  return kExitOk;
}

int cmd_verify_paper(const std::string& suite_name) {
  const Suite suite = suite_name == "full" ? Suite::kFull : Suite::kFast;
  const auto results = run_checks(suite);
  bool all_pass = true;
  json checks = json::array();
  for (const auto& r : results) {
    std::cerr << (r.informational ? "NOTE" : (r.pass ? "PASS" : "FAIL"))
              << "  " << r.id << "  " << r.name << " (" << r.seconds << "s)";
    if (!r.detail.empty()) std::cerr << " :: " << r.detail;
    std::cerr << "\n";
    if (!r.pass) all_pass = false;
    checks.push_back({{"id", r.id},
                      {"name", r.name},
                      {"pass", r.pass},
                      {"informational", r.informational},
                      {"seconds", r.seconds},
                      {"detail", r.detail}});
  }
  json j;
  j["suite"] = suite_name;
  j["pass"] = all_pass;
  j["checks"] = checks;
  std::cout << j.dump() << "\n";
  return all_pass ? kExitOk : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"balanced Steinhaus triangle toolkit"};
  app.require_subcommand(1);

  // triangle
  auto* triangle = app.add_subcommand("triangle", "build and check triangles");
  triangle->require_subcommand(1);
  std::int64_t tri_m = 5;
  std::string tri_rule = "negated", tri_row, tri_render = "txt";
  bool tri_balanced = false;
  auto* tri_gen = triangle->add_subcommand("gen", "generate and render");
  tri_gen->add_option("--m", tri_m, "modulus");
  tri_gen->add_option("--rule", tri_rule, "pascal|negated");
  tri_gen->add_option("--row", tri_row, "first row (digits or JSON)")
      ->required();
  tri_gen->add_option("--render", tri_render, "txt|ppm (binary graymap)");
  auto* tri_verify = triangle->add_subcommand("verify", "balance check");
  tri_verify->add_option("--m", tri_m, "modulus");
  tri_verify->add_option("--rule", tri_rule, "pascal|negated");
  tri_verify->add_option("--row", tri_row, "first row")->required();
  tri_verify->add_flag("--balanced", tri_balanced,
                       "exit nonzero unless balanced");

  // iap
  auto* iap = app.add_subcommand("iap", "interlaced arithmetic progressions");
  iap->require_subcommand(1);
  std::string iap_spec;
  std::int64_t iap_from = 0, iap_to = 0, iap_p1 = 0, iap_p2 = 0;
  auto* iap_derive_cmd = iap->add_subcommand("derive", "one derivation");
  iap_derive_cmd->add_option("--spec", iap_spec, "JSON {m,k,A,D}")->required();
  auto* iap_window_cmd = iap->add_subcommand("window", "inclusive window");
  iap_window_cmd->add_option("--spec", iap_spec, "JSON {m,k,A,D}")->required();
  iap_window_cmd->add_option("--from", iap_from, "first index");
  iap_window_cmd->add_option("--to", iap_to, "last index")->required();
  auto* iap_periodic_cmd =
      iap->add_subcommand("periodic", "orbit periodicity predicate");
  iap_periodic_cmd->add_option("--spec", iap_spec, "JSON {m,k,A,D}")
      ->required();
  iap_periodic_cmd->add_option("--p1", iap_p1, "horizontal period")
      ->required();
  iap_periodic_cmd->add_option("--p2", iap_p2, "vertical period")->required();

  // idap
  auto* idap = app.add_subcommand("idap", "interlaced doubly arithmetic");
  auto* idap_check = idap->add_subcommand("check", "orbit predicates");
  std::string idap_a, idap_d;
  std::int64_t idap_m = 2, idap_k2 = 1;
  bool idap_antisym = false;
  idap_check->add_option("--m", idap_m, "modulus")->required();
  idap_check->add_option("--A", idap_a, "A tuple (digits or JSON)")
      ->required();
  idap_check->add_option("--D", idap_d, "D tuple (digits or JSON)");
  idap_check->add_option("--k2", idap_k2, "vertical interlace count")
      ->required();
  idap_check->add_flag("--antisym", idap_antisym, "use D = A X_k");

  // binom
  auto* binom = app.add_subcommand("binom", "binomial-sum matrices");
  binom->require_subcommand(1);
  std::int64_t b_k = 3, b_i = 1, b_m = 2;
  for (const char* kind : {"cmat", "tmat", "wendt", "xmat", "mmat"}) {
    auto* sub = binom->add_subcommand(kind, "emit the matrix as JSON");
    sub->add_option("--k", b_k, "size")->required();
    if (std::string(kind) != "xmat")
      sub->add_option("--i", b_i, "exponent")->required();
    sub->add_option("--m", b_m, "modulus")->required();
  }

  // kernel
  auto* kernel = app.add_subcommand("kernel", "left kernels mod p^u");
  std::int64_t kn_k = 12, kn_p = 2, kn_cap = env_budget(1 << 22);
  int kn_u = 1;
  std::string kn_matrix = "m";
  kernel->add_option("--k", kn_k, "interlace count")->required();
  kernel->add_option("--p", kn_p, "prime")->required();
  kernel->add_option("--u", kn_u, "power");
  kernel->add_option("--matrix", kn_matrix, "m|ia|aia");
  kernel->add_option("--cap", kn_cap, "enumeration cap");

  // construct
  auto* construct = app.add_subcommand("construct", "balanced periods");
  construct->require_subcommand(1);
  std::int64_t c_m = 2, c_mu = 0;
  auto* c_universal =
      construct->add_subcommand("universal", "universal-tuple period");
  c_universal->add_option("--m", c_m, "modulus")->required();
  c_universal->add_option("--mu", c_mu, "odd multiplier (default: lcm)");
  auto* c_family = construct->add_subcommand("family", "sample a family");
  std::string c_family_name = "E";
  int c_i0 = 1, c_sign = 1;
  std::vector<std::int64_t> c_alpha_y, c_alpha_z, c_alpha;
  std::int64_t c_family_m = 0;
  c_family->add_option("--family", c_family_name, "family name (E)");
  c_family->add_option("--i0", c_i0, "X index 1..7");
  c_family->add_option("--sign", c_sign, "+1 or -1");
  c_family->add_option("--alpha", c_alpha,
                       "all 16 module coefficients (4Y_1..4Y_8 8Z_9..8Z_16)");
  c_family->add_option("--alpha-y", c_alpha_y, "coefficients of 4Y_1..4Y_8");
  c_family->add_option("--alpha-z", c_alpha_z, "coefficients of 8Z_9..8Z_16");
  c_family->add_option("--m", c_family_m, "verify at modulus 2^u");

  // search
  auto* search = app.add_subcommand("search", "exhaustive search");
  auto* brute = search->add_subcommand("brute", "balanced-triangle count");
  std::int64_t s_m = 2, s_n = 1, s_shards = 1, s_shard = 0, s_witnesses = 64;
  std::string s_rule = "pascal", s_resume, s_checkpoint;
  int s_workers = 1;
  brute->add_option("--m", s_m, "modulus")->required();
  brute->add_option("--n", s_n, "size")->required();
  brute->add_option("--rule", s_rule, "pascal|negated");
  brute->add_option("--shards", s_shards, "shard count");
  brute->add_option("--shard", s_shard, "shard index");
  brute->add_option("--resume", s_resume, "resume from checkpoint file");
  brute->add_option("--checkpoint", s_checkpoint, "checkpoint file");
  brute->add_option("--workers", s_workers, "worker threads");
  brute->add_option("--witnesses", s_witnesses, "witness cap");

  // verify-paper
  auto* verify = app.add_subcommand("verify-paper", "reproducibility suite");
  std::string v_suite = "fast";
  verify->add_option("--suite", v_suite, "fast|full");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (tri_gen->parsed())
      return cmd_triangle("gen", tri_m, tri_rule, tri_row, tri_render, false);
    if (tri_verify->parsed())
      return cmd_triangle("verify", tri_m, tri_rule, tri_row, "",
                          tri_balanced);
    if (iap_derive_cmd->parsed()) {
      const IapSpec s = iap_from_json(iap_spec);
      std::cout << to_json(iap_derive(s)) << "\n";
      return kExitOk;
    }
    if (iap_window_cmd->parsed()) {
      const IapSpec s = iap_from_json(iap_spec);
      std::cout << tuple_json(iap_window(s, iap_from, iap_to)).dump() << "\n";
      return kExitOk;
    }
    if (iap_periodic_cmd->parsed()) {
      const IapSpec s = iap_from_json(iap_spec);
      json j;
      j["periodic"] = orbit_is_periodic(s, iap_p1, iap_p2);
      std::cout << j.dump() << "\n";
      return kExitOk;
    }
    if (idap_check->parsed()) {
      const ModTuple a = parse_row(idap_a, idap_m);
      json j;
      if (idap_antisym) {
        j["predicate"] = idap_orbit_antisym_predicate(a, idap_k2);
      } else {
        const ModTuple d = parse_row(idap_d, idap_m);
        j["predicate"] = idap_orbit_predicate(a, d, idap_k2);
      }
      std::cout << j.dump() << "\n";
      return kExitOk;
    }
    for (const char* kind : {"cmat", "tmat", "wendt", "xmat", "mmat"})
      if (binom->got_subcommand(kind))
        return cmd_binom(kind, b_k, b_i, b_m);
    if (kernel->parsed())
      return cmd_kernel(kn_k, kn_p, kn_u, kn_matrix, kn_cap);
    if (c_universal->parsed()) return cmd_construct_universal(c_m, c_mu);
    if (c_family->parsed()) {
      if (!c_alpha.empty()) {
        c_alpha_y.assign(c_alpha.begin(),
                         c_alpha.begin() + std::min<std::size_t>(
                                               8, c_alpha.size()));
        if (c_alpha.size() > 8)
          c_alpha_z.assign(c_alpha.begin() + 8, c_alpha.end());
      }
      return cmd_construct_family(c_family_m, c_i0, c_sign, c_alpha_y,
                                  c_alpha_z);
    }
    if (brute->parsed())
      return cmd_search(s_m, s_n, s_rule, s_shards, s_shard, s_resume,
                        s_checkpoint, s_workers, s_witnesses);
    if (verify->parsed()) return cmd_verify_paper(v_suite);
  } catch (const BudgetError& e) {
    std::cerr << "budget: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  }
  std::cerr << "no subcommand\n";
  return kExitUsage;
}
