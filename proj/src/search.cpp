#include "steinhaus/search.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

#include "steinhaus/binommat.hpp"
#include "steinhaus/iap.hpp"
#include "steinhaus/modlinalg.hpp"

namespace steinhaus {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// m^n as a checked int64 (the index space of first rows).
std::int64_t pow_checked(std::int64_t m, std::int64_t n) {
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < n; ++i)
    if (__builtin_mul_overflow(r, m, &r))
      throw BudgetError("candidate space exceeds 2^63");
  return r;
}

void index_to_row(std::int64_t index, std::int64_t m,
                  std::vector<std::int64_t>& row) {
  for (std::size_t j = row.size(); j-- > 0;) {
    row[j] = index % m;
    index /= m;
  }
}

std::int64_t euler_phi(std::int64_t m) {
  std::int64_t phi = m;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    phi -= phi / p;
    while (m % p == 0) m /= p;
  }
  if (m > 1) phi -= phi / m;
  return phi;
}

// A balanced triangle of positive size contains every residue, so the unit
// action on balanced first rows is free and orbits have size phi(m).
std::int64_t balanced_orbit_count(std::int64_t balanced, std::int64_t m,
                                  std::int64_t n) {
  if (n == 0) return balanced;
  const std::int64_t phi = euler_phi(m);
  if (balanced % phi != 0)
    throw Error("balanced count not divisible by phi(m)");
  return balanced / phi;
}

struct BruteState {
  SearchJob job;
  std::int64_t lo = 0, hi = 0, next = 0;
  SearchReport report;
};

nlohmann::json state_to_json(const BruteState& s) {
  nlohmann::json j;
  j["schema"] = 1;
  j["m"] = s.job.m;
  j["n"] = s.job.n;
  j["rule"] = s.job.rule == LocalRule::kPascal ? "pascal" : "negated";
  j["shards"] = s.job.shards;
  j["shard"] = s.job.shard;
  j["witness_cap"] = s.job.witness_cap;
  j["lo"] = s.lo;
  j["hi"] = s.hi;
  j["next"] = s.next;
  j["examined"] = s.report.examined;
  j["balanced"] = s.report.balanced;
  nlohmann::json w = nlohmann::json::array();
  for (const auto& t : s.report.witnesses) w.push_back(t.values());
  j["witnesses"] = w;
  return j;
}

BruteState state_from_json(const nlohmann::json& j) {
  BruteState s;
  s.job.m = j.at("m").get<std::int64_t>();
  s.job.n = j.at("n").get<std::int64_t>();
  s.job.rule = j.at("rule").get<std::string>() == "pascal"
                   ? LocalRule::kPascal
                   : LocalRule::kNegated;
  s.job.shards = j.at("shards").get<std::int64_t>();
  s.job.shard = j.at("shard").get<std::int64_t>();
  s.job.witness_cap = j.at("witness_cap").get<std::int64_t>();
  s.lo = j.at("lo").get<std::int64_t>();
  s.hi = j.at("hi").get<std::int64_t>();
  s.next = j.at("next").get<std::int64_t>();
  s.report.examined = j.at("examined").get<std::int64_t>();
  s.report.balanced = j.at("balanced").get<std::int64_t>();
  for (const auto& w : j.at("witnesses"))
    s.report.witnesses.emplace_back(Modulus(s.job.m),
                                    w.get<std::vector<std::int64_t>>());
  return s;
}

void save_checkpoint(const BruteState& s) {
  if (s.job.checkpoint_file.empty()) return;
  std::ofstream out(s.job.checkpoint_file);
  if (!out) throw Error("cannot write checkpoint file");
  out << state_to_json(s).dump();
}

SearchReport run_brute(BruteState& s, Clock::time_point start) {
  const std::int64_t m = s.job.m;
  const std::int64_t n = s.job.n;
  const std::int64_t cells = n * (n + 1) / 2;
  const bool admissible = cells % m == 0;
  const std::int64_t target = admissible ? cells / m : 0;

  std::vector<std::int64_t> first(static_cast<std::size_t>(n));
  std::vector<std::int64_t> counts(static_cast<std::size_t>(m));
  std::vector<std::vector<std::int64_t>> rows(
      static_cast<std::size_t>(n + 1));
  std::set<ModTuple> witnesses(s.report.witnesses.begin(),
                               s.report.witnesses.end());

  std::int64_t since_checkpoint = 0;
  for (; s.next < s.hi; ++s.next) {
    ++s.report.examined;
    if (admissible) {
      index_to_row(s.next, m, first);
      std::fill(counts.begin(), counts.end(), 0);
      // stream the derivation with abort on count overflow
      rows[0] = first;
      bool ok = true;
      for (std::int64_t len = n; len >= 1 && ok; --len) {
        auto& row = rows[static_cast<std::size_t>(n - len)];
        for (std::int64_t j = 0; j < len; ++j) {
          if (++counts[static_cast<std::size_t>(row[static_cast<std::size_t>(
                  j)])] > target) {
            ok = false;
            break;
          }
        }
        if (!ok || len == 1) break;
        auto& next_row = rows[static_cast<std::size_t>(n - len + 1)];
        next_row.resize(static_cast<std::size_t>(len - 1));
        if (s.job.rule == LocalRule::kPascal) {
          for (std::int64_t j = 0; j + 1 < len; ++j)
            next_row[static_cast<std::size_t>(j)] =
                (row[static_cast<std::size_t>(j)] +
                 row[static_cast<std::size_t>(j + 1)]) %
                m;
        } else {
          for (std::int64_t j = 0; j + 1 < len; ++j)
            next_row[static_cast<std::size_t>(j)] =
                (2 * m - row[static_cast<std::size_t>(j)] -
                 row[static_cast<std::size_t>(j + 1)]) %
                m;
        }
      }
      if (ok) {
        ++s.report.balanced;
        // keep the lexicographically smallest cap-many orbit minima, so the
        // collection is independent of enumeration order and sharding
        witnesses.insert(unit_orbit_min(ModTuple{Modulus(m), first}));
        if (static_cast<std::int64_t>(witnesses.size()) > s.job.witness_cap)
          witnesses.erase(std::prev(witnesses.end()));
      }
    }
    if (++since_checkpoint >= s.job.checkpoint_every) {
      since_checkpoint = 0;
      s.report.witnesses.assign(witnesses.begin(), witnesses.end());
      BruteState snapshot = s;
      snapshot.next = s.next + 1;  // resume after the candidate just finished
      save_checkpoint(snapshot);
    }
  }

  s.report.witnesses.assign(witnesses.begin(), witnesses.end());
  std::sort(s.report.witnesses.begin(), s.report.witnesses.end());
  // meaningful only when the report covers the whole index space
  s.report.orbit_count = s.job.shards == 1
                             ? balanced_orbit_count(s.report.balanced, m, n)
                             : -1;
  s.report.seconds = elapsed(start);
  if (!s.job.checkpoint_file.empty()) save_checkpoint(s);
  return s.report;
}

}  // namespace

std::string SearchReport::to_json(std::int64_t m) const {
  nlohmann::json j;
  j["examined"] = examined;
  j["balanced"] = balanced;
  j["orbitCount"] = orbit_count;
  j["seconds"] = seconds;
  nlohmann::json w = nlohmann::json::array();
  for (const auto& t : witnesses) {
    if (m <= 10)
      w.push_back(to_digits(t));
    else
      w.push_back(t.values());
  }
  j["witnesses"] = w;
  return j.dump();
}

SearchReport brute_force_balanced(const SearchJob& job) {
  const auto start = Clock::now();
  if (job.m < 1 || job.n < 0) throw Error("bad job parameters");
  if (job.shards < 1 || job.shard < 0 || job.shard >= job.shards)
    throw Error("bad shard parameters");
  const std::int64_t space = pow_checked(job.m, job.n);
  const double total_cells = static_cast<double>(space) *
                             static_cast<double>(job.n * (job.n + 1) / 2);
  if (total_cells > static_cast<double>(job.cell_budget)) {
    std::ostringstream os;
    os << "search budget exceeded: " << total_cells << " cells > cap "
       << job.cell_budget;
    throw BudgetError(os.str());
  }

  BruteState s;
  s.job = job;
  // contiguous shard ranges partitioning [0, m^n)
  const std::int64_t base = space / job.shards;
  const std::int64_t extra = space % job.shards;
  s.lo = job.shard * base + std::min(job.shard, extra);
  s.hi = s.lo + base + (job.shard < extra ? 1 : 0);
  s.next = s.lo;
  return run_brute(s, start);
}

SearchReport brute_force_resume(const std::string& checkpoint_file) {
  const auto start = Clock::now();
  std::ifstream in(checkpoint_file);
  if (!in) throw Error("cannot read checkpoint file");
  nlohmann::json j = nlohmann::json::parse(in);
  BruteState s = state_from_json(j);
  s.job.checkpoint_file = checkpoint_file;
  return run_brute(s, start);
}

SearchReport merge_reports(const std::vector<SearchReport>& parts,
                           std::int64_t m, std::int64_t witness_cap) {
  SearchReport total;
  std::set<ModTuple> witnesses;
  for (const auto& p : parts) {
    total.examined += p.examined;
    total.balanced += p.balanced;
    total.seconds += p.seconds;
    witnesses.insert(p.witnesses.begin(), p.witnesses.end());
  }
  while (static_cast<std::int64_t>(witnesses.size()) > witness_cap)
    witnesses.erase(std::prev(witnesses.end()));
  total.witnesses.assign(witnesses.begin(), witnesses.end());
  total.orbit_count = balanced_orbit_count(total.balanced, m, /*n=*/1);
  return total;
}

namespace {

// Balance of the triangle over the first len terms of the antisymmetric
// interlaced progression of a.
bool iap_triangle_balanced(const ModTuple& a, std::int64_t len) {
  const IapSpec s{a, antisym_diff(a)};
  return balanced_triangle_scan(iap_window(s, 0, len - 1),
                                LocalRule::kNegated);
}

}  // namespace

BSetReport bset(std::int64_t k, int u, std::int64_t cap) {
  const auto start = Clock::now();
  if (k < 2 || k % 2 != 0) throw Error("k must be even and >= 2");
  if (u < 0) throw Error("u must be >= 0");
  BSetReport report;
  if (u == 0) {
    report.elements = {ModTuple{Modulus(1),
                                std::vector<std::int64_t>(
                                    static_cast<std::size_t>(k), 0)}};
    report.total = 1;
    report.orbit_count = 1;
    report.seconds = elapsed(start);
    return report;
  }

  // Level 1: the kernel of M_k^{2k} mod 2, filtered by balance.
  std::vector<ModTuple> level;
  {
    const KernelBasis kernel =
        left_kernel_gfp(mmat(k, 2 * k, Modulus(2)), 2);
    for (const auto& a : enumerate_span_gfp(kernel, cap))
      if (iap_triangle_balanced(a, 2 * k) && iap_triangle_balanced(a, 4 * k))
        level.push_back(a);
  }

  for (int v = 1; v < u; ++v) {
    const std::int64_t next_mod = std::int64_t{1} << (v + 1);
    const std::int64_t period = next_mod * k;  // 2^{v+1} k
    const ModMatrix m_next = mmat(k, period, Modulus(next_mod));
    std::vector<ModTuple> next;
    for (const auto& a : level) {
      const LiftedSolutionSet lifted = lift_kernel_step(m_next, 2, v, a);
      for (const auto& cand : lifted.elements(cap))
        if (iap_triangle_balanced(cand, period) &&
            iap_triangle_balanced(cand, 2 * period))
          next.push_back(cand);
      if (static_cast<std::int64_t>(next.size()) > cap)
        throw BudgetError("bset candidate count exceeded cap");
    }
    std::sort(next.begin(), next.end());
    level = std::move(next);
  }

  std::sort(level.begin(), level.end());
  report.total = static_cast<std::int64_t>(level.size());
  report.orbit_count =
      unit_orbit_count(level, Modulus(std::int64_t{1} << u));
  report.elements = std::move(level);
  report.seconds = elapsed(start);
  return report;
}

std::int64_t unit_orbit_count(const std::vector<ModTuple>& elements,
                              Modulus m) {
  std::set<ModTuple> minima;
  for (const auto& t : elements) {
    if (t.modulus() != m) throw Error("orbit counting modulus mismatch");
    minima.insert(unit_orbit_min(t));
  }
  return static_cast<std::int64_t>(minima.size());
}

ModTuple unit_orbit_min(const ModTuple& t) {
  const std::int64_t m = t.mod();
  ModTuple best = t;
  for (std::int64_t lambda = 1; lambda < m; ++lambda) {
    if (std::gcd(lambda, m) != 1) continue;
    ModTuple candidate = tuple_scale(lambda, t);
    if (candidate < best) best = std::move(candidate);
  }
  return best;
}

}  // namespace steinhaus
