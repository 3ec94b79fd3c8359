#include "steinhaus/triangle.hpp"

#include <algorithm>
#include <sstream>

namespace steinhaus {

namespace {

std::int64_t rule_step(LocalRule rule, std::int64_t a, std::int64_t b) {
  return rule == LocalRule::kPascal ? a + b : -a - b;
}

void require_negated(const Triangle& t, const char* op) {
  if (t.rule() != LocalRule::kNegated)
    throw Error(std::string(op) + ": not closed under D3 (PASCAL rule)");
}

}  // namespace

ModTuple derive(const ModTuple& s, LocalRule rule) {
  ModTuple out{s.modulus()};
  if (s.size() <= 1) return out;
  for (std::size_t j = 0; j + 1 < s.size(); ++j)
    out.push_back(rule_step(rule, s[j], s[j + 1]));
  return out;
}

ModTuple derive_periodic(const ModTuple& period, LocalRule rule) {
  if (period.empty()) throw Error("empty period");
  const std::size_t p = period.size();
  ModTuple out{period.modulus()};
  for (std::size_t j = 0; j < p; ++j)
    out.push_back(rule_step(rule, period[j], period[(j + 1) % p]));
  return out;
}

Triangle Triangle::generate(const ModTuple& first_row, LocalRule rule) {
  Triangle t{first_row.modulus(), rule};
  ModTuple row = first_row;
  while (!row.empty()) {
    ModTuple next = derive(row, rule);
    t.rows_.push_back(std::move(row));
    row = std::move(next);
  }
  return t;
}

Triangle Triangle::from_rows(Modulus m, LocalRule rule,
                             std::vector<ModTuple> rows) {
  Triangle t{m, rule};
  t.rows_ = std::move(rows);
  const std::size_t n = t.rows_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (t.rows_[i].modulus() != m || t.rows_[i].size() != n - i)
      throw Error("bad row shape");
    if (i > 0 && t.rows_[i] != derive(t.rows_[i - 1], rule))
      throw Error("rows do not satisfy the local rule");
  }
  return t;
}

std::int64_t Triangle::cell_count() const {
  const std::int64_t n = static_cast<std::int64_t>(rows_.size());
  return n * (n + 1) / 2;
}

MultiplicityMap triangle_multiplicity(const Triangle& t) {
  MultiplicityMap mm{t.modulus()};
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t.row(i).size(); ++j) mm.add(t.at(i, j));
  return mm;
}

bool triangle_balanced(const Triangle& t) {
  return is_balanced(triangle_multiplicity(t));
}

bool balanced_triangle_scan(const ModTuple& first_row, LocalRule rule) {
  const std::int64_t m = first_row.mod();
  const std::int64_t n = static_cast<std::int64_t>(first_row.size());
  const std::int64_t cells = n * (n + 1) / 2;
  if (cells % m != 0) return false;
  const std::int64_t target = cells / m;
  std::vector<std::int64_t> counts(static_cast<std::size_t>(m), 0);
  std::vector<std::int64_t> row = first_row.values();
  while (!row.empty()) {
    for (auto x : row)
      if (++counts[static_cast<std::size_t>(x)] > target) return false;
    std::vector<std::int64_t> next(row.size() - 1);
    for (std::size_t j = 0; j + 1 < row.size(); ++j)
      next[j] = ((rule_step(rule, row[j], row[j + 1]) % m) + m) % m;
    row = std::move(next);
  }
  return true;  // all counts == target since they sum to m * target
}

MultiplicityMap triangle_multiplicity_scan(const ModTuple& first_row,
                                           LocalRule rule) {
  const std::int64_t m = first_row.mod();
  MultiplicityMap mm{first_row.modulus()};
  std::vector<std::int64_t> row = first_row.values();
  while (!row.empty()) {
    for (auto x : row) mm.add(x);
    std::vector<std::int64_t> next(row.size() - 1);
    for (std::size_t j = 0; j + 1 < row.size(); ++j)
      next[j] = ((rule_step(rule, row[j], row[j + 1]) % m) + m) % m;
    row = std::move(next);
  }
  return mm;
}

namespace {

Triangle remap(const Triangle& t,
               std::int64_t (*index)(std::int64_t, std::int64_t,
                                     std::int64_t)) {
  // index packs the source (i,j); see callers.
  const std::int64_t n = static_cast<std::int64_t>(t.size());
  std::vector<ModTuple> rows;
  rows.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    ModTuple row{t.modulus()};
    for (std::int64_t j = 0; j < n - i; ++j) {
      const std::int64_t packed = index(i, j, n);
      row.push_back(t.at(static_cast<std::size_t>(packed >> 32),
                         static_cast<std::size_t>(packed & 0xffffffff)));
    }
    rows.push_back(std::move(row));
  }
  return Triangle::from_rows(t.modulus(), t.rule(), std::move(rows));
}

}  // namespace

Triangle rotate120(const Triangle& t) {
  require_negated(t, "rotate120");
  return remap(t, [](std::int64_t i, std::int64_t j, std::int64_t n) {
    return (j << 32) | (n - i - j - 1);
  });
}

Triangle reflect_h(const Triangle& t) {
  require_negated(t, "reflect_h");
  return remap(t, [](std::int64_t i, std::int64_t j, std::int64_t n) {
    return (i << 32) | (n - i - j - 1);
  });
}

Symmetry classify_symmetry(const Triangle& t) {
  require_negated(t, "classify_symmetry");
  const bool h = reflect_h(t) == t;
  const bool r = rotate120(t) == t;
  if (h && r) return Symmetry::kDihedral;
  if (r) return Symmetry::kRotational;
  if (h) return Symmetry::kHorizontal;
  return Symmetry::kNone;
}

bool steinhaus_equiv_check(const ModTuple& s) {
  if (!is_antisymmetric(s)) throw Error("sequence is not antisymmetric");
  const bool pascal = balanced_triangle_scan(s, LocalRule::kPascal);
  const bool negated = balanced_triangle_scan(s, LocalRule::kNegated);
  if (pascal != negated)
    throw Error("PASCAL/NEGATED balance disagree on an antisymmetric row");
  return pascal;
}

EnumerationAggregate enumerate_triangles(
    Modulus m, std::int64_t n, LocalRule rule, std::int64_t cell_budget,
    const std::function<void(const Triangle&)>& visitor) {
  const std::int64_t mv = m.value();
  double total_cells = 1;
  for (std::int64_t i = 0; i < n; ++i) total_cells *= static_cast<double>(mv);
  total_cells *= static_cast<double>(n * (n + 1) / 2);
  if (total_cells > static_cast<double>(cell_budget)) {
    std::ostringstream os;
    os << "enumeration budget exceeded: need " << total_cells << " cells, cap "
       << cell_budget;
    throw BudgetError(os.str());
  }

  EnumerationAggregate agg;
  agg.per_residue.assign(static_cast<std::size_t>(mv), 0);
  std::vector<std::int64_t> first(static_cast<std::size_t>(n), 0);
  for (;;) {
    ModTuple row{m, first};
    MultiplicityMap mm = triangle_multiplicity_scan(row, rule);
    for (std::int64_t x = 0; x < mv; ++x)
      agg.per_residue[static_cast<std::size_t>(x)] += mm.count(x);
    ++agg.triangles;
    if (visitor) visitor(Triangle::generate(row, rule));
    // odometer increment
    std::int64_t pos = n - 1;
    while (pos >= 0 && first[static_cast<std::size_t>(pos)] == mv - 1)
      first[static_cast<std::size_t>(pos--)] = 0;
    if (pos < 0) break;
    ++first[static_cast<std::size_t>(pos)];
  }
  return agg;
}

OrbitWindow orbit_window(const ModTuple& period, LocalRule rule,
                         std::int64_t q) {
  if (q < 0) throw Error("negative row count");
  OrbitWindow w{period.modulus(), rule, period, {}};
  ModTuple row = period;
  for (std::int64_t i = 0; i < q; ++i) {
    w.rows.push_back(row);
    row = derive_periodic(row, rule);
  }
  return w;
}

bool orbit_is_periodic(const ModTuple& period, LocalRule rule,
                       std::int64_t p2) {
  if (p2 < 1) throw Error("p2 must be >= 1");
  ModTuple row = period;
  for (std::int64_t i = 0; i < p2; ++i) row = derive_periodic(row, rule);
  return row == period;
}

std::string render_text(const Triangle& t) {
  std::ostringstream os;
  const std::size_t n = t.size();
  if (t.modulus().value() <= 10) {
    for (std::size_t i = 0; i < n; ++i) {
      os << std::string(i, ' ');
      for (std::size_t j = 0; j < n - i; ++j) {
        os << t.at(i, j);
        if (j + 1 < n - i) os << ' ';
      }
      os << '\n';
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n - i; ++j) {
        if (j) os << ' ';
        os << t.at(i, j);
      }
      os << '\n';
    }
  }
  return os.str();
}

std::string render_pgm(const Triangle& t) {
  const std::int64_t m = t.modulus().value();
  const std::int64_t scale = m > 1 ? 255 / (m - 1) : 0;
  const std::size_t n = t.size();
  std::ostringstream os;
  os << "P5\n" << n << ' ' << (n ? n : 1) << "\n255\n";
  for (std::size_t i = 0; i < std::max<std::size_t>(n, 1); ++i)
    for (std::size_t j = 0; j < std::max<std::size_t>(n, 1); ++j) {
      const bool inside = i < n && j < n - i;
      const std::int64_t v = inside ? t.at(i, j) * scale : 255;
      os.put(static_cast<char>(v));
    }
  return os.str();
}

}  // namespace steinhaus
