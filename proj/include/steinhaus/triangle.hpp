#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "steinhaus/modring.hpp"

namespace steinhaus {

// Triangles over Z/mZ under the two local rules.  PASCAL is the classical
// Steinhaus rule a[i][j] = a[i-1][j] + a[i-1][j+1]; NEGATED is the variant
// a[i][j] = -a[i-1][j] - a[i-1][j+1], which is closed under the dihedral
// group D3.

enum class LocalRule { kPascal, kNegated };

// One derivation step: length max(n-1, 0).
ModTuple derive(const ModTuple& s, LocalRule rule);
// Derivation of the p-periodic extension, returned as its first period:
// entry j = rule(s[j], s[(j+1) mod p]).
ModTuple derive_periodic(const ModTuple& period, LocalRule rule);

class Triangle {
 public:
  Triangle(Modulus m, LocalRule rule) : m_(m), rule_(rule) {}
  // Rows by repeated derivation of the first row.
  static Triangle generate(const ModTuple& first_row, LocalRule rule);
  // From explicit rows; validates the local rule.
  static Triangle from_rows(Modulus m, LocalRule rule,
                            std::vector<ModTuple> rows);

  Modulus modulus() const { return m_; }
  LocalRule rule() const { return rule_; }
  std::size_t size() const { return rows_.size(); }
  const ModTuple& row(std::size_t i) const { return rows_[i]; }
  std::int64_t at(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  std::int64_t cell_count() const;

  friend bool operator==(const Triangle& a, const Triangle& b) {
    return a.m_ == b.m_ && a.rule_ == b.rule_ && a.rows_ == b.rows_;
  }
  friend bool operator!=(const Triangle& a, const Triangle& b) {
    return !(a == b);
  }

 private:
  Modulus m_;
  LocalRule rule_;
  std::vector<ModTuple> rows_;
};

MultiplicityMap triangle_multiplicity(const Triangle& t);
bool triangle_balanced(const Triangle& t);

// Streaming balance check: derives rows in place, never materializes the
// triangle, and aborts as soon as some residue count exceeds t_n / m.
bool balanced_triangle_scan(const ModTuple& first_row, LocalRule rule);
// Streaming multiplicity (no abort).
MultiplicityMap triangle_multiplicity_scan(const ModTuple& first_row,
                                           LocalRule rule);

// D3 action; defined only for the NEGATED rule.
Triangle rotate120(const Triangle& t);   // (i,j) -> (j, n-i-j-1)
Triangle reflect_h(const Triangle& t);   // (i,j) -> (i, n-i-j-1)

enum class Symmetry { kNone, kHorizontal, kRotational, kDihedral };
Symmetry classify_symmetry(const Triangle& t);

// For antisymmetric s the PASCAL and NEGATED triangles have equal
// multiplicity functions; returns their common balance value and asserts the
// equality.
bool steinhaus_equiv_check(const ModTuple& s);

struct EnumerationAggregate {
  std::int64_t triangles = 0;
  std::vector<std::int64_t> per_residue;  // total count of x over all triangles
};

// Visits all m^n triangles of size n in lexicographic first-row order.
// Budget is the total visited cell count; exceeding it raises BudgetError.
// The visitor must be pure or internally synchronized; the aggregate is
// deterministic.
EnumerationAggregate enumerate_triangles(
    Modulus m, std::int64_t n, LocalRule rule, std::int64_t cell_budget,
    const std::function<void(const Triangle&)>& visitor = nullptr);

// q consecutive rows of the orbit of the p-periodic extension of a tuple,
// each stored as its first period.
struct OrbitWindow {
  Modulus modulus;
  LocalRule rule;
  ModTuple first_period;
  std::vector<ModTuple> rows;
};

OrbitWindow orbit_window(const ModTuple& period, LocalRule rule,
                         std::int64_t q);
// True iff the p2-fold derived period equals the original period.
bool orbit_is_periodic(const ModTuple& period, LocalRule rule,
                       std::int64_t p2);

// Text rendering: centered digit rows for m <= 10, space-separated residues
// otherwise.  render_pgm emits a binary PGM with pixel = residue scaled to
// 0..255.
std::string render_text(const Triangle& t);
std::string render_pgm(const Triangle& t);

}  // namespace steinhaus
